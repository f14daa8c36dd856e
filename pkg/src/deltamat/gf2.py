"""Symmetric GF(2) matrices and the set systems of their invertible
principal submatrices, including recognition of systems that arise that
way up to a twist."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import EmptyFamilyError
from .setsystem import GroundSet, SetSystem, _sea_holds, twist


class SymmetricBitMatrix:
    """Symmetric matrix over GF(2), rows stored as int bit vectors."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError("row count does not match dimension")
        full = (1 << n) - 1
        for r in rows:
            if not 0 <= r <= full:
                raise ValueError("row has bits outside the matrix")
        for i in range(n):
            for j in range(i + 1, n):
                if (rows[i] >> j & 1) != (rows[j] >> i & 1):
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")
        self.n = n
        self.rows = rows

    @classmethod
    def from_bits(cls, bits: Iterable[Iterable[int]]) -> "SymmetricBitMatrix":
        """Build from a square list-of-lists of 0/1 entries."""
        table = [list(row) for row in bits]
        n = len(table)
        rows = []
        for row in table:
            if len(row) != n:
                raise ValueError("matrix is not square")
            acc = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"entry {v!r} is not a GF(2) value")
                acc |= v << j
            rows.append(acc)
        return cls(n, rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def to_bits(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.n)] for r in self.rows]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SymmetricBitMatrix)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"SymmetricBitMatrix({self.n}, {list(self.rows)!r})"


def principal_invertible(matrix: SymmetricBitMatrix, w_mask: int) -> bool:
    """Whether the principal submatrix indexed by ``w_mask`` is invertible.

    The empty submatrix counts as invertible.  Gaussian elimination on
    word-level rows; over GF(2) a missing pivot already proves singularity
    of a square matrix.
    """
    if w_mask == 0:
        return True
    if w_mask >> matrix.n:
        raise ValueError("index set outside the matrix")
    idx = []
    m = w_mask
    while m:
        bit = m & -m
        idx.append(bit.bit_length() - 1)
        m ^= bit
    k = len(idx)
    rows = []
    for ri in idx:
        src = matrix.rows[ri]
        acc = 0
        for c, ci in enumerate(idx):
            acc |= (src >> ci & 1) << c
        rows.append(acc)
    for col in range(k):
        pivot = None
        for r in range(col, k):
            if rows[r] >> col & 1:
                pivot = r
                break
        if pivot is None:
            return False
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(col + 1, k):
            if rows[r] >> col & 1:
                rows[r] ^= rows[col]
    return True


def default_ground(n: int) -> GroundSet:
    """Ground set labelled 1..n, matching matrix row/column numbering."""
    return GroundSet(str(i + 1) for i in range(n))


def delta_from_matrix(
    matrix: SymmetricBitMatrix, ground: Optional[GroundSet] = None
) -> SetSystem:
    """The system of all index sets whose principal submatrix is invertible.

    The empty set is always a member.  The result satisfies the symmetric
    exchange axiom; this is asserted.
    """
    if ground is None:
        ground = default_ground(matrix.n)
    elif len(ground) != matrix.n:
        raise ValueError("ground size does not match matrix dimension")
    family = [w for w in range(1 << matrix.n) if principal_invertible(matrix, w)]
    system = SetSystem(ground, family)
    assert _sea_holds(system.family, system.member_set)
    return system


@dataclass(frozen=True)
class BinaryCertificate:
    """Witness that a system is the twist of a matrix system.

    Twisting the certified system by ``base_feasible`` yields exactly the
    invertible-principal-submatrix system of ``matrix``.
    """

    ground: GroundSet
    base_feasible: int
    matrix: SymmetricBitMatrix

    def represented_system(self) -> SetSystem:
        """Rebuild the certified system from the certificate alone."""
        return twist(delta_from_matrix(self.matrix, self.ground), self.base_feasible)


def _matrix_matches(matrix: SymmetricBitMatrix, members: frozenset[int]) -> bool:
    for w in range(1 << matrix.n):
        if principal_invertible(matrix, w) != (w in members):
            return False
    return True


def _candidate_matrix(n: int, members: frozenset[int]) -> SymmetricBitMatrix:
    """The only matrix that can represent an empty-set-feasible system.

    Singleton members force the diagonal; 2x2 principal determinants then
    force every off-diagonal entry.
    """
    rows = [0] * n
    diag = 0
    for v in range(n):
        if (1 << v) in members:
            diag |= 1 << v
            rows[v] |= 1 << v
    for v in range(n):
        dv = diag >> v & 1
        for w in range(v + 1, n):
            pair_in = ((1 << v) | (1 << w)) in members
            if pair_in ^ (dv & (diag >> w & 1)):
                rows[v] |= 1 << w
                rows[w] |= 1 << v
    return SymmetricBitMatrix(n, rows)


def recognize_binary(system: SetSystem) -> Optional[BinaryCertificate]:
    """Certificate (base member, matrix) expressing the system as a twisted
    matrix system, or None when no member admits one.

    Each family member F is tried in sorted order: twisting by F puts the
    empty set in the family, the candidate matrix is then forced by the
    small members, and a full verification accepts or rejects it.  Failure
    for every F is a proof of non-membership because the candidate is the
    only possible matrix.
    """
    if not system.family:
        raise EmptyFamilyError("empty family")
    n = len(system.ground)
    for base in system.family:
        members = frozenset(base ^ m for m in system.member_set)
        candidate = _candidate_matrix(n, members)
        if _matrix_matches(candidate, members):
            return BinaryCertificate(
                ground=system.ground, base_feasible=base, matrix=candidate
            )
    return None
