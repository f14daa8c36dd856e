"""Ground sets, subset bitmasks, set-system families, and the exchange axioms.

Subsets of a ground set are plain Python ints used as bit vectors: bit ``i``
is set iff element ``i`` (in ground-set order) belongs to the subset.  The
ground set is capped at 64 elements so every subset fits one machine word.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Optional

from .errors import EmptyFamilyError

MAX_ELEMENTS = 64


def subset_key(mask: int) -> tuple[int, int]:
    """Sort key ordering subsets by size first, then by bit value."""
    return (mask.bit_count(), mask)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` as single-bit ints, low to high."""
    while mask:
        bit = mask & -mask
        yield bit
        mask ^= bit


class GroundSet:
    """Ordered, immutable collection of distinct element labels.

    The position of a label in ``labels`` is its bit index in every subset
    mask interpreted against this ground set.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if len(labels) > MAX_ELEMENTS:
            raise ValueError(f"ground set larger than {MAX_ELEMENTS} elements")
        for lab in labels:
            if not isinstance(lab, str) or not lab or any(c.isspace() for c in lab):
                raise ValueError(f"bad element label {lab!r}")
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("duplicate element label")
        self.labels = labels
        self._index = index

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.labels)!r})"

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown element {label!r}") from None

    def label(self, index: int) -> str:
        return self.labels[index]

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[bit.bit_length() - 1] for bit in iter_bits(mask))


class SetSystem:
    """A ground set together with a finite family of its subsets.

    The family is stored sorted by (size, bit value) with duplicates removed,
    which makes the representation canonical: two systems are equal iff their
    ground labels and families coincide.  Values are immutable; every
    operation in this package returns a new system.
    """

    __slots__ = ("ground", "family", "_members")

    def __init__(self, ground: GroundSet, family: Iterable[int]):
        members = set(family)
        full = ground.full_mask
        for m in members:
            if not 0 <= m <= full:
                raise ValueError(f"subset mask {m:#x} outside ground set")
        self.ground = ground
        self.family = tuple(sorted(members, key=subset_key))
        self._members = frozenset(members)

    @classmethod
    def from_labels(cls, ground: GroundSet, family: Iterable[Iterable[str]]) -> "SetSystem":
        return cls(ground, (ground.mask_of(sub) for sub in family))

    @property
    def member_set(self) -> frozenset[int]:
        return self._members

    @property
    def support(self) -> int:
        """Union of all family members."""
        acc = 0
        for m in self.family:
            acc |= m
        return acc

    def members_as_labels(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.ground.labels_of(m) for m in self.family)

    def __contains__(self, mask: int) -> bool:
        return mask in self._members

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SetSystem)
            and self.ground == other.ground
            and self.family == other.family
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.family))

    def __repr__(self) -> str:
        fam = ", ".join("{" + " ".join(labs) + "}" for labs in self.members_as_labels())
        return f"SetSystem({list(self.ground.labels)!r}, [{fam}])"


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class StructureProfile:
    """Size range, size parity class, and trivial elements of a family."""

    min_size: int
    max_size: int
    parity: Parity
    loops: int
    everywhere: int


def _sea_holds(family: tuple[int, ...], members: frozenset[int]) -> bool:
    """Symmetric exchange axiom on a raw (sorted family, member set) pair."""
    nfam = len(family)
    for i in range(nfam):
        f1 = family[i]
        for j in range(i + 1, nfam):
            delta = f1 ^ family[j]
            for base in (f1, family[j]):
                d = delta
                while d:
                    x = d & -d
                    d ^= x
                    bx = base ^ x
                    if bx in members:  # exchange with y = x
                        continue
                    dd = delta ^ x
                    while dd:
                        y = dd & -dd
                        dd ^= y
                        if bx ^ y in members:
                            break
                    else:
                        return False
    return True


def check_sea(system: SetSystem) -> bool:
    """Whether the family satisfies the symmetric exchange axiom.

    For every pair of members F1, F2 and every x in F1 symmetric-difference
    F2 there must be a y in the same difference (y = x allowed) with
    F1 delta {x, y} back in the family.  Checked by brute force.
    """
    if not system.family:
        raise EmptyFamilyError("empty family")
    return _sea_holds(system.family, system.member_set)


def check_ea(system: SetSystem) -> bool:
    """Whether the family satisfies the basis exchange axiom of a matroid.

    All members must share one size, and for every pair B1, B2 and
    b1 in B1 - B2 some b2 in B2 - B1 must give B1 delta {b1, b2} in the
    family.
    """
    family = system.family
    if not family:
        raise EmptyFamilyError("empty family")
    size = family[0].bit_count()
    if family[-1].bit_count() != size:
        return False
    members = system.member_set
    nfam = len(family)
    for i in range(nfam):
        b1 = family[i]
        for j in range(nfam):
            if i == j:
                continue
            b2 = family[j]
            only1 = b1 & ~b2
            only2 = b2 & ~b1
            d = only1
            while d:
                x = d & -d
                d ^= x
                bx = b1 ^ x
                dd = only2
                while dd:
                    y = dd & -dd
                    dd ^= y
                    if bx ^ y in members:
                        break
                else:
                    return False
    return True


def twist(system: SetSystem, mask: int) -> SetSystem:
    """Replace every member X by ``mask`` symmetric-difference X.

    An involution on set systems over the same ground; the dual is the
    twist by the full ground set.
    """
    if mask & ~system.ground.full_mask:
        raise ValueError("twist set not contained in the ground set")
    return SetSystem(system.ground, (mask ^ m for m in system.family))


def dual(system: SetSystem) -> SetSystem:
    """Complement every member within the ground set."""
    return twist(system, system.ground.full_mask)


def direct_sum(parts: list[SetSystem]) -> SetSystem:
    """Combine systems on pairwise disjoint grounds.

    The result's family consists of all unions of one member from each
    part, so its size is the product of the part family sizes.
    """
    labels: list[str] = []
    seen: set[str] = set()
    for part in parts:
        for lab in part.ground.labels:
            if lab in seen:
                raise ValueError("non-disjoint grounds")
            seen.add(lab)
            labels.append(lab)
    ground = GroundSet(labels)
    combos = [0]
    offset = 0
    for part in parts:
        combos = [acc | (m << offset) for acc in combos for m in part.family]
        offset += len(part.ground)
    return SetSystem(ground, combos)


def profile(system: SetSystem) -> StructureProfile:
    """Size extremes, parity class, loops, and everywhere-elements."""
    family = system.family
    if not family:
        raise EmptyFamilyError("empty family")
    min_size = family[0].bit_count()
    max_size = family[-1].bit_count()
    union = 0
    inter = system.ground.full_mask
    same_parity = True
    for m in family:
        union |= m
        inter &= m
        if (m.bit_count() ^ min_size) & 1:
            same_parity = False
    return StructureProfile(
        min_size=min_size,
        max_size=max_size,
        parity=Parity.EVEN if same_parity else Parity.ODD,
        loops=system.ground.full_mask & ~union,
        everywhere=inter,
    )


def _membership_signature(system: SetSystem) -> list[tuple[tuple[int, int], ...]]:
    """Per-element invariant: sorted (member size, count) pairs."""
    n = len(system.ground)
    counts: list[dict[int, int]] = [dict() for _ in range(n)]
    for m in system.family:
        size = m.bit_count()
        for bit in iter_bits(m):
            c = counts[bit.bit_length() - 1]
            c[size] = c.get(size, 0) + 1
    return [tuple(sorted(c.items())) for c in counts]


def _codegrees(system: SetSystem) -> list[list[int]]:
    n = len(system.ground)
    table = [[0] * n for _ in range(n)]
    for m in system.family:
        idxs = [bit.bit_length() - 1 for bit in iter_bits(m)]
        for a in idxs:
            row = table[a]
            for b in idxs:
                row[b] += 1
    return table


def find_isomorphism(first: SetSystem, second: SetSystem) -> Optional[dict[str, str]]:
    """A label bijection carrying the first family exactly onto the second.

    Backtracking over label assignments, pruned by per-element membership
    signatures and pairwise co-membership counts; intended for ground sets
    of at most about 10 elements.  Returns None when no bijection exists.
    """
    n = len(first.ground)
    if n != len(second.ground) or len(first.family) != len(second.family):
        return None
    if sorted(m.bit_count() for m in first.family) != sorted(
        m.bit_count() for m in second.family
    ):
        return None
    if n == 0:
        return {} if first.family == second.family else None

    sig1 = _membership_signature(first)
    sig2 = _membership_signature(second)
    if sorted(sig1) != sorted(sig2):
        return None
    cod1 = _codegrees(first)
    cod2 = _codegrees(second)

    candidates = [[j for j in range(n) if sig2[j] == sig1[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: (len(candidates[i]), i))
    assignment = [-1] * n
    used = [False] * n

    target_members = second.member_set

    def maps_family(perm: list[int]) -> bool:
        for m in first.family:
            image = 0
            for bit in iter_bits(m):
                image |= 1 << perm[bit.bit_length() - 1]
            if image not in target_members:
                return False
        return True

    def extend(pos: int) -> bool:
        if pos == n:
            return maps_family(assignment)
        i = order[pos]
        for j in candidates[i]:
            if used[j]:
                continue
            row1 = cod1[i]
            row2 = cod2[j]
            if any(
                row1[order[k]] != row2[assignment[order[k]]] for k in range(pos)
            ):
                continue
            assignment[i] = j
            used[j] = True
            if extend(pos + 1):
                return True
            used[j] = False
            assignment[i] = -1
        return False

    if not extend(0):
        return None
    return {
        first.ground.label(i): second.ground.label(assignment[i]) for i in range(n)
    }
