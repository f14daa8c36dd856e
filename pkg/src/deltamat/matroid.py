"""Matroid structure: upper/lower matroids of a delta-matroid, elementary
minors, graphic matroids from spanning trees, and detection of the
six-basis obstruction pattern that rules out binary representability."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import AxiomError, DeltaMatroidError, EmptyFamilyError
from .setsystem import GroundSet, SetSystem, check_ea, iter_bits


class Matroid:
    """Set system whose family satisfies the basis exchange axiom."""

    __slots__ = ("carrier",)

    def __init__(self, carrier: SetSystem):
        if not check_ea(carrier):
            raise AxiomError("family violates the basis exchange axiom")
        self.carrier = carrier

    @property
    def ground(self) -> GroundSet:
        return self.carrier.ground

    @property
    def bases(self) -> tuple[int, ...]:
        return self.carrier.family

    @property
    def rank(self) -> int:
        return self.carrier.family[0].bit_count()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matroid) and self.carrier == other.carrier

    def __hash__(self) -> int:
        return hash(self.carrier)

    def __repr__(self) -> str:
        return f"Matroid({self.carrier!r})"


class BoundSide(Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class SetStatus:
    """Independence/spanning classification of one subset in a matroid."""

    independent: bool
    spanning: bool

    @property
    def basis(self) -> bool:
        return self.independent and self.spanning


def bound_matroid(system: SetSystem, which: BoundSide) -> Matroid:
    """Matroid of the maximum-size (upper) or minimum-size (lower) members.

    For a delta-matroid either restriction satisfies the basis exchange
    axiom; a violation means the input was not a delta-matroid.
    """
    family = system.family
    if not family:
        raise EmptyFamilyError("empty family")
    size = (family[-1] if which is BoundSide.UPPER else family[0]).bit_count()
    bound = [m for m in family if m.bit_count() == size]
    try:
        return Matroid(SetSystem(system.ground, bound))
    except AxiomError:
        raise AxiomError("delta-matroid axiom violated upstream") from None


def set_status(matroid: Matroid, mask: int) -> SetStatus:
    """Whether the subset is contained in, and/or contains, some basis."""
    if mask & ~matroid.ground.full_mask:
        raise ValueError("subset outside the ground set")
    independent = any(mask & ~b == 0 for b in matroid.bases)
    spanning = any(b & ~mask == 0 for b in matroid.bases)
    return SetStatus(independent=independent, spanning=spanning)


class MinorMode(Enum):
    DELETE = "delete"
    CONTRACT = "contract"


def _drop_bit(mask: int, idx: int) -> int:
    low = mask & ((1 << idx) - 1)
    return low | ((mask >> (idx + 1)) << idx)


def minor_step(system: SetSystem, element: str, mode: MinorMode) -> SetSystem:
    """Elementary minor: delete or contract one element.

    Deleting keeps the members avoiding the element; contracting strips it
    from the members containing it.  Deleting a coloop falls back to the
    contraction rule and contracting a loop to the deletion rule, so the
    result family is never empty.
    """
    family = system.family
    if not family:
        raise EmptyFamilyError("empty family")
    ground = system.ground
    idx = ground.index(element)
    ebit = 1 << idx
    union = 0
    inter = ground.full_mask
    for m in family:
        union |= m
        inter &= m
    is_loop = not union & ebit
    is_coloop = bool(inter & ebit)
    contract = mode is MinorMode.CONTRACT
    if contract and is_loop:
        contract = False
    elif not contract and is_coloop:
        contract = True
    if contract:
        new_family = [_drop_bit(m ^ ebit, idx) for m in family if m & ebit]
    else:
        new_family = [_drop_bit(m, idx) for m in family if not m & ebit]
    labels = ground.labels[:idx] + ground.labels[idx + 1 :]
    return SetSystem(GroundSet(labels), new_family)


def minor(system: SetSystem, delete_mask: int, contract_mask: int) -> SetSystem:
    """Fold of minor_step over two disjoint element sets, in ground order.

    For disjoint sets the outcome does not depend on the processing order;
    that independence is a tested property, not an assumption.
    """
    if delete_mask & contract_mask:
        raise ValueError("deletion and contraction sets overlap")
    full = system.ground.full_mask
    if (delete_mask | contract_mask) & ~full:
        raise ValueError("minor set outside the ground set")
    plan = [
        (label, MinorMode.DELETE if delete_mask >> i & 1 else MinorMode.CONTRACT)
        for i, label in enumerate(system.ground.labels)
        if (delete_mask | contract_mask) >> i & 1
    ]
    for label, mode in plan:
        system = minor_step(system, label, mode)
    return system


def graphic_matroid(
    vertices: int, edges: list[tuple[str, int, int]]
) -> Matroid:
    """Matroid whose bases are the spanning-tree edge sets of a graph.

    Vertices are numbered 1..vertices; parallel edges and self-loops are
    allowed.  Spanning trees are enumerated exhaustively by filtering all
    (vertices - 1)-edge subsets for acyclicity and connectivity.
    """
    if vertices < 1:
        raise ValueError("graph needs at least one vertex")
    if len(edges) > 64:
        raise ValueError("more than 64 edges")
    for label, u, v in edges:
        if not (1 <= u <= vertices and 1 <= v <= vertices):
            raise ValueError(f"edge {label!r} endpoint outside 1..{vertices}")
    ground = GroundSet(label for label, _, _ in edges)

    def forest_mask(edge_idxs: tuple[int, ...]) -> int | None:
        parent = list(range(vertices + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        mask = 0
        for i in edge_idxs:
            _, u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                return None
            parent[ru] = rv
            mask |= 1 << i
        return mask

    parent = list(range(vertices + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, u, v in edges:
        parent[find(u)] = find(v)
    roots = {find(v) for v in range(1, vertices + 1)}
    if len(roots) != 1:
        raise DeltaMatroidError("no spanning tree")

    bases = []
    for combo in combinations(range(len(edges)), vertices - 1):
        mask = forest_mask(combo)
        if mask is not None:
            bases.append(mask)
    return Matroid(SetSystem(ground, bases))


def _is_u24(system: SetSystem) -> bool:
    family = system.family
    return (
        len(system.ground) == 4
        and len(family) == 6
        and all(m.bit_count() == 2 for m in family)
    )


def has_u24_pattern(matroid: Matroid) -> bool:
    """Whether some minor is the rank-2 uniform matroid on four elements.

    That minor's basis family is the six-basis pattern
    {F, F d{x1,x2}, F d{y1,y2}, F d{x1,x2} d{y1,y2}, F d{x1,y2}, F d{y1,x2}}
    with F = empty, and it is the minimal obstruction to binary
    representability.  Minors are enumerated naively with memoization on
    (ground, family) pairs; fine for ground sets up to about 10 elements.
    """
    start = matroid.carrier
    seen = {(start.ground.labels, start.family)}
    queue = deque([start])
    while queue:
        system = queue.popleft()
        n = len(system.ground)
        if n == 4 and _is_u24(system):
            return True
        if n <= 4 or len(system.family) < 6:
            continue
        for label in system.ground.labels:
            for mode in (MinorMode.DELETE, MinorMode.CONTRACT):
                child = minor_step(system, label, mode)
                key = (child.ground.labels, child.family)
                if key not in seen:
                    seen.add(key)
                    queue.append(child)
    return False
