"""Canonical forms D_{i,j,k,l}: construction, structural recognition, and
the slide-trace reduction pipeline for binary delta-matroids.

A canonical system is a direct sum of four kinds of atoms: loop atoms
({e}, {emptyset}), pair atoms ({e,f}, {emptyset, {e,f}}), odd atoms
({e}, {emptyset, {e}}), and full atoms ({e}, {{e}}).  Every binary
delta-matroid can be taken to such a form by handle slides alone; reduce
produces the slide trace and verifies it by replay."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from .errors import NotBinaryError, ReductionError
from .gf2 import recognize_binary
from .matroid import BoundSide, Matroid, bound_matroid, minor
from .setsystem import (
    GroundSet,
    Parity,
    SetSystem,
    direct_sum,
    find_isomorphism,
    iter_bits,
    profile,
)
from .slides import SlideTrace, _slide_members, apply_trace


class CanonicalParams(NamedTuple):
    """Atom counts (i loops, j pairs, k odds, l fulls) of a canonical form."""

    i: int
    j: int
    k: int
    l: int

    @property
    def ground_size(self) -> int:
        return self.i + 2 * self.j + self.k + self.l


def build_canonical(params: CanonicalParams) -> SetSystem:
    """Direct sum of the atoms named by ``params``.

    Elements are labelled e1, e2, ... with loop atoms first, then pair
    atoms, then odd atoms, then full atoms.  The family has 2^(j+k)
    members (each pair and odd atom contributes an independent choice).
    """
    i, j, k, l = params
    if min(i, j, k, l) < 0:
        raise ValueError("negative canonical parameter")
    counter = iter(range(1, params.ground_size + 1))
    parts: list[SetSystem] = []
    for _ in range(i):
        parts.append(SetSystem(GroundSet([f"e{next(counter)}"]), [0]))
    for _ in range(j):
        ground = GroundSet([f"e{next(counter)}", f"e{next(counter)}"])
        parts.append(SetSystem(ground, [0, 3]))
    for _ in range(k):
        parts.append(SetSystem(GroundSet([f"e{next(counter)}"]), [0, 1]))
    for _ in range(l):
        parts.append(SetSystem(GroundSet([f"e{next(counter)}"]), [1]))
    return direct_sum(parts)


def _match_members(full: int, members: frozenset[int]) -> Optional[CanonicalParams]:
    """Structural canonical-form test on a raw member set; see match_canonical."""
    count = len(members)
    if count & (count - 1):
        return None
    union = 0
    inter = full
    for m in members:
        union |= m
        inter &= m
    loops = full & ~union
    residual = union & ~inter
    groups: dict[frozenset[int], int] = {}
    for vbit in iter_bits(residual):
        signature = frozenset(m for m in members if m & vbit)
        groups[signature] = groups.get(signature, 0) | vbit
    j = k = 0
    blocks: list[int] = []
    for block in groups.values():
        size = block.bit_count()
        if size == 1:
            k += 1
        elif size == 2:
            j += 1
        else:
            return None
        blocks.append(block)
    if count != 1 << (j + k):
        return None
    expected = {inter}
    for block in blocks:
        expected |= {m | block for m in expected}
    if expected != set(members):
        return None
    return CanonicalParams(loops.bit_count(), j, k, inter.bit_count())


def match_canonical(system: SetSystem) -> Optional[CanonicalParams]:
    """The params p with system isomorphic to build_canonical(p), if any.

    Structural, not search-based: loops give i, elements common to all
    members give l, and the remaining elements must split into blocks of
    co-occurring elements (size 2 = pair atom, size 1 = odd atom) whose
    independent choices generate the family exactly.
    """
    return _match_members(system.ground.full_mask, system.member_set)


def canonical_params(system: SetSystem) -> CanonicalParams:
    """Predicted canonical parameters of a binary delta-matroid.

    With sizes s of the feasible sets: i = |E| - max(s), l = min(s), and
    the window w = max(s) - min(s) is split as (j, k) = (w/2, 0) when all
    sizes share one parity and (0, w) otherwise.
    """
    if recognize_binary(system) is None:
        raise NotBinaryError("not binary")
    prof = profile(system)
    i = len(system.ground) - prof.max_size
    l = prof.min_size
    w = prof.max_size - prof.min_size
    if prof.parity is Parity.EVEN:
        return CanonicalParams(i, w // 2, 0, l)
    return CanonicalParams(i, 0, w, l)


@dataclass(frozen=True, eq=True)
class ReductionResult:
    """A verified reduction: trace, target params, and an isomorphism
    witness from the replayed system onto build_canonical(params)."""

    trace: SlideTrace
    params: CanonicalParams
    witness: dict[str, str]


def _bfs_slides(
    ground: GroundSet,
    start: frozenset[int],
    pairs: list[tuple[int, int]],
    goal: Callable[[frozenset[int]], bool],
    max_depth: Optional[int],
) -> Optional[SlideTrace]:
    """Shortest slide sequence from start to a goal state, or None.

    States are exact member sets; visited states are never re-expanded.
    Moves are tried in the fixed ``pairs`` order, so the result is
    deterministic.
    """
    if goal(start):
        return SlideTrace()
    seen = {start}
    queue: deque[tuple[frozenset[int], tuple[tuple[int, int], ...]]] = deque()
    queue.append((start, ()))
    while queue:
        members, path = queue.popleft()
        if max_depth is not None and len(path) >= max_depth:
            continue
        for a, b in pairs:
            child = _slide_members(members, 1 << a, 1 << b)
            if child in seen:
                continue
            seen.add(child)
            child_path = path + ((a, b),)
            if goal(child):
                return SlideTrace(
                    tuple((ground.label(x), ground.label(y)) for x, y in child_path)
                )
            queue.append((child, child_path))
    return None


def _greedy_move(family: frozenset[int], target: int) -> Optional[tuple[int, int]]:
    """Slide indices (a, b) removing the first length-1 basis, if one exists.

    A length-1 basis is B = target delta {x, y} with x in target, y outside;
    sliding y over x toggles exactly the members that trade x for y, which
    removes B and can never remove the target itself.
    """
    for member in sorted(family):
        if member == target:
            continue
        delta = member ^ target
        if delta.bit_count() == 2:
            x = delta & target
            y = delta & ~target
            return (y.bit_length() - 1, x.bit_length() - 1)
    return None


def reduce_matroid(
    matroid: Matroid, target: int, max_depth: Optional[int] = None
) -> SlideTrace:
    """Slide trace taking the basis family to the single basis ``target``.

    Greedy elimination of length-1 bases first (with a 4^|E| step budget:
    removing one such basis can create others, and the loop is not known
    to terminate in general), then a breadth-first search over slide
    sequences restricted to the support.  Both fail only for non-binary
    input, where no reduction exists.
    """
    if target not in matroid.carrier.member_set:
        raise ValueError("target is not a basis")
    ground = matroid.ground
    start = matroid.carrier.member_set
    goal_set = frozenset([target])
    family = start
    steps: list[tuple[str, str]] = []
    for _ in range(4 ** len(ground)):
        if family == goal_set:
            return SlideTrace(tuple(steps))
        move = _greedy_move(family, target)
        if move is None:
            break
        a, b = move
        steps.append((ground.label(a), ground.label(b)))
        family = _slide_members(family, 1 << a, 1 << b)
    support = 0
    for m in start:
        support |= m
    indices = [bit.bit_length() - 1 for bit in iter_bits(support)]
    pairs = [(a, b) for a in indices for b in indices if a != b]
    trace = _bfs_slides(ground, start, pairs, lambda fam: fam == goal_set, max_depth)
    if trace is None:
        raise ReductionError("no reduction found")
    return trace


def _layer(system: SetSystem, size: int) -> list[int]:
    return [m for m in system.family if m.bit_count() == size]


def reduce(system: SetSystem, max_depth: Optional[int] = None) -> ReductionResult:
    """Slide trace taking a binary delta-matroid to its canonical form.

    Three concatenated stages, each verified before the next starts.
    Slides act independently on each layer of equal-size members, so a
    trace computed on the upper or lower matroid alone has the same effect
    on that layer of the full system.

      A: reduce the upper matroid to its first basis; exactly one
         maximum-size feasible F remains, and every feasible is then
         contained in F (it is independent in the one-basis upper matroid).
      B: reduce the lower matroid to its first basis; its slides use only
         elements of F, which leaves F itself untouched.
      C: breadth-first search over slides avoiding the minimum feasible
         until the structural canonical test reports exactly the predicted
         params.  Those slides never touch the minimum feasible, which
         stays the unique smallest member throughout.

    The returned trace is replayed against the original input and the
    result is matched onto build_canonical(params); the witness bijection
    is part of the result.
    """
    params = canonical_params(system)
    prof = profile(system)
    current = system
    trace = SlideTrace()

    upper = bound_matroid(current, BoundSide.UPPER)
    stage_a = reduce_matroid(upper, upper.bases[0], max_depth)
    trace += stage_a
    current = apply_trace(current, stage_a)
    assert _layer(current, prof.max_size) == [upper.bases[0]]
    assert current.family[0].bit_count() == prof.min_size
    f_max = upper.bases[0]
    assert all(m & ~f_max == 0 for m in current.family)

    lower = bound_matroid(current, BoundSide.LOWER)
    stage_b = reduce_matroid(lower, lower.bases[0], max_depth)
    assert all(
        current.ground.mask_of((a, b)) & ~f_max == 0 for a, b in stage_b
    )
    trace += stage_b
    current = apply_trace(current, stage_b)
    f_min = lower.bases[0]
    assert _layer(current, prof.min_size) == [f_min]
    assert _layer(current, prof.max_size) == [f_max]

    contraction = minor(current, 0, f_min)
    assert 0 in contraction.member_set

    full = current.ground.full_mask
    outside = [bit.bit_length() - 1 for bit in iter_bits(full & ~f_min)]
    pairs = [(a, b) for a in outside for b in outside if a != b]
    stage_c = _bfs_slides(
        current.ground,
        current.member_set,
        pairs,
        lambda members: _match_members(full, members) == params,
        max_depth,
    )
    if stage_c is None:
        raise ReductionError("no reduction found")
    trace += stage_c

    final = apply_trace(system, trace)
    assert match_canonical(final) == params
    witness = find_isomorphism(final, build_canonical(params))
    assert witness is not None
    return ReductionResult(trace=trace, params=params, witness=witness)
