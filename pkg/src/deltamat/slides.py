"""The handle-slide operation on set systems and replayable slide traces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .setsystem import SetSystem


@dataclass(frozen=True)
class SlideTrace:
    """Ordered (a, b) element pairs; each step slides a over b.

    A trace is a replayable certificate: applying it to the system it was
    computed for reproduces the recorded outcome exactly.
    """

    steps: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        steps = tuple((a, b) for a, b in self.steps)
        for a, b in steps:
            if a == b:
                raise ValueError(f"slide with equal elements {a!r}")
        object.__setattr__(self, "steps", steps)

    def __iter__(self) -> Iterator[tuple[str, str]]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "SlideTrace") -> "SlideTrace":
        return SlideTrace(self.steps + other.steps)


def _slide_members(members: frozenset[int], abit: int, bbit: int) -> frozenset[int]:
    """Raw-mask slide kernel shared with the reduction searches."""
    pair = abit | bbit
    modifier = {m ^ pair for m in members if m & bbit and not m & abit}
    return members ^ modifier


def handle_slide(system: SetSystem, a: str, b: str) -> SetSystem:
    """Slide a over b: toggle X union {a} for every member X union {b}
    with X avoiding both a and b.

    Members containing b but not a are the sources; each contributes its
    own copy with b swapped for a, and the family takes the symmetric
    difference with that modifier set.  The result is a plain set system;
    it satisfies the symmetric exchange axiom again only when the input is
    a binary delta-matroid.
    """
    if a == b:
        raise ValueError(f"slide with equal elements {a!r}")
    ground = system.ground
    abit = 1 << ground.index(a)
    bbit = 1 << ground.index(b)
    return SetSystem(ground, _slide_members(system.member_set, abit, bbit))


def apply_trace(
    system: SetSystem, trace: SlideTrace | Iterable[tuple[str, str]]
) -> SetSystem:
    """Left fold of handle_slide over the steps of a trace."""
    for a, b in trace:
        system = handle_slide(system, a, b)
    return system
