"""Exhaustive enumeration of delta-matroids on tiny ground sets, with an
empirical verification pass that exercises recognition, slides, and the
full reduction pipeline on every instance."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .canon import CanonicalParams, reduce
from .errors import DeltaMatroidError, ReductionError
from .gf2 import default_ground, recognize_binary
from .matroid import BoundSide, bound_matroid, set_status
from .setsystem import Parity, SetSystem, _sea_holds, profile
from .slides import handle_slide

MAX_CENSUS_GROUND = 4


def enumerate_delta_matroids(n: int) -> Iterator[SetSystem]:
    """Every nonempty family on n elements satisfying symmetric exchange.

    Candidate families are the 2^(2^n) - 1 nonempty subsets of the power
    set, visited in ascending family-mask order (bit s of the family mask
    selects the subset whose element mask is s), so the order and the
    resulting counts are deterministic.
    """
    if not 1 <= n <= MAX_CENSUS_GROUND:
        raise ValueError(f"census ground size must be 1..{MAX_CENSUS_GROUND}")
    ground = default_ground(n)
    subset_count = 1 << n
    for family_mask in range(1, 1 << subset_count):
        members = tuple(s for s in range(subset_count) if family_mask >> s & 1)
        if _sea_holds(members, frozenset(members)):
            yield SetSystem(ground, members)


@dataclass(frozen=True)
class FailureRecord:
    """One counterexample family and the property it violated."""

    members: tuple[tuple[str, ...], ...]
    reason: str


@dataclass
class CensusReport:
    """Tally of one verification sweep; failures must stay empty."""

    n: int
    total_families: int
    delta_matroids: int = 0
    binaries: int = 0
    even_count: int = 0
    odd_count: int = 0
    params_histogram: dict[CanonicalParams, int] = field(default_factory=dict)
    failures: list[FailureRecord] = field(default_factory=list)


def _verify_one(system: SetSystem, depth_budget: int, report: CensusReport) -> None:
    def fail(reason: str) -> None:
        report.failures.append(FailureRecord(system.members_as_labels(), reason))

    prof = profile(system)
    if prof.parity is Parity.EVEN:
        report.even_count += 1
    else:
        report.odd_count += 1

    try:
        upper = bound_matroid(system, BoundSide.UPPER)
        lower = bound_matroid(system, BoundSide.LOWER)
    except DeltaMatroidError as err:
        fail(str(err))
        return
    for feasible in system.family:
        if not set_status(lower, feasible).spanning:
            fail("feasible set not spanning in the lower matroid")
            return
        if not set_status(upper, feasible).independent:
            fail("feasible set not independent in the upper matroid")
            return

    if recognize_binary(system) is None:
        return
    report.binaries += 1

    for a in system.ground.labels:
        for b in system.ground.labels:
            if a == b:
                continue
            slid = handle_slide(system, a, b)
            if not _sea_holds(slid.family, slid.member_set):
                fail(f"slide ({a},{b}) broke symmetric exchange")
                return
            if recognize_binary(slid) is None:
                fail(f"slide ({a},{b}) left the binary class")
                return

    try:
        result = reduce(system, max_depth=depth_budget)
    except (ReductionError, AssertionError) as err:
        fail(f"reduction failed: {err}")
        return
    report.params_histogram[result.params] = (
        report.params_histogram.get(result.params, 0) + 1
    )


def verify_small(n: int, depth_budget: int = 12) -> CensusReport:
    """Run every check on every delta-matroid with n elements.

    Per instance: the spanning/independent property of the upper and lower
    matroids on all feasible sets; for binary instances additionally
    closure of the class under every single slide, and the full reduce
    contract (depth_budget caps the search depth of the reduction's
    fallback and middle-stage searches).  Violations are collected as
    FailureRecords, never raised.
    """
    report = CensusReport(n=n, total_families=(1 << (1 << n)) - 1)
    for system in enumerate_delta_matroids(n):
        report.delta_matroids += 1
        _verify_one(system, depth_budget, report)
    return report


def report_lines(report: CensusReport) -> list[str]:
    """Human-readable rendering of a report."""
    lines = [
        f"census n={report.n}",
        f"  families checked   {report.total_families}",
        f"  delta-matroids     {report.delta_matroids}",
        f"  binaries           {report.binaries}",
        f"  even / odd         {report.even_count} / {report.odd_count}",
        "  canonical forms",
    ]
    for params in sorted(report.params_histogram):
        i, j, k, l = params
        count = report.params_histogram[params]
        lines.append(f"    D_{{{i},{j},{k},{l}}}   {count}")
    lines.append(f"  failures           {len(report.failures)}")
    for failure in report.failures:
        family = " ".join("{" + ",".join(m) + "}" for m in failure.members)
        lines.append(f"    {failure.reason}: {family}")
    return lines


def report_dump(report: CensusReport) -> list[str]:
    """Machine-readable `key: value` rendering of a report."""
    lines = [
        f"n: {report.n}",
        f"total_families: {report.total_families}",
        f"delta_matroids: {report.delta_matroids}",
        f"binaries: {report.binaries}",
        f"even: {report.even_count}",
        f"odd: {report.odd_count}",
    ]
    for params in sorted(report.params_histogram):
        i, j, k, l = params
        lines.append(f"params {i} {j} {k} {l}: {report.params_histogram[params]}")
    lines.append(f"failures: {len(report.failures)}")
    for failure in report.failures:
        family = " ".join("{" + ",".join(m) + "}" for m in failure.members)
        lines.append(f"failure: {failure.reason} :: {family}")
    return lines
