"""Tests for canonical forms, parameter extraction, and reduction."""

from __future__ import annotations

import itertools
import random

import pytest

from deltamat import (
    CanonicalParams,
    GroundSet,
    Matroid,
    NotBinaryError,
    ReductionError,
    SetSystem,
    apply_trace,
    build_canonical,
    canonical_params,
    default_ground,
    enumerate_delta_matroids,
    find_isomorphism,
    graphic_matroid,
    handle_slide,
    match_canonical,
    recognize_binary,
    reduce,
    reduce_matroid,
)
from tests.conftest import system


def all_params(budget: int):
    for i in range(budget + 1):
        for j in range((budget - i) // 2 + 1):
            for k in range(budget - i - 2 * j + 1):
                for l in range(budget - i - 2 * j - k + 1):
                    yield CanonicalParams(i, j, k, l)


class TestCanonicalParamsTuple:
    def test_ground_size(self):
        assert CanonicalParams(1, 1, 0, 1).ground_size == 4
        assert CanonicalParams(0, 0, 0, 0).ground_size == 0
        assert CanonicalParams(2, 3, 4, 5).ground_size == 17


class TestBuildCanonical:
    def test_empty(self):
        s = build_canonical(CanonicalParams(0, 0, 0, 0))
        assert len(s.ground) == 0
        assert s.family == (0,)

    def test_single_atoms(self):
        assert build_canonical(CanonicalParams(1, 0, 0, 0)) == system(
            ["e1"], [[]]
        )
        assert build_canonical(CanonicalParams(0, 0, 1, 0)) == system(
            ["e1"], [[], ["e1"]]
        )
        assert build_canonical(CanonicalParams(0, 0, 0, 1)) == system(
            ["e1"], [["e1"]]
        )
        assert build_canonical(CanonicalParams(0, 1, 0, 0)) == SetSystem(
            GroundSet(["e1", "e2"]), [0b00, 0b11]
        )

    def test_running_example_shape(self):
        s = build_canonical(CanonicalParams(1, 1, 0, 1))
        assert s.ground.labels == ("e1", "e2", "e3", "e4")
        assert s.members_as_labels() == (("e4",), ("e2", "e3", "e4"))

    def test_family_size(self):
        for p in all_params(6):
            s = build_canonical(p)
            assert len(s.family) == 2 ** (p.j + p.k)
            assert len(s.ground) == p.ground_size

    def test_negative_rejected(self):
        with pytest.raises(ValueError, match="negative"):
            build_canonical(CanonicalParams(-1, 0, 0, 0))


class TestMatchCanonical:
    def test_round_trip_exhaustive(self):
        for p in all_params(7):
            assert match_canonical(build_canonical(p)) == p

    def test_relabelled_canonical_still_matches(self):
        s = build_canonical(CanonicalParams(1, 1, 0, 1))
        relabelled = SetSystem(default_ground(4), s.family)
        assert match_canonical(relabelled) == CanonicalParams(1, 1, 0, 1)

    def test_example_is_not_canonical(self, example):
        assert match_canonical(example) is None

    def test_wrong_family_size(self, u24):
        assert match_canonical(u24) is None

    def test_perturbed_canonical_rejected(self):
        s = build_canonical(CanonicalParams(0, 2, 0, 0))
        spoiled = SetSystem(s.ground, list(s.family[:-1]))
        assert match_canonical(spoiled) is None
        extra = SetSystem(s.ground, list(s.family) + [0b0001])
        assert match_canonical(extra) is None


class TestCanonicalParameters:
    def test_worked_values(self, example, f1, f2, f3_completed):
        assert canonical_params(example) == CanonicalParams(1, 1, 0, 1)
        assert canonical_params(f1) == CanonicalParams(3, 0, 0, 3)
        assert canonical_params(f2) == CanonicalParams(1, 1, 0, 3)
        assert canonical_params(f3_completed) == CanonicalParams(1, 0, 2, 3)

    def test_non_binary_rejected(self, u24, f3):
        with pytest.raises(NotBinaryError):
            canonical_params(u24)
        # f3 fails symmetric exchange, hence cannot be binary.
        with pytest.raises(NotBinaryError):
            canonical_params(f3)

    def test_ground_size_invariant(self):
        for s in enumerate_delta_matroids(3):
            if recognize_binary(s) is None:
                continue
            p = canonical_params(s)
            assert p.ground_size == 3
            assert p.j == 0 or p.k == 0

    def test_slide_invariance(self, example):
        for a, b in itertools.permutations("1234", 2):
            assert canonical_params(handle_slide(example, a, b)) == (
                canonical_params(example)
            )

    def test_matches_window_formula(self, f2):
        p = canonical_params(f2)
        sizes = [m.bit_count() for m in f2.family]
        assert p.i == len(f2.ground) - max(sizes)
        assert p.l == min(sizes)
        assert 2 * p.j + p.k == max(sizes) - min(sizes)


class TestReduceMatroid:
    def test_triangle(self):
        tri = graphic_matroid(3, [("a", 1, 2), ("b", 2, 3), ("c", 1, 3)])
        target = tri.ground.mask_of("ab")
        trace = reduce_matroid(tri, target)
        final = apply_trace(tri.carrier, trace)
        assert final.family == (target,)

    def test_k4_star(self):
        k4 = graphic_matroid(
            4,
            [
                ("a", 1, 2), ("b", 1, 3), ("c", 1, 4),
                ("A", 3, 4), ("B", 2, 4), ("C", 2, 3),
            ],
        )
        target = k4.ground.mask_of("abc")
        final = apply_trace(k4.carrier, reduce_matroid(k4, target))
        assert final.family == (target,)

    def test_every_basis_reachable(self, f1):
        m = Matroid(f1)
        for target in m.bases:
            final = apply_trace(f1, reduce_matroid(m, target))
            assert final.family == (target,)

    def test_target_must_be_a_basis(self, u24):
        with pytest.raises(ValueError, match="not a basis"):
            reduce_matroid(Matroid(u24), u24.ground.mask_of("123"))

    def test_u24_cannot_be_reduced(self, u24):
        with pytest.raises(ReductionError):
            reduce_matroid(Matroid(u24), u24.ground.mask_of("12"))

    def test_single_basis_needs_no_slides(self):
        m = Matroid(system("ab", ["ab"]))
        trace = reduce_matroid(m, m.ground.mask_of("ab"))
        assert len(trace) == 0


class TestReduce:
    def check(self, s, want):
        result = reduce(s)
        assert tuple(result.params) == want
        final = apply_trace(s, result.trace)
        assert match_canonical(final) == result.params
        canonical = build_canonical(result.params)
        iso = find_isomorphism(final, canonical)
        assert iso is not None
        assert result.witness == iso
        return result

    def test_running_example(self, example):
        result = self.check(example, (1, 1, 0, 1))
        final = apply_trace(example, result.trace)
        assert final == system("1234", ["1", "123"])

    def test_worked_families(self, f1, f2, f3_completed):
        self.check(f1, (3, 0, 0, 3))
        self.check(f2, (1, 1, 0, 3))
        self.check(f3_completed, (1, 0, 2, 3))

    def test_canonical_input_needs_no_slides(self):
        for p in [
            CanonicalParams(1, 1, 0, 1),
            CanonicalParams(2, 0, 3, 0),
            CanonicalParams(0, 2, 0, 1),
        ]:
            result = reduce(build_canonical(p))
            assert len(result.trace) == 0
            assert result.params == p

    def test_denormalized_shape_gets_normalized(self):
        s = build_canonical(CanonicalParams(0, 1, 1, 0))
        result = self.check(s, (0, 0, 3, 0))
        assert len(result.trace) > 0

    def test_non_binary_rejected(self, u24, f3):
        with pytest.raises(NotBinaryError):
            reduce(u24)
        with pytest.raises(NotBinaryError):
            reduce(f3)

    def test_twisted_example(self, example):
        twisted = SetSystem(
            example.ground,
            [m ^ example.ground.mask_of("13") for m in example.family],
        )
        result = reduce(twisted)
        final = apply_trace(twisted, result.trace)
        assert match_canonical(final) == result.params

    def test_census_spot_checks(self):
        rng = random.Random(31)
        pool = [
            s
            for s in enumerate_delta_matroids(3)
            if recognize_binary(s) is not None
        ]
        for s in rng.sample(pool, 20):
            result = reduce(s)
            assert canonical_params(s) == result.params
            final = apply_trace(s, result.trace)
            assert match_canonical(final) == result.params
