"""Tests for handle slides and slide traces."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltamat import (
    SetSystem,
    SlideTrace,
    apply_trace,
    check_sea,
    default_ground,
    enumerate_delta_matroids,
    handle_slide,
    profile,
    recognize_binary,
)
from tests.conftest import system


def oracle_slide(s: SetSystem, a: str, b: str) -> SetSystem:
    """Literal set-algebra restatement of the slide used as an oracle."""
    members = {frozenset(m) for m in s.members_as_labels()}
    toggled = set()
    for x in members:
        if b in x and a not in x:
            toggled.add(frozenset(x - {b} | {a}))
    result = members ^ toggled
    return SetSystem.from_labels(s.ground, [sorted(m) for m in result])


class TestHandleSlide:
    def test_worked_chain(self, example):
        s1 = handle_slide(example, "1", "2")
        assert s1 == system("1234", ["2", "123", "124", "234"])
        s2 = handle_slide(s1, "3", "4")
        assert s2 == system("1234", ["2", "124", "234"])
        s3 = handle_slide(s2, "1", "3")
        assert s3 == system("1234", ["2", "234"])

    def test_equal_elements_rejected(self, example):
        with pytest.raises(ValueError, match="equal elements"):
            handle_slide(example, "1", "1")

    def test_unknown_element_rejected(self, example):
        with pytest.raises(ValueError, match="unknown element"):
            handle_slide(example, "9", "1")

    def test_ground_unchanged(self, example):
        assert handle_slide(example, "1", "2").ground == example.ground

    def test_slide_is_an_involution(self):
        rng = random.Random(5)
        ground = default_ground(4)
        for _ in range(50):
            fam = {rng.randrange(16) for _ in range(rng.randint(1, 8))}
            s = SetSystem(ground, fam)
            a, b = rng.sample("1234", 2)
            assert handle_slide(handle_slide(s, a, b), a, b) == s

    @settings(max_examples=80, deadline=None)
    @given(st.data())
    def test_matches_set_algebra_oracle(self, data):
        n = data.draw(st.integers(2, 5))
        ground = default_ground(n)
        family = data.draw(
            st.sets(st.integers(0, 2**n - 1), min_size=1, max_size=2**n)
        )
        labels = data.draw(
            st.permutations([str(i) for i in range(1, n + 1)])
        )
        a, b = labels[0], labels[1]
        s = SetSystem(ground, family)
        assert handle_slide(s, a, b) == oracle_slide(s, a, b)

    def test_binary_systems_stay_binary(self):
        for s in enumerate_delta_matroids(3):
            if recognize_binary(s) is None:
                continue
            for a, b in itertools.permutations("123", 2):
                slid = handle_slide(s, a, b)
                assert check_sea(slid)
                assert recognize_binary(slid) is not None

    def test_size_window_and_parity_preserved_for_binaries(self, example, f2):
        for s in (example, f2):
            before = profile(s)
            for a, b in itertools.permutations(s.ground.labels[:4], 2):
                after = profile(handle_slide(s, a, b))
                assert (after.min_size, after.max_size) == (
                    before.min_size,
                    before.max_size,
                )
                assert after.parity is before.parity

    def test_toggled_sets_inherit_generator_size(self):
        # Slides act within one size layer at a time, so each layer can be
        # slid independently of the others.
        rng = random.Random(9)
        ground = default_ground(5)
        for _ in range(30):
            fam = {rng.randrange(32) for _ in range(rng.randint(1, 10))}
            s = SetSystem(ground, fam)
            a, b = rng.sample("12345", 2)
            slid = handle_slide(s, a, b)
            for size in range(6):
                layer = {m for m in s.family if m.bit_count() == size}
                whole = handle_slide(
                    SetSystem(ground, layer or {0}), a, b
                )
                if layer:
                    assert {
                        m for m in slid.family if m.bit_count() == size
                    } == set(whole.family)


class TestSlideTrace:
    def test_apply_empty_trace(self, example):
        assert apply_trace(example, SlideTrace(())) == example

    def test_apply_chain(self, example):
        trace = SlideTrace((("1", "2"), ("3", "4"), ("1", "3")))
        assert apply_trace(example, trace) == system("1234", ["2", "234"])

    def test_apply_accepts_plain_pairs(self, example):
        assert apply_trace(example, [("1", "2")]) == handle_slide(
            example, "1", "2"
        )

    def test_concatenation(self, example):
        left = SlideTrace((("1", "2"),))
        right = SlideTrace((("3", "4"),))
        both = left + right
        assert both.steps == (("1", "2"), ("3", "4"))
        assert len(both) == 2
        assert list(both) == [("1", "2"), ("3", "4")]
        assert apply_trace(example, both) == apply_trace(
            apply_trace(example, left), right
        )

    def test_equal_elements_rejected(self):
        with pytest.raises(ValueError, match="equal elements"):
            SlideTrace((("1", "1"),))

    def test_reversed_trace_undoes(self, example):
        trace = SlideTrace((("1", "2"), ("3", "4"), ("1", "3")))
        forward = apply_trace(example, trace)
        back = apply_trace(forward, list(reversed(trace.steps)))
        assert back == example
