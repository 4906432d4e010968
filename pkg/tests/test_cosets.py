"""Coset representative lists, the partition property, and cusp classes."""

import random

import pytest

from theta_kernel.cosets import (
    DEFAULT_CUSP_PROBES,
    INFINITY,
    CuspPoint,
    apply_to_cusp,
    coset_rep_of,
    coset_reps,
    cusp_class_count,
    cusp_classes,
    cusp_equivalent,
    index,
)
from theta_kernel.multiplier import membership
from theta_kernel.sl2z import IDENTITY, S, T, Mat2, random_element


EXPECTED_REPS = {
    3: [(1, 0, 0, 1), (1, 1, 0, 1), (1, 2, 0, 1),
        (1, 0, -1, 1), (1, 1, -1, 0), (-1, 1, 1, -2)],
    4: [(1, 0, 0, 1), (1, 1, 0, 1), (1, 2, 0, 1),
        (1, -1, 0, 1), (-1, 0, 1, -1), (-1, -1, 1, 0)],
}


@pytest.mark.parametrize("level", (3, 4))
def test_rep_lists(level):
    reps = coset_reps(level)
    assert [r.entries() for r in reps] == EXPECTED_REPS[level]
    for r in reps:
        assert r.a * r.d - r.b * r.c == 1


def test_rep_of_examples():
    for level in (3, 4):
        assert coset_rep_of(IDENTITY, level) == 0
        assert coset_rep_of(S, level) == 1
        assert coset_rep_of(T, level) == 0  # T is a member at both levels


def test_rep_of_is_unique_on_random_matrices():
    rng = random.Random(83)
    for level in (3, 4):
        for _ in range(500):
            i = coset_rep_of(random_element(rng), level)
            assert 0 <= i < 6


def test_rep_of_is_unique_exhaustively_in_a_box():
    # coset_rep_of raises unless exactly one representative matches, so
    # a clean sweep certifies the partition on every matrix in the box
    box = 8
    count = 0
    for a in range(-box, box + 1):
        for b in range(-box, box + 1):
            for c in range(-box, box + 1):
                num = 1 + b * c
                if a == 0:
                    if num == 0:
                        for d in range(-box, box + 1):
                            count += 1
                            for level in (3, 4):
                                coset_rep_of(Mat2(0, b, c, d), level)
                    continue
                if num % a or abs(num // a) > box:
                    continue
                count += 1
                for level in (3, 4):
                    coset_rep_of(Mat2(a, b, c, num // a), level)
    assert count > 600


@pytest.mark.parametrize("level", (3, 4))
def test_reps_pairwise_inequivalent(level):
    reps = coset_reps(level)
    for i, ri in enumerate(reps):
        for j, rj in enumerate(reps):
            if i != j:
                assert not membership(ri * rj.inverse(), level)


@pytest.mark.parametrize("level", (3, 4))
def test_index_is_six(level):
    assert index(level) == 6 == len(coset_reps(level))


def test_invalid_level():
    with pytest.raises(ValueError):
        coset_reps(5)
    with pytest.raises(ValueError):
        index(2)


# -- cusps -------------------------------------------------------------------

def test_cusp_normalization_and_parsing():
    assert CuspPoint.make(2, -4) == CuspPoint(-1, 2)
    assert CuspPoint.make(-3, 0) == INFINITY
    assert CuspPoint.parse("inf") == INFINITY
    assert CuspPoint.parse("-1") == CuspPoint(-1, 1)
    assert CuspPoint.parse("2/6") == CuspPoint(1, 3)
    assert str(CuspPoint(-1, 2)) == "-1/2"
    assert str(INFINITY) == "inf"
    with pytest.raises(ValueError):
        CuspPoint(2, 4)
    with pytest.raises(ValueError):
        CuspPoint.make(0, 0)


def test_apply_to_cusp():
    assert apply_to_cusp(T, INFINITY) == CuspPoint(0, 1)
    assert apply_to_cusp(S, CuspPoint(0, 1)) == CuspPoint(1, 1)
    assert apply_to_cusp(T, CuspPoint(0, 1)) == INFINITY


@pytest.mark.parametrize("level", (3, 4))
def test_cusp_equivalences(level):
    assert cusp_equivalent(INFINITY, CuspPoint(0, 1), level)
    assert not cusp_equivalent(INFINITY, CuspPoint(-1, 1), level)
    for x in (INFINITY, CuspPoint(0, 1), CuspPoint(-1, 1), CuspPoint(1, 2)):
        assert cusp_equivalent(x, x, level)


@pytest.mark.parametrize("level", (3, 4))
def test_two_cusp_classes(level):
    classes = cusp_classes(level)
    assert len(classes) == 2
    assert cusp_class_count(level) == 2
    flattened = [p for cls in classes for p in cls]
    assert INFINITY in flattened
    assert CuspPoint(-1, 1) in flattened
    # the two anchors land in different classes
    inf_class = next(c for c in classes if INFINITY in c)
    assert CuspPoint(-1, 1) not in inf_class


@pytest.mark.parametrize("level", (3, 4))
def test_cusp_equivalence_is_an_equivalence(level):
    points = [INFINITY, CuspPoint(0, 1), CuspPoint(-1, 1), CuspPoint(1, 1),
              CuspPoint(1, 2), CuspPoint(-1, 2), CuspPoint(1, 3), CuspPoint(-1, 3),
              CuspPoint(2, 3), CuspPoint(-2, 3), CuspPoint(2, 1), CuspPoint(-2, 1)]
    eq = {(i, j): cusp_equivalent(p, q, level)
          for i, p in enumerate(points) for j, q in enumerate(points)}
    n = len(points)
    assert all(eq[i, i] for i in range(n))
    assert all(eq[i, j] == eq[j, i] for i in range(n) for j in range(n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if eq[i, j] and eq[j, k]:
                    assert eq[i, k]


def test_probe_images_cover_both_classes():
    # every coset-translated probe lands in one of the two known classes
    for level in (3, 4):
        anchors = (INFINITY, CuspPoint(-1, 1))
        for rep in coset_reps(level):
            for probe in DEFAULT_CUSP_PROBES:
                point = apply_to_cusp(rep, probe)
                assert any(cusp_equivalent(point, a, level) for a in anchors)
