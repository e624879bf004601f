"""Lattice-point enumeration and Ehrhart pipeline tests.

Count oracles: closed-form formulas for boxes, crosses, and simplices;
explicit hand-derived inequality systems for the Reeve simplex; the pruned
DFS is cross-checked against the unpruned box scan on seeded random
polytopes. Frozen h*-vectors were derived by transforming oracle counts
with an independent convolution (see test_ratpoly) before being pinned here.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb

import pytest

from ehrkit.enumeration import (
    count_points,
    ehrhart,
    enumerate_points,
    reciprocity_check,
)
from ehrkit.polytope import normalize


def cross_polytope(d):
    pts = []
    for i in range(d):
        for s in (1, -1):
            pts.append([s if j == i else 0 for j in range(d)])
    return normalize(pts)


def reeve_simplex(q):
    return normalize([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, q]])


def reeve_count_oracle(q, n, interior=False):
    # independent membership: z >= 0, z <= qx, z <= qy, q(x+y) - z <= qn
    total = 0
    for x in range(0, n + 1):
        for y in range(0, n + 1):
            for z in range(0, q * n + 1):
                conds = [z >= 0, z <= q * x, z <= q * y, q * (x + y) - z <= q * n]
                strict = [z > 0, z < q * x, z < q * y, q * (x + y) - z < q * n]
                if all(strict if interior else conds):
                    total += 1
    return total


def test_unit_square_counts_match_formula():
    p = normalize([[0, 0], [1, 0], [0, 1], [1, 1]])
    for n in range(7):
        assert count_points(p, n) == (n + 1) ** 2
        if n >= 1:
            assert count_points(p, n, region="interior") == (n - 1) ** 2


def test_cross_polytope_counts():
    p = cross_polytope(2)
    for n in range(6):
        assert count_points(p, n) == 2 * n * n + 2 * n + 1


def test_standard_simplex_counts():
    p = normalize([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    for n in range(7):
        assert count_points(p, n) == comb(n + 3, 3)
        assert count_points(p, n, region="interior") == (comb(n - 1, 3) if n else 1)


def test_reeve_simplex_counts_match_inequality_oracle():
    for q in (2, 3):
        p = reeve_simplex(q)
        for n in range(5):
            assert count_points(p, n) == reeve_count_oracle(q, n)
            if n >= 1:
                assert count_points(p, n, region="interior") == reeve_count_oracle(
                    q, n, interior=True
                )


def test_enumerate_returns_sorted_points():
    p = normalize([[0, 0], [2, 0], [0, 1]])
    pts = enumerate_points(p)
    assert pts == sorted(pts)
    assert pts == [(0, 0), (0, 1), (1, 0), (2, 0)]


def test_pruned_dfs_agrees_with_box_scan_on_random_polytopes():
    rng = random.Random(20240817)
    for trial in range(25):
        dim = rng.choice([1, 2, 2, 3])
        pts = [
            [rng.randint(-2, 2) for _ in range(dim)]
            for _ in range(rng.randint(dim + 1, dim + 4))
        ]
        p = normalize(pts)
        for region in ("closed", "interior"):
            fast = enumerate_points(p, region=region)
            slow = enumerate_points(p, region=region, prune=False)
            assert fast == slow, (trial, region, pts)


def test_rational_half_segment_counts():
    p = normalize([["0"], ["1/2"]])
    for n in range(9):
        assert count_points(p, n) == n // 2 + 1
        if n >= 1:
            assert count_points(p, n, region="interior") == (n + 1) // 2 - 1


def test_ehrhart_unit_square():
    res = ehrhart(normalize([[0, 0], [1, 0], [0, 1], [1, 1]], name="unit_square"))
    assert res.period == 1
    assert res.quasi.constituents[0].coeffs == (1, 2, 1)
    assert res.hstar.coeffs == (1, 1)
    assert res.quasi_interior.constituents[0].coeffs == (1, -2, 1)
    assert res.count(10) == 121 and res.interior_count(10) == 81


def test_ehrhart_rational_half_segment():
    res = ehrhart(normalize([["0"], ["1/2"]], name="half_segment"))
    assert res.period == 2
    assert res.hstar.coeffs == (1, 1) and res.hstar.period == 2
    assert [res.count(n) for n in range(6)] == [1, 1, 2, 2, 3, 3]
    assert res.quasi.evaluate(5) == 3
    assert res.quasi.minimal_period() == 2


def test_ehrhart_lower_dimensional_polytope():
    res = ehrhart(normalize([[0, 0], [1, 0]], name="embedded_segment"))
    assert res.dim == 1
    assert res.period == 1
    assert res.hstar.coeffs == (1,)
    assert res.count(7) == 8


def test_ehrhart_simplex_hstar_codegree():
    res = ehrhart(normalize([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert res.hstar.coeffs == (1,)
    assert res.hstar.codegree() == 4
    assert res.interior_count(4) == 1  # first dilate with an interior point


def test_ehrhart_reeve_hstar_frozen():
    assert ehrhart(reeve_simplex(2)).hstar.coeffs == (1, 0, 1)
    assert ehrhart(reeve_simplex(3)).hstar.coeffs == (1, 0, 2)


def test_ehrhart_centered_square():
    res = ehrhart(normalize([[-1, -1], [1, -1], [-1, 1], [1, 1]]))
    assert res.hstar.coeffs == (1, 6, 1)


def test_reciprocity_check_lattice_and_rational():
    for builder, name in [
        (lambda: normalize([[0, 0], [1, 0], [0, 1], [1, 1]]), "square"),
        (lambda: cross_polytope(3), "octahedron"),
        (lambda: normalize([["0"], ["1/2"]]), "half_segment"),
        (lambda: reeve_simplex(2), "reeve"),
    ]:
        report = reciprocity_check(builder(), max_n=8, direct_cap=4)
        assert report.verdict == "pass", (name, report.instances)
        assert len(report.instances) == 8
        assert all("interior_direct" in inst for inst in report.instances[:4])


def test_reciprocity_half_segment_values():
    # count(-5) = -2 = -interior_count(5) in dimension 1
    res = ehrhart(normalize([["0"], ["1/2"]]))
    assert res.count(-5) == -2
    assert res.interior_count(5) == 2


def test_count_points_zero_dilate():
    p = normalize([[3, 4], [5, 4], [3, 6]])
    assert count_points(p, 0) == 1
    with pytest.raises(Exception):
        count_points(p, -1)


def test_birkhoff_counts_small():
    perms = [
        [1, 0, 0, 0, 1, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 1, 0, 1, 0],
        [0, 1, 0, 1, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, 0, 1, 1, 0, 0],
        [0, 0, 1, 1, 0, 0, 0, 1, 0],
        [0, 0, 1, 0, 1, 0, 1, 0, 0],
    ]
    b3 = normalize(perms, name="birkhoff_3")
    assert b3.dim == 4
    assert [count_points(b3, n) for n in range(4)] == [1, 6, 21, 55]
    assert count_points(b3, 3, region="interior") == 1
