"""Coefficient structure of h*-vectors: inequalities and decompositions.

Everything here consumes either an h*-profile (dimension, degree, codegree,
zero-extended coefficients) or a polytope when the statement involves the
geometry itself (reflexivity of a dilate, triangulations of the boundary,
containment). Checks return Reports; decompositions return data and raise
TheoremViolationError when an identity that must hold does not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import linalg
from .enumeration import count_points, ehrhart
from .errors import InputError, TheoremViolationError, UnsupportedError
from .polytope import RationalPolytope, contains_polytope, reflexive_check
from .ratpoly import HStarData, Poly, choose, hstar_from_counts
from .report import HYPOTHESIS_NOT_MET, Report
from .triangulation import Triangulation, placing_triangulation


@dataclass(frozen=True)
class HStarProfile:
    """Dimension, degree, codegree, and zero-extended h*-coefficients."""

    d: int
    s: int
    l: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise InputError("h*-vector must start with 1")
        if any(c < 0 for c in self.coeffs):
            raise InputError("h*-coefficients must be nonnegative")
        if self.s != len(self.coeffs) - 1 or self.l != self.d + 1 - self.s:
            raise InputError("inconsistent degree/codegree data")
        if not 1 <= self.l <= self.d + 1:
            raise InputError("codegree out of range")

    def h(self, j: int) -> int:
        """Coefficient h*_j, reading 0 outside the stored range."""
        if 0 <= j <= self.s:
            return self.coeffs[j]
        return 0

    def h_sum(self, lo: int, hi: int) -> int:
        """Sum of h*_j over lo <= j <= hi (empty when lo > hi)."""
        return sum(self.h(j) for j in range(lo, hi + 1))


def profile(h: HStarData) -> HStarProfile:
    """Profile of an integral h*; rational periods are not supported here."""
    if h.period != 1:
        raise UnsupportedError("profile-based statements need period 1")
    coeffs = []
    for c in h.coeffs:
        value = Fraction(c)
        if value.denominator != 1:
            raise InputError("h*-coefficients must be integers")
        coeffs.append(int(value))
    s = len(coeffs) - 1
    return HStarProfile(h.dim, s, h.dim + 1 - s, tuple(coeffs))


def polytope_profile(p: RationalPolytope) -> HStarProfile:
    return profile(ehrhart(p).hstar)


def stanley_inequalities(pr: HStarProfile) -> Report:
    """Bottom partial sums never exceed the matching top partial sums.

    h*_0 + ... + h*_j <= h*_s + ... + h*_{s-j} for 0 <= j <= d.
    """
    instances = []
    for j in range(pr.d + 1):
        lhs = pr.h_sum(0, j)
        rhs = pr.h_sum(pr.s - j, pr.s)
        instances.append({"index": j, "lhs": lhs, "rhs": rhs, "pass": lhs <= rhs})
    return Report.from_instances("stanley-partial-sums", instances)


def stapledon_inequalities(pr: HStarProfile) -> Report:
    """Codegree-indexed comparisons between low and high coefficient runs."""
    instances = []
    for j in range(pr.d // 2):
        lhs = pr.h_sum(2, j + 1)
        rhs = pr.h_sum(pr.d - j, pr.d - 1)
        instances.append({
            "family": "A", "index": j, "lhs": lhs, "rhs": rhs, "pass": lhs >= rhs,
        })
    low = pr.h_sum(2 - pr.l, 1)
    for j in range(2, pr.d):
        rhs = pr.h_sum(j - pr.l + 1, j)
        instances.append({
            "family": "B", "index": j, "lhs": low, "rhs": rhs, "pass": low <= rhs,
        })
    instances.append({
        "family": "trivial", "index": 0, "lhs": pr.h(1), "rhs": pr.h(pr.d),
        "pass": pr.h(1) >= pr.h(pr.d),
    })
    return Report.from_instances("stapledon-coefficient-runs", instances)


@dataclass(frozen=True)
class ABDecomposition:
    """Split of (1 + x + ... + x^(l-1)) h*(x) into palindromic halves."""

    a: Poly
    b: Poly
    l: int
    d: int


def ab_decomposition(pr: HStarProfile) -> ABDecomposition:
    """Unique palindromic split a(x) + x^l b(x) of the codegree product.

    a is palindromic of degree d, b is palindromic about degree d-l (zero
    when l = d+1). Solved as an exact linear system; uniqueness, the
    reconstruction identity, nonnegativity, a_0 = 1, and the low-coefficient
    chain a_1 <= a_j are all asserted.
    """
    d, l = pr.d, pr.l
    window = Poly([1] * l)
    product = window * Poly([Fraction(c) for c in pr.coeffs])
    n_a = d + 1
    n_b = max(d - l + 1, 0)
    n = n_a + n_b
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    # coefficient matching: a_i + b_{i-l} = product_i for 0 <= i <= d
    for i in range(d + 1):
        row = [Fraction(0)] * n
        row[i] = Fraction(1)
        if 0 <= i - l < n_b:
            row[n_a + i - l] = Fraction(1)
        rows.append(row)
        rhs.append(product[i])
    # palindromy constraints
    for i in range(d + 1):
        row = [Fraction(0)] * n
        row[i] += 1
        row[d - i] -= 1
        rows.append(row)
        rhs.append(Fraction(0))
    for i in range(n_b):
        row = [Fraction(0)] * n
        row[n_a + i] += 1
        row[n_a + d - l - i] -= 1
        rows.append(row)
        rhs.append(Fraction(0))
    if linalg.rank(rows) != n:
        raise TheoremViolationError("palindromic split is not unique")
    solution = linalg.solve(rows, rhs)
    if solution is None:
        raise TheoremViolationError("palindromic split has no solution")
    a = Poly(solution[:n_a])
    b = Poly(solution[n_a:])
    if product != a + b.shift(l):
        raise TheoremViolationError("palindromic split failed to reconstruct")
    for name, poly_part in (("a", a), ("b", b)):
        if not poly_part.is_nonnegative():
            raise TheoremViolationError(f"{name}-part has a negative coefficient")
    if a[0] != 1:
        raise TheoremViolationError("a-part must start with 1")
    for j in range(2, d):
        if not a[1] <= a[j]:
            raise TheoremViolationError("a-part chain a_1 <= a_j failed")
    return ABDecomposition(a, b, l, d)


def ab_report(pr: HStarProfile) -> Report:
    """Report wrapper around the palindromic split."""
    try:
        dec = ab_decomposition(pr)
    except TheoremViolationError as exc:
        return Report("palindromic-split", [
            {"index": 0, "lhs": str(exc), "rhs": None, "pass": False},
        ], "fail")
    instances = [
        {"index": "identity", "lhs": dec.a.to_strings(), "rhs": dec.b.to_strings(),
         "pass": True},
        {"index": "b-zero", "lhs": not dec.b, "rhs": None, "pass": True},
    ]
    return Report.from_instances("palindromic-split", instances,
                                 notes={"l": dec.l, "d": dec.d})


def hibi_check(p: RationalPolytope) -> Report:
    """Palindromic h* exactly when the codegree dilate translates to reflexive."""
    if not p.is_lattice:
        raise UnsupportedError("palindromy-reflexivity check needs a lattice polytope")
    if p.dim != p.ambient_dim:
        raise UnsupportedError("palindromy-reflexivity check needs full dimension")
    pr = polytope_profile(p)
    hstar_poly = Poly([Fraction(c) for c in pr.coeffs])
    palindromic = hstar_poly.is_palindromic(pr.s)
    reflexive, witness = reflexive_check(p.dilate(pr.l))
    instances = [{
        "index": "biconditional",
        "lhs": palindromic,
        "rhs": reflexive,
        "pass": palindromic == reflexive,
    }]
    notes = {"codegree": pr.l}
    if witness is not None:
        notes["witness"] = [str(v) for v in witness]
    return Report.from_instances("palindromy-reflexivity", instances, notes)


def _boundary_cells(t: Triangulation) -> list[tuple[int, ...]]:
    """Codimension-one faces lying in exactly one cell."""
    seen: dict[tuple[int, ...], int] = {}
    for cell in t.cells:
        for drop in cell:
            facet = tuple(v for v in cell if v != drop)
            seen[facet] = seen.get(facet, 0) + 1
    return [facet for facet, hits in seen.items() if hits == 1]


def athanasiadis_check(p: RationalPolytope) -> Report:
    """Inequalities conditional on unimodular (boundary) triangulations.

    Builds the placing triangulation on all lattice points. If it is
    unimodular, checks the decreasing top chain and the binomial bound;
    if the induced boundary triangulation is unimodular, checks the two
    boundary families. With neither hypothesis met the verdict is
    hypothesis-not-met; the main hypothesis drives the verdict and
    boundary results are reported alongside.
    """
    if not p.is_lattice:
        raise UnsupportedError("triangulation inequalities need a lattice polytope")
    pr = polytope_profile(p)
    t = placing_triangulation(p, use_all_lattice_points=True)
    main_unimodular = t.is_unimodular()
    d = pr.d
    instances = []
    if main_unimodular:
        for i in range((d + 1) // 2, d):
            instances.append({
                "family": "top-chain", "index": i, "lhs": pr.h(i),
                "rhs": pr.h(i + 1), "pass": pr.h(i) >= pr.h(i + 1),
            })
        for j in range(d + 1):
            bound = int(choose(pr.h(1) + j - 1, j))
            instances.append({
                "family": "binomial-bound", "index": j, "lhs": pr.h(j),
                "rhs": bound, "pass": pr.h(j) <= bound,
            })
    boundary_unimodular = False
    if d >= 1:
        boundary = _boundary_cells(t)
        boundary_unimodular = all(t.cell_volume(f) == 1 for f in boundary)
    if boundary_unimodular:
        for j in range(d // 2):
            instances.append({
                "family": "boundary-chain", "index": j, "lhs": pr.h(j + 1),
                "rhs": pr.h(d - j), "pass": pr.h(j + 1) >= pr.h(d - j),
            })
            lhs = pr.h_sum(0, j + 1)
            rhs = pr.h_sum(d - j, d) + int(choose(pr.h(1) - pr.h(d) + j + 1, j + 1))
            instances.append({
                "family": "boundary-sums", "index": j, "lhs": lhs, "rhs": rhs,
                "pass": lhs <= rhs,
            })
    notes = {
        "triangulation-unimodular": main_unimodular,
        "boundary-unimodular": boundary_unimodular,
        "cells": len(t.cells),
    }
    if not main_unimodular:
        verdict = HYPOTHESIS_NOT_MET
        if any(not inst["pass"] for inst in instances):
            return Report("unimodular-triangulation-bounds", instances, "fail", notes)
        return Report("unimodular-triangulation-bounds", instances, verdict, notes)
    report = Report.from_instances("unimodular-triangulation-bounds", instances, notes)
    return report


def monotonicity_check(inner: RationalPolytope, outer: RationalPolytope) -> Report:
    """Containment forces a componentwise h*-inequality in a common form.

    Both numerators are recomputed over (1 - x^p)^(d+1) with p the lcm of
    the two periods and d the dimension of the outer polytope.
    """
    if not contains_polytope(inner, outer):
        raise InputError("inner polytope is not contained in the outer one")
    p = lcm(inner.vertex_denominator(), outer.vertex_denominator())
    d = outer.dim
    window = p * (d + 2)
    counts_inner = [count_points(inner, n) for n in range(window)]
    counts_outer = [count_points(outer, n) for n in range(window)]
    h_inner = hstar_from_counts(counts_inner, d, period=p)
    h_outer = hstar_from_counts(counts_outer, d, period=p)
    top = max(len(h_inner.coeffs), len(h_outer.coeffs))
    instances = []
    for i in range(top):
        lhs = h_inner.coefficient(i)
        rhs = h_outer.coefficient(i)
        instances.append({
            "index": i, "lhs": str(lhs), "rhs": str(rhs), "pass": lhs <= rhs,
        })
    notes = {"period": p, "dimension": d}
    return Report.from_instances("containment-monotonicity", instances, notes)
