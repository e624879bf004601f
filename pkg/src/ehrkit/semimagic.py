"""Square matrices with equal row and column sums, counted exactly.

H_n(r) counts n-by-n matrices of nonnegative integers whose rows and
columns all sum to r. The counting runs as a dynamic program over residual
column sums: each row consumes a weak composition of r bounded by what the
columns can still absorb, and the final row is forced. Residual states are
kept as sorted tuples since the remaining count only depends on the
multiset of residuals.

These counts are polynomial in r, vanish at r = -1..-(n-1), satisfy a
reflection symmetry, and have a palindromic nonnegative series numerator
over (1-x)^(n^2-2n+2). `adg_report` verifies all of that from the computed
table. The same numbers arise geometrically: H_n is the lattice-point
counter of the polytope of doubly stochastic matrices, whose vertices are
the permutation matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import InputError, UnsupportedError
from .polytope import RationalPolytope
from .ratpoly import Poly, hstar_from_counts, interpolate
from .report import Report

MAX_SIZE = 4


@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    """All weak compositions of `total` into `parts` nonnegative parts."""
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def count_semimagic(n: int, r: int) -> int:
    """Number of n-by-n nonnegative integer matrices with all line sums r."""
    if not 1 <= n <= MAX_SIZE:
        raise UnsupportedError(
            f"matrix size {n} is outside the supported range 1..{MAX_SIZE}"
        )
    if r < 0:
        raise InputError("line sum must be nonnegative")
    if n == 1:
        return 1
    rows = _compositions(r, n)
    states: dict[tuple[int, ...], int] = {(r,) * n: 1}
    for _ in range(n - 1):
        nxt: dict[tuple[int, ...], int] = {}
        for state, ways in states.items():
            for row in rows:
                if all(part <= left for part, left in zip(row, state)):
                    key = tuple(
                        sorted((left - part for part, left in zip(row, state)),
                               reverse=True)
                    )
                    nxt[key] = nxt.get(key, 0) + ways
        states = nxt
    # the last row is forced to equal the residual column sums
    return sum(states.values())


@dataclass(frozen=True)
class SemimagicTable:
    """Count table with its polynomial and series numerator."""

    n: int
    values: tuple[int, ...]  # H_n(r) for r = 0..len-1
    count_poly: Poly  # degree (n-1)^2 polynomial through the table
    numerator: Poly  # numerator over (1-x)^(n^2-2n+2)


def adg_report(n: int, rmax: int | None = None) -> tuple[SemimagicTable, Report]:
    """Count table for H_n plus verification of its structural properties.

    Checks, from the exact table: the counts are polynomial of degree
    (n-1)^2 (interpolate, then match the spare values), the polynomial
    vanishes at -1..-(n-1), the reflection H_n(-r) = (-1)^(n-1) H_n(r-n)
    holds, and the series numerator over (1-x)^(n^2-2n+2) is palindromic
    of degree n^2-3n+2 with nonnegative integer coefficients.
    """
    if not 1 <= n <= MAX_SIZE:
        raise UnsupportedError(
            f"matrix size {n} is outside the supported range 1..{MAX_SIZE}"
        )
    poly_degree = (n - 1) ** 2
    if rmax is None:
        rmax = poly_degree + 3
    if rmax < poly_degree + 3:
        raise InputError(f"need rmax >= {poly_degree + 3} for verification slack")
    values = tuple(count_semimagic(n, r) for r in range(rmax + 1))
    count_poly = interpolate([(r, values[r]) for r in range(poly_degree + 1)])
    instances = []
    for r in range(poly_degree + 1, rmax + 1):
        predicted = count_poly.evaluate(r)
        instances.append({
            "property": "polynomiality", "index": r,
            "lhs": str(predicted), "rhs": values[r],
            "pass": predicted == values[r],
        })
    for k in range(1, n):
        at_root = count_poly.evaluate(-k)
        instances.append({
            "property": "root", "index": -k, "lhs": str(at_root), "rhs": 0,
            "pass": at_root == 0,
        })
    sign = (-1) ** (n - 1)
    for r in range(1, rmax + 1):
        lhs = count_poly.evaluate(-r)
        rhs = sign * count_poly.evaluate(r - n)
        instances.append({
            "property": "reflection", "index": r, "lhs": str(lhs), "rhs": str(rhs),
            "pass": lhs == rhs,
        })
    series_dim = n * n - 2 * n + 1
    numerator_h = hstar_from_counts(values, dim=series_dim)
    numerator = numerator_h.poly()
    expected_degree = n * n - 3 * n + 2
    instances.append({
        "property": "numerator-degree", "index": None,
        "lhs": numerator.degree(), "rhs": expected_degree,
        "pass": numerator.degree() == expected_degree,
    })
    instances.append({
        "property": "numerator-palindromic", "index": None,
        "lhs": numerator_h.to_strings(), "rhs": None,
        "pass": numerator.is_palindromic(expected_degree),
    })
    instances.append({
        "property": "numerator-nonnegative-integral", "index": None,
        "lhs": numerator_h.to_strings(), "rhs": None,
        "pass": numerator_h.is_integral_nonnegative(),
    })
    table = SemimagicTable(n, values, count_poly, numerator)
    report = Report.from_instances(
        "equal-line-sum-count-structure", instances,
        notes={"n": n, "rmax": rmax, "denominator_exponent": series_dim + 1},
    )
    return table, report


def birkhoff_polytope(n: int) -> RationalPolytope:
    """Polytope of doubly stochastic n-by-n matrices, flattened row-major.

    Vertices are the n! permutation matrices. Kept to n <= 3: the facet
    scan in ambient dimension n^2 is not feasible beyond that here.
    """
    if not 1 <= n <= 3:
        raise UnsupportedError(
            f"doubly-stochastic polytope geometry is supported for n <= 3, got {n}"
        )
    points = []
    for perm in permutations(range(n)):
        flat = [0] * (n * n)
        for i, j in enumerate(perm):
            flat[i * n + j] = 1
        points.append(tuple(flat))
    return RationalPolytope.from_points(points, name=f"doubly-stochastic-{n}")
