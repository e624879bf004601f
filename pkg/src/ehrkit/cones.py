"""Pointed rational cones and their lattice-point generating functions.

A cone is given by integer ray generators. All evaluation goes through a
decomposition into half-open simplicial pieces: the cone's cross-section at
a dual hyperplane is triangulated by inserting the generators in their given
order, and each simplicial piece is made half-open against a fixed generic
reference point chosen inside the first piece, so the pieces partition the
cone's lattice points exactly (no inclusion-exclusion needed).

The generating function of a half-open simplicial piece is a finite sum over
the lattice points of its half-open fundamental parallelepiped divided by
prod_i (1 - z^{g_i}). Closed cone, open (relative interior) cone, and the
complement conventions are all expressed through which facets are open.

Only pointed cones are supported; everything else raises UnsupportedError
with a lineality certificate.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from . import linalg
from .errors import InputError, PoleError, TheoremViolationError, UnsupportedError
from .placing import placing_cells
from .polytope import RationalPolytope
from .ratpoly import RatLike, _coerce
from .report import Report

IntVec = tuple[int, ...]

_REFERENCE_SEED = 41183


@dataclass(frozen=True)
class RationalCone:
    """Cone spanned by integer ray generators (primitive, deduplicated)."""

    ambient_dim: int
    generators: tuple[IntVec, ...]

    @staticmethod
    def from_rays(rays: Iterable[Sequence[RatLike]]) -> "RationalCone":
        gens: list[IntVec] = []
        ambient = None
        for ray in rays:
            vec = [_coerce(v) for v in ray]
            if ambient is None:
                ambient = len(vec)
            elif len(vec) != ambient:
                raise InputError("generators with mixed ambient dimensions")
            if all(v == 0 for v in vec):
                raise InputError("the zero vector cannot generate a ray")
            prim = linalg.primitive(vec)
            if prim not in gens:
                gens.append(prim)
        if not gens:
            raise InputError("a cone needs at least one generator")
        return RationalCone(ambient, tuple(gens))

    @property
    def dim(self) -> int:
        return linalg.rank(self.generators)


def homogenize(p: RationalPolytope) -> RationalCone:
    """Cone over P x {1}: generators are primitive multiples of (v, 1)."""
    return RationalCone.from_rays([tuple(v) + (1,) for v in p.vertices])


@dataclass(frozen=True)
class HalfOpenSimplicialCone:
    """Simplicial cone with some facets removed.

    open_flags[i] refers to the facet spanned by all generators except
    generators[i]: when True, lattice points with zero coefficient on
    generators[i] are excluded.
    """

    generators: tuple[IntVec, ...]
    open_flags: tuple[bool, ...]

    def __post_init__(self):
        if len(self.open_flags) != len(self.generators):
            raise InputError("one flag per generator required")
        if linalg.rank(self.generators) != len(self.generators):
            raise InputError("half-open pieces must be simplicial")

    def coefficients(self, x: Sequence) -> tuple[Fraction, ...] | None:
        """Barycentric ray coefficients of x, or None if x is off the span."""
        t_mat, c_mat = _solver(self.generators)
        for row in c_mat:
            if linalg.dot(row, x) != 0:
                return None
        return tuple(linalg.dot(row, x) for row in t_mat)

    def contains(self, x: Sequence, respect_flags: bool = True) -> bool:
        lam = self.coefficients(x)
        if lam is None:
            return False
        for i, v in enumerate(lam):
            if v < 0 or (respect_flags and self.open_flags[i] and v == 0):
                return False
        return True


@lru_cache(maxsize=None)
def _solver(generators: tuple[IntVec, ...]):
    """Matrices (T, C) with lambda = T x and consistency C x = 0.

    Built from the reduced row echelon form of [G | I]: G is the ambient x k
    matrix whose columns are the generators. The first k rows give the
    coefficient solve, the remaining rows give the span-membership test.
    """
    k = len(generators)
    n = len(generators[0])
    aug = [[Fraction(generators[i][j]) for i in range(k)]
           + [Fraction(1 if jj == j else 0) for jj in range(n)]
           for j in range(n)]
    rref, pivots = linalg.row_reduce(aug)
    if pivots[:k] != list(range(k)):
        raise InputError("generators of a simplicial piece must be independent")
    t_mat = tuple(row[k:] for row in rref[:k])
    c_mat = tuple(row[k:] for row in rref[k:])
    return t_mat, c_mat


def parallelepiped_points(piece: HalfOpenSimplicialCone,
                          mode: str = "half_open") -> list[IntVec]:
    """Lattice points of the fundamental parallelepiped, sorted.

    mode 'half_open': coefficient i ranges in [0,1) where flag i is False
    and (0,1] where it is True. mode 'open': all coefficients strictly in
    (0,1), the open box used by box polynomials. mode 'closed_open_dual':
    flags complemented, i.e. (0,1] where False; this is the mode that turns
    a half-open partition of the closed cone into one of its interior.
    """
    if mode not in ("half_open", "open", "closed_open_dual"):
        raise InputError(f"unknown parallelepiped mode {mode!r}")
    gens = piece.generators
    k = len(gens)
    n = len(gens[0])
    t_rows, c_rows = _solver_int(gens)
    strictly_open = mode == "open"
    if mode == "half_open":
        left_open = list(piece.open_flags)
    else:
        left_open = [not f for f in piece.open_flags]
    lo = [sum(min(0, g[j]) for g in gens) for j in range(n)]
    hi = [sum(max(0, g[j]) for g in gens) for j in range(n)]
    out = []
    for cand in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        # integer-only hot loop: lambda_i = (row . cand) / den with den > 0
        if any(sum(a * b for a, b in zip(row, cand)) for row in c_rows):
            continue
        ok = True
        for i in range(k):
            row, den = t_rows[i]
            v = sum(a * b for a, b in zip(row, cand))
            if strictly_open:
                bad = v <= 0 or v >= den
            else:
                bad = (v < 0 or v > den or (v == 0 and left_open[i])
                       or (v == den and not left_open[i]))
            if bad:
                ok = False
                break
        if ok:
            out.append(tuple(cand))
    out.sort()
    return out


@lru_cache(maxsize=None)
def _solver_int(generators: tuple[IntVec, ...]):
    """Integer-scaled solver rows: (t_rows as (row, den) pairs, c_rows)."""
    t_mat, c_mat = _solver(generators)
    t_rows = []
    for row in t_mat:
        den = lcm(*(v.denominator for v in row))
        t_rows.append((tuple(int(v * den) for v in row), den))
    c_rows = tuple(linalg.primitive(row) for row in c_mat)
    return tuple(t_rows), c_rows


@dataclass(frozen=True)
class ConeGF:
    """Materialized generating function: sum over half-open pieces."""

    pieces: tuple[tuple[tuple[IntVec, ...], tuple[IntVec, ...]], ...]
    # each piece is (numerator_points, denominator_generators)

    def evaluate(self, z: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for numerator, denominators in self.pieces:
            denom = Fraction(1)
            for g in denominators:
                term = _monomial(z, g)
                if term == 1:
                    raise PoleError(f"z^{g} = 1: evaluation point is a pole")
                denom *= 1 - term
            num = sum((_monomial(z, m) for m in numerator), Fraction(0))
            total += num / denom
        return total


def _monomial(z: Sequence[Fraction], exponents: IntVec) -> Fraction:
    value = Fraction(1)
    for base, e in zip(z, exponents):
        if e:
            value *= Fraction(base) ** e
    return value


def _check_point(z: Sequence[RatLike], ambient: int) -> tuple[Fraction, ...]:
    pt = tuple(_coerce(v) for v in z)
    if len(pt) != ambient:
        raise InputError("evaluation point has the wrong dimension")
    if any(v == 0 for v in pt):
        raise InputError("evaluation points must have nonzero coordinates")
    return pt


def dual_interior_vector(cone: RationalCone) -> tuple[Fraction, ...]:
    """Rational w with <w, g> >= 1 for every generator g.

    Exists iff the cone is pointed. Found by exhaustive vertex enumeration
    of {u : <g_i, B^T u> >= 1} in the span coordinates; raises
    UnsupportedError with a lineality certificate when the cone has a line.
    """
    w = _dual_interior_cached(cone)
    if w is None:
        cert = _lineality_certificate(cone)
        raise UnsupportedError(
            f"cone is not pointed: {cert} and its negative both lie in the cone"
        )
    return w


@lru_cache(maxsize=None)
def _dual_interior_cached(cone: RationalCone) -> tuple[Fraction, ...] | None:
    basis, _ = linalg.row_reduce(cone.generators)
    k = len(basis)
    rows = [[linalg.dot(g, b) for b in basis] for g in cone.generators]
    ones = [Fraction(1)] * k
    for subset in itertools.combinations(range(len(rows)), k):
        sub = [rows[i] for i in subset]
        if linalg.rank(sub) != k:
            continue
        u = linalg.solve(sub, ones)
        if u is None:
            continue
        if all(linalg.dot(r, u) >= 1 for r in rows):
            return tuple(
                sum((u[i] * basis[i][j] for i in range(k)), Fraction(0))
                for j in range(cone.ambient_dim)
            )
    return None


def _lineality_certificate(cone: RationalCone) -> IntVec:
    gens = cone.generators
    for size in range(2, len(gens) + 1):
        for subset in itertools.combinations(range(len(gens)), size):
            cols = [[Fraction(gens[i][j]) for i in subset]
                    for j in range(cone.ambient_dim)]
            kernel = linalg.nullspace(cols, ncols=size)
            if len(kernel) != 1:
                continue
            coeffs = kernel[0]
            if all(c > 0 for c in coeffs) or all(c < 0 for c in coeffs):
                # g and -g both lie in the cone for the first generator here
                return gens[subset[0]]
    raise TheoremViolationError("no dual vector and no lineality certificate found")


@lru_cache(maxsize=None)
def decompose(cone: RationalCone) -> tuple[HalfOpenSimplicialCone, ...]:
    """Half-open simplicial pieces that partition the cone's lattice points.

    The cross-section of the cone at the dual hyperplane is triangulated by
    placing the generators in their given order; each piece's facet flags
    are set against a fixed generic reference point inside the first piece.
    """
    w = dual_interior_vector(cone)
    section = [
        tuple(Fraction(v) / linalg.dot(w, g) for v in g) for g in cone.generators
    ]
    cells = placing_cells(section)
    pieces_gens = [tuple(cone.generators[i] for i in cell) for cell in cells]

    rng = random.Random(_REFERENCE_SEED)
    for _ in range(64):
        coeffs = [1 + Fraction(rng.randint(1, 999983), 10**7)
                  for _ in pieces_gens[0]]
        reference = tuple(
            sum((c * Fraction(g[j]) for c, g in zip(coeffs, pieces_gens[0])), Fraction(0))
            for j in range(cone.ambient_dim)
        )
        lambdas = []
        generic = True
        for gens in pieces_gens:
            t_mat, c_mat = _solver(gens)
            if any(linalg.dot(row, reference) != 0 for row in c_mat):
                raise TheoremViolationError("pieces do not share the cone's span")
            lam = [linalg.dot(row, reference) for row in t_mat]
            if any(v == 0 for v in lam):
                generic = False
                break
            lambdas.append(lam)
        if generic:
            break
    else:
        raise TheoremViolationError("no generic reference point found")

    pieces = []
    for gens, lam in zip(pieces_gens, lambdas):
        flags = tuple(v < 0 for v in lam)
        pieces.append(HalfOpenSimplicialCone(gens, flags))
    if any(pieces[0].open_flags):
        raise TheoremViolationError("reference point must make the first piece closed")
    return tuple(pieces)


def cone_contains(cone: RationalCone, x: Sequence) -> bool:
    """Exact membership in the closed cone."""
    return any(piece.contains(x, respect_flags=False) for piece in decompose(cone))


def generating_function(cone: RationalCone, region: str = "closed") -> ConeGF:
    """Materialized lattice-point generating function of the (open) cone."""
    if region not in ("closed", "interior"):
        raise InputError(f"unknown region {region!r}")
    mode = "half_open" if region == "closed" else "closed_open_dual"
    pieces = []
    for piece in decompose(cone):
        pieces.append((tuple(parallelepiped_points(piece, mode)), piece.generators))
    return ConeGF(tuple(pieces))


def sigma_eval(cone: RationalCone, z: Sequence[RatLike],
               region: str = "closed") -> Fraction:
    """Evaluate the cone's generating function at a rational point."""
    pt = _check_point(z, cone.ambient_dim)
    return generating_function(cone, region).evaluate(pt)


def stanley_reciprocity_check(cone: RationalCone, trials: int = 10,
                              seed: int = 7) -> Report:
    """Verify sigma(1/z) == (-1)^dim sigma_interior(z) at random points."""
    closed_gf = generating_function(cone, "closed")
    interior_gf = generating_function(cone, "interior")
    sign = (-1) ** cone.dim
    rng = random.Random(seed)
    instances = []
    attempts = 0
    while len(instances) < trials and attempts < 200 * trials:
        attempts += 1
        z = tuple(
            Fraction(rng.choice([1, -1]) * rng.randint(1, 50), rng.randint(1, 50))
            for _ in range(cone.ambient_dim)
        )
        if any(v == 0 for v in z):
            continue
        try:
            lhs = closed_gf.evaluate(tuple(1 / v for v in z))
            rhs = sign * interior_gf.evaluate(z)
        except PoleError:
            continue
        instances.append({"z": [str(v) for v in z], "lhs": lhs, "rhs": rhs,
                          "pass": lhs == rhs})
    if len(instances) < trials:
        raise TheoremViolationError("could not sample enough pole-free points")
    return Report.from_instances(
        "sigma(1/z) == (-1)^dim sigma_interior(z)", instances,
        notes={"generators": [list(g) for g in cone.generators],
               "dim": cone.dim, "seed": seed},
    )


def partition_check(cone: RationalCone, bound: int = 4) -> Report:
    """Brute-force multiset check that the pieces partition the cone points.

    Candidate points come from the height slice 0..bound when every
    generator has positive last coordinate, otherwise from the coordinate
    box [-bound, bound]^ambient. Every candidate in the cone must lie in
    exactly one half-open piece; every candidate outside in none.
    """
    pieces = decompose(cone)
    n = cone.ambient_dim
    heights = [g[-1] for g in cone.generators]
    if all(h > 0 for h in heights):
        import math

        lo = [
            math.floor(sum(min(Fraction(0), Fraction(bound, h) * g[j])
                           for g, h in zip(cone.generators, heights)))
            for j in range(n)
        ]
        hi = [
            math.ceil(sum(max(Fraction(0), Fraction(bound, h) * g[j])
                          for g, h in zip(cone.generators, heights)))
            for j in range(n)
        ]
        hi[-1] = min(hi[-1], bound)
        mode = f"height slice 0..{bound}"
    else:
        lo = [-bound] * n
        hi = [bound] * n
        mode = f"coordinate box [-{bound}, {bound}]^{n}"

    checked = 0
    inside = 0
    violations = []
    for cand in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        checked += 1
        owners = sum(1 for piece in pieces if piece.contains(cand))
        member = any(piece.contains(cand, respect_flags=False) for piece in pieces)
        if member:
            inside += 1
        expected = 1 if member else 0
        if owners != expected:
            violations.append({"point": list(cand), "owners": owners,
                               "in_cone": member})
    instances = [{
        "candidates": checked,
        "cone_points": inside,
        "violations": violations[:10],
        "pass": not violations,
    }]
    return Report.from_instances(
        "half-open pieces partition the cone's lattice points", instances,
        notes={"mode": mode, "pieces": len(pieces)},
    )


def specialization_check(p: RationalPolytope, x0: RatLike,
                         truncation: int = 12) -> Report:
    """Verify sigma_{cone(P)}(1,..,1,x0) equals h*(x0) / (1 - x0^p)^(d+1).

    Also re-expands the closed form as a power series and compares its first
    `truncation` coefficients with the dilate counts.
    """
    from .enumeration import ehrhart
    from .ratpoly import choose

    x0 = _coerce(x0)
    res = ehrhart(p)
    d, per = res.dim, res.period
    cone = homogenize(p)
    z = (Fraction(1),) * (cone.ambient_dim - 1) + (x0,)
    denominator = (1 - x0 ** per) ** (d + 1)
    if denominator == 0:
        raise PoleError(f"x0 = {x0} is a root of (1 - x^{per})^{d + 1}")
    lhs = sigma_eval(cone, z)
    rhs = res.hstar.poly().evaluate(x0) / denominator
    instances = [{"x0": str(x0), "lhs": lhs, "rhs": rhs, "pass": lhs == rhs}]
    for n in range(truncation + 1):
        coeff = sum(
            (res.hstar.coefficient(n - per * k) * choose(k + d, d)
             for k in range(n // per + 1)),
            Fraction(0),
        )
        instances.append({"n": n, "lhs": coeff, "rhs": res.count(n),
                          "pass": coeff == res.count(n)})
    return Report.from_instances(
        "sigma over cone(P) specializes to the dilate counting series",
        instances,
        notes={"polytope": p.name or repr(p), "period": per, "dim": d},
    )
