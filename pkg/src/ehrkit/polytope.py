"""Rational convex polytopes in vertex and half-space form, exactly.

A polytope is stored by its extreme points (lex-sorted tuples of Fraction
coordinates). The half-space form is derived on demand: equalities pin the
affine hull, inequalities are facet half-spaces of the form <a, x> <= c with
(a, c) jointly primitive integer vectors. Facets are found by an exhaustive
scan over point subsets spanning candidate hyperplanes, which is entirely
adequate at the vertex counts this package works with (tens, not thousands).

Everything is exact; no floats are accepted or produced.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import linalg
from .errors import InputError, UnsupportedError
from .ratpoly import RatLike, _coerce

Point = tuple[Fraction, ...]
IntVec = tuple[int, ...]


@dataclass(frozen=True)
class HRep:
    """Half-space form: <a, x> = c for equalities, <a, x> <= c for facets."""

    equalities: tuple[tuple[IntVec, int], ...]
    inequalities: tuple[tuple[IntVec, int], ...]

    def satisfies(self, x: Sequence[Fraction], strict: bool = False) -> bool:
        """Membership test; `strict` makes the facet inequalities strict."""
        for a, c in self.equalities:
            if linalg.dot(a, x) != c:
                return False
        for a, c in self.inequalities:
            v = linalg.dot(a, x)
            if v > c or (strict and v == c):
                return False
        return True


def _joint_primitive(normal: Sequence[Fraction], offset: Fraction) -> tuple[IntVec, int]:
    prim = linalg.primitive(tuple(normal) + (offset,))
    return prim[:-1], prim[-1]


class RationalPolytope:
    """Convex hull of finitely many rational points, in normal form."""

    def __init__(self, ambient_dim: int, vertices: Sequence[Point], name: str = "",
                 _hrep: HRep | None = None, _dim: int | None = None):
        self.ambient_dim = ambient_dim
        self.vertices = tuple(vertices)
        self.name = name
        self._hrep = _hrep
        self._dim = _dim

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_points(points: Iterable[Sequence[RatLike]], name: str = "") -> "RationalPolytope":
        """Normalize a point list: coerce, dedupe, keep extreme points only."""
        pts: list[Point] = []
        seen: set[Point] = set()
        ambient = None
        for raw in points:
            p = tuple(_coerce(v) for v in raw)
            if ambient is None:
                ambient = len(p)
            elif len(p) != ambient:
                raise InputError("points with mixed ambient dimensions")
            if p not in seen:
                seen.add(p)
                pts.append(p)
        if not pts:
            raise InputError("a polytope needs at least one point")
        assert ambient is not None
        hrep, dim = _half_space_form(ambient, pts)
        verts = sorted(p for p in pts if _is_extreme(p, hrep, dim))
        return RationalPolytope(ambient, verts, name=name, _hrep=hrep, _dim=dim)

    # -- basic structure ---------------------------------------------------

    @property
    def dim(self) -> int:
        if self._dim is None:
            diffs = [linalg.vec_sub(p, self.vertices[0]) for p in self.vertices[1:]]
            self._dim = linalg.rank(diffs) if diffs else 0
        return self._dim

    def facets(self) -> HRep:
        """Half-space form (cached)."""
        if self._hrep is None:
            self._hrep, self._dim = _half_space_form(self.ambient_dim, list(self.vertices))
        return self._hrep

    @property
    def is_lattice(self) -> bool:
        return all(v.denominator == 1 for p in self.vertices for v in p)

    def vertex_denominator(self) -> int:
        """lcm of all vertex coordinate denominators (1 for lattice polytopes)."""
        return lcm(*(v.denominator for p in self.vertices for v in p))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalPolytope)
            and self.ambient_dim == other.ambient_dim
            and self.vertices == other.vertices
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self) -> str:
        label = self.name or f"{len(self.vertices)} vertices"
        return f"RationalPolytope(dim={self.dim}, ambient={self.ambient_dim}, {label})"

    # -- point queries -----------------------------------------------------

    def contains(self, x: Sequence[RatLike], region: str = "closed") -> bool:
        """Exact membership; region is 'closed' or 'interior' (relative)."""
        if region not in ("closed", "interior"):
            raise InputError(f"unknown region {region!r}")
        pt = tuple(_coerce(v) for v in x)
        if len(pt) != self.ambient_dim:
            raise InputError("point has the wrong ambient dimension")
        return self.facets().satisfies(pt, strict=(region == "interior"))

    # -- transforms --------------------------------------------------------

    def dilate(self, t: RatLike) -> "RationalPolytope":
        """Scale by a positive rational factor about the origin."""
        t = _coerce(t)
        if t <= 0:
            raise InputError("dilation factor must be positive")
        verts = sorted(tuple(t * v for v in p) for p in self.vertices)
        hrep = None
        if self._hrep is not None:
            hrep = HRep(
                tuple(_joint_primitive(a, t * c) for a, c in self._hrep.equalities),
                tuple(_joint_primitive(a, t * c) for a, c in self._hrep.inequalities),
            )
        return RationalPolytope(self.ambient_dim, verts, name=self.name,
                                _hrep=hrep, _dim=self._dim)

    def translate(self, shift: Sequence[RatLike]) -> "RationalPolytope":
        s = tuple(_coerce(v) for v in shift)
        if len(s) != self.ambient_dim:
            raise InputError("translation vector has the wrong dimension")
        verts = sorted(linalg.vec_add(p, s) for p in self.vertices)
        hrep = None
        if self._hrep is not None:
            hrep = HRep(
                tuple(_joint_primitive(a, c + linalg.dot(a, s))
                      for a, c in self._hrep.equalities),
                tuple(_joint_primitive(a, c + linalg.dot(a, s))
                      for a, c in self._hrep.inequalities),
            )
        return RationalPolytope(self.ambient_dim, verts, name=self.name,
                                _hrep=hrep, _dim=self._dim)

    def bounding_box(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Smallest integer box [lo, hi] containing the polytope."""
        import math

        los = []
        his = []
        for j in range(self.ambient_dim):
            coords = [p[j] for p in self.vertices]
            los.append(math.ceil(min(coords)))
            his.append(math.floor(max(coords)))
        return tuple(los), tuple(his)


def normalize(points: Iterable[Sequence[RatLike]], name: str = "") -> RationalPolytope:
    """Functional alias for RationalPolytope.from_points."""
    return RationalPolytope.from_points(points, name=name)


def facets(p: RationalPolytope) -> HRep:
    return p.facets()


def contains(p: RationalPolytope, x: Sequence[RatLike], region: str = "closed") -> bool:
    return p.contains(x, region)


def dilate(p: RationalPolytope, t: RatLike) -> RationalPolytope:
    return p.dilate(t)


def contains_polytope(inner: RationalPolytope, outer: RationalPolytope) -> bool:
    """True iff every vertex of `inner` satisfies `outer`'s half-space form."""
    if inner.ambient_dim != outer.ambient_dim:
        raise InputError("containment needs matching ambient dimensions")
    hrep = outer.facets()
    return all(hrep.satisfies(v) for v in inner.vertices)


def interior_lattice_points(p: RationalPolytope) -> list[tuple[int, ...]]:
    """Lattice points in the relative interior, by bounding-box scan."""
    lo, hi = p.bounding_box()
    if any(l > h for l, h in zip(lo, hi)):
        return []
    out = []
    for cand in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        if p.contains(cand, region="interior"):
            out.append(cand)
    return out


def reflexive_check(p: RationalPolytope) -> tuple[bool, tuple[int, ...] | None]:
    """Decide whether some lattice translate of p is reflexive.

    Requires a full-dimensional lattice polytope. A translate q = p - z is
    reflexive iff 0 is its unique interior lattice point and every facet of
    q, written with jointly primitive integer data (a, c), has offset c = 1
    (equivalently the facet normal scaled to offset 1 stays integral).
    Returns (True, z) with the witness translation, or (False, None).
    """
    if not p.is_lattice:
        raise UnsupportedError("reflexive_check needs a lattice polytope")
    if p.dim != p.ambient_dim:
        raise UnsupportedError("reflexive_check needs a full-dimensional polytope")
    interior = interior_lattice_points(p)
    if len(interior) != 1:
        return False, None
    z = interior[0]
    shifted = p.translate([-v for v in z])
    if all(c == 1 for _, c in shifted.facets().inequalities):
        return True, z
    return False, None


# -- internals ---------------------------------------------------------------


def _half_space_form(ambient: int, pts: list[Point]) -> tuple[HRep, int]:
    base = pts[0]
    diffs = [linalg.vec_sub(p, base) for p in pts[1:]]
    directions, _ = linalg.row_reduce(diffs)
    dim = len(directions)

    eqs: list[tuple[IntVec, int]] = []
    for a in linalg.nullspace(directions, ncols=ambient):
        normal, offset = _joint_primitive(a, linalg.dot(a, base))
        if normal[next(i for i, v in enumerate(normal) if v != 0)] < 0:
            normal = tuple(-v for v in normal)
            offset = -offset
        eqs.append((normal, offset))

    ineqs: set[tuple[IntVec, int]] = set()
    if dim >= 1:
        for subset in itertools.combinations(pts, dim):
            sub_diffs = [linalg.vec_sub(q, subset[0]) for q in subset[1:]]
            # candidate normal lives in the direction space: a = sum y_i B_i
            m = [[linalg.dot(d, b) for b in directions] for d in sub_diffs]
            kernel = linalg.nullspace(m, ncols=dim)
            if len(kernel) != 1:
                continue
            y = kernel[0]
            a = tuple(
                sum((y[i] * directions[i][j] for i in range(dim)), Fraction(0))
                for j in range(ambient)
            )
            c = linalg.dot(a, subset[0])
            sides = [linalg.dot(a, q) - c for q in pts]
            if all(s <= 0 for s in sides):
                ineqs.add(_joint_primitive(a, c))
            elif all(s >= 0 for s in sides):
                ineqs.add(_joint_primitive([-v for v in a], -c))
    hrep = HRep(tuple(sorted(eqs)), tuple(sorted(ineqs)))
    return hrep, dim


def _is_extreme(p: Point, hrep: HRep, dim: int) -> bool:
    if dim == 0:
        return True
    tight = [a for a, c in hrep.inequalities if linalg.dot(a, p) == c]
    return linalg.rank(tight) == dim
