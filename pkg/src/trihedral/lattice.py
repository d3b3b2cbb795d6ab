"""The overlattice N = Z^3 + G', the junior simplex and its lattice points.

Every rational point (p/r, q/r, s/r) of N_R is stored by its numerators over
the group exponent r.  Differences of points with t = p + q + s fixed live in
the plane t = 0; that plane is charted by its (y, z) components, in which the
sublattice N cap {t = 0} gets a two-element Hermite basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import InvariantViolation
from .groups import DiagonalElement, DiagonalGroup

__all__ = [
    "LatticePoint",
    "PlaneLattice",
    "PhiSplit",
    "age",
    "junior_points",
    "split_phi",
    "corners",
    "hermite_basis",
    "build_plane_lattice",
    "to_plane_coords",
    "from_plane_coords",
]


@dataclass(frozen=True, order=True)
class LatticePoint:
    """The point (p, q, s) / r."""

    p: int
    q: int
    s: int
    r: int

    @property
    def numerators(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.s)

    @property
    def height(self) -> int:
        """r * t(point); equal to r on the junior plane t = 1."""
        return self.p + self.q + self.s

    def rotate(self, times: int = 1) -> LatticePoint:
        n = self.numerators
        k = times % 3
        return LatticePoint(*(n[k:] + n[:k]), self.r)

    def is_corner(self) -> bool:
        return sorted(self.numerators) == [0, 0, self.r]

    @classmethod
    def from_diagonal(cls, d: DiagonalElement) -> LatticePoint:
        return cls(d.a, d.b, d.c, d.r)

    def __str__(self):
        return f"({self.p},{self.q},{self.s})/{self.r}"


def age(d: DiagonalElement) -> int:
    return (d.a + d.b + d.c) // d.r


def junior_points(group: DiagonalGroup) -> list[LatticePoint]:
    """The age-one elements of G' as points of the junior simplex, sorted."""
    return sorted(LatticePoint.from_diagonal(d) for d in group.elements if age(d) == 1)


def corners(r: int) -> list[LatticePoint]:
    """e1, e2, e3 written over denominator r."""
    return [LatticePoint(r, 0, 0, r), LatticePoint(0, r, 0, r), LatticePoint(0, 0, r, r)]


@dataclass(frozen=True)
class PhiSplit:
    phi1: frozenset[LatticePoint]
    phi2: frozenset[LatticePoint]
    g1_size: int
    g2_size: int


def split_phi(group: DiagonalGroup) -> PhiSplit:
    """Split G' - {e} and the junior points by whether some exponent vanishes.

    Elements with abc != 0 pair off with their inverses (ages 1 and 2), so
    they map 2:1 onto junior points; elements with a zero exponent are all
    junior and map 1:1.
    """
    g1 = [d for d in group.elements if not d.is_identity() and d.a * d.b * d.c != 0]
    g2 = [d for d in group.elements if not d.is_identity() and d.a * d.b * d.c == 0]
    phi = junior_points(group)
    phi1 = frozenset(p for p in phi if p.p * p.q * p.s != 0)
    phi2 = frozenset(p for p in phi if p.p * p.q * p.s == 0)

    image1 = {
        LatticePoint.from_diagonal(d if age(d) == 1 else -d) for d in g1
    }
    if (
        image1 != phi1
        or len(g1) != 2 * len(phi1)
        or len(g2) != len(phi2)
        or any(age(d) != 1 for d in g2)
    ):
        raise InvariantViolation(
            f"junior correspondence broken: |G1|={len(g1)}, |Phi1|={len(phi1)}, "
            f"|G2|={len(g2)}, |Phi2|={len(phi2)}",
            stage="split_phi",
        )
    return PhiSplit(phi1, phi2, len(g1), len(g2))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y and g >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hermite_basis(
    vectors: Iterable[tuple[int, int]],
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Hermite basis ((g, x), (0, h)) of the rank-2 lattice spanned by ``vectors``.

    g > 0, h > 0 and 0 <= x < h.  Raises ValueError if the span has rank < 2.
    """
    g, x = 0, 0
    h = 0
    for u, v in vectors:
        if u == 0:
            h = math.gcd(h, v)
            continue
        d, s, t = _xgcd(g, u)
        # new pivot row (d, s*x + t*v); the eliminated remainder has zero first entry
        new_x = s * x + t * v
        h = math.gcd(h, (u // d) * x - (g // d) * v)
        g, x = d, new_x
    if g == 0 or h == 0:
        raise ValueError("vectors do not span a rank-2 lattice")
    return (g, x % h), (0, h)


@dataclass(frozen=True)
class PlaneLattice:
    """Affine chart of N cap {t = 1} with origin e1.

    The basis vectors are stored by their (y, z) numerators over r; the x
    component is fixed by t = 0.
    """

    r: int
    origin: LatticePoint
    basis: tuple[tuple[int, int], tuple[int, int]]
    index: int

    def basis_vectors(self) -> list[tuple[int, int, int]]:
        """The basis as full numerator triples over r."""
        return [(-y - z, y, z) for y, z in self.basis]

    def contains(self, point: LatticePoint) -> bool:
        if point.r != self.r or point.height % self.r:
            return False
        (g, x), (_, h) = self.basis
        if point.q % g:
            return False
        u = point.q // g
        return (point.s - u * x) % h == 0


def build_plane_lattice(group: DiagonalGroup) -> PlaneLattice:
    """Hermite-reduce {e2 - e1, e3 - e1} + {v - e1 : v junior}."""
    r = group.r
    gens = [(r, 0), (0, r)] + [(v.q, v.s) for v in junior_points(group)]
    basis = hermite_basis(gens)
    (g, _), (_, h) = basis
    index, rem = divmod(r * r, g * h)
    if rem or index != group.order:
        raise InvariantViolation(
            f"[N:L] = {r * r}/{g * h} does not equal |G'| = {group.order}",
            stage="build_plane_lattice",
        )
    return PlaneLattice(r, LatticePoint(r, 0, 0, r), basis, index)


def to_plane_coords(lattice: PlaneLattice, point: LatticePoint) -> tuple[int, int]:
    """Integer coordinates of point - e1 in the Hermite basis."""
    if point.r != lattice.r:
        raise ValueError(f"denominator {point.r} does not match lattice r={lattice.r}")
    if point.height != lattice.r:
        raise ValueError(f"{point} is not on the plane t = 1")
    (g, x), (_, h) = lattice.basis
    u, ru = divmod(point.q, g)
    w, rw = divmod(point.s - u * x, h)
    if ru or rw:
        raise ValueError(f"{point} is not a point of N")
    return u, w


def from_plane_coords(lattice: PlaneLattice, u: int, w: int) -> LatticePoint:
    (g, x), (_, h) = lattice.basis
    q = u * g
    s = u * x + w * h
    return LatticePoint(lattice.r - q - s, q, s, lattice.r)
