"""Rotation-symmetric unimodular triangulation of the junior simplex.

Construction: pick the junior point P closest to the barycentre (in the L1
sense) among those with z minimal, take the triangle P, rho(P), rho^2(P)
(star-subdivided at 1/3(1,1,1) when that point is junior), triangulate the
region between the edge e1 e2 and the central triangle, and copy it around by
rho.  All planar predicates run on the (q, s) numerators, so they are exact
integer determinants.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvariantViolation
from .groups import DiagonalGroup, GroupType, classify_type
from .lattice import (
    LatticePoint,
    PlaneLattice,
    build_plane_lattice,
    corners,
    junior_points,
    to_plane_coords,
)

__all__ = [
    "ConfigKind",
    "CentralConfig",
    "Triangulation",
    "distance_d",
    "in_domain",
    "find_central_config",
    "canonicalize_cycle",
    "triangulate_region",
    "build_symmetric_triangulation",
    "triangle_orbits",
    "orient",
]

Tri = tuple[LatticePoint, LatticePoint, LatticePoint]


def orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> int:
    """Twice the signed area of abc in (q, s) numerators; positive is e1->e2->e3."""
    return (b.q - a.q) * (c.s - a.s) - (b.s - a.s) * (c.q - a.q)


def _on_segment(a: LatticePoint, b: LatticePoint, x: LatticePoint) -> bool:
    """Closed segment test."""
    if orient(a, b, x):
        return False
    return (
        min(a.q, b.q) <= x.q <= max(a.q, b.q) and min(a.s, b.s) <= x.s <= max(a.s, b.s)
    )


def in_closed_triangle(tri: Tri, x: LatticePoint) -> bool:
    a, b, c = tri
    o = orient(a, b, c)
    o1, o2, o3 = orient(a, b, x), orient(b, c, x), orient(c, a, x)
    if o < 0:
        o1, o2, o3 = -o1, -o2, -o3
    return o1 >= 0 and o2 >= 0 and o3 >= 0


def distance_d(p: LatticePoint) -> Fraction:
    """L1 distance from p to the barycentre (1,1,1)/3."""
    third = Fraction(1, 3)
    return sum((abs(Fraction(x, p.r) - third) for x in p.numerators), Fraction(0))


def in_domain(p: LatticePoint) -> bool:
    """Closed domain D = {x >= z, y >= z}."""
    return p.p >= p.s and p.q >= p.s


class ConfigKind(enum.Enum):
    WholeSimplex = "WholeSimplex"
    CentralTriangle = "CentralTriangle"
    StarAtCenter = "StarAtCenter"
    CentralTriangleWithStar = "CentralTriangleWithStar"


@dataclass(frozen=True)
class CentralConfig:
    kind: ConfigKind
    triangle: tuple[LatticePoint, ...] = ()
    center: LatticePoint | None = None

    @property
    def apex(self) -> LatticePoint | None:
        return self.triangle[0] if self.triangle else None


def _barycentre(r: int) -> LatticePoint | None:
    if r % 3:
        return None
    return LatticePoint(r // 3, r // 3, r // 3, r)


def find_central_config(phi: Sequence[LatticePoint], group_type: GroupType) -> CentralConfig:
    if group_type is GroupType.TypeI:
        candidates = list(phi)
        center = None
    else:
        if not phi:
            raise InvariantViolation(
                "type II group without junior points", stage="find_central_config"
            )
        center = _barycentre(phi[0].r)
        if center not in phi:
            raise InvariantViolation(
                "type II group whose junior points miss 1/3(1,1,1)",
                stage="find_central_config",
            )
        candidates = [p for p in phi if p != center]

    if not candidates:
        kind = ConfigKind.WholeSimplex if center is None else ConfigKind.StarAtCenter
        return CentralConfig(kind, (), center)

    in_d = [p for p in candidates if in_domain(p)]
    if not in_d:
        raise InvariantViolation(
            "no junior point lies in the domain x, y >= z", stage="find_central_config"
        )
    apex = min(in_d, key=lambda p: (distance_d(p), p.numerators))
    tri = (apex, apex.rotate(1), apex.rotate(2))
    kind = ConfigKind.CentralTriangle if center is None else ConfigKind.CentralTriangleWithStar
    return CentralConfig(kind, tri, center)


def canonicalize_cycle(cycle: Sequence[LatticePoint]) -> list[LatticePoint]:
    """Remove repeated vertices and spurs (places where the cycle doubles back)."""
    pts = list(cycle)
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        n = len(pts)
        for i in range(n):
            prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % n]
            if cur == nxt or cur == prev:
                del pts[i]
                changed = True
                break
            if orient(prev, cur, nxt) == 0:
                # collinear: a spur iff the two incident edges point the same way
                dot = (prev.q - cur.q) * (nxt.q - cur.q) + (prev.s - cur.s) * (nxt.s - cur.s)
                if dot > 0:
                    del pts[i]
                    changed = True
                    break
    return pts


def _strip_straight(poly: list[LatticePoint]) -> list[LatticePoint]:
    out = list(poly)
    i = 0
    while len(out) > 3 and i < len(out):
        n = len(out)
        if orient(out[i - 1], out[i], out[(i + 1) % n]) == 0:
            del out[i]
            i = 0
        else:
            i += 1
    return out


def _signed_area2(poly: Sequence[LatticePoint]) -> int:
    n = len(poly)
    return sum(poly[i].q * poly[(i + 1) % n].s - poly[(i + 1) % n].q * poly[i].s
               for i in range(n))


def _in_closed_polygon(poly: Sequence[LatticePoint], x: LatticePoint) -> bool:
    n = len(poly)
    for i in range(n):
        if _on_segment(poly[i], poly[(i + 1) % n], x):
            return True
    inside = False
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if (a.s > x.s) != (b.s > x.s):
            # crossing of the horizontal ray to the right of x, in exact arithmetic
            lhs = (x.q - a.q) * (b.s - a.s)
            rhs = (b.q - a.q) * (x.s - a.s)
            if (lhs < rhs) == (b.s > a.s):
                inside = not inside
    return inside


def _triangulate_polygon(poly: list[LatticePoint]) -> list[Tri]:
    """Triangulate a counter-clockwise simple polygon without straight vertices."""
    n = len(poly)
    start = min(range(n), key=lambda i: poly[i].numerators)
    ring = poly[start:] + poly[:start]
    fan = [(ring[0], ring[i], ring[i + 1]) for i in range(1, n - 1)]
    if all(orient(*t) > 0 for t in fan) and not any(
        in_closed_triangle(t, v) for t in fan for v in ring if v not in t
    ):
        return fan

    # ear clipping, scanning from the lexicographically smallest vertex
    out = []
    ring = list(ring)
    while len(ring) > 3:
        m = len(ring)
        for i in range(m):
            a, b, c = ring[i - 1], ring[i], ring[(i + 1) % m]
            if orient(a, b, c) <= 0:
                continue
            if any(in_closed_triangle((a, b, c), v) for v in ring if v not in (a, b, c)):
                continue
            out.append((a, b, c))
            del ring[i]
            break
        else:
            raise InvariantViolation(
                "region polygon is not simple; no ear found", stage="triangulate_region"
            )
    out.append(tuple(ring))
    return out


def _insert_point(tris: list[Tri], x: LatticePoint) -> None:
    for idx, (a, b, c) in enumerate(tris):
        o = (orient(a, b, x), orient(b, c, x), orient(c, a, x))
        if min(o) < 0:
            continue
        zeros = o.count(0)
        if zeros == 0:
            tris[idx : idx + 1] = [(a, b, x), (b, c, x), (c, a, x)]
            return
        if zeros >= 2:
            return  # x is already a vertex
        edge = ((a, b), (b, c), (c, a))[o.index(0)]
        _split_edge(tris, edge, x)
        return
    raise InvariantViolation(f"point {x} lies outside the region", stage="triangulate_region")


def _split_edge(tris: list[Tri], edge: tuple[LatticePoint, LatticePoint], x) -> None:
    u, v = edge
    new = []
    for t in tris:
        if u in t and v in t:
            w = next(p for p in t if p not in (u, v))
            # keep counter-clockwise order
            i = t.index(w)
            a, b, c = t[i:] + t[:i]
            new.append((a, b, x))
            new.append((a, x, c))
        else:
            new.append(t)
    tris[:] = new


def triangulate_region(
    region: Sequence[LatticePoint], interior_points: Iterable[LatticePoint]
) -> list[Tri]:
    """Triangulate a lattice polygon using every given lattice point as a vertex.

    ``region`` is a cycle that may double back on itself; ``interior_points``
    are the remaining lattice points of the closed region.  The bare polygon
    is fanned from its smallest vertex (ear clipping when the fan is not
    valid) and the other points are inserted one at a time in sorted order,
    splitting the containing triangle or both triangles along the containing
    edge.
    """
    poly = canonicalize_cycle(region)
    extra = set(interior_points)
    if len(poly) < 3 or _signed_area2(poly) == 0:
        if extra - set(poly):
            raise InvariantViolation(
                "degenerate region has lattice points to cover", stage="triangulate_region"
            )
        return []
    if _signed_area2(poly) < 0:
        poly.reverse()
    bare = _strip_straight(poly)
    tris = _triangulate_polygon(bare)
    for x in sorted((extra | set(poly)) - set(bare)):
        _insert_point(tris, x)
    return tris


@dataclass
class Triangulation:
    """Triangles of the junior simplex, as counter-clockwise index triples."""

    lattice: PlaneLattice
    points: list[LatticePoint]
    triangles: list[tuple[int, int, int]]
    config: CentralConfig
    orbits: list[list[int]] = field(default_factory=list)

    @property
    def r(self) -> int:
        return self.lattice.r

    def triangle_points(self, i: int) -> Tri:
        return tuple(self.points[j] for j in self.triangles[i])

    def determinant(self, i: int) -> int:
        """Signed area of triangle i in units of the lattice fundamental domain."""
        (u0, w0), (u1, w1), (u2, w2) = (
            to_plane_coords(self.lattice, p) for p in self.triangle_points(i)
        )
        return (u1 - u0) * (w2 - w0) - (w1 - w0) * (u2 - u0)

    def rotation_map(self) -> list[int]:
        """rho as a permutation of point indices."""
        where = {p: i for i, p in enumerate(self.points)}
        return [where[p.rotate(1)] for p in self.points]

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "config": self.config.kind.value,
            "vertices": [
                {"numerators": list(p.numerators), "denominator": p.r} for p in self.points
            ],
            "triangles": [list(t) for t in self.triangles],
            "orbits": [list(o) for o in self.orbits],
        }


def _normalize(tri: Sequence[int], pts: Sequence[LatticePoint]) -> tuple[int, int, int]:
    a, b, c = tri
    if orient(pts[a], pts[b], pts[c]) < 0:
        b, c = c, b
    t = (a, b, c)
    i = t.index(min(t))
    return t[i:] + t[:i]


def triangle_orbits(tri: Triangulation) -> list[list[int]]:
    """Partition triangle indices into rho-orbits."""
    rho = tri.rotation_map()
    where = {frozenset(t): i for i, t in enumerate(tri.triangles)}
    seen = set()
    orbits = []
    for i, t in enumerate(tri.triangles):
        if i in seen:
            continue
        orbit = []
        cur = frozenset(t)
        while True:
            j = where.get(cur)
            if j is None:
                raise InvariantViolation(
                    "triangle set is not rotation invariant", stage="triangle_orbits"
                )
            if j in seen:
                break
            seen.add(j)
            orbit.append(j)
            cur = frozenset(rho[v] for v in cur)
        orbits.append(orbit)
    return orbits


def _rotate_tri(t: Tri, k: int) -> Tri:
    return tuple(p.rotate(k) for p in t)


def build_symmetric_triangulation(group: DiagonalGroup) -> Triangulation:
    """The rotation-invariant crepant triangulation of the junior simplex of N."""
    r = group.r
    lattice = build_plane_lattice(group)
    phi = junior_points(group)
    vertices = sorted(set(phi) | set(corners(r)))
    config = find_central_config(phi, classify_type(group))
    e1, e2, e3 = corners(r)

    if config.kind is ConfigKind.WholeSimplex:
        raw: list[Tri] = [(e1, e2, e3)]
    elif config.kind is ConfigKind.StarAtCenter:
        c = config.center
        raw = [(c, e1, e2), (c, e2, e3), (c, e3, e1)]
    else:
        P, P1, P2 = config.triangle
        allowed = set(config.triangle) | ({config.center} if config.center else set())
        stray = [v for v in vertices if v not in allowed
                 and in_closed_triangle(config.triangle, v)]
        if stray:
            raise InvariantViolation(
                f"central triangle {P} {P1} {P2} contains lattice points "
                f"{', '.join(map(str, stray))}",
                stage="find_central_config",
            )
        if config.center is None:
            raw = [config.triangle]
        else:
            c = config.center
            raw = [(c, P, P1), (c, P1, P2), (c, P2, P)]

        cycle = [e1, e2, P, P1]
        canon = canonicalize_cycle(cycle)
        inside = [v for v in vertices if v not in canon and len(canon) >= 3
                  and _in_closed_polygon(canon, v)]
        region = triangulate_region(cycle, inside)
        for k in range(3):
            raw.extend(_rotate_tri(t, k) for t in region)

    where = {p: i for i, p in enumerate(vertices)}
    tris = sorted({_normalize([where[p] for p in t], vertices) for t in raw})
    result = Triangulation(lattice, vertices, tris, config)
    _check(result, group)
    result.orbits = triangle_orbits(result)
    return result


def _check(tri: Triangulation, group: DiagonalGroup) -> None:
    used = {v for t in tri.triangles for v in t}
    if used != set(range(len(tri.points))):
        missing = [str(tri.points[i]) for i in range(len(tri.points)) if i not in used]
        raise InvariantViolation(
            f"lattice points not used as vertices: {', '.join(missing)}",
            stage="triangulator",
        )
    for i in range(len(tri.triangles)):
        det = tri.determinant(i)
        if det != 1:
            raise InvariantViolation(
                f"triangle {tri.triangle_points(i)} has normalized area {det}, not 1",
                stage="triangulator",
            )
    if len(tri.triangles) != group.order:
        raise InvariantViolation(
            f"{len(tri.triangles)} triangles for |G'| = {group.order}",
            stage="triangulator",
        )
    if any(not p.height == tri.r for p in tri.points):
        raise InvariantViolation("vertex off the junior plane", stage="triangulator")
