"""Brute-force witnesses that share no arithmetic with the main pipeline.

Group elements are multiplied here as explicit 3x3 monomial matrices whose
non-zero entries are powers of w = exp(2 pi i / r), tracked by exponent.
Triangulations are checked against a full scan of the junior simplex, with
lattice membership decided directly from the residues of G'.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import TrihedralError
from .groups import DiagonalElement, DiagonalGroup, TrihedralElement
from .lattice import LatticePoint
from .triangulation import Triangulation

__all__ = [
    "MonomialMatrix",
    "OracleBoundExceeded",
    "ValidationResult",
    "oracle_bound",
    "group_matrices",
    "conjugacy_count_bruteforce",
    "commuting_pairs",
    "lattice_points_of_simplex",
    "validate_triangulation",
]

BOUND_ENV = "TRIHEDRAL_ORACLE_BOUND"
DEFAULT_BOUND = 30_000

# the cyclic permutation matrix T, rows as written
T_MATRIX = ((0, 1, 0), (0, 0, 1), (1, 0, 0))


class OracleBoundExceeded(TrihedralError):
    pass


def oracle_bound() -> int:
    return int(os.environ.get(BOUND_ENV, DEFAULT_BOUND))


@dataclass(frozen=True)
class MonomialMatrix:
    """A 3x3 matrix over {0} + <w>; ``entries[i][j]`` is an exponent or None."""

    r: int
    entries: tuple[tuple[int | None, ...], ...]

    @classmethod
    def identity(cls, r: int) -> MonomialMatrix:
        return cls(r, tuple(tuple(0 if i == j else None for j in range(3)) for i in range(3)))

    @classmethod
    def diagonal(cls, r: int, exps: Sequence[int]) -> MonomialMatrix:
        return cls(
            r, tuple(tuple(exps[i] % r if i == j else None for j in range(3)) for i in range(3))
        )

    @classmethod
    def permutation(cls, r: int, rows=T_MATRIX) -> MonomialMatrix:
        return cls(r, tuple(tuple(0 if x else None for x in row) for row in rows))

    @classmethod
    def from_element(cls, g: TrihedralElement) -> MonomialMatrix:
        m = cls.diagonal(g.r, g.diag.exponents)
        t = cls.permutation(g.r)
        for _ in range(g.shift):
            m = m @ t
        return m

    @property
    def permutation_map(self) -> tuple[int, ...]:
        """Column of the non-zero entry in each row."""
        return tuple(next(j for j in range(3) if row[j] is not None) for row in self.entries)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(row[j] for row, j in zip(self.entries, self.permutation_map))

    @property
    def shift(self) -> int:
        return (self.permutation_map[0]) % 3

    def __matmul__(self, other: MonomialMatrix) -> MonomialMatrix:
        r = self.r
        out = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for k in range(3):
                a = self.entries[i][k]
                if a is None:
                    continue
                for j in range(3):
                    b = other.entries[k][j]
                    if b is None:
                        continue
                    if out[i][j] is not None:
                        raise ValueError("product is not monomial")
                    out[i][j] = (a + b) % r
        return MonomialMatrix(r, tuple(tuple(row) for row in out))

    def inverse(self) -> MonomialMatrix:
        r = self.r
        return MonomialMatrix(
            r,
            tuple(
                tuple(None if self.entries[j][i] is None else -self.entries[j][i] % r
                      for j in range(3))
                for i in range(3)
            ),
        )

    def to_element(self) -> TrihedralElement:
        """Read back diag * T^shift (used only for cross-checking)."""
        return TrihedralElement(self.shift, DiagonalElement(self.r, *self.exponents))


def group_matrices(group: DiagonalGroup) -> list[MonomialMatrix]:
    """All elements of <G', T> as matrices, built from G' and powers of T."""
    r = group.r
    t = MonomialMatrix.permutation(r)
    powers = [MonomialMatrix.identity(r), t, t @ t]
    return [
        MonomialMatrix.diagonal(r, d.exponents) @ p
        for p in powers
        for d in sorted(group.elements)
    ]


def _check_bound(n: int, bound: int | None) -> None:
    bound = oracle_bound() if bound is None else bound
    if n > bound:
        raise OracleBoundExceeded(f"|G| = {n} exceeds the oracle bound {bound}")


def conjugacy_count_bruteforce(group: DiagonalGroup, bound: int | None = None) -> int:
    mats = group_matrices(group)
    _check_bound(len(mats), bound)
    inverses = [m.inverse() for m in mats]
    remaining = set(mats)
    count = 0
    for g in mats:
        if g not in remaining:
            continue
        count += 1
        remaining -= {x @ g @ xi for x, xi in zip(mats, inverses)}
    return count


def commuting_pairs(group: DiagonalGroup, bound: int | None = None) -> int:
    mats = group_matrices(group)
    _check_bound(len(mats), bound)
    return sum(1 for g in mats for h in mats if g @ h == h @ g)


def lattice_points_of_simplex(group: DiagonalGroup) -> list[LatticePoint]:
    """Scan every (p, q, s) with p + q + s = r and keep the points of N."""
    r = group.r
    residues = {d.exponents for d in group.elements}
    found = []
    for p in range(r + 1):
        for q in range(r + 1 - p):
            s = r - p - q
            if (p % r, q % r, s % r) in residues:
                found.append(LatticePoint(p, q, s, r))
    return found


@dataclass
class ValidationResult:
    checks: dict[str, bool] = field(default_factory=dict)
    messages: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def fail(self, name: str, message: str) -> None:
        self.checks[name] = False
        self.messages.append(f"{name}: {message}")


def _area2(a, b, c) -> int:
    return (b.q - a.q) * (c.s - a.s) - (b.s - a.s) * (c.q - a.q)


def validate_triangulation(tri: Triangulation, group: DiagonalGroup) -> ValidationResult:
    """Check emptiness, area, vertex completeness, rotation symmetry and edge pairing."""
    res = ValidationResult()
    names = ("empty", "area", "vertices", "rotation", "edges")
    for name in names:
        res.checks[name] = True

    r = group.r
    scan = lattice_points_of_simplex(group)
    Q = np.array([p.q for p in scan], dtype=np.int64)
    S = np.array([p.s for p in scan], dtype=np.int64)
    try:
        triangles = [tuple(tri.points[i] for i in t) for t in tri.triangles]
    except IndexError:
        res.fail("vertices", "triangle refers to a missing vertex")
        return res

    for t in triangles:
        if len(set(t)) != 3:
            res.fail("area", f"triangle {tuple(map(str, t))} repeats a vertex")
            continue
        a, b, c = t
        o = _area2(a, b, c)
        sign = 1 if o > 0 else -1
        d1 = sign * ((b.q - a.q) * (S - a.s) - (b.s - a.s) * (Q - a.q))
        d2 = sign * ((c.q - b.q) * (S - b.s) - (c.s - b.s) * (Q - b.q))
        d3 = sign * ((a.q - c.q) * (S - c.s) - (a.s - c.s) * (Q - c.q))
        inside = (d1 >= 0) & (d2 >= 0) & (d3 >= 0)
        extra = [scan[i] for i in np.flatnonzero(inside) if scan[i] not in t]
        if extra:
            res.fail("empty", f"triangle {tuple(map(str, t))} contains {extra[0]}")

    area2 = [abs(_area2(*t)) for t in triangles]
    n = group.order
    if any(a == 0 for a in area2):
        res.fail("area", "degenerate triangle")
    # a unimodular triangle has area2 = r^2 / |G'| in numerator units
    if sum(area2) != r * r:
        res.fail("area", f"normalized area sum {Fraction(sum(area2) * n, r * r)} != |G'| = {n}")

    used = {p for t in triangles for p in t}
    if used != set(scan) or set(tri.points) != set(scan):
        res.fail(
            "vertices",
            f"{len(set(scan) - used)} lattice points unused, "
            f"{len(set(tri.points) - set(scan))} vertices off the lattice",
        )

    tri_set = {frozenset(t) for t in triangles}
    rotated = {frozenset(p.rotate(1) for p in t) for t in tri_set}
    if rotated != tri_set:
        res.fail("rotation", "triangle set is not mapped onto itself by rho")

    edges: dict[frozenset, list] = {}
    for t in triangles:
        for i in range(3):
            u, v, w = t[i], t[(i + 1) % 3], t[(i + 2) % 3]
            edges.setdefault(frozenset((u, v)), []).append(w)
    for e, opposite in edges.items():
        u, v = tuple(e) if len(e) == 2 else (next(iter(e)),) * 2
        on_boundary = any(x == 0 and y == 0 for x, y in zip(u.numerators, v.numerators))
        if on_boundary:
            if len(opposite) != 1:
                res.fail("edges", f"boundary edge {u}-{v} in {len(opposite)} triangles")
        elif len(opposite) != 2:
            res.fail("edges", f"interior edge {u}-{v} in {len(opposite)} triangles")
        else:
            s1 = _area2(u, v, opposite[0])
            s2 = _area2(u, v, opposite[1])
            if s1 * s2 >= 0:
                res.fail("edges", f"triangles on edge {u}-{v} overlap")
    return res
