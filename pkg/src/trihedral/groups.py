"""Exact arithmetic for trihedral groups G = <G', T> inside SL(3, C).

A diagonal element diag(w^a, w^b, w^c) with w = exp(2 pi i / r) is stored as
its residue triple (a, b, c) mod r.  A general element of G is a pair
(shift, diag) standing for diag * T^shift, where T is the cyclic permutation
matrix sending e1 -> e3 -> e2 -> e1, i.e. T diag(a, b, c) T^-1 = diag(b, c, a).
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import InvariantViolation, SpecError

__all__ = [
    "DiagonalElement",
    "TrihedralElement",
    "DiagonalGroup",
    "GroupType",
    "make_diagonal",
    "rotate_diagonal",
    "generate_diagonal_group",
    "closure_exponents",
    "canonical_key",
    "classify_type",
    "compose",
    "inverse",
    "identity",
    "enumerate_group",
    "conjugacy_classes",
    "conjugacy_classes_enum",
    "group_conjugacy_classes",
    "conjugacy_count_formula",
    "commuting_pair_count",
    "orbifold_euler",
    "is_invariant_monomial",
]


@dataclass(frozen=True, order=True)
class DiagonalElement:
    """The element 1/r(a, b, c) of a diagonal subgroup of SL(3, C)."""

    r: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.r < 1:
            raise SpecError(f"exponent must be positive, got r={self.r}")
        for x in (self.a, self.b, self.c):
            if not 0 <= x < self.r:
                raise SpecError(f"residue {x} outside [0, {self.r})")
        if (self.a + self.b + self.c) % self.r:
            raise SpecError(
                f"1/{self.r}({self.a},{self.b},{self.c}) is not in SL(3,C): "
                f"{self.a + self.b + self.c} is not divisible by {self.r}"
            )

    @property
    def exponents(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __add__(self, other: DiagonalElement) -> DiagonalElement:
        if other.r != self.r:
            raise ValueError(f"exponent mismatch: {self.r} vs {other.r}")
        r = self.r
        return DiagonalElement(
            r, (self.a + other.a) % r, (self.b + other.b) % r, (self.c + other.c) % r
        )

    def __neg__(self) -> DiagonalElement:
        r = self.r
        return DiagonalElement(r, -self.a % r, -self.b % r, -self.c % r)

    def rotate(self, times: int = 1) -> DiagonalElement:
        e = self.exponents
        k = times % 3
        return DiagonalElement(self.r, *(e[k:] + e[:k]))

    def is_identity(self) -> bool:
        return self.a == self.b == self.c == 0

    def is_symmetric(self) -> bool:
        return self.a == self.b == self.c

    def as_fractions(self) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(Fraction(x, self.r) for x in self.exponents)

    def __str__(self):
        return f"1/{self.r}({self.a},{self.b},{self.c})"


def make_diagonal(r: int, a: int, b: int, c: int) -> DiagonalElement:
    """Reduce (a, b, c) mod r and check the determinant-one condition."""
    if r < 1:
        raise SpecError(f"exponent must be positive, got r={r}")
    if (a + b + c) % r:
        raise SpecError(
            f"generator ({a},{b},{c}) over r={r} is not in SL(3,C): "
            f"sum {a + b + c} is not divisible by {r}"
        )
    return DiagonalElement(r, a % r, b % r, c % r)


def rotate_diagonal(d: DiagonalElement) -> DiagonalElement:
    """Conjugate by T: 1/r(a, b, c) -> 1/r(b, c, a)."""
    return d.rotate(1)


class GroupType(enum.Enum):
    TypeI = "I"
    TypeII = "II"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DiagonalGroup:
    """A finite diagonal group G', closed under the rotation (a,b,c) -> (b,c,a).

    ``generators`` is a rotation-closed list of group generators; it is what
    the conjugacy enumeration uses as conjugators alongside T.
    """

    r: int
    elements: frozenset[DiagonalElement]
    generators: tuple[DiagonalElement, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, d: DiagonalElement) -> bool:
        return d in self.elements

    def sorted_elements(self) -> list[DiagonalElement]:
        return sorted(self.elements)

    def identity(self) -> DiagonalElement:
        return DiagonalElement(self.r, 0, 0, 0)

    def center_point(self) -> DiagonalElement | None:
        """Return 1/3(1,1,1) written over r, or None if 3 does not divide r."""
        if self.r % 3:
            return None
        q = self.r // 3
        return DiagonalElement(self.r, q, q, q)

    def key(self) -> tuple:
        """Exponent-independent identity of the group, for deduplication."""
        return canonical_key(self.r, (d.exponents for d in self.elements))


def closure_exponents(
    r: int, gens: Iterable[Sequence[int]]
) -> frozenset[tuple[int, int, int]]:
    """Residue triples of the rotation-closed group over r generated by ``gens``.

    Plain tuple arithmetic; callers are expected to have validated ``gens``.
    """
    elems = {(0, 0, 0)}
    for a, b, c in gens:
        for g in ((a % r, b % r, c % r), (b % r, c % r, a % r), (c % r, a % r, b % r)):
            if g in elems:
                continue
            multiples = []
            x = g
            while x != (0, 0, 0):
                multiples.append(x)
                x = ((x[0] + g[0]) % r, (x[1] + g[1]) % r, (x[2] + g[2]) % r)
            elems |= {
                ((e[0] + m[0]) % r, (e[1] + m[1]) % r, (e[2] + m[2]) % r)
                for e in elems
                for m in multiples
            }
    return frozenset(elems)


def canonical_key(r: int, exps: Iterable[tuple[int, int, int]]) -> tuple:
    """Exponent-independent identity of a diagonal group given by residues over r."""
    exps = list(exps)
    g = r
    for e in exps:
        g = math.gcd(g, *e)
    return (r // g, frozenset((a // g, b // g, c // g) for a, b, c in exps))


def generate_diagonal_group(
    r: int, gens: Iterable[Sequence[int]]
) -> DiagonalGroup:
    """Smallest rotation-closed group over exponent r containing ``gens``."""
    elems = [make_diagonal(r, *g) for g in gens]
    closed_gens: list[DiagonalElement] = []
    for d in elems:
        for k in range(3):
            rd = d.rotate(k)
            if not rd.is_identity() and rd not in closed_gens:
                closed_gens.append(rd)
    exps = closure_exponents(r, [d.exponents for d in elems])
    return DiagonalGroup(
        r, frozenset(DiagonalElement(r, *e) for e in exps), tuple(closed_gens)
    )


def classify_type(group: DiagonalGroup) -> GroupType:
    """Type II iff 1/3(1,1,1) lies in G'; cross-checked against |G'| mod 3."""
    c = group.center_point()
    has_center = c is not None and c in group
    residue = group.order % 3
    if residue == 2 or has_center != (residue == 0):
        raise InvariantViolation(
            f"|G'| = {group.order} (mod 3 = {residue}) is inconsistent with "
            f"membership of 1/3(1,1,1): {has_center}",
            stage="classify_type",
        )
    return GroupType.TypeII if has_center else GroupType.TypeI


@dataclass(frozen=True, order=True)
class TrihedralElement:
    """The element diag * T^shift of G."""

    shift: int
    diag: DiagonalElement

    def __post_init__(self):
        if self.shift not in (0, 1, 2):
            raise ValueError(f"shift must be 0, 1 or 2, got {self.shift}")

    @property
    def r(self) -> int:
        return self.diag.r

    def __mul__(self, other: TrihedralElement) -> TrihedralElement:
        return compose(self, other)

    def __str__(self):
        return f"{self.diag}*T^{self.shift}"


def identity(r: int) -> TrihedralElement:
    return TrihedralElement(0, DiagonalElement(r, 0, 0, 0))


def compose(g: TrihedralElement, h: TrihedralElement) -> TrihedralElement:
    """diag(d1) T^s1 * diag(d2) T^s2 = diag(d1 + rho^s1(d2)) T^(s1+s2)."""
    if g.r != h.r:
        raise ValueError(f"exponent mismatch: {g.r} vs {h.r}")
    return TrihedralElement((g.shift + h.shift) % 3, g.diag + h.diag.rotate(g.shift))


def inverse(g: TrihedralElement) -> TrihedralElement:
    return TrihedralElement(-g.shift % 3, (-g.diag).rotate(-g.shift))


def enumerate_group(group: DiagonalGroup) -> list[TrihedralElement]:
    """All 3|G'| elements of G, as the cosets G', G'T and G'T^2."""
    return [
        TrihedralElement(s, d) for s in range(3) for d in group.sorted_elements()
    ]


def _conjugators(group: DiagonalGroup) -> list[TrihedralElement]:
    T = TrihedralElement(1, group.identity())
    return [T] + [TrihedralElement(0, g) for g in group.generators]


def conjugacy_classes(
    elements: Sequence[TrihedralElement],
    conjugators: Sequence[TrihedralElement] | None = None,
) -> list[frozenset[TrihedralElement]]:
    """Partition a finite group into conjugation orbits.

    Orbits are grown breadth-first under x -> c x c^-1 for c in
    ``conjugators``, which must generate the group; all elements are used when
    none are given.
    """
    if conjugators is None:
        conjugators = list(elements)
    pairs = [(c, inverse(c)) for c in conjugators]
    remaining = set(elements)
    classes = []
    for g in sorted(elements):
        if g not in remaining:
            continue
        orbit = {g}
        queue = deque([g])
        while queue:
            x = queue.popleft()
            for c, ci in pairs:
                y = compose(compose(c, x), ci)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        remaining -= orbit
        classes.append(frozenset(orbit))
    return classes


def conjugacy_classes_enum(
    elements: Sequence[TrihedralElement],
    conjugators: Sequence[TrihedralElement] | None = None,
) -> int:
    return len(conjugacy_classes(elements, conjugators))


def group_conjugacy_classes(group: DiagonalGroup) -> list[frozenset[TrihedralElement]]:
    return conjugacy_classes(enumerate_group(group), _conjugators(group))


def conjugacy_count_formula(group: DiagonalGroup) -> int:
    """m + 3 for |G'| = 3m + 1 (type I), m + 8 for |G'| = 3m (type II)."""
    n = group.order
    if classify_type(group) is GroupType.TypeI:
        return (n - 1) // 3 + 3
    return n // 3 + 8


_ROTATIONS = ([0, 1, 2], [1, 2, 0], [2, 0, 1])


def commuting_pair_count(elements: Sequence[TrihedralElement]) -> int:
    """Number of ordered pairs (g, h) with gh = hg, vectorised over h."""
    if not elements:
        return 0
    r = elements[0].r
    S = np.array([g.shift for g in elements], dtype=np.int64)
    D = np.array([g.diag.exponents for g in elements], dtype=np.int64)
    # rotated[k][i] = rho^k applied to the diagonal part of element i
    rotated = np.stack([D[:, p] for p in _ROTATIONS])
    total = 0
    for i in range(len(elements)):
        gh = (D[i] + rotated[S[i]]) % r
        g_rot = np.stack([D[i][p] for p in _ROTATIONS])
        hg = (D + g_rot[S]) % r
        total += int(np.all(gh == hg, axis=1).sum())
    return total


def orbifold_euler(elements: Sequence[TrihedralElement]) -> int:
    """(1/|G|) * #{commuting pairs}, every fixed locus contributing 1."""
    value = Fraction(commuting_pair_count(elements), len(elements))
    if value.denominator != 1:
        raise InvariantViolation(
            f"orbifold Euler characteristic {value} is not an integer",
            stage="orbifold_euler",
        )
    return int(value)


def is_invariant_monomial(group: DiagonalGroup, i: int, j: int, k: int) -> bool:
    """Is x^i y^j z^k fixed by every element of G'?"""
    return all((d.a * i + d.b * j + d.c * k) % group.r == 0 for d in group.elements)

