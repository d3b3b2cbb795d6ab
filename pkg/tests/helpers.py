"""Reference computations used only by the tests."""

from __future__ import annotations

import itertools
from dataclasses import replace

import numpy as np

from trihedral.oracle import lattice_points_of_simplex
from trihedral.triangulation import in_closed_triangle

T = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=complex)


def complex_matrix(r, shift, exps):
    """diag(w^a, w^b, w^c) @ T^shift as a floating complex matrix."""
    w = np.exp(2j * np.pi / r)
    return np.diag([w**e for e in exps]) @ np.linalg.matrix_power(T, shift)


def read_element(r, m):
    """Recover (shift, exps) from a complex monomial matrix."""
    shift = int(np.argmax(np.abs(m[0])))
    exps = []
    for i in range(3):
        z = m[i, (i + shift) % 3]
        exps.append(round(np.angle(z) / (2 * np.pi) * r) % r)
    return shift, tuple(exps)


def span_bruteforce(r, gens):
    """Every Z-combination of gens and their rotations, by explicit enumeration."""
    rotated = []
    for a, b, c in gens:
        rotated += [(a, b, c), (b, c, a), (c, a, b)]
    out = set()
    for ks in itertools.product(range(r), repeat=len(rotated)):
        out.add(tuple(sum(k * g[i] for k, g in zip(ks, rotated)) % r for i in range(3)))
    return out


def complex_group(r, diag_exps):
    return [complex_matrix(r, s, e) for s in range(3) for e in sorted(diag_exps)]


def complex_class_count(r, diag_exps):
    mats = complex_group(r, diag_exps)
    keys = [read_element(r, m) for m in mats]
    remaining = set(keys)
    count = 0
    for g, kg in zip(mats, keys):
        if kg not in remaining:
            continue
        count += 1
        for x in mats:
            remaining.discard(read_element(r, x @ g @ np.linalg.inv(x)))
    return count


def complex_commuting_pairs(r, diag_exps):
    mats = complex_group(r, diag_exps)
    return sum(1 for g in mats for h in mats if np.allclose(g @ h, h @ g))


# triangulation mutators


def _nonempty(tri, group, t):
    pts = [tri.points[i] for i in t]
    return any(
        in_closed_triangle(tuple(pts), p) and p not in pts
        for p in lattice_points_of_simplex(group)
    )


def flip_to_nonempty(tri, group):
    """Flip the diagonal of two adjacent triangles so that a new triangle is not empty."""
    tris = list(tri.triangles)
    for i, j in itertools.combinations(range(len(tris)), 2):
        shared = set(tris[i]) & set(tris[j])
        if len(shared) != 2:
            continue
        u, v = sorted(shared)
        a = next(x for x in tris[i] if x not in shared)
        b = next(x for x in tris[j] if x not in shared)
        new = [(a, b, u), (a, b, v)]
        if any(_nonempty(tri, group, t) for t in new):
            rest = [t for k, t in enumerate(tris) if k not in (i, j)]
            return replace(tri, triangles=rest + new)
    raise LookupError("no flip produces a non-empty triangle")


def drop_triangle(tri, index=0):
    return replace(tri, triangles=[t for k, t in enumerate(tri.triangles) if k != index])


def relabel_vertex(tri, index=0):
    """Replace one vertex of one triangle by a vertex it does not contain."""
    t = list(tri.triangles[index])
    t[0] = next(v for v in range(len(tri.points)) if v not in t)
    tris = list(tri.triangles)
    tris[index] = tuple(t)
    return replace(tri, triangles=tris)
