import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from trihedral.errors import InvariantViolation, SpecError
from trihedral.groups import (
    DiagonalElement,
    DiagonalGroup,
    GroupType,
    TrihedralElement,
    classify_type,
    commuting_pair_count,
    compose,
    conjugacy_classes,
    conjugacy_classes_enum,
    conjugacy_count_formula,
    enumerate_group,
    generate_diagonal_group,
    group_conjugacy_classes,
    identity,
    inverse,
    is_invariant_monomial,
    make_diagonal,
    orbifold_euler,
    rotate_diagonal,
)

from helpers import T, complex_matrix, read_element, span_bruteforce

Z7 = [(1, 2, 4)]


@st.composite
def small_groups(draw, max_r=9, max_gens=2):
    r = draw(st.integers(1, max_r))
    n = draw(st.integers(0, max_gens))
    gens = []
    for _ in range(n):
        a = draw(st.integers(0, r - 1))
        b = draw(st.integers(0, r - 1))
        gens.append((a, b, (-a - b) % r))
    return generate_diagonal_group(r, gens)


def test_make_diagonal():
    assert make_diagonal(7, 1, 2, 4) == DiagonalElement(7, 1, 2, 4)
    assert make_diagonal(5, 0, 0, 0).is_identity()
    assert make_diagonal(7, 8, -5, 4) == DiagonalElement(7, 1, 2, 4)
    with pytest.raises(SpecError, match="not divisible"):
        make_diagonal(7, 1, 1, 1)
    with pytest.raises(SpecError):
        make_diagonal(0, 0, 0, 0)


def test_rotate_diagonal_matches_conjugation_by_T():
    d = make_diagonal(7, 1, 2, 4)
    assert rotate_diagonal(d) == DiagonalElement(7, 2, 4, 1)
    m = T @ complex_matrix(7, 0, (1, 2, 4)) @ np.linalg.inv(T)
    assert read_element(7, m) == (0, (2, 4, 1))
    assert rotate_diagonal(make_diagonal(3, 1, 1, 1)) == DiagonalElement(3, 1, 1, 1)
    assert rotate_diagonal(make_diagonal(5, 0, 0, 0)).is_identity()


@given(st.integers(1, 40), st.integers(0, 39), st.integers(0, 39))
def test_rotate_three_times_is_identity(r, a, b):
    d = make_diagonal(r, a, b, -a - b)
    assert d.rotate(1).rotate(1).rotate(1) == d


def test_generate_examples():
    g7 = generate_diagonal_group(7, Z7)
    assert g7.order == 7
    assert {d.exponents for d in g7.elements} == span_bruteforce(7, Z7)
    g2 = generate_diagonal_group(2, [(1, 1, 0)])
    assert {d.exponents for d in g2.elements} == {(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)}
    assert generate_diagonal_group(1, []).order == 1


def test_generate_propagates_spec_error():
    with pytest.raises(SpecError):
        generate_diagonal_group(7, [(1, 1, 1)])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.data())
def test_generate_matches_bruteforce_span(r, data):
    a = data.draw(st.integers(0, r - 1))
    b = data.draw(st.integers(0, r - 1))
    gens = [(a, b, (-a - b) % r)]
    g = generate_diagonal_group(r, gens)
    assert {d.exponents for d in g.elements} == span_bruteforce(r, gens)


@settings(max_examples=80, deadline=None)
@given(small_groups(max_r=15))
def test_order_is_never_two_mod_three(group):
    assert group.order % 3 in (0, 1)
    symmetric = [d for d in group.elements if d.is_symmetric()]
    assert len(symmetric) in (1, 3)
    for d in group.elements:
        orbit = {d, d.rotate(1), d.rotate(2)}
        assert len(orbit) == (1 if d.is_symmetric() else 3)
        assert orbit <= group.elements
        assert -d in group and (d + d.rotate(1)) in group


def test_classify_type():
    assert classify_type(generate_diagonal_group(7, Z7)) is GroupType.TypeI
    assert classify_type(generate_diagonal_group(3, [(1, 1, 1)])) is GroupType.TypeII
    assert classify_type(generate_diagonal_group(1, [])) is GroupType.TypeI


def test_classify_type_detects_inconsistency():
    # not rotation closed, order 2: a broken group must not be classified
    r = 2
    bad = DiagonalGroup(r, frozenset({DiagonalElement(r, 0, 0, 0), DiagonalElement(r, 1, 1, 0)}))
    with pytest.raises(InvariantViolation):
        classify_type(bad)


def _el(shift, r, a, b, c):
    return TrihedralElement(shift, DiagonalElement(r, a, b, c))


def test_compose_examples():
    assert compose(_el(1, 7, 0, 0, 0), _el(2, 7, 0, 0, 0)) == identity(7)
    lhs = compose(compose(_el(1, 7, 0, 0, 0), _el(0, 7, 1, 2, 4)), _el(2, 7, 0, 0, 0))
    assert lhs == _el(0, 7, 2, 4, 1)
    with pytest.raises(ValueError):
        compose(_el(0, 7, 0, 0, 0), _el(0, 5, 0, 0, 0))


@pytest.mark.parametrize("r,gens", [(7, Z7), (2, [(1, 1, 0)]), (3, [(1, 1, 1)]), (6, [(1, 2, 3)])])
def test_compose_group_axioms(r, gens):
    G = enumerate_group(generate_diagonal_group(r, gens))
    assert len(G) <= 108
    members = set(G)
    e = identity(r)
    for g in G:
        assert compose(g, e) == g == compose(e, g)
        assert compose(g, inverse(g)) == e == compose(inverse(g), g)
        for h in G:
            assert compose(g, h) in members
    sample = G if len(G) <= 21 else G[::5]
    for x, y, z in itertools.product(sample, repeat=3):
        assert compose(compose(x, y), z) == compose(x, compose(y, z))


def test_compose_matches_complex_matrices():
    G = enumerate_group(generate_diagonal_group(7, Z7))
    for g, h in itertools.product(G[::2], repeat=2):
        m = complex_matrix(7, g.shift, g.diag.exponents) @ complex_matrix(7, h.shift, h.diag.exponents)
        gh = compose(g, h)
        assert read_element(7, m) == (gh.shift, gh.diag.exponents)


def test_enumerate_group():
    assert len(enumerate_group(generate_diagonal_group(7, Z7))) == 21
    triv = enumerate_group(generate_diagonal_group(1, []))
    assert {g.shift for g in triv} == {0, 1, 2} and len(triv) == 3
    G4 = enumerate_group(generate_diagonal_group(2, [(1, 1, 0)]))
    assert len(G4) == len(set(G4)) == 12


def test_conjugacy_enumeration_examples():
    assert len(group_conjugacy_classes(generate_diagonal_group(7, Z7))) == 5
    assert len(group_conjugacy_classes(generate_diagonal_group(2, [(1, 1, 0)]))) == 4
    assert len(group_conjugacy_classes(generate_diagonal_group(1, []))) == 3


def test_conjugacy_with_all_conjugators_agrees():
    G = enumerate_group(generate_diagonal_group(2, [(1, 1, 0)]))
    assert conjugacy_classes_enum(G) == 4


def test_type_one_class_profile():
    group = generate_diagonal_group(13, [(1, 3, 9)])
    assert group.order == 13
    sizes = sorted(len(c) for c in group_conjugacy_classes(group))
    m = (group.order - 1) // 3
    assert sizes == [1] + [3] * m + [group.order] * 2


def test_conjugacy_count_formula():
    assert conjugacy_count_formula(generate_diagonal_group(7, Z7)) == 5
    assert conjugacy_count_formula(generate_diagonal_group(3, [(1, 1, 1)])) == 9
    assert conjugacy_count_formula(generate_diagonal_group(1, [])) == 3


def test_orbifold_euler_examples():
    G21 = enumerate_group(generate_diagonal_group(7, Z7))
    assert commuting_pair_count(G21) == 105
    assert orbifold_euler(G21) == 5
    assert orbifold_euler(enumerate_group(generate_diagonal_group(1, []))) == 3
    assert orbifold_euler(enumerate_group(generate_diagonal_group(3, [(1, 1, 1)]))) == 9


def test_commuting_pairs_vectorised_matches_loop():
    G = enumerate_group(generate_diagonal_group(6, [(1, 2, 3)]))
    loop = sum(1 for g in G for h in G if compose(g, h) == compose(h, g))
    assert commuting_pair_count(G) == loop


@settings(max_examples=40, deadline=None)
@given(small_groups(max_r=12))
def test_three_class_counts_agree(group):
    G = enumerate_group(group)
    n = len(group_conjugacy_classes(group))
    assert n == conjugacy_count_formula(group) == orbifold_euler(G)


def test_invariant_monomial():
    g7 = generate_diagonal_group(7, Z7)
    assert is_invariant_monomial(g7, 1, 1, 1)
    assert is_invariant_monomial(g7, 0, 0, 0)
    assert not is_invariant_monomial(g7, 1, 0, 0)
    assert is_invariant_monomial(generate_diagonal_group(4, [(1, 1, 2)]), 4, 0, 0)


@settings(max_examples=60, deadline=None)
@given(small_groups(max_r=8), st.lists(st.integers(0, 8), min_size=6, max_size=6))
def test_invariant_monomials_multiply(group, e):
    m1, m2 = e[:3], e[3:]
    if is_invariant_monomial(group, *m1) and is_invariant_monomial(group, *m2):
        assert is_invariant_monomial(group, *(x + y for x, y in zip(m1, m2)))


def test_classes_partition_group():
    group = generate_diagonal_group(9, [(1, 1, 7)])
    classes = group_conjugacy_classes(group)
    G = enumerate_group(group)
    assert sum(len(c) for c in classes) == len(G)
    assert set().union(*classes) == set(G)
    assert conjugacy_classes(G, [TrihedralElement(1, group.identity())]) != classes
