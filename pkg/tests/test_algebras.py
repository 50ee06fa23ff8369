"""Structure-constant algebras, group algebras, and the axiom checker."""

import itertools

import pytest

from crossprod import (
    Algebra,
    DimensionMismatch,
    NotAGroup,
    PointedSpace,
    Space,
    check_algebra,
    group_algebra,
    kron,
    map_from_entries,
    scalar_algebra,
    truncated_poly,
    unit_embed,
)
from crossprod.gallery import (
    cyclic_group_algebra,
    klein_four_algebra,
    upper_triangular2,
)
from crossprod.linalg import apply, basis_expansion, vec_kron, vector


def _basis(space, i):
    return vector([1 if k == i else 0 for k in range(space.dim)])


def _mult(alg, i, j):
    return apply(alg.mult, vec_kron(_basis(alg.space, i), _basis(alg.space, j)))


# -- constructors -------------------------------------------------------------


def test_scalar_algebra_is_the_ground_field():
    k = scalar_algebra()
    assert k.dim == 1
    assert check_algebra(k).passed
    assert _mult(k, 0, 0) == vector([1])


def test_cyclic_group_algebra_products():
    c3 = cyclic_group_algebra(3)
    assert c3.space.labels == ("e", "x", "x^2")
    assert _mult(c3, 1, 1) == _basis(c3.space, 2)  # x·x = x^2
    assert _mult(c3, 1, 2) == _basis(c3.space, 0)  # x·x^2 = e
    assert check_algebra(c3).passed


def test_klein_four_algebra():
    kl = klein_four_algebra()
    assert _mult(kl, 1, 2) == _basis(kl.space, 3)  # a·b = ab
    assert _mult(kl, 3, 3) == _basis(kl.space, 0)  # ab·ab = e
    assert check_algebra(kl).passed


def test_truncated_poly_products():
    p3 = truncated_poly(3)
    assert p3.space.labels == ("1", "x", "x^2")
    assert _mult(p3, 1, 1) == _basis(p3.space, 2)
    assert _mult(p3, 1, 2) == vector([0, 0, 0])  # x·x^2 = 0
    assert _mult(p3, 2, 2) == vector([0, 0, 0])
    assert check_algebra(p3).passed


def test_upper_triangular_is_noncommutative_but_associative():
    t = upper_triangular2()
    assert check_algebra(t).passed
    e12 = _basis(t.space, 1)
    e11 = _basis(t.space, 0)
    assert apply(t.mult, vec_kron(e11, e12)) == e12
    assert apply(t.mult, vec_kron(e12, e11)) == vector([0, 0, 0])
    assert t.unit == tuple(vector([1, 0, 1]))


def test_unit_embed_realizes_the_unit():
    t = upper_triangular2()
    u = unit_embed(t)
    assert apply(u, vector([1])) == vector([1, 0, 1])


# -- group table validation ---------------------------------------------------


NONASSOC_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def test_nonassociative_loop_is_rejected():
    # independent scan: the table is Latin with two-sided identity 0 and
    # two-sided inverses, so only associativity can fail
    n = 5
    for row in NONASSOC_LOOP:
        assert sorted(row) == list(range(n))
    for j in range(n):
        assert sorted(NONASSOC_LOOP[i][j] for i in range(n)) == list(range(n))
    assert all(NONASSOC_LOOP[0][j] == j and NONASSOC_LOOP[j][0] == j for j in range(n))
    assert all(
        any(NONASSOC_LOOP[i][j] == 0 and NONASSOC_LOOP[j][i] == 0 for j in range(n))
        for i in range(n)
    )
    triple = next(
        (g, h, k)
        for g, h, k in itertools.product(range(n), repeat=3)
        if NONASSOC_LOOP[NONASSOC_LOOP[g][h]][k] != NONASSOC_LOOP[g][NONASSOC_LOOP[h][k]]
    )
    assert triple == (1, 1, 2)
    with pytest.raises(NotAGroup, match="associat"):
        group_algebra(NONASSOC_LOOP)


def test_group_table_shape_and_identity_validation():
    with pytest.raises(NotAGroup):
        group_algebra([[0, 1], [1]])
    with pytest.raises(NotAGroup):
        group_algebra([[0, 1], [1, 2]])
    with pytest.raises(NotAGroup, match="identity"):
        group_algebra([[1, 0, 2], [0, 2, 1], [2, 1, 0]])  # Latin but no identity
    with pytest.raises(NotAGroup):
        group_algebra([[0, 0], [1, 1]])  # not Latin


def test_group_labels_must_match_dimension():
    with pytest.raises((NotAGroup, ValueError)):
        group_algebra([[0, 1], [1, 0]], ("e",))


# -- axiom checker -------------------------------------------------------------


def test_check_algebra_flags_broken_associativity_with_witness():
    # corrupt k[x]/(x^3) by declaring x·x^2 = x: then (x·x)·x = x^2·x = 0 but
    # x·(x·x) = x·x^2 = x, and no column before (x, x, x) involves the
    # corrupted cell, so the first failure in column order is (x, x, x)
    p3 = truncated_poly(3)
    s = p3.space
    entries = []
    exp = basis_expansion(p3.mult)
    for (i, j), cells in exp.items():
        for (k,), coeff in cells:
            entries.append(((k,), (i, j), coeff))
    entries = [(r, c, v) for r, c, v in entries if c != (1, 2)]
    entries.append(((1,), (1, 2), 1))  # x·x^2 := x
    bad = Algebra(s, map_from_entries((s, s), (s,), entries), (1, 0, 0))
    report = check_algebra(bad)
    assert not report.passed
    item = report.item("assoc")
    assert not item.passed
    assert item.witness == ("x", "x", "x")
    assert report.item("unit-left").passed
    assert report.item("unit-right").passed


def test_check_algebra_flags_broken_unit():
    s = Space(2, ("1", "x"))
    mult = map_from_entries(
        (s, s), (s,), [((0,), (0, 0), 1), ((1,), (0, 1), 1), ((1,), (1, 0), 1)]
    )
    bad = Algebra(s, mult, (0, 1))  # claims x is the unit
    report = check_algebra(bad)
    assert not report.item("unit-left").passed


def test_pointed_space_validation():
    with pytest.raises(ValueError):
        PointedSpace(Space(2, ("e", "x")), (0, 0))
    with pytest.raises(DimensionMismatch):
        PointedSpace(Space(2, ("e", "x")), (1, 0, 0))


# -- a structural property ----------------------------------------------------


def test_tensor_of_group_algebras_is_product_group_algebra():
    c2, c3 = cyclic_group_algebra(2), cyclic_group_algebra(3)
    prod_table = [
        [((i // 3 + j // 3) % 2) * 3 + ((i % 3 + j % 3) % 3) for j in range(6)]
        for i in range(6)
    ]
    prod = group_algebra(prod_table)
    tensor_mult = kron(c2.mult, c3.mult)
    for i in range(6):
        for j in range(6):
            k = prod_table[i][j]
            rhs = apply(prod.mult, vec_kron(_basis(prod.space, i), _basis(prod.space, j)))
            assert rhs == _basis(prod.space, k)
            # kron'd mult acts on (A⊗A)⊗(B⊗B)-ordered legs
            lhs = apply(
                tensor_mult,
                vec_kron(
                    vec_kron(_basis(c2.space, i // 3), _basis(c2.space, j // 3)),
                    vec_kron(_basis(c3.space, i % 3), _basis(c3.space, j % 3)),
                ),
            )
            assert lhs == vec_kron(_basis(c2.space, k // 3), _basis(c3.space, k % 3))
