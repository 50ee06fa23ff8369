"""Core exact linear algebra: scalars, spaces, maps, kron/compose/refactor."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossprod import (
    DimensionMismatch,
    MultiLinMap,
    SCALAR_SPACE,
    Space,
    apply,
    compose,
    compose_all,
    embed,
    flatten,
    identity,
    kron,
    kron_all,
    make_map,
    map_from_entries,
    maps_equal,
    refactor,
    scalar,
    scale_map,
    swap,
    tensor_space,
    unflatten,
    vec_kron,
    vector,
)

V2 = Space(2, ("e", "x"))
V3 = Space(3, ("a", "b", "c"))


# -- scalars -----------------------------------------------------------------


def test_scalar_accepts_int_fraction_and_string():
    assert scalar(3) == Fraction(3)
    assert scalar(Fraction(2, 4)) == Fraction(1, 2)
    assert scalar("-7/3") == Fraction(-7, 3)


def test_scalar_rejects_floats():
    with pytest.raises(TypeError):
        scalar(0.5)
    with pytest.raises(TypeError):
        vector([1, 0.25])
    with pytest.raises(TypeError):
        make_map((V2,), (V2,), [[1, 0], [0, 1.0]])


def test_scalars_are_always_canonical():
    f = scalar("6/4")
    assert (f.numerator, f.denominator) == (3, 2)
    g = scalar("-6/4")
    assert (g.numerator, g.denominator) == (-3, 2)


# -- spaces and indexing -----------------------------------------------------


def test_space_validation():
    with pytest.raises(ValueError):
        Space(0, ())
    with pytest.raises(ValueError):
        Space(2, ("a",))
    with pytest.raises(ValueError):
        Space(2, ("a", "a"))


def test_tensor_space_labels():
    t = tensor_space(V2, V3)
    assert t.dim == 6
    assert t.labels[0] == "e⊗a"
    assert t.labels[5] == "x⊗c"


def test_flatten_row_major():
    dims = (2, 3, 4)
    assert flatten((0, 0, 0), dims) == 0
    assert flatten((1, 2, 3), dims) == 1 * 12 + 2 * 4 + 3
    assert unflatten(23, dims) == (1, 2, 3)


@given(st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=4).flatmap(
    lambda dims: st.tuples(st.just(tuple(dims)), st.integers(min_value=0, max_value=1))
))
def test_flatten_unflatten_bijection(case):
    dims, _ = case
    total = 1
    for d in dims:
        total *= d
    seen = set()
    for flat in range(total):
        idx = unflatten(flat, dims)
        assert all(0 <= i < d for i, d in zip(idx, dims))
        assert flatten(idx, dims) == flat
        seen.add(idx)
    assert len(seen) == total


# -- frozen small oracles ----------------------------------------------------


def test_kron_matches_hand_computed_matrix():
    flip = make_map((V2,), (V2,), [[0, 1], [1, 0]])
    got = kron(flip, identity(V2))
    expected = (
        (0, 0, 1, 0),
        (0, 0, 0, 1),
        (1, 0, 0, 0),
        (0, 1, 0, 0),
    )
    assert got.matrix == tuple(tuple(Fraction(x) for x in row) for row in expected)


def test_swap_2_2_matrix():
    s = swap(2, 2)
    expected = (
        (1, 0, 0, 0),
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (0, 0, 0, 1),
    )
    assert s.matrix == tuple(tuple(Fraction(x) for x in row) for row in expected)


def test_swap_acts_on_basis_vectors():
    s = swap(V2, V3)
    for i in range(2):
        for j in range(3):
            e_i = vector([1 if k == i else 0 for k in range(2)])
            f_j = vector([1 if k == j else 0 for k in range(3)])
            assert apply(s, vec_kron(e_i, f_j)) == vec_kron(f_j, e_i)


def test_identity_and_maps_equal_use_total_dims():
    assert maps_equal(kron(identity(V2), identity(V2)), identity(tensor_space(V2, V2)))
    assert maps_equal(identity(V2, V3), identity(tensor_space(V2, V3)))


# -- structural rules --------------------------------------------------------


def _random_map(rng, domain_dim, codomain_dim, spaces):
    rows = [
        [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(domain_dim)]
        for _ in range(codomain_dim)
    ]
    return make_map(spaces[0], spaces[1], rows)


def test_compose_is_matrix_product():
    f = make_map((V2,), (V2,), [[1, 2], [3, 4]])
    g = make_map((V2,), (V2,), [[0, 1], [1, 0]])
    fg = compose(f, g)
    assert fg.matrix == ((Fraction(2), Fraction(1)), (Fraction(4), Fraction(3)))


def test_compose_requires_equal_total_dims_only():
    f = make_map((V2, V3), (V2,), [[1] * 6, [0] * 6])
    g = make_map((V3, V2), (V3, V2), [[1 if i == j else 0 for j in range(6)] for i in range(6)])
    fg = compose(f, g)  # 6 == 6 even though the factor splits differ
    assert fg.domain == (V3, V2)
    assert fg.codomain == (V2,)
    with pytest.raises(DimensionMismatch):
        compose(f, identity(V2))


def test_compose_all_left_fold_associativity():
    import random

    rng = random.Random(7)
    maps = [
        make_map(
            (V3,), (V3,), [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        )
        for _ in range(4)
    ]
    a = compose_all(*maps)
    b = compose(compose(compose(maps[0], maps[1]), maps[2]), maps[3])
    c = compose(maps[0], compose(maps[1], compose(maps[2], maps[3])))
    assert maps_equal(a, b) and maps_equal(a, c)


def test_kron_interchange_with_compose():
    import random

    rng = random.Random(11)

    def rand(n, m):
        return make_map(
            (Space.of_dim(m),),
            (Space.of_dim(n),),
            [[Fraction(rng.randint(-2, 2)) for _ in range(m)] for _ in range(n)],
        )

    for _ in range(25):
        f1, g1 = rand(2, 3), rand(3, 2)
        f2, g2 = rand(2, 2), rand(2, 3)
        lhs = compose(kron(f1, f2), kron(g1, g2))
        rhs = kron(compose(f1, g1), compose(f2, g2))
        assert maps_equal(lhs, rhs)


def test_refactor_regroups_without_changing_entries():
    f = make_map((V2, V3), (V3, V2), [[i * 6 + j for j in range(6)] for i in range(6)])
    g = refactor(f, domain=(tensor_space(V2, V3),), codomain=(V3, V2))
    assert g.matrix == f.matrix
    assert g.domain == (tensor_space(V2, V3),)
    with pytest.raises(DimensionMismatch):
        refactor(f, domain=(V2, V2))


def test_refactor_realizes_trivial_identification():
    # A⊗(V⊗W) and (A⊗V)⊗W are the same flat data
    a, v, w = Space.of_dim(2, "a"), Space.of_dim(3, "v"), Space.of_dim(2, "w")
    f = identity(a, v, w)
    left = refactor(f, domain=(a, tensor_space(v, w)), codomain=(a, tensor_space(v, w)))
    right = refactor(f, domain=(tensor_space(a, v), w), codomain=(tensor_space(a, v), w))
    assert maps_equal(left, right)


def test_embed_and_apply():
    e = embed(V2, (1, 0))
    assert e.domain == (SCALAR_SPACE,)
    assert apply(e, vector([1])) == vector([1, 0])
    assert apply(scale_map(e, 3), vector([2])) == vector([6, 0])


def test_map_from_entries_sparse_construction():
    m = map_from_entries((V2, V2), (V2,), [((0,), (0, 0), 1), ((1,), (1, 1), "1/2")])
    assert m.matrix[0][0] == 1
    assert m.matrix[1][3] == Fraction(1, 2)
    assert sum(1 for row in m.matrix for x in row if x) == 2


def test_vec_kron():
    assert vec_kron(vector([1, 2]), vector([0, 3])) == vector([0, 3, 0, 6])


def test_matrix_shape_validation():
    with pytest.raises(DimensionMismatch):
        make_map((V2,), (V2,), [[1, 0]])
    with pytest.raises(DimensionMismatch):
        make_map((V2,), (V2,), [[1], [0]])


# -- randomized exact-arithmetic hygiene --------------------------------------


@settings(max_examples=200, deadline=None)
@given(
    st.integers(min_value=-40, max_value=40),
    st.integers(min_value=1, max_value=40),
    st.integers(min_value=-40, max_value=40),
    st.integers(min_value=1, max_value=40),
)
def test_fraction_arithmetic_stays_canonical(p1, q1, p2, q2):
    from math import gcd

    a, b = Fraction(p1, q1), Fraction(p2, q2)
    for val in (a + b, a - b, a * b, a + b * a, (a - b) * (a + b)):
        assert val.denominator > 0
        assert gcd(abs(val.numerator), val.denominator) == 1
