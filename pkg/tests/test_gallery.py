"""The bundled example gallery: every positive verifies, every negative fails
exactly at its labeled item and nowhere else."""

import pytest

from crossprod import (
    Algebra,
    AxiomViolation,
    DimensionMismatch,
    NotGraded,
    action_twist,
    bundled_algebras,
    check_algebra,
    check_crossed_axioms,
    check_hypotheses,
    check_twisting_map,
    crossed_bundle,
    crossed_instance,
    cyclic_group_algebra,
    direct_iterated_ttp_tensor,
    example_iterated_ttp,
    example_trivial_extension,
    flip_twist,
    instance_names,
    iterate_left,
    iterate_right,
    iteration_bundle,
    iteration_instance,
    klein_four_algebra,
    maps_equal,
    scale_map,
    sign_twist,
    swap,
    truncated_poly,
)
from crossprod.linalg import apply, vec_kron, vector

IDS4 = tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4))
# an algebra automorphism of the Klein group algebra: fixes e and a,
# sends b -> -ab and ab -> -b
PHI = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, -1), (0, 0, -1, 0))
# the group automorphism a <-> b, which does not commute with PHI
PSI = ((1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1))


# -- the meta-test: labels are exact ------------------------------------------


@pytest.mark.parametrize("inst", crossed_bundle(), ids=lambda i: i.name)
def test_crossed_instances_fail_exactly_at_their_label(inst):
    report = check_crossed_axioms(inst.data)
    failing = [item.name for item in report.items if not item.passed]
    assert failing == ([inst.fails_at] if inst.fails_at else [])


@pytest.mark.parametrize("inst", iteration_bundle(), ids=lambda i: i.name)
def test_iteration_instances_fail_exactly_at_their_label(inst):
    report = check_hypotheses(inst.data)
    failing = [item.name for item in report.items if not item.passed]
    assert failing == ([inst.fails_at] if inst.fails_at else [])


CROSSED_WITNESSES = {
    "broken-brz1": ("1", "g"),
    "broken-brz2": ("1", "y"),
    "broken-brz3": ("y", "g", "g"),
    "broken-brz4": ("x", "x", "x^2"),
    "broken-brz5": ("y", "y", "e12"),
}

ITERATION_WITNESSES = {
    "broken-unitq": ("x", "1"),
    "broken-braid": ("x", "x", "a"),
    "broken-hex-sigma": ("x", "x", "x^2"),
    "broken-hex-nu": ("x", "x^2", "x"),
}


@pytest.mark.parametrize("name,witness", sorted(CROSSED_WITNESSES.items()))
def test_crossed_negative_witnesses_are_stable(name, witness):
    inst = crossed_instance(name)
    item = check_crossed_axioms(inst.data).item(inst.fails_at)
    assert item.witness == witness


@pytest.mark.parametrize("name,witness", sorted(ITERATION_WITNESSES.items()))
def test_iteration_negative_witnesses_are_stable(name, witness):
    inst = iteration_instance(name)
    item = check_hypotheses(inst.data).item(inst.fails_at)
    assert item.witness == witness


def test_instance_registry():
    names = instance_names()
    assert len(names) == len(set(names)) == 21
    assert set(CROSSED_WITNESSES) | set(ITERATION_WITNESSES) <= set(names)
    with pytest.raises(KeyError):
        crossed_instance("no-such-instance")
    with pytest.raises(KeyError):
        iteration_instance("no-such-instance")


def test_bundled_algebras_are_unital_and_associative():
    algebras = bundled_algebras()
    assert [n for n, _ in algebras] == [
        "k",
        "duals",
        "poly3",
        "kc2",
        "kc3",
        "kc4",
        "klein",
        "tri2",
    ]
    assert [alg.dim for _, alg in algebras] == [1, 2, 3, 2, 3, 4, 4, 3]
    for _, alg in algebras:
        assert check_algebra(alg).passed


# -- grading and action validation ---------------------------------------------


def test_sign_twist_rejects_bad_gradings():
    d = truncated_poly(2)
    with pytest.raises(NotGraded, match="parities"):
        sign_twist(d, (0,), d, (0, 1))
    with pytest.raises(NotGraded, match="0 or 1"):
        sign_twist(d, (0, 2), d, (0, 1))
    with pytest.raises(NotGraded, match="unit"):
        sign_twist(d, (1, 0), d, (0, 1))
    kl = klein_four_algebra()
    with pytest.raises(NotGraded, match="homogeneous"):
        sign_twist(kl, (0, 1, 0, 0), kl, (0, 0, 0, 0))


def test_action_twist_validation_and_checking():
    kl = klein_four_algebra()
    c2 = cyclic_group_algebra(2)
    with pytest.raises(DimensionMismatch, match="matrices"):
        action_twist(kl, c2, (IDS4,))
    good = action_twist(kl, c2, (IDS4, PHI))
    assert check_twisting_map(good).passed
    # a linear map that moves the unit is not an algebra map: unit-A fails
    not_unital = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    bad = action_twist(kl, c2, (IDS4, not_unital))
    report = check_twisting_map(bad)
    assert not report.item("unit-A").passed


# -- iterated twisted tensor products ------------------------------------------


def _ttp_triples():
    kc2 = cyclic_group_algebra(2)
    duals = truncated_poly(2)
    kc3 = cyclic_group_algebra(3)
    yield (
        "flips",
        (kc2, duals, kc3),
        (flip_twist(kc2, duals), flip_twist(duals, kc3), flip_twist(kc2, kc3)),
    )
    d = truncated_poly(2)
    odd = (0, 1)
    yield (
        "signs",
        (d, d, d),
        (sign_twist(d, odd, d, odd), sign_twist(d, odd, d, odd), sign_twist(d, odd, d, odd)),
    )
    kl = klein_four_algebra()
    yield (
        "smash",
        (kl, kc2, kc2),
        (
            action_twist(kl, kc2, (IDS4, PHI)),
            flip_twist(kc2, kc2),
            action_twist(kl, kc2, (IDS4, PHI)),
        ),
    )


@pytest.mark.parametrize(
    "triple", list(_ttp_triples()), ids=("flips", "signs", "smash")
)
def test_direct_ttp_tensor_matches_both_iterates(triple):
    _, (a, b, c), (r1, r2, r3) = triple
    d = example_iterated_ttp(a, b, c, r1, r2, r3)
    direct = direct_iterated_ttp_tensor(r1, r2, r3)
    assert maps_equal(iterate_left(d).mult, direct)
    assert maps_equal(iterate_right(d).mult, direct)


def test_super_ttp_anticommutation():
    d = truncated_poly(2)
    odd = (0, 1)
    t = sign_twist(d, odd, d, odd)
    data = example_iterated_ttp(d, d, d, t, t, t)
    alg = iterate_left(data)
    # basis index 4i+2j+k for x^i⊗x^j⊗x^k over the dual numbers
    def basis(i):
        return vector([1 if k == i else 0 for k in range(8)])

    x100, x010, x001 = basis(4), basis(2), basis(1)
    assert apply(alg.mult, vec_kron(x100, x010)) == basis(6)
    assert apply(alg.mult, vec_kron(x010, x100)) == vector(
        [0, 0, 0, 0, 0, 0, -1, 0]
    )
    assert apply(alg.mult, vec_kron(x010, x001)) == basis(3)
    assert apply(alg.mult, vec_kron(x001, x010)) == vector(
        [0, 0, 0, -1, 0, 0, 0, 0]
    )
    assert apply(alg.mult, vec_kron(x100, x100)) == vector([0] * 8)


def test_iterated_ttp_wiring_validation():
    kc2 = cyclic_group_algebra(2)
    duals = truncated_poly(2)
    kc3 = cyclic_group_algebra(3)
    with pytest.raises(DimensionMismatch, match="r3"):
        example_iterated_ttp(
            kc2,
            duals,
            kc3,
            flip_twist(kc2, duals),
            flip_twist(duals, kc3),
            flip_twist(duals, kc3),  # should connect kc3 past kc2
        )


def test_iterated_ttp_precondition_broken_twist():
    kc2 = cyclic_group_algebra(2)
    duals = truncated_poly(2)
    kc3 = cyclic_group_algebra(3)
    r1 = flip_twist(kc2, duals)
    bad_r1 = type(r1)(r1.left, r1.right, scale_map(r1.map, 2))
    with pytest.raises(AxiomViolation) as exc:
        example_iterated_ttp(kc2, duals, kc3, bad_r1, flip_twist(duals, kc3), flip_twist(kc2, kc3))
    assert exc.value.report.first_failure().name == "twisting-r1"


def test_iterated_ttp_precondition_broken_braid():
    kl = klein_four_algebra()
    b2 = cyclic_group_algebra(2)
    c2 = cyclic_group_algebra(2)
    with pytest.raises(AxiomViolation) as exc:
        example_iterated_ttp(
            kl,
            b2,
            c2,
            action_twist(kl, b2, (IDS4, PHI)),
            flip_twist(b2, c2),
            action_twist(kl, c2, (IDS4, PSI)),
        )
    assert exc.value.report.first_failure().name == "braid"
    # the three twists individually were fine
    for item in exc.value.report.items:
        assert item.passed == (item.name != "braid")


def test_trivial_extension_rejects_bad_inputs():
    good = crossed_instance("ext-c4").data
    bad = crossed_instance("broken-brz3").data
    kc2 = cyclic_group_algebra(2)
    with pytest.raises(AxiomViolation, match="crossed-product axioms fail"):
        example_trivial_extension(bad, kc2)
    bad_w = Algebra(kc2.space, kc2.mult, (0, 1))
    with pytest.raises(AxiomViolation, match="not a unital algebra"):
        example_trivial_extension(good, bad_w)
