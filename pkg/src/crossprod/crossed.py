"""Twisted tensor products and crossed products of algebras.

A twisting map between algebras A and B is a linear R: B⊗A -> A⊗B satisfying
unit and multiplicativity conditions; it induces an associative product on
A⊗B.  A crossed-product datum generalizes the right factor to a pointed space
V and adds a cocycle-like map sigma: V⊗V -> A⊗V; five axioms (named brz1-brz5
here and throughout the CLI) are exactly what makes A⊗V associative and
unital with unit 1_A⊗1_V.

All checks are exact matrix identities over Q; reports carry the first
failing basis tuple in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import Algebra, PointedSpace, unit_embed
from .errors import AxiomViolation, DimensionMismatch
from .linalg import (
    MultiLinMap,
    SCALAR_SPACE,
    compose,
    compose_all,
    embed,
    identity,
    kron,
    kron_all,
    refactor,
    swap,
    tensor_space,
    vec_kron,
)
from .reports import CheckReport, equality_item

__all__ = [
    "TwistingMap",
    "CrossedData",
    "flip_twist",
    "check_twisting_map",
    "twisting_axiom_sides",
    "build_twisted_tensor",
    "twisted_to_crossed",
    "check_crossed_axioms",
    "crossed_axiom_sides",
    "build_crossed_algebra",
]


@dataclass(frozen=True)
class TwistingMap:
    """A candidate twisting map.

    `left` is the algebra on the left of the twist's domain (it ends up as the
    right tensor factor of the twisted product), `right` the other one: with
    B = left and A = right, `map` is B⊗A -> A⊗B and the twisted tensor product
    algebra lives on A⊗B.
    """

    left: Algebra
    right: Algebra
    map: MultiLinMap

    def __post_init__(self):
        b, a = self.left.dim, self.right.dim
        if self.map.domain_dim != b * a or self.map.codomain_dim != a * b:
            raise DimensionMismatch(
                f"twist matrix has shape {self.map.codomain_dim}x{self.map.domain_dim}, "
                f"expected {a * b}x{b * a}"
            )


def flip_twist(a: Algebra, b: Algebra) -> TwistingMap:
    """The plain flip b⊗a -> a⊗b; yields the ordinary tensor product algebra."""
    return TwistingMap(b, a, swap(b.space, a.space))


def twisting_axiom_sides(t: TwistingMap) -> dict[str, tuple[tuple[MultiLinMap, MultiLinMap], ...]]:
    """lhs/rhs operator pairs for the four twisting-map conditions."""
    a, b = t.right, t.left
    r = t.map
    id_a, id_b = identity(a.space), identity(b.space)
    ia, ib = unit_embed(a), unit_embed(b)
    mu_a, mu_b = a.mult, b.mult
    return {
        "unit-A": ((compose(r, kron(id_b, ia)), kron(ia, id_b)),),
        "unit-B": ((compose(r, kron(ib, id_a)), kron(id_a, ib)),),
        "mult-A": (
            (
                compose(r, kron(id_b, mu_a)),
                compose_all(kron(mu_a, id_b), kron(id_a, r), kron(r, id_a)),
            ),
        ),
        "mult-B": (
            (
                compose(r, kron(mu_b, id_a)),
                compose_all(kron(id_a, mu_b), kron(r, id_b), kron(id_b, r)),
            ),
        ),
    }


def check_twisting_map(t: TwistingMap) -> CheckReport:
    sides = twisting_axiom_sides(t)
    return CheckReport(tuple(equality_item(name, *pairs) for name, pairs in sides.items()))


def build_twisted_tensor(t: TwistingMap, unchecked: bool = False) -> Algebra:
    """The algebra A⊗B with product (a⊗b)(a'⊗b') = a a'_R ⊗ b_R b'."""
    if not unchecked:
        report = check_twisting_map(t)
        if not report.passed:
            fail = report.first_failure()
            raise AxiomViolation(f"not a twisting map: {fail.line()}", report)
    a, b = t.right, t.left
    space = tensor_space(a.space, b.space)
    mult = compose(
        kron(a.mult, b.mult),
        kron_all(identity(a.space), t.map, identity(b.space)),
    )
    mult = refactor(mult, domain=(space, space), codomain=(space,))
    return Algebra(space, mult, vec_kron(a.unit, b.unit))


@dataclass(frozen=True)
class CrossedData:
    """Input datum for a crossed product: algebra A, pointed space (V, 1_V),
    twist r_map: V⊗A -> A⊗V and cocycle sigma: V⊗V -> A⊗V."""

    alg: Algebra
    pointed: PointedSpace
    r_map: MultiLinMap
    sigma: MultiLinMap

    def __post_init__(self):
        a, v = self.alg.dim, self.pointed.space.dim
        if self.r_map.domain_dim != v * a or self.r_map.codomain_dim != a * v:
            raise DimensionMismatch(
                f"r_map has shape {self.r_map.codomain_dim}x{self.r_map.domain_dim}, "
                f"expected {a * v}x{v * a}"
            )
        if self.sigma.domain_dim != v * v or self.sigma.codomain_dim != a * v:
            raise DimensionMismatch(
                f"sigma has shape {self.sigma.codomain_dim}x{self.sigma.domain_dim}, "
                f"expected {a * v}x{v * v}"
            )


def twisted_to_crossed(t: TwistingMap, unchecked: bool = False) -> CrossedData:
    """View a twisted tensor product as the crossed product with trivial
    cocycle sigma(b⊗b') = 1_A ⊗ bb'."""
    if not unchecked:
        report = check_twisting_map(t)
        if not report.passed:
            fail = report.first_failure()
            raise AxiomViolation(f"not a twisting map: {fail.line()}", report)
    a, b = t.right, t.left
    sigma = refactor(kron(unit_embed(a), b.mult), domain=(b.space, b.space))
    return CrossedData(a, PointedSpace(b.space, b.unit), t.map, sigma)


def crossed_axiom_sides(c: CrossedData) -> dict[str, tuple[tuple[MultiLinMap, MultiLinMap], ...]]:
    """lhs/rhs operator pairs for the five crossed-product axioms.

    brz1: R(1_V⊗a) = a⊗1_V and R(v⊗1_A) = 1_A⊗v
    brz2: sigma(1_V⊗v) = 1_A⊗v = sigma(v⊗1_V)
    brz3: R∘(id⊗mu) = (mu⊗id)∘(id⊗R)∘(R⊗id)
    brz4: (mu⊗id)∘(id⊗sigma)∘(R⊗id)∘(id⊗sigma) = (mu⊗id)∘(id⊗sigma)∘(sigma⊗id)
    brz5: (mu⊗id)∘(id⊗sigma)∘(R⊗id)∘(id⊗R) = (mu⊗id)∘(id⊗R)∘(sigma⊗id)
    """
    a = c.alg
    v = c.pointed.space
    r, sg = c.r_map, c.sigma
    mu = a.mult
    id_a, id_v = identity(a.space), identity(v)
    ia = unit_embed(a)
    iv = embed(v, c.pointed.point)
    mu_id = kron(mu, id_v)
    return {
        "brz1": (
            (compose(r, kron(iv, id_a)), kron(id_a, iv)),
            (compose(r, kron(id_v, ia)), kron(ia, id_v)),
        ),
        "brz2": (
            (compose(sg, kron(iv, id_v)), kron(ia, id_v)),
            (compose(sg, kron(id_v, iv)), kron(ia, id_v)),
        ),
        "brz3": (
            (
                compose(r, kron(id_v, mu)),
                compose_all(mu_id, kron(id_a, r), kron(r, id_a)),
            ),
        ),
        "brz4": (
            (
                compose_all(mu_id, kron(id_a, sg), kron(r, id_v), kron(id_v, sg)),
                compose_all(mu_id, kron(id_a, sg), kron(sg, id_v)),
            ),
        ),
        "brz5": (
            (
                compose_all(mu_id, kron(id_a, sg), kron(r, id_v), kron(id_v, r)),
                compose_all(mu_id, kron(id_a, r), kron(sg, id_a)),
            ),
        ),
    }


def check_crossed_axioms(c: CrossedData) -> CheckReport:
    sides = crossed_axiom_sides(c)
    return CheckReport(tuple(equality_item(name, *pairs) for name, pairs in sides.items()))


def build_crossed_algebra(c: CrossedData, unchecked: bool = False) -> Algebra:
    """The crossed product on A⊗V:
    (a⊗v)(a'⊗v') = a a'_R sigma_1(v_R, v') ⊗ sigma_2(v_R, v')."""
    if not unchecked:
        report = check_crossed_axioms(c)
        if not report.passed:
            fail = report.first_failure()
            raise AxiomViolation(f"crossed-product axioms fail: {fail.line()}", report)
    a = c.alg
    v = c.pointed.space
    id_a, id_v = identity(a.space), identity(v)
    mu2 = compose(a.mult, kron(id_a, a.mult))
    space = tensor_space(a.space, v)
    mult = compose_all(
        kron(mu2, id_v),
        kron_all(id_a, id_a, c.sigma),
        kron_all(id_a, c.r_map, id_v),
    )
    mult = refactor(mult, domain=(space, space), codomain=(space,))
    return Algebra(space, mult, vec_kron(a.unit, c.pointed.point))
