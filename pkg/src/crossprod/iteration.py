"""Iterating two crossed products that share the algebra A.

Given crossed-product data (A, V, R, sigma) and (A, W, P, nu) plus an
exchange map Q: W⊗V -> V⊗W, four hypotheses (unitQ, braid, hex-sigma,
hex-nu) guarantee that

  * S = (R⊗id_W)∘(id_V⊗P) and theta = (mu⊗id⊗id)∘(id⊗R⊗id)∘(sigma⊗nu)∘(id⊗Q⊗id)
    make (A, V⊗W, S, theta) a crossed-product datum, and
  * T = (id_A⊗Q)∘(P⊗id_V) and eta(w⊗w') = nu_1(w,w')⊗1_V⊗nu_2(w,w')
    make (A⊗V, W, T, eta) one over the first crossed product,

and the two resulting algebras on A⊗V⊗W coincide.  `verify_theorem` checks
every one of those claims on concrete data and additionally compares both
products against a third multiplication tensor evaluated coordinatewise from
the closed product formula, so the certificate never rests on a single
construction path.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .algebras import Algebra, PointedSpace, unit_embed
from .crossed import CrossedData, build_crossed_algebra, check_crossed_axioms
from .errors import AxiomViolation, DimensionMismatch
from .linalg import (
    MultiLinMap,
    SCALAR_SPACE,
    basis_expansion,
    compose_all,
    embed,
    identity,
    kron,
    kron_all,
    map_from_entries,
    refactor,
    tensor_space,
    vec_kron,
)
from .reports import CheckReport, equality_item, witness_labels

__all__ = [
    "IterationData",
    "DerivedMaps",
    "TheoremCertificate",
    "check_hypotheses",
    "hypothesis_sides",
    "derive_maps",
    "theta_from_coordinates",
    "s_from_coordinates",
    "closed_formula_tensor",
    "left_crossed_data",
    "right_crossed_data",
    "iterate_left",
    "iterate_right",
    "verify_theorem",
]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class IterationData:
    """Two crossed-product data over one algebra plus the exchange map Q."""

    left: CrossedData
    right: CrossedData
    q_map: MultiLinMap

    def __post_init__(self):
        if self.left.alg != self.right.alg:
            raise DimensionMismatch("left and right data must share the same algebra")
        v = self.left.pointed.space.dim
        w = self.right.pointed.space.dim
        if self.q_map.domain_dim != w * v or self.q_map.codomain_dim != v * w:
            raise DimensionMismatch(
                f"q_map has shape {self.q_map.codomain_dim}x{self.q_map.domain_dim}, "
                f"expected {v * w}x{w * v}"
            )


@dataclass(frozen=True)
class DerivedMaps:
    s_map: MultiLinMap  # (V⊗W)⊗A -> A⊗(V⊗W)
    theta: MultiLinMap  # (V⊗W)⊗(V⊗W) -> A⊗(V⊗W)
    t_map: MultiLinMap  # W⊗(A⊗V) -> (A⊗V)⊗W
    eta: MultiLinMap  # W⊗W -> (A⊗V)⊗W


def _parts(d: IterationData):
    a = d.left.alg
    v = d.left.pointed.space
    w = d.right.pointed.space
    return a, v, w


def hypothesis_sides(d: IterationData) -> dict[str, tuple[tuple[MultiLinMap, MultiLinMap], ...]]:
    """lhs/rhs operator pairs for the four iteration hypotheses.

    unitQ:     Q(1_W⊗v) = v⊗1_W and Q(w⊗1_V) = 1_V⊗w
    braid:     (id_A⊗Q)∘(P⊗id_V)∘(id_W⊗R) = (R⊗id_W)∘(id_V⊗P)∘(Q⊗id_A)
    hex-sigma: (id_A⊗Q)∘(P⊗id_V)∘(id_W⊗sigma) = (sigma⊗id_W)∘(id_V⊗Q)∘(Q⊗id_V)
    hex-nu:    (id_A⊗Q)∘(nu⊗id_V) = (R⊗id_W)∘(id_V⊗nu)∘(Q⊗id_W)∘(id_W⊗Q)
    """
    a, v, w = _parts(d)
    r, sg = d.left.r_map, d.left.sigma
    p, nu = d.right.r_map, d.right.sigma
    q = d.q_map
    id_a, id_v, id_w = identity(a.space), identity(v), identity(w)
    iv = embed(v, d.left.pointed.point)
    iw = embed(w, d.right.pointed.point)
    return {
        "unitQ": (
            (compose_all(q, kron(iw, id_v)), kron(id_v, iw)),
            (compose_all(q, kron(id_w, iv)), kron(iv, id_w)),
        ),
        "braid": (
            (
                compose_all(kron(id_a, q), kron(p, id_v), kron(id_w, r)),
                compose_all(kron(r, id_w), kron(id_v, p), kron(q, id_a)),
            ),
        ),
        "hex-sigma": (
            (
                compose_all(kron(id_a, q), kron(p, id_v), kron(id_w, sg)),
                compose_all(kron(sg, id_w), kron(id_v, q), kron(q, id_v)),
            ),
        ),
        "hex-nu": (
            (
                compose_all(kron(id_a, q), kron(nu, id_v)),
                compose_all(kron(r, id_w), kron(id_v, nu), kron(q, id_w), kron(id_w, q)),
            ),
        ),
    }


def check_hypotheses(d: IterationData) -> CheckReport:
    sides = hypothesis_sides(d)
    return CheckReport(tuple(equality_item(name, *pairs) for name, pairs in sides.items()))


def derive_maps(d: IterationData) -> DerivedMaps:
    """The composite-form constructions of S, theta, T and eta."""
    a, v, w = _parts(d)
    r, sg = d.left.r_map, d.left.sigma
    p, nu = d.right.r_map, d.right.sigma
    q = d.q_map
    id_a, id_v, id_w = identity(a.space), identity(v), identity(w)
    vw = tensor_space(v, w)
    av = tensor_space(a.space, v)

    s_map = compose_all(kron(r, id_w), kron(id_v, p))
    s_map = refactor(s_map, domain=(vw, a.space), codomain=(a.space, vw))

    theta = compose_all(
        kron_all(a.mult, id_v, id_w),
        kron_all(id_a, r, id_w),
        kron(sg, nu),
        kron_all(id_v, q, id_w),
    )
    theta = refactor(theta, domain=(vw, vw), codomain=(a.space, vw))

    t_map = compose_all(kron(id_a, q), kron(p, id_v))
    t_map = refactor(t_map, domain=(w, av), codomain=(av, w))

    eta = compose_all(
        kron_all(id_a, embed(v, d.left.pointed.point), id_w),
        refactor(nu, codomain=(a.space, SCALAR_SPACE, w)),
    )
    eta = refactor(eta, codomain=(av, w))
    return DerivedMaps(s_map, theta, t_map, eta)


def left_crossed_data(d: IterationData) -> CrossedData:
    """The single-shot datum (A, V⊗W, S, theta)."""
    a, v, w = _parts(d)
    maps = derive_maps(d)
    vw = tensor_space(v, w)
    point = vec_kron(d.left.pointed.point, d.right.pointed.point)
    return CrossedData(a, PointedSpace(vw, point), maps.s_map, maps.theta)


def right_crossed_data(d: IterationData) -> CrossedData:
    """The two-step datum (A⊗V, W, T, eta) over the built first product."""
    maps = derive_maps(d)
    inner = build_crossed_algebra(d.left, unchecked=True)
    return CrossedData(inner, d.right.pointed, maps.t_map, maps.eta)


def iterate_left(d: IterationData, unchecked: bool = False) -> Algebra:
    """Build A⊗(V⊗W) as a single crossed product via (S, theta)."""
    if not unchecked:
        hyp = check_hypotheses(d)
        if not hyp.passed:
            raise AxiomViolation(f"iteration hypotheses fail: {hyp.first_failure().line()}", hyp)
    data = left_crossed_data(d)
    if not unchecked:
        report = check_crossed_axioms(data)
        if not report.passed:
            raise AxiomViolation(
                f"(S, theta) axioms fail: {report.first_failure().line()}", report
            )
    return build_crossed_algebra(data, unchecked=True)


def iterate_right(d: IterationData, unchecked: bool = False) -> Algebra:
    """Build (A⊗V)⊗W by crossing the first product with W via (T, eta)."""
    if not unchecked:
        hyp = check_hypotheses(d)
        if not hyp.passed:
            raise AxiomViolation(f"iteration hypotheses fail: {hyp.first_failure().line()}", hyp)
    data = right_crossed_data(d)
    if not unchecked:
        report = check_crossed_axioms(data)
        if not report.passed:
            raise AxiomViolation(f"(T, eta) axioms fail: {report.first_failure().line()}", report)
    return build_crossed_algebra(data, unchecked=True)


# ---------------------------------------------------------------------------
# Coordinatewise (Sweedler-style) constructions.  These walk basis expansions
# directly and never call kron/compose, so they are an independent route to
# the same tensors; verify_theorem and the test suite compare both routes.


def theta_from_coordinates(d: IterationData) -> MultiLinMap:
    """theta(v⊗w⊗v'⊗w') = sigma_1(v, v'_Q) nu_1(w_Q, w')_R ⊗ sigma_2(v, v'_Q)_R ⊗ nu_2(w_Q, w')."""
    a, v, w = _parts(d)
    rl = basis_expansion(d.left.r_map)
    sg = basis_expansion(d.left.sigma)
    nu = basis_expansion(d.right.sigma)
    qm = basis_expansion(d.q_map)
    mult = basis_expansion(d.left.alg.mult)
    vw = tensor_space(v, w)
    entries = []
    for iv in range(v.dim):
        for iw in range(w.dim):
            for jv in range(v.dim):
                for jw in range(w.dim):
                    acc: dict[tuple[int, int, int], Fraction] = defaultdict(lambda: _ZERO)
                    for (vq, wq), cq in qm[(iw, jv)]:
                        for (s1, s2), cs in sg[(iv, vq)]:
                            for (n1, n2), cn in nu[(wq, jw)]:
                                for (nr, s2r), cr in rl[(s2, n1)]:
                                    for (pa,), cm in mult[(s1, nr)]:
                                        acc[(pa, s2r, n2)] += cq * cs * cn * cr * cm
                    col = (iv, iw, jv, jw)
                    for key, val in acc.items():
                        if val:
                            entries.append((key, col, val))
    out = map_from_entries((v, w, v, w), (a.space, v, w), entries)
    return refactor(out, domain=(vw, vw), codomain=(a.space, vw))


def s_from_coordinates(d: IterationData) -> MultiLinMap:
    """S(v⊗w⊗a) = (a_P)_R ⊗ v_R ⊗ w_P."""
    a, v, w = _parts(d)
    rl = basis_expansion(d.left.r_map)
    pm = basis_expansion(d.right.r_map)
    vw = tensor_space(v, w)
    entries = []
    for iv in range(v.dim):
        for iw in range(w.dim):
            for ia in range(a.dim):
                acc: dict[tuple[int, int, int], Fraction] = defaultdict(lambda: _ZERO)
                for (ap, wp), cp in pm[(iw, ia)]:
                    for (apr, vr), cr in rl[(iv, ap)]:
                        acc[(apr, vr, wp)] += cp * cr
                for key, val in acc.items():
                    if val:
                        entries.append((key, (iv, iw, ia), val))
    out = map_from_entries((v, w, a.space), (a.space, v, w), entries)
    return refactor(out, domain=(vw, a.space), codomain=(a.space, vw))


def closed_formula_tensor(d: IterationData) -> MultiLinMap:
    """The product on A⊗V⊗W evaluated directly from the closed formula

    (a⊗v⊗w)(a'⊗v'⊗w') =
        a (a'_P)_R sigma_1(v_R, v'_Q) nu_1((w_P)_Q, w')_r
        ⊗ sigma_2(v_R, v'_Q)_r ⊗ nu_2((w_P)_Q, w')

    where r is a second application of R.  Multiplications in A associate to
    the left.
    """
    a, v, w = _parts(d)
    rl = basis_expansion(d.left.r_map)
    sg = basis_expansion(d.left.sigma)
    pm = basis_expansion(d.right.r_map)
    nu = basis_expansion(d.right.sigma)
    qm = basis_expansion(d.q_map)
    mult = basis_expansion(d.left.alg.mult)
    avw = tensor_space(a.space, v, w)
    entries = []
    for ia in range(a.dim):
        for iv in range(v.dim):
            for iw in range(w.dim):
                for ja in range(a.dim):
                    for jv in range(v.dim):
                        for jw in range(w.dim):
                            acc: dict[tuple[int, int, int], Fraction] = defaultdict(lambda: _ZERO)
                            for (ap, wp), cp in pm[(iw, ja)]:
                                for (apr, vr), cr1 in rl[(iv, ap)]:
                                    for (vq, wpq), cq in qm[(wp, jv)]:
                                        for (s1, s2), cs in sg[(vr, vq)]:
                                            for (n1, n2), cn in nu[(wpq, jw)]:
                                                for (nr, s2r), cr2 in rl[(s2, n1)]:
                                                    coeff = cp * cr1 * cq * cs * cn * cr2
                                                    for (t1,), c1 in mult[(ia, apr)]:
                                                        for (t2,), c2 in mult[(t1, s1)]:
                                                            for (t3,), c3 in mult[(t2, nr)]:
                                                                acc[(t3, s2r, n2)] += (
                                                                    coeff * c1 * c2 * c3
                                                                )
                            col = (ia, iv, iw, ja, jv, jw)
                            for key, val in acc.items():
                                if val:
                                    entries.append((key, col, val))
    out = map_from_entries(
        (a.space, v, w, a.space, v, w), (a.space, v, w), entries
    )
    return refactor(out, domain=(avw, avw), codomain=(avw,))


@dataclass(frozen=True)
class TheoremCertificate:
    """Everything `verify_theorem` decides, with per-item witnesses."""

    hypothesis_report: CheckReport
    left_axioms: CheckReport
    right_axioms: CheckReport
    tensors_equal: bool
    explicit_matches: bool
    tensor_witness: tuple[str, ...] | None = None
    explicit_witness: tuple[str, ...] | None = None

    @property
    def passed(self) -> bool:
        return (
            self.hypothesis_report.passed
            and self.left_axioms.passed
            and self.right_axioms.passed
            and self.tensors_equal
            and self.explicit_matches
        )

    def lines(self) -> list[str]:
        out = self.hypothesis_report.lines()
        for item in self.left_axioms.items:
            out.append(item.line().replace(f"ITEM {item.name}:", f"ITEM {item.name}(left):", 1))
        for item in self.right_axioms.items:
            out.append(item.line().replace(f"ITEM {item.name}:", f"ITEM {item.name}(right):", 1))
        if self.tensors_equal:
            out.append("ITEM tensors-equal: PASS")
        else:
            where = "(" + ", ".join(self.tensor_witness or ("?",)) + ")"
            out.append(f"ITEM tensors-equal: FAIL at {where}")
        if self.explicit_matches:
            out.append("ITEM explicit-matches: PASS")
        else:
            where = "(" + ", ".join(self.explicit_witness or ("?",)) + ")"
            out.append(f"ITEM explicit-matches: FAIL at {where}")
        return out


def _first_difference(lhs: MultiLinMap, rhs: MultiLinMap):
    if lhs.matrix == rhs.matrix:
        return None
    for c in range(lhs.domain_dim):
        for r in range(lhs.codomain_dim):
            if lhs.matrix[r][c] != rhs.matrix[r][c]:
                return witness_labels(lhs.domain, c)
    return None


def verify_theorem(d: IterationData) -> TheoremCertificate:
    """Full certificate: hypotheses, both sets of crossed axioms, equality of
    the two iterated products, and agreement with the closed formula."""
    hyp = check_hypotheses(d)
    ldata = left_crossed_data(d)
    rdata = right_crossed_data(d)
    left_report = check_crossed_axioms(ldata)
    right_report = check_crossed_axioms(rdata)
    left_alg = build_crossed_algebra(ldata, unchecked=True)
    right_alg = build_crossed_algebra(rdata, unchecked=True)

    tensor_witness = _first_difference(left_alg.mult, right_alg.mult)
    units_equal = left_alg.unit == right_alg.unit
    tensors_equal = tensor_witness is None and units_equal

    closed = closed_formula_tensor(d)
    explicit_witness = _first_difference(left_alg.mult, closed)
    if explicit_witness is None:
        explicit_witness = _first_difference(right_alg.mult, closed)
    return TheoremCertificate(
        hypothesis_report=hyp,
        left_axioms=left_report,
        right_axioms=right_report,
        tensors_equal=tensors_equal,
        explicit_matches=explicit_witness is None,
        tensor_witness=tensor_witness,
        explicit_witness=explicit_witness,
    )
