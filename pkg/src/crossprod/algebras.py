"""Unital associative algebras presented by structure constants.

An `Algebra` is a based space, a multiplication tensor V⊗V -> V and a unit
vector.  Nothing is verified at construction time; `check_algebra` decides
associativity and two-sided unitality as exact matrix identities and reports
the first failing basis tuple of each.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, NotAGroup
from .linalg import (
    MultiLinMap,
    Space,
    SCALAR_SPACE,
    compose,
    embed,
    identity,
    kron,
    map_from_entries,
    vector,
)
from .reports import CheckReport, equality_item

__all__ = [
    "Algebra",
    "PointedSpace",
    "scalar_algebra",
    "check_algebra",
    "unit_embed",
    "group_algebra",
    "truncated_poly",
]


@dataclass(frozen=True)
class PointedSpace:
    """A based space with a distinguished nonzero point (the unit of a
    crossed-product factor)."""

    space: Space
    point: tuple[Fraction, ...]

    def __post_init__(self):
        point = vector(self.point)
        object.__setattr__(self, "point", point)
        if len(point) != self.space.dim:
            raise DimensionMismatch(
                f"point has length {len(point)}, space dim is {self.space.dim}"
            )
        if not any(point):
            raise ValueError("the distinguished point must be nonzero")


@dataclass(frozen=True)
class Algebra:
    space: Space
    mult: MultiLinMap
    unit: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "unit", vector(self.unit))
        if self.mult.domain_dim != self.space.dim**2 or self.mult.codomain_dim != self.space.dim:
            raise DimensionMismatch(
                f"mult tensor has shape {self.mult.codomain_dim}x{self.mult.domain_dim}, "
                f"expected {self.space.dim}x{self.space.dim**2}"
            )
        if len(self.unit) != self.space.dim:
            raise DimensionMismatch(
                f"unit has length {len(self.unit)}, space dim is {self.space.dim}"
            )

    @property
    def dim(self) -> int:
        return self.space.dim


def scalar_algebra() -> Algebra:
    """The ground field as a 1-dimensional algebra."""
    s = SCALAR_SPACE
    mult = map_from_entries((s, s), (s,), [((0,), (0, 0), 1)])
    return Algebra(s, mult, (1,))


def unit_embed(a: Algebra) -> MultiLinMap:
    """The unit map k -> A as a column vector."""
    return embed(a.space, a.unit)


def check_algebra(a: Algebra) -> CheckReport:
    """Associativity and two-sided unitality, each as one exact identity."""
    s = a.space
    ids = identity(s)
    m = a.mult
    u = unit_embed(a)
    return CheckReport(
        (
            equality_item("assoc", (compose(m, kron(m, ids)), compose(m, kron(ids, m)))),
            equality_item("unit-left", (compose(m, kron(u, ids)), ids)),
            equality_item("unit-right", (compose(m, kron(ids, u)), ids)),
        )
    )


def _check_table(table) -> tuple[int, int]:
    """Validate a Cayley table; returns (order, identity index).

    Raises NotAGroup with the earliest violated axiom: shape, Latin
    property, identity, inverses, then associativity.
    """
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    rows = [tuple(r) for r in table]
    for r in rows:
        if len(r) != n:
            raise NotAGroup(f"table is not square: row of length {len(r)} in an order-{n} table")
    full = set(range(n))
    for i, r in enumerate(rows):
        if not all(isinstance(x, int) and 0 <= x < n for x in r):
            raise NotAGroup(f"row {i} contains an out-of-range entry")
        if set(r) != full:
            raise NotAGroup(f"row {i} is not a permutation: table is not a Latin square")
    for j in range(n):
        if {rows[i][j] for i in range(n)} != full:
            raise NotAGroup(f"column {j} is not a permutation: table is not a Latin square")
    e = None
    for cand in range(n):
        if all(rows[cand][j] == j for j in range(n)) and all(rows[i][cand] == i for i in range(n)):
            e = cand
            break
    if e is None:
        raise NotAGroup("no two-sided identity element")
    for i in range(n):
        if not any(rows[i][j] == e and rows[j][i] == e for j in range(n)):
            raise NotAGroup(f"element {i} has no two-sided inverse")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if rows[rows[i][j]][k] != rows[i][rows[j][k]]:
                    raise NotAGroup(f"not associative at ({i}, {j}, {k})")
    return n, e


def group_algebra(table, labels=None) -> Algebra:
    """Group algebra over Q from a Cayley table of element indices."""
    n, e = _check_table(table)
    if labels is None:
        labels = tuple(f"g{i}" for i in range(n))
    space = Space(n, tuple(labels))
    entries = [((table[i][j],), (i, j), 1) for i in range(n) for j in range(n)]
    mult = map_from_entries((space, space), (space,), entries)
    unit = tuple(1 if i == e else 0 for i in range(n))
    return Algebra(space, mult, unit)


def truncated_poly(n: int) -> Algebra:
    """Q[x]/(x^n) with basis 1, x, ..., x^(n-1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    labels = tuple("1" if i == 0 else ("x" if i == 1 else f"x^{i}") for i in range(n))
    space = Space(n, labels)
    entries = [((i + j,), (i, j), 1) for i in range(n) for j in range(n) if i + j < n]
    mult = map_from_entries((space, space), (space,), entries)
    return Algebra(space, mult, tuple(1 if i == 0 else 0 for i in range(n)))
