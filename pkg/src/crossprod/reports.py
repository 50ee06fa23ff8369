"""Structured pass/fail reports for axiom checks.

Every checker in the package returns a `CheckReport`: an ordered tuple of
named items, each carrying the first failing basis multi-index (as labels,
in lexicographic order over the domain basis) when it fails.  The CLI's
report lines are generated from here, so the line grammar lives here too:

    ITEM <name>: PASS
    ITEM <name>: FAIL at (<label>, <label>, ...)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .linalg import MultiLinMap, Space, unflatten

__all__ = ["CheckItem", "CheckReport", "equality_item", "witness_labels"]


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    witness: tuple[str, ...] | None = None

    def line(self) -> str:
        if self.passed:
            return f"ITEM {self.name}: PASS"
        where = "(" + ", ".join(self.witness) + ")" if self.witness else "(?)"
        return f"ITEM {self.name}: FAIL at {where}"


@dataclass(frozen=True)
class CheckReport:
    items: tuple[CheckItem, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.items)

    def item(self, name: str) -> CheckItem:
        for i in self.items:
            if i.name == name:
                return i
        raise KeyError(name)

    def names(self) -> tuple[str, ...]:
        return tuple(i.name for i in self.items)

    def first_failure(self) -> CheckItem | None:
        for i in self.items:
            if not i.passed:
                return i
        return None

    def lines(self) -> list[str]:
        return [i.line() for i in self.items]


def witness_labels(spaces: tuple[Space, ...], flat: int) -> tuple[str, ...]:
    idx = unflatten(flat, tuple(s.dim for s in spaces))
    return tuple(s.labels[i] for s, i in zip(spaces, idx))


def _first_mismatch(lhs: MultiLinMap, rhs: MultiLinMap) -> int | None:
    rows = lhs.codomain_dim
    for c in range(lhs.domain_dim):
        for r in range(rows):
            if lhs.matrix[r][c] != rhs.matrix[r][c]:
                return c
    return None


def equality_item(name: str, *pairs: tuple[MultiLinMap, MultiLinMap]) -> CheckItem:
    """Compare one or more (lhs, rhs) map pairs as a single named check.

    The witness is the first failing domain basis multi-index of the first
    failing pair, scanned in lexicographic (row-major column) order, rendered
    as that pair's lhs domain factor labels.
    """
    for lhs, rhs in pairs:
        if lhs.domain_dim != rhs.domain_dim or lhs.codomain_dim != rhs.codomain_dim:
            raise DimensionMismatch(
                f"check {name!r}: sides have shapes "
                f"{lhs.codomain_dim}x{lhs.domain_dim} vs {rhs.codomain_dim}x{rhs.domain_dim}"
            )
        if lhs.matrix == rhs.matrix:
            continue
        col = _first_mismatch(lhs, rhs)
        return CheckItem(name, False, witness_labels(lhs.domain, col))
    return CheckItem(name, True)
