"""Exact linear algebra over Q for maps between tensor products of based spaces.

Scalars are `fractions.Fraction` values: arithmetic never rounds, and every
stored value is automatically in lowest terms with a positive denominator, so
operator identities can be decided by literal entry equality.

A `MultiLinMap` is a dense matrix together with ordered tuples of domain and
codomain factor spaces.  The basis of a tensor product is ordered row-major:
the flat index of a basis tuple (i1, ..., ik) over factor dims (d1, ..., dk)
is i1*d2*...*dk + i2*d3*...*dk + ... + ik.  Composition only requires equal
total dimensions, so re-associations of the factor split (V⊗W)⊗U vs V⊗(W⊗U)
need no explicit coherence maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from math import prod

from .errors import DimensionMismatch

__all__ = [
    "Space",
    "MultiLinMap",
    "SCALAR_SPACE",
    "scalar",
    "vector",
    "vec_kron",
    "tensor_space",
    "flatten",
    "unflatten",
    "make_map",
    "map_from_entries",
    "identity",
    "kron",
    "kron_all",
    "compose",
    "compose_all",
    "swap",
    "apply",
    "maps_equal",
    "refactor",
    "embed",
    "scale_map",
    "basis_expansion",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def scalar(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact rational.

    Floats are rejected outright: silently converting binary floating point
    would smuggle rounding into a library whose whole point is exactness.
    """
    if isinstance(value, float):
        raise TypeError(f"floating-point scalar {value!r} is not allowed; use Fraction or 'p/q'")
    return Fraction(value)


def vector(entries) -> tuple[Fraction, ...]:
    """Coerce a sequence of scalar-likes to a tuple of Fractions."""
    return tuple(scalar(x) for x in entries)


def vec_kron(u: tuple[Fraction, ...], v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Tensor product of two coordinate vectors, row-major."""
    return tuple(a * b for a in u for b in v)


@dataclass(frozen=True)
class Space:
    """A finite-dimensional based vector space: a dimension plus basis labels."""

    dim: int
    labels: tuple[str, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"space dimension must be >= 1, got {self.dim}")
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.dim:
            raise ValueError(f"expected {self.dim} labels, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be distinct")

    @staticmethod
    def of_dim(n: int, prefix: str = "e") -> "Space":
        return Space(n, tuple(f"{prefix}{i}" for i in range(n)))


SCALAR_SPACE = Space(1, ("1",))


def tensor_space(*spaces: Space, sep: str = "⊗") -> Space:
    """The tensor product space, with labels joined factorwise by `sep`."""
    if not spaces:
        return SCALAR_SPACE
    dims = [s.dim for s in spaces]
    labels = tuple(sep.join(parts) for parts in itertools.product(*(s.labels for s in spaces)))
    return Space(prod(dims), labels)


def flatten(index: tuple[int, ...], dims: tuple[int, ...]) -> int:
    """Row-major flat index of a multi-index."""
    if len(index) != len(dims):
        raise ValueError(f"index length {len(index)} != number of factors {len(dims)}")
    flat = 0
    for i, d in zip(index, dims):
        if not 0 <= i < d:
            raise ValueError(f"index component {i} out of range for dim {d}")
        flat = flat * d + i
    return flat


def unflatten(flat: int, dims: tuple[int, ...]) -> tuple[int, ...]:
    """Inverse of `flatten`."""
    total = prod(dims)
    if not 0 <= flat < total:
        raise ValueError(f"flat index {flat} out of range for dims {dims}")
    out = []
    for d in reversed(dims):
        out.append(flat % d)
        flat //= d
    return tuple(reversed(out))


@dataclass(frozen=True)
class MultiLinMap:
    """A linear map between tensor products of based spaces, as a dense matrix.

    `matrix[r][c]` is the coefficient of the r-th codomain basis vector in the
    image of the c-th domain basis vector, both indexed row-major over the
    factor lists.
    """

    domain: tuple[Space, ...]
    codomain: tuple[Space, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "codomain", tuple(self.codomain))
        rows, cols = self.codomain_dim, self.domain_dim
        if len(self.matrix) != rows:
            raise DimensionMismatch(f"matrix has {len(self.matrix)} rows, codomain dim is {rows}")
        for r in self.matrix:
            if len(r) != cols:
                raise DimensionMismatch(f"matrix row has {len(r)} entries, domain dim is {cols}")

    @property
    def domain_dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.domain)

    @property
    def codomain_dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.codomain)

    @property
    def domain_dim(self) -> int:
        return prod(self.domain_dims)

    @property
    def codomain_dim(self) -> int:
        return prod(self.codomain_dims)


def make_map(domain, codomain, rows) -> MultiLinMap:
    """Build a map from any nested sequence of scalar-likes, canonicalizing entries."""
    frozen = tuple(tuple(scalar(x) for x in row) for row in rows)
    return MultiLinMap(tuple(domain), tuple(codomain), frozen)


def map_from_entries(domain, codomain, entries) -> MultiLinMap:
    """Build a map from sparse (codomain multi-index, domain multi-index, value) triples.

    Later triples overwrite earlier ones at the same position.
    """
    domain = tuple(domain)
    codomain = tuple(codomain)
    ddims = tuple(s.dim for s in domain)
    cdims = tuple(s.dim for s in codomain)
    grid = [[_ZERO] * prod(ddims) for _ in range(prod(cdims))]
    for row_idx, col_idx, value in entries:
        grid[flatten(tuple(row_idx), cdims)][flatten(tuple(col_idx), ddims)] = scalar(value)
    return MultiLinMap(domain, codomain, tuple(tuple(r) for r in grid))


def identity(*spaces: Space) -> MultiLinMap:
    n = prod(s.dim for s in spaces)
    rows = tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))
    return MultiLinMap(tuple(spaces), tuple(spaces), rows)


def kron(f: MultiLinMap, g: MultiLinMap) -> MultiLinMap:
    """Kronecker (tensor) product f⊗g; factor lists concatenate."""
    g_rows, g_cols = g.codomain_dim, g.domain_dim
    zeros = (_ZERO,) * g_cols
    rows = []
    for frow in f.matrix:
        for grow in g.matrix:
            row: list[Fraction] = []
            for a in frow:
                if a:
                    row.extend(a * b for b in grow)
                else:
                    row.extend(zeros)
            rows.append(tuple(row))
    return MultiLinMap(f.domain + g.domain, f.codomain + g.codomain, tuple(rows))


def kron_all(*maps: MultiLinMap) -> MultiLinMap:
    if not maps:
        raise ValueError("kron_all needs at least one map")
    out = maps[0]
    for m in maps[1:]:
        out = kron(out, m)
    return out


def compose(f: MultiLinMap, g: MultiLinMap) -> MultiLinMap:
    """f∘g.  Requires only equal total dims: g's codomain factor split is
    discarded in favor of f's domain (re-association is the identity matrix)."""
    if f.domain_dim != g.codomain_dim:
        raise DimensionMismatch(
            f"cannot compose: left map expects total dim {f.domain_dim}, "
            f"right map produces {g.codomain_dim}"
        )
    g_cols = g.domain_dim
    out = []
    for frow in f.matrix:
        acc = [_ZERO] * g_cols
        for k, a in enumerate(frow):
            if a:
                for j, b in enumerate(g.matrix[k]):
                    if b:
                        acc[j] += a * b
        out.append(tuple(acc))
    return MultiLinMap(g.domain, f.codomain, tuple(out))


def compose_all(*maps: MultiLinMap) -> MultiLinMap:
    if not maps:
        raise ValueError("compose_all needs at least one map")
    out = maps[0]
    for m in maps[1:]:
        out = compose(out, m)
    return out


def swap(m, n) -> MultiLinMap:
    """The flip V⊗W -> W⊗V sending e_i⊗e_j to e_j⊗e_i.

    Arguments may be `Space`s or plain dimensions (which get default labels).
    """
    sm = m if isinstance(m, Space) else Space.of_dim(m)
    sn = n if isinstance(n, Space) else Space.of_dim(n)
    dm, dn = sm.dim, sn.dim
    grid = [[_ZERO] * (dm * dn) for _ in range(dm * dn)]
    for i in range(dm):
        for j in range(dn):
            grid[j * dm + i][i * dn + j] = _ONE
    return MultiLinMap((sm, sn), (sn, sm), tuple(tuple(r) for r in grid))


def apply(f: MultiLinMap, v) -> tuple[Fraction, ...]:
    """Apply f to a coordinate vector over its domain basis."""
    vec = vector(v)
    if len(vec) != f.domain_dim:
        raise DimensionMismatch(f"vector has length {len(vec)}, map domain dim is {f.domain_dim}")
    support = [(c, x) for c, x in enumerate(vec) if x]
    return tuple(sum((row[c] * x for c, x in support), _ZERO) for row in f.matrix)


def maps_equal(f: MultiLinMap, g: MultiLinMap) -> bool:
    """Entrywise equality under the trivial identification: only the total
    domain/codomain dims must agree, not the factor splits."""
    return (
        f.domain_dim == g.domain_dim
        and f.codomain_dim == g.codomain_dim
        and f.matrix == g.matrix
    )


def refactor(f: MultiLinMap, domain=None, codomain=None) -> MultiLinMap:
    """Reinterpret the factor split of domain and/or codomain.

    The matrix is unchanged; the new factor lists must have the same total
    dimension.  This realizes V⊗(W⊗U) = (V⊗W)⊗U = V⊗W⊗U and the unit
    isomorphisms k⊗V = V = V⊗k, all of which are the identity matrix under
    row-major indexing.
    """
    new_domain = tuple(domain) if domain is not None else f.domain
    new_codomain = tuple(codomain) if codomain is not None else f.codomain
    if prod(s.dim for s in new_domain) != f.domain_dim:
        raise DimensionMismatch("refactor: new domain has a different total dimension")
    if prod(s.dim for s in new_codomain) != f.codomain_dim:
        raise DimensionMismatch("refactor: new codomain has a different total dimension")
    return replace(f, domain=new_domain, codomain=new_codomain)


def embed(space: Space, point) -> MultiLinMap:
    """The map k -> space sending 1 to the given coordinate vector."""
    col = vector(point)
    if len(col) != space.dim:
        raise DimensionMismatch(f"point has length {len(col)}, space dim is {space.dim}")
    return MultiLinMap((SCALAR_SPACE,), (space,), tuple((x,) for x in col))


def scale_map(f: MultiLinMap, value) -> MultiLinMap:
    k = scalar(value)
    return replace(f, matrix=tuple(tuple(k * x for x in row) for row in f.matrix))


def basis_expansion(f: MultiLinMap):
    """Sparse view: maps each domain multi-index to its list of
    (codomain multi-index, coefficient) terms.  Used by the coordinatewise
    (Sweedler-style) evaluators, which deliberately avoid kron/compose."""
    ddims, cdims = f.domain_dims, f.codomain_dims
    out = {}
    for c in range(f.domain_dim):
        terms = []
        for r in range(f.codomain_dim):
            x = f.matrix[r][c]
            if x:
                terms.append((unflatten(r, cdims), x))
        out[unflatten(c, ddims)] = terms
    return out
