"""Bundle files: a JSON interchange format for spaces, algebras, maps,
crossed-product data, and iteration data.

Document layout (all sections optional, any other top-level key is an error)::

    {
      "spaces":    { name: {"dim": int, "labels": [str, ...]} },
      "algebras":  { name: {"space": str, "mult": matrix, "unit": vector} },
      "maps":      { name: {"domain": [str, ...], "codomain": [str, ...],
                            "matrix": matrix} },
      "crossed":   { name: {"alg": str, "pointed": {"space": str,
                            "point": vector}, "r_map": str, "sigma": str} },
      "iteration": { name: {"left": str, "right": str, "q_map": str} }
    }

Scalars are JSON integers or strings "p/q" with a positive denominator;
floating-point numbers are rejected.  Matrices are dense, row by row.  The
canonical form written by save_bundle orders sections as above, sorts names
within each section, renders each scalar as the shorter of integer or "p/q",
indents by two spaces, and ends with a newline; saving the same graph twice
is byte-identical.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .algebras import Algebra, PointedSpace
from .crossed import CrossedData
from .errors import DimensionMismatch, FormatError, RefError
from .gallery import (
    CrossedInstance,
    InstanceBundle,
    bundled_algebras,
    crossed_bundle,
    iteration_bundle,
)
from .iteration import IterationData
from .linalg import MultiLinMap, Space, embed, map_from_entries
from .dsl import Env

__all__ = [
    "AlgebraEntry",
    "MapEntry",
    "CrossedEntry",
    "IterationEntry",
    "BundleGraph",
    "load_bundle",
    "save_bundle",
    "bundle_text",
    "instance_graph",
    "corpus_graph",
    "env_from_graph",
]


@dataclass(frozen=True)
class AlgebraEntry:
    space: str
    algebra: Algebra


@dataclass(frozen=True)
class MapEntry:
    domain: tuple[str, ...]
    codomain: tuple[str, ...]
    map: MultiLinMap


@dataclass(frozen=True)
class CrossedEntry:
    alg: str
    space: str
    r_map: str
    sigma: str
    data: CrossedData


@dataclass(frozen=True)
class IterationEntry:
    left: str
    right: str
    q_map: str
    data: IterationData


@dataclass
class BundleGraph:
    spaces: dict[str, Space] = field(default_factory=dict)
    algebras: dict[str, AlgebraEntry] = field(default_factory=dict)
    maps: dict[str, MapEntry] = field(default_factory=dict)
    crossed: dict[str, CrossedEntry] = field(default_factory=dict)
    iteration: dict[str, IterationEntry] = field(default_factory=dict)


_SECTIONS = ("spaces", "algebras", "maps", "crossed", "iteration")
_FRACTION_RE = re.compile(r"^-?\d+/\d+$")


# -- decoding ------------------------------------------------------------


def _decode_scalar(x, loc: str, path: str) -> Fraction:
    if type(x) is int:
        return Fraction(x)
    if isinstance(x, float):
        raise FormatError("floating-point scalars are not allowed", loc, path)
    if isinstance(x, str) and _FRACTION_RE.match(x):
        p, _, q = x.partition("/")
        if int(q) == 0:
            raise FormatError(f"zero denominator in scalar {x!r}", loc, path)
        return Fraction(int(p), int(q))
    raise FormatError(f"not a scalar: {x!r}", loc, path)


def _decode_vector(x, loc: str, path: str) -> tuple[Fraction, ...]:
    if not isinstance(x, list):
        raise FormatError("expected a list of scalars", loc, path)
    return tuple(_decode_scalar(v, f"{loc}[{i}]", path) for i, v in enumerate(x))


def _decode_matrix(x, loc: str, path: str) -> tuple[tuple[Fraction, ...], ...]:
    if not isinstance(x, list):
        raise FormatError("expected a list of rows", loc, path)
    return tuple(_decode_vector(row, f"{loc}[{i}]", path) for i, row in enumerate(x))


def _want_dict(x, loc: str, path: str) -> dict:
    if not isinstance(x, dict):
        raise FormatError("expected an object", loc, path)
    return x


def _fields(entry: dict, required: tuple[str, ...], loc: str, path: str) -> list:
    for key in entry:
        if key not in required:
            raise FormatError(f"unknown field {key!r}", loc, path)
    out = []
    for key in required:
        if key not in entry:
            raise FormatError(f"missing field {key!r}", loc, path)
        out.append(entry[key])
    return out


def _resolve(table: dict, name, kind: str, loc: str, path: str):
    if not isinstance(name, str):
        raise FormatError(f"{kind} reference must be a string", loc, path)
    try:
        return table[name]
    except KeyError:
        raise RefError(f"unresolved {kind} name {name!r} at {loc}", name) from None


def _no_duplicates(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise FormatError(f"duplicate key {key!r}")
        seen[key] = value
    return seen


def load_bundle(path) -> BundleGraph:
    path = str(path)
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc.msg}", f"line {exc.lineno}", path) from exc
    except FormatError as exc:
        exc.path = path
        raise
    doc = _want_dict(doc, "top level", path)
    for key in doc:
        if key not in _SECTIONS:
            raise FormatError(f"unknown section {key!r}", "top level", path)
    g = BundleGraph()

    for name, raw in _want_dict(doc.get("spaces", {}), "spaces", path).items():
        loc = f"spaces.{name}"
        dim, labels = _fields(_want_dict(raw, loc, path), ("dim", "labels"), loc, path)
        if type(dim) is not int:
            raise FormatError("dim must be an integer", loc, path)
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise FormatError("labels must be a list of strings", loc, path)
        try:
            g.spaces[name] = Space(dim, tuple(labels))
        except (ValueError, DimensionMismatch) as exc:
            raise FormatError(str(exc), loc, path) from exc

    for name, raw in _want_dict(doc.get("algebras", {}), "algebras", path).items():
        loc = f"algebras.{name}"
        space_name, mult, unit = _fields(
            _want_dict(raw, loc, path), ("space", "mult", "unit"), loc, path
        )
        s = _resolve(g.spaces, space_name, "space", loc, path)
        matrix = _decode_matrix(mult, f"{loc}.mult", path)
        unit_vec = _decode_vector(unit, f"{loc}.unit", path)
        try:
            m = MultiLinMap((s, s), (s,), matrix)
            g.algebras[name] = AlgebraEntry(space_name, Algebra(s, m, unit_vec))
        except (ValueError, DimensionMismatch) as exc:
            raise FormatError(str(exc), loc, path) from exc

    for name, raw in _want_dict(doc.get("maps", {}), "maps", path).items():
        loc = f"maps.{name}"
        domain, codomain, matrix = _fields(
            _want_dict(raw, loc, path), ("domain", "codomain", "matrix"), loc, path
        )
        for side, val in (("domain", domain), ("codomain", codomain)):
            if not isinstance(val, list) or not val:
                raise FormatError(f"{side} must be a non-empty list of space names", loc, path)
        dspaces = tuple(_resolve(g.spaces, n, "space", loc, path) for n in domain)
        cspaces = tuple(_resolve(g.spaces, n, "space", loc, path) for n in codomain)
        rows = _decode_matrix(matrix, f"{loc}.matrix", path)
        try:
            m = MultiLinMap(dspaces, cspaces, rows)
        except (ValueError, DimensionMismatch) as exc:
            raise FormatError(str(exc), loc, path) from exc
        g.maps[name] = MapEntry(tuple(domain), tuple(codomain), m)

    for name, raw in _want_dict(doc.get("crossed", {}), "crossed", path).items():
        loc = f"crossed.{name}"
        alg_name, pointed, r_name, s_name = _fields(
            _want_dict(raw, loc, path), ("alg", "pointed", "r_map", "sigma"), loc, path
        )
        ploc = f"{loc}.pointed"
        space_name, point = _fields(
            _want_dict(pointed, ploc, path), ("space", "point"), ploc, path
        )
        alg = _resolve(g.algebras, alg_name, "algebra", loc, path)
        v = _resolve(g.spaces, space_name, "space", ploc, path)
        r_entry = _resolve(g.maps, r_name, "map", loc, path)
        s_entry = _resolve(g.maps, s_name, "map", loc, path)
        point_vec = _decode_vector(point, f"{ploc}.point", path)
        try:
            data = CrossedData(
                alg.algebra, PointedSpace(v, point_vec), r_entry.map, s_entry.map
            )
        except (ValueError, DimensionMismatch) as exc:
            raise FormatError(str(exc), loc, path) from exc
        g.crossed[name] = CrossedEntry(alg_name, space_name, r_name, s_name, data)

    for name, raw in _want_dict(doc.get("iteration", {}), "iteration", path).items():
        loc = f"iteration.{name}"
        left, right, q_name = _fields(
            _want_dict(raw, loc, path), ("left", "right", "q_map"), loc, path
        )
        left_e = _resolve(g.crossed, left, "crossed", loc, path)
        right_e = _resolve(g.crossed, right, "crossed", loc, path)
        q_entry = _resolve(g.maps, q_name, "map", loc, path)
        try:
            data = IterationData(left_e.data, right_e.data, q_entry.map)
        except (ValueError, DimensionMismatch) as exc:
            raise FormatError(str(exc), loc, path) from exc
        g.iteration[name] = IterationEntry(left, right, q_name, data)

    return g


# -- encoding ------------------------------------------------------------


def _encode_scalar(f: Fraction):
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _encode_matrix(m: MultiLinMap):
    return [[_encode_scalar(x) for x in row] for row in m.matrix]


def bundle_text(g: BundleGraph) -> str:
    doc = {}
    if g.spaces:
        doc["spaces"] = {
            n: {"dim": s.dim, "labels": list(s.labels)} for n, s in sorted(g.spaces.items())
        }
    if g.algebras:
        doc["algebras"] = {
            n: {
                "space": e.space,
                "mult": _encode_matrix(e.algebra.mult),
                "unit": [_encode_scalar(x) for x in e.algebra.unit],
            }
            for n, e in sorted(g.algebras.items())
        }
    if g.maps:
        doc["maps"] = {
            n: {
                "domain": list(e.domain),
                "codomain": list(e.codomain),
                "matrix": _encode_matrix(e.map),
            }
            for n, e in sorted(g.maps.items())
        }
    if g.crossed:
        doc["crossed"] = {
            n: {
                "alg": e.alg,
                "pointed": {
                    "space": e.space,
                    "point": [_encode_scalar(x) for x in e.data.pointed.point],
                },
                "r_map": e.r_map,
                "sigma": e.sigma,
            }
            for n, e in sorted(g.crossed.items())
        }
    if g.iteration:
        doc["iteration"] = {
            n: {"left": e.left, "right": e.right, "q_map": e.q_map}
            for n, e in sorted(g.iteration.items())
        }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def save_bundle(g: BundleGraph, path) -> None:
    Path(path).write_text(bundle_text(g), encoding="utf-8")


# -- graph builders over the instance gallery ----------------------------


def _add_crossed(
    g: BundleGraph,
    entry_name: str,
    data: CrossedData,
    alg_name: str,
    v_name: str,
    r_name: str,
    s_name: str,
) -> None:
    a_space = g.algebras[alg_name].space
    g.spaces.setdefault(v_name, data.pointed.space)
    g.maps[r_name] = MapEntry((v_name, a_space), (a_space, v_name), data.r_map)
    g.maps[s_name] = MapEntry((v_name, v_name), (a_space, v_name), data.sigma)
    g.crossed[entry_name] = CrossedEntry(alg_name, v_name, r_name, s_name, data)


def _add_algebra(g: BundleGraph, name: str, algebra: Algebra, space_name: str) -> None:
    g.spaces[space_name] = algebra.space
    g.algebras[name] = AlgebraEntry(space_name, algebra)


def instance_graph(name: str) -> BundleGraph:
    """Single-instance bundle with short names (A, V, W, R, sigma, P, nu, Q)."""
    g = BundleGraph()
    for inst in crossed_bundle():
        if inst.name == name:
            _add_algebra(g, "A", inst.data.alg, "A")
            _add_crossed(g, name, inst.data, "A", "V", "R", "sigma")
            return g
    for inst in iteration_bundle():
        if inst.name == name:
            d = inst.data
            _add_algebra(g, "A", d.left.alg, "A")
            _add_crossed(g, "left", d.left, "A", "V", "R", "sigma")
            _add_crossed(g, "right", d.right, "A", "W", "P", "nu")
            g.maps["Q"] = MapEntry(("W", "V"), ("V", "W"), d.q_map)
            g.iteration[name] = IterationEntry("left", "right", "Q", d)
            return g
    raise KeyError(name)


def corpus_graph() -> BundleGraph:
    """One bundle holding every gallery instance, all bundled algebras, and a
    few standalone twisting maps for the `check twisting` command."""
    from .crossed import flip_twist
    from .gallery import _algebra, _klein_phi, _sign_duals_twist, action_twist

    g = BundleGraph()
    for n, alg in bundled_algebras():
        _add_algebra(g, n, alg, f"{n}.space")

    for inst in crossed_bundle():
        p = inst.name
        _add_algebra(g, f"{p}.A", inst.data.alg, f"{p}.A")
        _add_crossed(g, p, inst.data, f"{p}.A", f"{p}.V", f"{p}.R", f"{p}.sigma")

    for inst in iteration_bundle():
        p = inst.name
        d = inst.data
        _add_algebra(g, f"{p}.A", d.left.alg, f"{p}.A")
        _add_crossed(g, f"{p}.left", d.left, f"{p}.A", f"{p}.V", f"{p}.R", f"{p}.sigma")
        _add_crossed(g, f"{p}.right", d.right, f"{p}.A", f"{p}.W", f"{p}.P", f"{p}.nu")
        g.maps[f"{p}.Q"] = MapEntry((f"{p}.W", f"{p}.V"), (f"{p}.V", f"{p}.W"), d.q_map)
        g.iteration[p] = IterationEntry(f"{p}.left", f"{p}.right", f"{p}.Q", d)

    sign = _sign_duals_twist()
    g.maps["twist-sign-duals"] = MapEntry(
        ("duals.space", "duals.space"), ("duals.space", "duals.space"), sign.map
    )
    # R(b⊗a) = ε(b)·a⊗1_B collapses along the augmentation of the dual
    # numbers: compatible with both multiplications and with the unit of A,
    # but R(x⊗1_A) = 0 ≠ 1_A⊗x, so exactly unit-A fails
    dsp = g.spaces["duals.space"]
    broken_unit_a = map_from_entries(
        (dsp, dsp), (dsp, dsp), [((ia, 0), (0, ia), 1) for ia in (0, 1)]
    )
    g.maps["twist-broken-unit-a"] = MapEntry(
        ("duals.space", "duals.space"), ("duals.space", "duals.space"), broken_unit_a
    )
    kc2, kc3, klein = _algebra("kc2"), _algebra("kc3"), _algebra("klein")
    flip = flip_twist(kc2, kc3)
    g.maps["twist-flip-kc2-kc3"] = MapEntry(
        ("kc3.space", "kc2.space"), ("kc2.space", "kc3.space"), flip.map
    )
    ids4 = tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4))
    smash = action_twist(klein, kc2, (ids4, _klein_phi()))
    g.maps["twist-smash-klein"] = MapEntry(
        ("kc2.space", "klein.space"), ("klein.space", "kc2.space"), smash.map
    )
    return g


# -- DSL environments ----------------------------------------------------


def env_from_graph(g: BundleGraph) -> Env:
    """Bindings: every map by name, plus mu_<alg> and unit_<alg> for every
    algebra entry (map names shadow these on collision); spaces by name."""
    bindings: dict[str, MultiLinMap] = {}
    for name, entry in g.algebras.items():
        bindings[f"mu_{name}"] = entry.algebra.mult
        bindings[f"unit_{name}"] = embed(entry.algebra.space, entry.algebra.unit)
    for name, entry in g.maps.items():
        bindings[name] = entry.map
    return Env(bindings, dict(g.spaces))
