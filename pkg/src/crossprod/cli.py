"""Command-line interface.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
input error.  Check output is line-oriented: one ``ITEM <name>: PASS`` or
``ITEM <name>: FAIL at (<basis labels>)`` line per check item.
"""

from __future__ import annotations

import argparse
import sys

from .bundle import (
    BundleGraph,
    corpus_graph,
    env_from_graph,
    instance_graph,
    load_bundle,
    save_bundle,
    _encode_scalar,
)
from .crossed import TwistingMap, build_crossed_algebra, check_crossed_axioms, check_twisting_map
from .dsl import eval_expr, parse
from .errors import (
    AxiomViolation,
    CrossprodError,
    DimensionMismatch,
    FormatError,
    ParseError,
    RefError,
    UnboundName,
)
from .gallery import crossed_bundle, iteration_bundle
from .iteration import check_hypotheses, iterate_left, iterate_right, verify_theorem

__all__ = ["run_command", "main"]


class _Usage(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crossprod", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run one family of axiom checks")
    check_sub = check.add_subparsers(dest="what", required=True)
    for what, help_text in (
        ("twisting", "unit and multiplication compatibility of a twisting map"),
        ("crossed", "the five crossed-product axioms"),
        ("hypotheses", "the four iteration hypotheses"),
    ):
        cp = check_sub.add_parser(what, help=help_text)
        cp.add_argument("file")
        cp.add_argument("name")

    build = sub.add_parser("build", help="build an algebra and write it to a bundle")
    build_sub = build.add_subparsers(dest="what", required=True)
    for what in ("crossed", "iterated"):
        bp = build_sub.add_parser(what)
        bp.add_argument("file")
        bp.add_argument("name")
        bp.add_argument("-o", "--output", required=True)
        bp.add_argument("--unchecked", action="store_true")

    verify = sub.add_parser("verify", help="full iteration certificate")
    verify_sub = verify.add_subparsers(dest="what", required=True)
    vp = verify_sub.add_parser("theorem")
    vp.add_argument("file")
    vp.add_argument("name")

    examples = sub.add_parser("examples", help="bundled instance gallery")
    examples_sub = examples.add_subparsers(dest="what", required=True)
    examples_sub.add_parser("list")
    ep = examples_sub.add_parser("emit")
    ep.add_argument("name")
    ep.add_argument("-o", "--output", required=True)
    cp = examples_sub.add_parser("corpus")
    cp.add_argument("-o", "--output", required=True)

    ev = sub.add_parser("eval", help="evaluate a map expression")
    ev.add_argument("expr")
    ev.add_argument("--env", default=None)

    return p


def _pick(table: dict, name: str, kind: str):
    try:
        return table[name]
    except KeyError:
        raise _Usage(f"no {kind} named {name!r} in the bundle") from None


def _algebra_on(g: BundleGraph, space_name: str):
    matches = [e for e in g.algebras.values() if e.space == space_name]
    if len(matches) != 1:
        raise _Usage(
            f"{len(matches)} bundled algebras live on space {space_name!r}; need exactly one"
        )
    return matches[0].algebra


def _cmd_check(args) -> int:
    g = load_bundle(args.file)
    if args.what == "twisting":
        entry = _pick(g.maps, args.name, "map")
        if len(entry.domain) != 2:
            raise _Usage(f"map {args.name!r} does not have a two-factor domain")
        b = _algebra_on(g, entry.domain[0])
        a = _algebra_on(g, entry.domain[1])
        report = check_twisting_map(TwistingMap(b, a, entry.map))
    elif args.what == "crossed":
        report = check_crossed_axioms(_pick(g.crossed, args.name, "crossed datum").data)
    else:
        report = check_hypotheses(_pick(g.iteration, args.name, "iteration datum").data)
    for line in report.lines():
        print(line)
    return 0 if report.passed else 1


def _cmd_build(args) -> int:
    from .bundle import AlgebraEntry

    g = load_bundle(args.file)
    out = BundleGraph()
    if args.what == "crossed":
        data = _pick(g.crossed, args.name, "crossed datum").data
        if not args.unchecked:
            report = check_crossed_axioms(data)
            for line in report.lines():
                print(line)
            if not report.passed:
                return 1
        built = build_crossed_algebra(data, unchecked=True)
        out.spaces[f"{args.name}.space"] = built.space
        out.algebras[args.name] = AlgebraEntry(f"{args.name}.space", built)
    else:
        data = _pick(g.iteration, args.name, "iteration datum").data
        if not args.unchecked:
            cert = verify_theorem(data)
            for line in cert.lines():
                print(line)
            if not cert.passed:
                return 1
        left = iterate_left(data, unchecked=True)
        right = iterate_right(data, unchecked=True)
        for tag, alg in (("left", left), ("right", right)):
            out.spaces[f"{args.name}.{tag}.space"] = alg.space
            out.algebras[f"{args.name}.{tag}"] = AlgebraEntry(f"{args.name}.{tag}.space", alg)
    save_bundle(out, args.output)
    return 0


def _cmd_verify(args) -> int:
    g = load_bundle(args.file)
    cert = verify_theorem(_pick(g.iteration, args.name, "iteration datum").data)
    for line in cert.lines():
        print(line)
    return 0 if cert.passed else 1


def _cmd_examples(args) -> int:
    if args.what == "list":
        for inst in crossed_bundle():
            status = "ok" if inst.fails_at is None else f"fails-at={inst.fails_at}"
            print(f"{inst.name}\tcrossed\t{status}")
        for inst in iteration_bundle():
            status = "ok" if inst.fails_at is None else f"fails-at={inst.fails_at}"
            print(f"{inst.name}\titeration\t{status}")
        return 0
    if args.what == "corpus":
        save_bundle(corpus_graph(), args.output)
        return 0
    try:
        g = instance_graph(args.name)
    except KeyError:
        raise _Usage(f"no bundled instance named {args.name!r}") from None
    save_bundle(g, args.output)
    return 0


def _cmd_eval(args) -> int:
    from .dsl import Env

    env = env_from_graph(load_bundle(args.env)) if args.env else Env({}, {})
    result = eval_expr(parse(args.expr), env)
    print(f"dims: {result.domain_dims} -> {result.codomain_dims}")
    for row in result.matrix:
        print(" ".join(str(_encode_scalar(x)) for x in row))
    return 0


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return 0 if code == 0 else 2
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "build":
            return _cmd_build(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "examples":
            return _cmd_examples(args)
        return _cmd_eval(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AxiomViolation as exc:
        if exc.report is not None:
            for line in exc.report.lines():
                print(line)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, UnboundName) as exc:
        extra = f" at byte {exc.offset}" if isinstance(exc, ParseError) else ""
        print(f"error: {exc}{extra}", file=sys.stderr)
        return 2
    except FormatError as exc:
        where = f" [{exc.path}: {exc.location}]" if exc.path or exc.location else ""
        print(f"error: {exc}{where}", file=sys.stderr)
        return 2
    except (RefError, DimensionMismatch, CrossprodError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
