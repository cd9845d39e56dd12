"""Command line front end: ``coronake <command> ...``.

Exit status is 0 on success, 1 when a check disagrees or a size bound is
hit, and 2 on unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .classify import classify_corona, kappa_direct, ke_label
from .corona import build_corona, fast_alpha, fast_kappa, fast_mu, read_corona_spec, to_dot
from .graph import SizeLimitError
from .graph6 import Graph6Error, content_lines, format_token, parse_token, read_catalog
from .harness import (
    bench_theorem_vs_direct,
    default_catalog,
    format_bench,
    iter_search,
    verify_lemma3,
    verify_theorems,
)
from .independence import MAX_DIRECT_VERTICES, brute_force_alpha, independence_number
from .matching import brute_force_mu, matching_number


class InputError(Exception):
    pass


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None


def _read_graph(source: str):
    lines = content_lines(_read(source))
    if not lines:
        raise InputError("no graph6 line found")
    try:
        return parse_token(lines[0])
    except Graph6Error as exc:
        raise InputError(f"graph6 {exc.kind} error: {exc}") from None


def _read_spec(source: str):
    try:
        return read_corona_spec(_read(source))
    except Graph6Error as exc:
        raise InputError(f"graph6 {exc.kind} error: {exc}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _catalog(source: str | None):
    if source is None:
        return default_catalog()
    try:
        return read_catalog(_read(source))
    except Graph6Error as exc:
        raise InputError(f"catalog graph6 {exc.kind} error: {exc}") from None


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.source)
    alpha = independence_number(g)
    mu = matching_number(g)
    kappa = g.n - alpha - mu
    for key, value in (("n", g.n), ("m", g.m), ("alpha", alpha), ("mu", mu), ("kappa", kappa)):
        print(f"{key}={value}")
    print(f"class={ke_label(kappa)}")
    return 0


def cmd_corona(args: argparse.Namespace) -> int:
    spec = _read_spec(args.specfile)
    corona = build_corona(spec)
    if args.emit == "dot":
        sys.stdout.write(to_dot(corona))
    else:
        print(format_token(corona.graph))
    if args.analyze:
        alpha, mu, kappa = fast_alpha(spec), fast_mu(spec), fast_kappa(spec)
        print(f"n={spec.order}")
        print(f"fast_alpha={alpha}")
        print(f"fast_mu={mu}")
        print(f"fast_kappa={kappa}")
        if corona.graph.n <= MAX_DIRECT_VERTICES:
            d_alpha = independence_number(corona.graph)
            d_mu = matching_number(corona.graph)
            agree = (d_alpha, d_mu) == (alpha, mu)
            print(f"direct_alpha={d_alpha}")
            print(f"direct_mu={d_mu}")
            print(f"direct_kappa={corona.graph.n - d_alpha - d_mu}")
            print(f"agree={'yes' if agree else 'no'}")
            if not agree:
                return 1
        else:
            print("direct=skipped")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    spec = _read_spec(args.specfile)
    if args.method in ("theorem", "direct"):
        print("\n".join(classify_corona(spec, args.method).lines()))
        return 0
    report = classify_corona(spec, "theorem")
    print("\n".join(report.lines()))
    direct = kappa_direct(build_corona(spec).graph)
    agree = direct == report.kappa
    print(f"direct_kappa={direct}")
    print(f"agree={'yes' if agree else 'no'}")
    return 0 if agree else 1


def cmd_verify(args: argparse.Namespace) -> int:
    if args.seed is not None and args.sample is None:
        raise InputError("--seed requires --sample")
    report = verify_theorems(args.max_h, _catalog(args.catalog), sample=args.sample, seed=args.seed or 0)
    lemma = verify_lemma3()
    sys.stdout.write(report.to_text())
    sys.stdout.write(lemma.to_text())
    return 0 if report.passed and lemma.passed else 1


def cmd_search(args: argparse.Namespace) -> int:
    count = 0
    for hit in iter_search(args.kappa, args.max_h, _catalog(args.catalog)):
        print(hit.line())
        count += 1
        if args.limit is not None and count >= args.limit:
            break
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.source)
    alpha, mu = brute_force_alpha(g), brute_force_mu(g)
    for key, value in (("n", g.n), ("m", g.m), ("alpha", alpha), ("mu", mu), ("kappa", g.n - alpha - mu)):
        print(f"{key}={value}")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    except ValueError:
        raise InputError(f"--sizes expects a comma separated list of integers, got {args.sizes!r}") from None
    rows = bench_theorem_vs_direct(sizes)
    sys.stdout.write(format_bench(rows))
    return 0 if all(r.agree is not False for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coronake", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="alpha, mu and deficiency of one graph6 graph")
    p.add_argument("source", help="file holding one graph6 line, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("corona", help="build a corona from a spec file")
    p.add_argument("specfile")
    p.add_argument("--emit", choices=("graph6", "dot"), default="graph6")
    p.add_argument("--analyze", action="store_true", help="append closed-form and direct invariants")
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("classify", help="classify a corona by theorem, directly, or both")
    p.add_argument("specfile")
    p.add_argument("--method", choices=("theorem", "direct", "both"), default="theorem")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check every theorem against direct computation")
    p.add_argument("--max-h", type=int, required=True)
    p.add_argument("--catalog")
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="list coronas with a given deficiency")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--max-h", type=int, required=True)
    p.add_argument("--catalog")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("oracle", help="brute-force alpha and mu")
    p.add_argument("source")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="closed form versus direct solve on P_s o K2")
    p.add_argument("--sizes", required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
