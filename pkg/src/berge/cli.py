"""Command-line entry point.

JSON goes to stdout and human-readable tables to stderr. Exit codes:
0 computed, 1 property violated, 2 input error, 3 resource cap refusal.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import patterns
from .bounds import format_report, threshold_report
from .construct import (admissible_blowup_construction, c4_construction, clique_blowup_construction,
                        linear_construction, projective_incidence_graph, rpartite_construction,
                        verify_claims)
from .core import Graph, Hypergraph
from .detect import BergeCertificate, contains_berge, count_f_copies_in_shadow, verify_certificate
from .embed import ResourceExhausted
from .invariants import DEFAULT_RAMSEY_BUDGET, DEFAULT_RAMSEY_NMAX, default_threads, ramsey_number
from .oracle import MODES, CapExceeded, ResultCache, search

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _read_json(path: str | None) -> dict:
    try:
        if path is None or path == "-":
            return json.loads(sys.stdin.read())
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path or 'stdin'}: {exc}") from None


def load_pattern(spec: str) -> Graph:
    if os.path.exists(spec):
        return Graph.from_dict(_read_json(spec))
    return patterns.by_name(spec)


def _ints(text: str | None) -> list[int] | None:
    if text is None:
        return None
    return [int(x) for x in text.split(",") if x.strip()]


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_construct(args) -> int:
    name = args.name.replace("-", "_")
    factors = _ints(args.factors)
    if name == "linear":
        cons = linear_construction(args.n, args.r)
    elif name == "clique_blowup":
        cons = clique_blowup_construction(args.n, args.s, args.r, factors)
    elif name == "admissible_blowup":
        cons = admissible_blowup_construction(args.n, args.c, args.t, args.r, factors)
    elif name == "rpartite":
        cons = rpartite_construction(args.n, args.r)
    elif name == "c4":
        base = Graph.from_dict(_read_json(args.base)) if args.base else projective_incidence_graph(args.q)
        cons = c4_construction(base, args.i, args.j)
    else:
        raise InputError(f"unknown construction {args.name!r}")
    _emit(cons.to_dict())
    if args.verify:
        results = verify_claims(cons)
        for claim, ok in results.items():
            print(f"{'ok  ' if ok else 'FAIL'} {claim}", file=sys.stderr)
        if not all(results.values()):
            return EXIT_VIOLATED
    return EXIT_OK


def cmd_check(args) -> int:
    host = Hypergraph.from_dict(_read_json(args.host))
    cert = contains_berge(host, load_pattern(args.pattern), args.node_limit)
    if cert is None:
        print("FREE")
    else:
        _emit(cert.to_dict())
    return EXIT_OK


def cmd_count(args) -> int:
    host = Hypergraph.from_dict(_read_json(args.host))
    _emit({"count": count_f_copies_in_shadow(host, load_pattern(args.pattern))})
    return EXIT_OK


def cmd_verify(args) -> int:
    host = Hypergraph.from_dict(_read_json(args.host))
    cert = BergeCertificate.from_dict(_read_json(args.cert))
    ok = verify_certificate(host, load_pattern(args.pattern), cert)
    print("VALID" if ok else "INVALID")
    return EXIT_OK if ok else EXIT_VIOLATED


def cmd_bounds(args) -> int:
    rep = threshold_report(load_pattern(args.pattern), args.ramsey_nmax, args.ramsey_budget,
                           args.threads)
    _emit(rep.to_dict())
    print(format_report(rep), file=sys.stderr)
    return EXIT_OK


def cmd_ramsey(args) -> int:
    res = ramsey_number(load_pattern(args.g1), load_pattern(args.g2), args.nmax, args.budget,
                        args.threads)
    _emit(res.to_dict())
    return EXIT_OK


def _n_values(text: str) -> list[int]:
    if ":" in text:
        lo, hi = (int(x) for x in text.split(":"))
        return list(range(lo, hi + 1))
    return [int(text)]


def cmd_search(args) -> int:
    pattern = load_pattern(args.pattern)
    cache = None if args.no_cache else ResultCache()
    results = [search(args.mode, n, args.r, pattern, cap=args.cap, cache=cache)
               for n in _n_values(args.n)]
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "r", "pattern", "mode", "value"])
        for res in results:
            w.writerow([res.n, res.r, args.pattern, res.mode, res.value])
    elif len(results) == 1:
        _emit(results[0].to_dict())
    else:
        _emit([res.to_dict() for res in results])
    for res in results:
        print(f"n={res.n} r={res.r} {res.mode}: {res.value} "
              f"({res.nodes_explored} nodes, {res.elapsed:.3f}s)", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="berge", description="Berge-F extremal toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a construction as hypergraph JSON with claims")
    c.add_argument("name", help="linear | clique-blowup | admissible-blowup | rpartite | c4")
    c.add_argument("--n", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--s", type=int, help="clique size (clique-blowup)")
    c.add_argument("--c", type=int, help="chromatic target (admissible-blowup)")
    c.add_argument("--t", type=int, help="block size (admissible-blowup)")
    c.add_argument("--factors", help="comma-separated class blowup factors")
    c.add_argument("--q", type=int, default=2, help="projective plane order for the c4 base")
    c.add_argument("--base", help="bipartite C4-free base graph JSON for c4")
    c.add_argument("--i", type=int, default=2)
    c.add_argument("--j", type=int, default=2)
    c.add_argument("--verify", action="store_true", help="check the claims with the detector")
    c.set_defaults(func=cmd_construct)

    for name, func, text in (("check", cmd_check, "find a Berge copy or print FREE"),
                             ("count", cmd_count, "count pattern copies in the shadow")):
        s = sub.add_parser(name, help=text)
        s.add_argument("--host", help="hypergraph JSON (default: stdin)")
        s.add_argument("--pattern", required=True, help="builtin name or graph JSON file")
        if name == "check":
            s.add_argument("--node-limit", type=int)
        s.set_defaults(func=func)

    v = sub.add_parser("verify", help="re-check a Berge certificate")
    v.add_argument("--host", required=True)
    v.add_argument("--pattern", required=True)
    v.add_argument("--cert", required=True)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="threshold bounds report")
    b.add_argument("--pattern", required=True)
    b.add_argument("--ramsey-nmax", type=int, default=DEFAULT_RAMSEY_NMAX)
    b.add_argument("--ramsey-budget", type=int, default=DEFAULT_RAMSEY_BUDGET)
    b.add_argument("--threads", type=int, default=default_threads())
    b.set_defaults(func=cmd_bounds)

    r = sub.add_parser("ramsey", help="exact two-colour Ramsey number by exhaustive search")
    r.add_argument("--g1", required=True)
    r.add_argument("--g2", required=True)
    r.add_argument("--nmax", type=int, default=DEFAULT_RAMSEY_NMAX)
    r.add_argument("--budget", type=int, default=DEFAULT_RAMSEY_BUDGET)
    r.add_argument("--threads", type=int, default=default_threads())
    r.set_defaults(func=cmd_ramsey)

    s = sub.add_parser("search", help="exact extremal number at small n")
    s.add_argument("--mode", choices=MODES, required=True)
    s.add_argument("--n", required=True, help="n or an inclusive range lo:hi")
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--pattern", required=True)
    s.add_argument("--cap", type=int, help="override the default size cap")
    s.add_argument("--csv", action="store_true", help="emit an (n, value) CSV table")
    s.add_argument("--no-cache", action="store_true")
    s.set_defaults(func=cmd_search)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ResourceExhausted, CapExceeded) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
