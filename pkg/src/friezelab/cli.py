"""Command-line interface.

Every subcommand reads quivers and representations from JSON files and
emits either a human-readable report or, with --json, a single JSON object
whose integer payloads are decimal strings (frieze entries overflow 64 bits
quickly).  Module errors exit with status 1 and a machine-readable error
object; usage errors exit with status 2.

FRIEZELAB_THREADS is accepted as an upper bound on internal parallelism;
the current implementation computes everything in one thread, which
trivially respects any cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cc import cc_map, growth_via_homogeneous, homogeneous_powers, quiddity_from_tube
from .errors import FriezelabError
from .frieze import FriezePattern, Quiddity, generate, growth
from .modular import apply_generator_word, GENERATORS
from .quivers import Quiver, has_double_arrow, mutation_class_search
from .rep import (DEFAULT_PRIMES, QuiverRep, count_points,
                  euler_characteristic, grassmannian_table)
from .reproduce import run_checks
from .seeds import Seed
from .theta import double_arrow_seed, theta, theta_invariance


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got %r" % text)
    return value


def _quiddity(text: str) -> Quiddity:
    try:
        entries = [int(x) for x in text.split(",") if x != ""]
        return Quiddity(entries)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _primes(text: str) -> tuple[int, ...]:
    values = tuple(int(x) for x in text.split(","))
    for p in values:
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise argparse.ArgumentTypeError("%d is not prime" % p)
    return values


def _dimvec(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _load_json_file(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load_quiver(path: str) -> Quiver:
    return Quiver.from_json(_load_json_file(path))


def _load_rep(path: str) -> QuiverRep:
    return QuiverRep.from_json(_load_json_file(path))


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _seed_json(seed: Seed) -> dict:
    return {"quiver": seed.quiver.to_json(),
            "vars": [v.to_json() for v in seed.vars]}


def describe_quiver(quiver: Quiver) -> str:
    parts = []
    for i in range(quiver.m):
        for j in range(quiver.m):
            if quiver.b[i][j] > 0:
                arrow = "=>" if quiver.b[i][j] == 2 else "->"
                parts.append("%s%s%s" % (quiver.labels[i], arrow, quiver.labels[j]))
    return " ".join(parts)


def render_frieze(pattern: FriezePattern, periods: int | None = None) -> str:
    """The staggered layout: 0's, 1's, then the computed rows."""
    n = pattern.period
    if periods is None:
        periods = max(2, 6 // n + 1)
    rows = {r: pattern.row(r) * periods for r in range(-1, pattern.depth + 1)}
    width = max(len(str(v)) for vals in rows.values() for v in vals) + 2
    if width % 2:
        width += 1
    lines = []
    for r in range(-1, pattern.depth + 1):
        offset = " " * (width // 2) if (r % 2 == 0) else ""
        lines.append(offset + "".join(str(v).center(width) for v in rows[r]).rstrip())
    return "\n".join(lines)


# -- subcommand handlers -------------------------------------------------------


def cmd_frieze(args) -> int:
    quiddity = args.quiddity
    depth = args.depth if args.depth is not None else 3 * len(quiddity) + 1
    pattern = generate(quiddity, depth)
    growth_report = {}
    if args.growth:
        for k in range(1, args.growth + 1):
            growth_report[str(k)] = str(growth(pattern, k))
    if args.json:
        payload = {"quiddity": [str(a) for a in quiddity],
                   "rows": [[str(x) for x in pattern.row(r)] for r in range(1, depth + 1)]}
        if growth_report:
            payload["growth"] = growth_report
        _emit(payload)
    else:
        print(render_frieze(pattern))
        for k, value in growth_report.items():
            print("s_%s = %s" % (k, value))
    return 0


def cmd_mutate(args) -> int:
    quiver = _load_quiver(args.quiver)
    word = [quiver.index(l) for l in args.word.split(",") if l != ""]
    if args.seed:
        seed = Seed.initial(quiver).mutate_word(word)
        if args.json:
            _emit(_seed_json(seed))
        else:
            print("quiver:", describe_quiver(seed.quiver))
            for label, var in zip(seed.quiver.labels, seed.vars):
                print("x[%s] = %s" % (label, var))
    else:
        mutated = quiver.mutate_word(word)
        if args.json:
            _emit(mutated.to_json())
        else:
            print("quiver:", describe_quiver(mutated))
            print(json.dumps(mutated.to_json(), sort_keys=True))
    return 0


def cmd_search(args) -> int:
    quiver = _load_quiver(args.quiver)
    if args.find != "double-arrow":
        raise argparse.ArgumentTypeError("unknown search target %r" % args.find)
    found, word = mutation_class_search(quiver, has_double_arrow, args.max_nodes)
    payload = {"quiver": found.to_json(),
               "word": [quiver.labels[k] for k in word.sequence]}
    if args.json:
        _emit(payload)
    else:
        print("word:", ",".join(payload["word"]) or "(empty)")
        print("quiver:", describe_quiver(found))
        print(json.dumps(found.to_json(), sort_keys=True))
    return 0


def cmd_modular(args) -> int:
    quiver = _load_quiver(args.quiver)
    seed = Seed.initial(quiver)
    status = 0
    lines = []
    if args.word:
        names = [w.strip() for w in args.word.split(",") if w.strip()]
        for name in names:
            if name not in GENERATORS:
                raise argparse.ArgumentTypeError("unknown generator %r" % name)
        moved = apply_generator_word(seed, names)
        if args.json and not args.check_relations:
            _emit(_seed_json(moved))
        elif not args.json:
            lines.append("applied %s" % ",".join(names))
            for label, var in zip(moved.quiver.labels, moved.vars):
                lines.append("x[%s] = %s" % (label, var))
    if args.check_relations:
        n = quiver.m - 1
        powers = {6: 3, 7: 4, 8: 5}[n]
        a2 = apply_generator_word(seed, ["ta"] * 2)
        b3 = apply_generator_word(seed, ["tb"] * 3)
        ck = apply_generator_word(seed, ["tc"] * powers)
        relations = {"ta^2 == tb^3": a2 == b3, "tb^3 == tc^%d" % powers: b3 == ck}
        if n == 6:
            relations["gamma^2 == id"] = apply_generator_word(seed, ["gamma", "gamma"]) == seed
            relations["gamma*ta == ta*gamma"] = (
                apply_generator_word(seed, ["gamma", "ta"])
                == apply_generator_word(seed, ["ta", "gamma"]))
        if not all(relations.values()):
            status = 1
        if args.json:
            _emit({"relations": {k: bool(v) for k, v in relations.items()}})
        else:
            for k, v in relations.items():
                lines.append("%s: %s" % (k, "ok" if v else "FAIL"))
    for line in lines:
        print(line)
    return status


def cmd_theta(args) -> int:
    quiver = _load_quiver(args.quiver)
    if quiver.double_arrows():
        seed = Seed.initial(quiver)
        u, v = quiver.double_arrows()[0]
        word = []
    else:
        seed, (u, v), mutation_word = double_arrow_seed(quiver, args.max_nodes)
        word = [quiver.labels[k] for k in mutation_word.sequence]
    value = theta(seed, u, v)
    invariance = None
    if args.invariance_words:
        words = []
        for chunk in args.invariance_words.split(";"):
            chunk = chunk.strip()
            if chunk:
                words.append([seed.quiver.index(l) for l in chunk.split(",")])
        invariance = theta_invariance(seed, words)
    if args.at_ones and not args.json:
        print(value.integer)
    elif args.json:
        payload = {"laurent": value.laurent.to_json(), "at_ones": str(value.integer),
                   "word": word}
        if invariance is not None:
            payload["invariant"] = invariance
        _emit(payload)
    else:
        print("theta =", value.laurent)
        print("theta(1,...,1) =", value.integer)
        if word:
            print("via word:", ",".join(word))
    if invariance is not None and not args.json and not args.at_ones:
        print("invariant under given words:", invariance)
    return 0 if invariance in (None, True) else 1


def cmd_grassmannian(args) -> int:
    rep = _load_rep(args.rep)
    primes = args.primes or DEFAULT_PRIMES
    if args.dimvec is not None:
        chi = euler_characteristic(rep, args.dimvec, primes)
        counts = {str(p): str(count_points(rep, args.dimvec, p))
                  for p in primes if rep.admissible(p)}
        payload = {"e": list(args.dimvec), "chi": str(chi), "counts": counts}
        if args.json:
            _emit(payload)
        else:
            print("chi(Gr_e) =", chi)
            for p, c in counts.items():
                print("  points over F_%s: %s" % (p, c))
        return 0
    table = grassmannian_table(rep, primes)
    if args.json:
        _emit({"table": table.to_json(), "sum": str(table.chi_sum())})
    else:
        for e, chi in table:
            print("%s  chi=%d" % (e, chi))
        print("sum of chi:", table.chi_sum())
    return 0


def cmd_cc(args) -> int:
    rep = _load_rep(args.rep)
    value = cc_map(rep, args.primes or DEFAULT_PRIMES)
    if args.at_ones and not args.json:
        print(value.at_ones)
    elif args.json:
        _emit({"laurent": value.laurent.to_json(), "at_ones": str(value.at_ones)})
    else:
        print("X =", value.laurent)
        print("X(1,...,1) =", value.at_ones)
    return 0


def cmd_tube_frieze(args) -> int:
    quiver = _load_quiver(args.quiver)
    tube = [QuiverRep.from_json(entry) for entry in _load_json_file(args.tube)["reps"]]
    quiddity = quiddity_from_tube(quiver, tube)
    depth = args.depth if args.depth is not None else 3 * len(quiddity) + 1
    pattern = generate(quiddity, depth)
    growth_report = {str(k): str(growth(pattern, k))
                     for k in range(1, (args.growth or 0) + 1)}
    if args.json:
        payload = {"quiddity": [str(a) for a in quiddity],
                   "rows": [[str(x) for x in pattern.row(r)] for r in range(1, depth + 1)]}
        if growth_report:
            payload["growth"] = growth_report
        _emit(payload)
    else:
        print("quiddity:", ",".join(str(a) for a in quiddity))
        print(render_frieze(pattern))
        for k, v in growth_report.items():
            print("s_%s = %s" % (k, v))
    return 0


def cmd_growth_identity(args) -> int:
    u = homogeneous_powers(args.x1, args.k)
    report = {
        "x1": str(args.x1),
        "u": [str(x) for x in u],
        "s": {str(k): str(growth_via_homogeneous(args.x1, k)) for k in range(1, args.k + 1)},
    }
    if args.json:
        _emit(report)
    else:
        print("u_0..u_%d:" % args.k, ", ".join(report["u"]))
        for k, v in report["s"].items():
            print("s_%s = %s" % (k, v))
    return 0


def cmd_reproduce(args) -> int:
    results = run_checks(args.only)
    if not results:
        raise FriezelabError("no checks match prefix %r" % args.only)
    failed = [r for r in results if not r.ok]
    if args.json:
        _emit({"checks": [{"name": r.name, "ok": r.ok, "message": r.message}
                          for r in results],
               "passed": len(results) - len(failed),
               "failed": len(failed)})
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            line = "%-*s  %s" % (width, r.name, "ok" if r.ok else "FAIL")
            if not r.ok:
                line += "  (%s)" % r.message
            print(line)
        print("%d passed, %d failed" % (len(results) - len(failed), len(failed)))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="friezelab",
        description="Exact computations with periodic friezes, cluster seeds, "
                    "quiver Grassmannians, and cluster characters.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frieze", help="generate a frieze pattern from a quiddity row")
    p.add_argument("--quiddity", type=_quiddity, required=True,
                   help="comma-separated positive integers, e.g. 8,2")
    p.add_argument("--depth", type=_positive_int, default=None,
                   help="rows below the row of 1's (default 3n+1)")
    p.add_argument("--growth", type=_positive_int, default=0,
                   help="also report growth coefficients s_1..s_K")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_frieze)

    p = sub.add_parser("mutate", help="mutate a quiver (or seed) along a word")
    p.add_argument("--quiver", required=True)
    p.add_argument("--word", required=True, help="comma-separated vertex labels")
    p.add_argument("--seed", action="store_true", help="track cluster variables")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("search", help="breadth-first search of the mutation class")
    p.add_argument("--quiver", required=True)
    p.add_argument("--find", default="double-arrow", choices=["double-arrow"])
    p.add_argument("--max-nodes", type=_positive_int, default=50_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("modular", help="apply cluster modular group generators")
    p.add_argument("--quiver", required=True,
                   help="a double-arrow base quiver of affine type E")
    p.add_argument("--word", default="", help="comma-separated generators, e.g. ta,ta")
    p.add_argument("--check-relations", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_modular)

    p = sub.add_parser("theta", help="growth element of an affine quiver")
    p.add_argument("--quiver", required=True)
    p.add_argument("--at-ones", action="store_true", help="print only the integer value")
    p.add_argument("--invariance-words", default="",
                   help="semicolon-separated label words to test invariance against")
    p.add_argument("--max-nodes", type=_positive_int, default=50_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("grassmannian", help="subrepresentation counts and characteristics")
    p.add_argument("--rep", required=True)
    p.add_argument("--dimvec", type=_dimvec, default=None)
    p.add_argument("--primes", type=_primes, default=None)
    p.add_argument("--table", action="store_true",
                   help="tabulate all nonempty subrepresentation dimension vectors")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_grassmannian)

    p = sub.add_parser("cc", help="cluster character of a representation")
    p.add_argument("--rep", required=True)
    p.add_argument("--primes", type=_primes, default=None)
    p.add_argument("--at-ones", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cc)

    p = sub.add_parser("tube-frieze", help="frieze pattern of a tube of quasi-simples")
    p.add_argument("--quiver", required=True)
    p.add_argument("--tube", required=True, help="JSON file with a reps list")
    p.add_argument("--depth", type=_positive_int, default=None)
    p.add_argument("--growth", type=_positive_int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tube_frieze)

    p = sub.add_parser("growth-identity", help="growth coefficients from homogeneous data")
    p.add_argument("--x1", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_growth_identity)

    p = sub.add_parser("reproduce-paper",
                       help="re-run the built-in verification suite of worked examples")
    p.add_argument("--only", default=None, help="run only checks with this name prefix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    threads = os.environ.get("FRIEZELAB_THREADS")
    if threads is not None and (not threads.isdigit() or int(threads) < 1):
        print(json.dumps({"error": {"type": "UsageError",
                                    "message": "FRIEZELAB_THREADS must be a positive integer"}}))
        return 2
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FriezelabError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
