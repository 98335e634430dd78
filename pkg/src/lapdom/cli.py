"""Command-line front end.

Every command writes exactly one JSON document to stdout.  A short
human-readable summary goes to stderr unless ``--quiet`` is given.

Exit codes: 0 success, 1 usage or parse error, 2 invariant violation,
3 algorithm precondition not met.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from . import generators
from .domination import dominate, gamma_dp, is_dominating
from .errors import BadParameter, PreconditionError, TreeError
from .inertia import as_rational, count_interval, localize_spectrum
from .report import rational_json
from .search import search
from .tree import Tree, format_tree, read_tree, reduce_to_script_t
from .verify import analyze, caterpillar_check, check_tree, contraction_steps, step_ok, tight43_check

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_PRECONDITION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


class _Out:
    def __init__(self, quiet: bool):
        self.quiet = quiet

    def note(self, *lines: str) -> None:
        if not self.quiet:
            for line in lines:
                print(line, file=sys.stderr)

    def emit(self, doc) -> None:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")


# --------------------------------------------------------------------------
# commands

def cmd_analyze(args, out: _Out) -> int:
    t = read_tree(args.file)
    rep = analyze(t)
    out.emit(rep)
    out.note(
        f"n={rep['n']}  p={rep['p']}  mu={rep['mu']}  nu={rep['nu']}  gamma={rep['gamma']}",
        f"gamma/mu = {rep['ratio_gamma_mu']['num']}/{rep['ratio_gamma_mu']['den']}"
        f"  nu/gamma = {rep['ratio_nu_gamma']['num']}/{rep['ratio_nu_gamma']['den']}",
        *(f"  {'PASS' if c['passed'] else 'FAIL'}  {c['name']}" for c in rep["checks"]),
    )
    return EXIT_OK if rep["all_passed"] else EXIT_VIOLATION


def cmd_spectrum(args, out: _Out) -> int:
    t = read_tree(args.file)
    if args.interval:
        a, b = args.interval
        count = count_interval(t, a, b, closed_left=not args.open_left, closed_right=args.closed_right)
        left = "(" if args.open_left else "["
        right = "]" if args.closed_right else ")"
        out.emit({
            "n": t.n,
            "interval": {"a": rational_json(a), "b": rational_json(b),
                         "closed_left": not args.open_left, "closed_right": args.closed_right},
            "count": count,
        })
        out.note(f"m{left}{a}, {b}{right} = {count}")
        return EXIT_OK
    ivs = localize_spectrum(t, args.tol)
    out.emit({
        "n": t.n,
        "tol": rational_json(args.tol),
        "intervals": [
            {"lo": rational_json(s.lo), "hi": rational_json(s.hi), "exact": s.exact, "multiplicity": s.multiplicity}
            for s in ivs
        ],
        "multiplicity_total": sum(s.multiplicity for s in ivs),
    })
    for s in ivs:
        where = f"{s.lo}" if s.exact else f"({float(s.lo):.12g}, {float(s.hi):.12g})"
        out.note(f"  {where:>40}  x{s.multiplicity}")
    return EXIT_OK


def cmd_dominate(args, out: _Out) -> int:
    t = read_tree(args.file)
    try:
        cert = dominate(t, args.method, k=args.k, eps_override=args.eps)
    except PreconditionError as exc:
        out.emit({"error": type(exc).__name__, "message": str(exc),
                  "vertices": list(getattr(exc, "vertices", ()))})
        out.note(f"precondition failed: {exc}")
        return EXIT_PRECONDITION
    gamma, _ = gamma_dp(t)
    ok = is_dominating(t, cert.members)
    doc = cert.to_dict()
    doc["is_dominating"] = ok
    doc["gamma_dp"] = gamma
    doc["minimum"] = cert.size == gamma
    doc["bounds_checked"] = {"dominating": ok, "size_ge_gamma": cert.size >= gamma}
    out.emit(doc)
    out.note(f"{args.method}: size {cert.size} (gamma = {gamma}), dominating: {ok}",
             f"members: {sorted(cert.members)}")
    return EXIT_OK if ok and cert.size >= gamma else EXIT_VIOLATION


def _family_params(args) -> dict:
    params = {}
    for key in ("k", "n", "seed"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.legs:
        params["legs"] = [int(x) for x in args.legs.split(",")]
    return params


def cmd_generate(args, out: _Out) -> int:
    params = _family_params(args)
    t = generators.FamilySpec(args.family, params).build()
    text = format_tree(t, comment=f"family={args.family} " + " ".join(f"{k}={v}" for k, v in params.items()))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    out.emit({"family": args.family, "params": params, "n": t.n, "output": args.output,
              "edges": None if args.output else [list(e) for e in t.edges]})
    out.note(f"{args.family}: n={t.n}" + (f" -> {args.output}" if args.output else ""))
    return EXIT_OK


def _verify_one(job):
    label, t, seed = job
    return label, t.n, [c.to_dict() for c in check_tree(t, seed=seed)]


def cmd_verify(args, out: _Out) -> int:
    jobs = []
    for path in args.files:
        jobs.append((path, read_tree(path), args.seed))
    if args.random:
        gen = generators.rng(args.seed)
        for i in range(args.random):
            n = int(gen.integers(args.n_min, args.n_max + 1))
            s = int(gen.integers(0, 2**63))
            jobs.append((f"random#{i}(n={n},seed={s})", generators.random_tree(n, s), s))
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_one, jobs, chunksize=8))
    else:
        results = [_verify_one(j) for j in jobs]

    summary: dict[str, dict[str, int]] = {}
    failures = []
    for label, n, checks in results:
        for c in checks:
            s = summary.setdefault(c["name"], {"passed": 0, "failed": 0})
            s["passed" if c["passed"] else "failed"] += 1
            if not c["passed"]:
                failures.append({"tree": label, "n": n, **c})
    sweeps = []
    if args.sweeps:
        sweeps += [tight43_check(k).to_dict() for k in range(2, args.sweep_max + 1)]
        sweeps += [caterpillar_check(n).to_dict() for n in range(2, args.sweep_max + 1)]
        failures += [{"tree": s["name"], **s} for s in sweeps if not s["passed"]]
    doc = {
        "trees": len(results),
        "summary": summary,
        "sweeps": sweeps,
        "failures": failures,
        "violations": len(failures),
    }
    out.emit(doc)
    out.note(f"{len(results)} trees checked")
    for name, s in sorted(summary.items()):
        out.note(f"  {name:<28} passed {s['passed']:>6}  failed {s['failed']:>4}")
    if sweeps:
        out.note(f"  family sweeps: {sum(s['passed'] for s in sweeps)}/{len(sweeps)} passed")
    return EXIT_OK if not failures else EXIT_VIOLATION


def cmd_search(args, out: _Out) -> int:
    start: Optional[Tree] = None
    if args.start:
        start = read_tree(args.start)
    elif args.start_tight43:
        start = generators.tight43(args.start_tight43)
    res = search(n=args.n, iters=args.iters, seed=args.seed, start=start)
    out.emit(res)
    r = res["best_ratio"]
    out.note(f"best gamma/mu = {r['num']}/{r['den']} ({r['decimal']:.6f}) on n={res['n']}")
    return EXIT_OK if res["below_ceiling"] else EXIT_VIOLATION


def cmd_contract(args, out: _Out) -> int:
    t = read_tree(args.file)
    steps = contraction_steps(t)
    red, _ = reduce_to_script_t(t)
    ok = all(step_ok(s) for s in steps)
    out.emit({
        "n": t.n,
        "steps": steps,
        "reduced": {"n": red.n, "edges": [list(e) for e in red.edges]},
        "all_steps_ok": ok,
    })
    out.note(f"{len(steps)} contraction steps, reduced tree has {red.n} vertices")
    for s in steps:
        out.note(f"  {s['path']}: mu {s['mu_before']}->{s['mu_after']}  gamma {s['gamma_before']}->{s['gamma_after']}"
                 f"  {'ok' if step_ok(s) else 'VIOLATION'}")
    return EXIT_OK if ok else EXIT_VIOLATION


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lapdom", description="Laplacian eigenvalue counts and domination in trees.")
    p.add_argument("-q", "--quiet", action="store_true", help="suppress the summary on stderr")
    # also accepted after the subcommand; SUPPRESS keeps it from overwriting the top-level value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-q", "--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress the summary on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("analyze", parents=[common], help="full report for one tree")
    s.add_argument("file")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("spectrum", parents=[common], help="localize the spectrum or count one interval")
    s.add_argument("file")
    s.add_argument("--tol", type=_rational, default=Fraction(1, 10**6))
    s.add_argument("--interval", nargs=2, type=_rational, metavar=("A", "B"))
    s.add_argument("--open-left", action="store_true", help="exclude A (default: included)")
    s.add_argument("--closed-right", action="store_true", help="include B (default: excluded)")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("dominate", parents=[common], help="compute a dominating set with a chosen method")
    s.add_argument("file")
    s.add_argument("--method", choices=("dp", "brute", "greedy", "alg2", "alg3"), default="dp")
    s.add_argument("--k", type=int, help="degree bound for alg3")
    s.add_argument("--eps", type=_rational, help="override alg3's epsilon (1 for general trees)")
    s.set_defaults(func=cmd_dominate)

    s = sub.add_parser("generate", parents=[common], help="write a tree from a named family")
    s.add_argument("family", choices=generators.FAMILIES)
    s.add_argument("--k", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--legs", help="comma-separated leg lengths for spider")
    s.add_argument("--seed", type=_seed)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("verify", parents=[common], help="run the invariant suite on files and/or random trees")
    s.add_argument("files", nargs="*")
    s.add_argument("--random", type=int, default=0, metavar="COUNT")
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--n-max", type=int, default=60)
    s.add_argument("--seed", type=_seed, default=0)
    s.add_argument("--sweeps", action="store_true", help="also run the tight43 and caterpillar sweeps")
    s.add_argument("--sweep-max", type=int, default=50)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common], help="local search for a large gamma/mu ratio")
    s.add_argument("--n", type=int, default=30)
    s.add_argument("--iters", type=int, default=1000)
    s.add_argument("--seed", type=_seed, default=0)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--start", help="edge-list file to start from")
    g.add_argument("--start-tight43", type=int, metavar="K")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("contract", parents=[common], help="contract clean length-3 paths and track mu and gamma")
    s.add_argument("file")
    s.set_defaults(func=cmd_contract)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.quiet)
    try:
        return args.func(args, out)
    except (TreeError, BadParameter, OSError) as exc:
        print(f"lapdom {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
