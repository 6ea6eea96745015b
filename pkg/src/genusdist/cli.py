"""Command-line front end.

Exit codes: 0 success, 1 a verification or certificate failed, 2 bad
arguments, 3 search budget refused, 4 internal consistency failure, 5 input
digraph is not a fan with the given handle.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
from typing import Sequence

from . import __version__
from .analysis import certify_real_rooted_nonpositive, is_log_concave, moment_report
from .characters import frobenius_count, mn_character
from .combinatorics import Partition, parse_partition, partitions_of
from .digraphs import EulerianDigraph, total_embeddings
from .errors import BudgetExceededError, ConsistencyError, DomainError, GenusDistError, NotAFanError
from .genus_core import (
    GenusPolynomial,
    bouquet_gamma,
    dipole_gamma,
    fan_gamma,
    gamma_constellation,
    gamma_digraph,
)
from .oracle import DEFAULT_BUDGET, class_tuple_counts, enumerate_embeddings, enumerate_factorizations

N_CAP = 12

EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_INTERNAL, EXIT_NOT_FAN = 1, 2, 3, 4, 5


class UsageError(GenusDistError):
    pass


def _record(command: str, inputs: dict, result, fmt: str) -> dict:
    return {"command": command, "inputs": inputs, "result": result, "format": fmt}


def _emit_json(record: dict, out):
    out.write(json.dumps(record, indent=2, sort_keys=False) + "\n")


def _csv_text(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _poly_rows(gp: GenusPolynomial, n=None) -> list[list]:
    lead = [] if n is None else [n]
    return [lead + [g, c] for g, c in enumerate(gp.coeffs)]


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("GENUSDIST_THREADS")
    return int(env) if env else 1


def _check_n(args, n: int):
    cap = args.n_cap
    if cap > N_CAP and not args.override_limits:
        raise UsageError(f"--n-cap above {N_CAP} requires --override-limits")
    if n > cap:
        raise UsageError(f"n={n} exceeds the cap {cap} (raise with --n-cap and --override-limits)")
    if n < 1:
        raise UsageError("n must be positive")


def _budget(args) -> int:
    if args.budget > DEFAULT_BUDGET and not args.override_limits:
        raise UsageError(f"--budget above {DEFAULT_BUDGET} requires --override-limits")
    return args.budget


def _lambdas(args, n: int) -> list[Partition]:
    if getattr(args, "all_lambda", False):
        return partitions_of(n)
    if args.lam is None:
        raise UsageError("give --lambda or --all-lambda")
    lam = parse_partition(args.lam)
    if lam.n != n:
        raise UsageError(f"--lambda {args.lam} is not a partition of n={n}")
    return [lam]


# subcommands


def cmd_genus(args, out) -> int:
    fam = args.family
    n = args.n
    _check_n(args, n)
    inputs = {"family": fam, "n": n}
    if fam == "constellation":
        if args.m is None or args.lam is None:
            raise UsageError("constellation needs --m and --lambda")
        lam = parse_partition(args.lam)
        gp = gamma_constellation(args.m, n, lam)
        inputs.update(m=args.m, **{"lambda": list(lam)})
    elif fam == "digraph":
        if args.lam is None:
            raise UsageError("digraph needs --lambda")
        lam = parse_partition(args.lam)
        gp = gamma_digraph(n, lam)
        inputs["lambda"] = list(lam)
    elif fam == "bouquet":
        gp = bouquet_gamma(n)
    else:
        gp = dipole_gamma(n)
    if args.format == "json":
        _emit_json(_record("genus", inputs, gp.to_json_dict(), "json"), out)
    elif args.format == "csv":
        out.write(_csv_text([["genus", "count"]] + _poly_rows(gp)))
    else:
        out.write(str(gp) + "\n")
    return 0


def cmd_table(args, out) -> int:
    _check_n(args, args.max_n)
    fn = bouquet_gamma if args.family == "bouquet" else dipole_gamma
    rows = [(n, fn(n)) for n in range(1, args.max_n + 1)]
    if args.format == "json":
        result = [gp.to_json_dict() for _, gp in rows]
        _emit_json(_record("table", {"family": args.family, "max_n": args.max_n}, result, "json"), out)
    elif args.format == "csv":
        body = [["n", "genus", "count"]]
        for n, gp in rows:
            body += _poly_rows(gp, n)
        out.write(_csv_text(body))
    else:
        for n, gp in rows:
            out.write(f"{n}\t{gp}\n")
    return 0


def cmd_verify(args, out) -> int:
    mode = args.mode
    budget = _budget(args)
    threads = _threads(args)
    results = []
    if mode == "factorizations":
        if args.m is None or args.n is None:
            raise UsageError("verify factorizations needs --m and --n")
        _check_n(args, args.n)
        for lam in _lambdas(args, args.n):
            oracle = enumerate_factorizations(args.m, args.n, lam, budget=budget, workers=threads)
            formula = gamma_constellation(args.m, args.n, lam)
            results.append({
                "lambda": list(lam),
                "pass": oracle.matches(formula),
                "oracle": [str(c) for c in oracle.to_coeffs()],
                "formula": [str(c) for c in formula.coeffs],
            })
        inputs = {"mode": mode, "m": args.m, "n": args.n}
    elif mode == "embeddings":
        if not args.input:
            raise UsageError("verify embeddings needs --input")
        D = EulerianDigraph.load(args.input)
        oracle = enumerate_embeddings(D, budget=budget, workers=threads)
        handles = [args.handle] if args.handle is not None else range(D.num_vertices)
        formula, handle = None, None
        for h in handles:
            try:
                formula, handle = fan_gamma(D, h), h
                break
            except NotAFanError:
                if args.handle is not None:
                    raise
        entry = {
            "total_law": oracle.total() == total_embeddings(D),
            "oracle": [str(c) for c in oracle.to_coeffs()],
        }
        if formula is not None:
            entry.update(handle=handle, formula=[str(c) for c in formula.coeffs], pass_formula=oracle.matches(formula))
        entry["pass"] = entry["total_law"] and entry.get("pass_formula", True)
        results.append(entry)
        inputs = {"mode": mode, "input": str(args.input)}
    else:
        if args.n is None or args.k is None:
            raise UsageError("verify frobenius needs --n and --k")
        _check_n(args, args.n)
        exhaustive = class_tuple_counts(args.n, args.k, budget=budget)
        parts = partitions_of(args.n)
        for combo in itertools.product(parts, repeat=args.k):
            formula = frobenius_count(combo)
            brute = exhaustive.get(tuple(combo), 0)
            results.append({
                "cycle_types": [list(mu) for mu in combo],
                "pass": formula == brute,
                "oracle": str(brute),
                "formula": str(formula),
            })
        inputs = {"mode": mode, "n": args.n, "k": args.k}
    ok = all(r["pass"] for r in results)
    if args.format == "json":
        _emit_json(_record("verify", inputs, {"pass": ok, "cases": results}, "json"), out)
    else:
        for r in results:
            label = r.get("lambda") or r.get("cycle_types") or inputs.get("input")
            if r["pass"]:
                out.write(f"{label}: pass\n")
            else:
                out.write(f"{label}: FAIL\n  oracle:  {r['oracle']}\n  formula: {r.get('formula')}\n")
        out.write("pass\n" if ok else "FAIL\n")
    return 0 if ok else EXIT_FAIL


def cmd_check(args, out) -> int:
    _check_n(args, args.n)
    rows = []
    for lam in _lambdas(args, args.n):
        gp = gamma_constellation(args.m, args.n, lam)
        cert = certify_real_rooted_nonpositive(gp)
        lc = is_log_concave(gp)
        rows.append({
            "lambda": list(lam),
            "gamma": [str(c) for c in gp.coeffs],
            "real_rooted": cert.real_rooted,
            "nonpositive_roots": cert.all_roots_nonpositive,
            "log_concave": lc.holds,
        })
    ok = all(r["real_rooted"] and r["nonpositive_roots"] and r["log_concave"] for r in rows)
    if args.format == "json":
        _emit_json(_record("check", {"m": args.m, "n": args.n}, {"pass": ok, "cases": rows}, "json"), out)
    elif args.format == "csv":
        body = [["lambda", "real_rooted", "nonpositive_roots", "log_concave"]]
        body += [[",".join(map(str, r["lambda"])), r["real_rooted"], r["nonpositive_roots"], r["log_concave"]] for r in rows]
        out.write(_csv_text(body))
    else:
        for r in rows:
            lam = ",".join(map(str, r["lambda"]))
            out.write(f"[{lam}] real_rooted={r['real_rooted']} nonpositive_roots={r['nonpositive_roots']} "
                      f"log_concave={r['log_concave']}\n")
    return 0 if ok else EXIT_FAIL


def cmd_moments(args, out) -> int:
    # closed forms are cheap at any n; the cap only bounds the direct cross-check
    if args.n < 1:
        raise UsageError("n must be positive")
    lam = parse_partition(args.lam)
    rep = moment_report(args.m, args.n, lam, precision=args.precision, direct_max_n=args.n_cap)
    payload = rep.to_json_dict()
    if args.format == "json":
        _emit_json(_record("moments", {"m": args.m, "n": args.n, "lambda": list(lam)}, payload, "json"), out)
    else:
        out.write(f"E[X] = {rep.mean_X}\nVar[X] = {rep.var_X}\n")
        out.write(f"E[g] = {rep.mean_genus}\nVar[g] = {rep.var_genus}\n")
        out.write(f"mu_m = {rep.mu}\nsigma_m^2 = {rep.sigma2}\n")
        if rep.direct is not None:
            out.write(f"direct check: {'agrees' if rep.direct_agrees else 'DISAGREES'}\n")
    return 0


def cmd_fan(args, out) -> int:
    D = EulerianDigraph.load(args.input)
    gp = fan_gamma(D, args.handle)
    if args.format == "json":
        payload = gp.to_json_dict()
        payload["handle"] = args.handle
        payload["scale"] = str(gp.extra["scale"])
        _emit_json(_record("fan", {"input": str(args.input), "handle": args.handle}, payload, "json"), out)
    elif args.format == "csv":
        out.write(_csv_text([["genus", "count"]] + _poly_rows(gp)))
    else:
        out.write(str(gp) + "\n")
    return 0


def cmd_char(args, out) -> int:
    theta, mu = parse_partition(args.theta), parse_partition(args.mu)
    _check_n(args, theta.n)
    value = mn_character(theta, mu)
    if args.format == "json":
        _emit_json(_record("char", {"theta": list(theta), "mu": list(mu)}, str(value), "json"), out)
    else:
        out.write(f"{value}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--n-cap", type=int, default=N_CAP, help="largest n accepted (default %(default)s)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle search budget")
    common.add_argument("--override-limits", action="store_true", help="acknowledge raising --n-cap/--budget")
    common.add_argument("--threads", type=int, default=None, help="oracle workers (env GENUSDIST_THREADS)")

    p = argparse.ArgumentParser(prog="genusdist", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("genus", parents=[common], help="genus polynomial of one family member")
    g.add_argument("--family", choices=("constellation", "digraph", "bouquet", "dipole"), required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--lambda", dest="lam")

    t = sub.add_parser("table", parents=[common], help="bouquet or dipole table for n = 1..max-n")
    t.add_argument("family", choices=("bouquet", "dipole"))
    t.add_argument("--max-n", type=int, required=True)

    v = sub.add_parser("verify", parents=[common], help="compare a formula with brute force")
    v.add_argument("mode", choices=("factorizations", "embeddings", "frobenius"))
    v.add_argument("--m", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--lambda", dest="lam")
    v.add_argument("--all-lambda", action="store_true")
    v.add_argument("--input")
    v.add_argument("--handle", type=int)

    c = sub.add_parser("check", parents=[common], help="real-rootedness and log-concavity certificates")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--lambda", dest="lam")
    c.add_argument("--all-lambda", action="store_true")

    mo = sub.add_parser("moments", parents=[common], help="exact genus moments and asymptotic parameters")
    mo.add_argument("--m", type=int, required=True)
    mo.add_argument("--n", type=int, required=True)
    mo.add_argument("--lambda", dest="lam", required=True)
    mo.add_argument("--precision", type=int, default=50)

    f = sub.add_parser("fan", parents=[common], help="genus polynomial of an Eulerian fan")
    f.add_argument("--input", required=True)
    f.add_argument("--handle", type=int, required=True)

    ch = sub.add_parser("char", parents=[common], help="character value chi^theta_mu")
    ch.add_argument("--theta", required=True)
    ch.add_argument("--mu", required=True)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    if hasattr(sys, "set_int_max_str_digits"):
        # exact moments at large n have numerators far beyond the default limit
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "genus":
            return cmd_genus(args, out)
        if args.command == "table":
            return cmd_table(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "check":
            return cmd_check(args, out)
        if args.command == "moments":
            return cmd_moments(args, out)
        if args.command == "fan":
            return cmd_fan(args, out)
        return cmd_char(args, out)
    except NotAFanError as exc:
        err.write(f"error: not a fan: {exc}\n")
        return EXIT_NOT_FAN
    except BudgetExceededError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except ConsistencyError as exc:
        err.write(f"internal consistency failure: {exc}\n")
        return EXIT_INTERNAL
    except (UsageError, DomainError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
