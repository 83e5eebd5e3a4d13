"""Batch command line surface over the library.

Every subcommand emits machine-readable output (json by default, csv or an
aligned table on request) and the exit code reports the identity checks:
0 when everything asserted holds, 1 on a violated identity, 2 on usage
errors.  All configuration is by flags; output is deterministic for fixed
flags apart from the version header.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__, characters, dunkl, fock, hecke, partitions
from .serialize import (
    fraction_str,
    parse_fraction,
    parse_partition,
    partition_json,
    partition_key,
    poly_json,
)


def stratum_description(n: int, m: int, q: int) -> str:
    if q == 0:
        return f"all of C^{n} (no coordinates glued)"
    return (
        f"union over S_{n} of the translates of the subspace of C^{n} where "
        f"the first {q} consecutive blocks of {m} coordinates are each glued "
        f"to a single value"
    )


def cmd_support(args):
    lam = parse_partition(args.lam)
    sign = 1 if args.sign == "+" else -1
    q = partitions.support_level(lam, args.m, sign)
    effective = lam if sign > 0 else partitions.conjugate(lam)
    mu, nu = partitions.decompose(effective, args.m)
    row = {
        "lambda": partition_key(lam),
        "m": args.m,
        "sign": args.sign,
        "q": q,
        "mu": partition_key(mu),
        "nu": partition_key(nu),
    }
    payload = {
        "lambda": partition_json(lam),
        "m": args.m,
        "sign": args.sign,
        "q": q,
        "stratum": stratum_description(sum(lam), args.m, q),
        "mu": partition_json(mu),
        "nu": partition_json(nu),
    }
    return payload, [row], True


def cmd_decompose(args):
    lam = parse_partition(args.lam)
    if args.regular == "transpose":
        mu, nu = partitions.decompose(lam, args.m)
        recombined = partitions.add(partitions.scale(args.m, mu), nu)
    else:
        mu, nu = partitions.decompose_regular_parts(lam, args.m)
        recombined = partitions.recombine_regular_parts(mu, nu, args.m)
    ok = recombined == lam
    payload = {
        "lambda": partition_json(lam),
        "m": args.m,
        "regular_side": args.regular,
        "mu": partition_json(mu),
        "nu": partition_json(nu),
        "recombines": ok,
    }
    row = {
        "lambda": partition_key(lam),
        "m": args.m,
        "regular_side": args.regular,
        "mu": partition_key(mu),
        "nu": partition_key(nu),
    }
    return payload, [row], ok


def cmd_census(args):
    n, m = args.n, args.m
    rows = []
    strata: dict[int, list] = {}
    for lam in partitions.enumerate_partitions(n):
        q = partitions.support_invariant(lam, m)
        mu, nu = partitions.decompose(lam, m)
        strata.setdefault(q, []).append((lam, mu, nu))
    ok = True
    for q in sorted(strata):
        expected = partitions.count_partitions(q) * partitions.count_m_regular(
            n - q * m, m
        )
        if len(strata[q]) != expected:
            ok = False
        # the labelling map must hit exactly this stratum
        labels = {
            partitions.label_from_pair(mu, partitions.conjugate(nu), m, 1)
            for lam, mu, nu in strata[q]
        }
        if labels != {lam for lam, _, _ in strata[q]}:
            ok = False
        for lam, mu, nu in strata[q]:
            rows.append(
                {
                    "n": n,
                    "m": m,
                    "q": q,
                    "lambda": partition_key(lam),
                    "mu": partition_key(mu),
                    "nu": partition_key(nu),
                }
            )
    payload = {
        "n": n,
        "m": m,
        "strata_sizes": {str(q): len(strata[q]) for q in sorted(strata)},
        "total": partitions.count_partitions(n),
        "rows": rows,
        "ok": ok,
    }
    return payload, rows, ok


def cmd_bo_verify(args):
    m_values = [int(tok) for tok in args.m.split(",") if tok.strip()]
    rows = []
    ok = True
    for m in m_values:
        trace = fock.trace_series(m, args.n_max)
        product = fock.product_series(m, args.n_max)
        for n in range(args.n_max + 1):
            for entry in fock.verify_bo(n, m, trace, product):
                row = {
                    "n": n,
                    "m": m,
                    "q": entry.q,
                    "count_qm": entry.count_qm,
                    "count_product": entry.count_product,
                    "dim_eigenspace": entry.dim_eigenspace,
                    "coeff_N": entry.coeff_series,
                    "coeff_trace": entry.coeff_trace,
                    "ok": entry.ok,
                }
                rows.append(row)
                ok = ok and entry.ok
    payload = {"n_max": args.n_max, "m_values": m_values, "rows": rows, "ok": ok}
    return payload, rows, ok


def cmd_weights(args):
    c = parse_fraction(args.c)
    rows = []
    for lam in partitions.enumerate_partitions(args.n):
        rows.append(
            {"lambda": partition_key(lam), "h": fraction_str(characters.lowest_weight(lam, c))}
        )
    ok = True
    if c != 0:
        parts = partitions.enumerate_partitions(args.n)
        for alpha in parts:
            for beta in parts:
                if alpha == beta or not partitions.dominates(alpha, beta):
                    continue
                ha = characters.lowest_weight(alpha, c)
                hb = characters.lowest_weight(beta, c)
                if (c > 0 and not ha < hb) or (c < 0 and not ha > hb):
                    ok = False
    payload = {
        "n": args.n,
        "c": fraction_str(c),
        "weights": rows,
        "dominance_consistent": ok,
    }
    return payload, rows, ok


def cmd_lr(args):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    product = characters.lr_induce(lam, mu)
    target = partitions.add(lam, mu)
    ok = product.get(target) == 1 and all(
        partitions.dominates(target, nu) for nu in product
    )
    rows = [
        {"nu": partition_key(nu), "coeff": product[nu]}
        for nu in sorted(product, reverse=True)
    ]
    payload = {
        "lambda": partition_json(lam),
        "mu": partition_json(mu),
        "product": {partition_key(nu): product[nu] for nu in sorted(product, reverse=True)},
        "leading": partition_json(target),
        "ok": ok,
    }
    if args.c is not None:
        c = parse_fraction(args.c)
        leading, weight = characters.leading_term_of_induction(lam, mu, c)
        payload["leading_weight"] = fraction_str(weight)
    return payload, rows, ok


def cmd_dunkl_check(args):
    cfg = dunkl.EngineConfig(args.n, parse_fraction(args.c))
    report = dunkl.verify_relations(cfg, args.degree)
    rows = [
        {
            "n": args.n,
            "c": fraction_str(cfg.c),
            "degree": args.degree,
            "checked": report.checked,
            "violations": len(report.violations),
        }
    ]
    payload = {
        "n": args.n,
        "c": fraction_str(cfg.c),
        "degree": args.degree,
        "checked": report.checked,
        "violations": report.violations,
        "ok": report.ok,
    }
    return payload, rows, report.ok


def cmd_singular(args):
    cfg = dunkl.EngineConfig(args.n, parse_fraction(args.c))
    basis = dunkl.singular_vectors(cfg, args.degree)
    rows = [
        {"n": args.n, "c": fraction_str(cfg.c), "degree": args.degree, "dimension": len(basis)}
    ]
    payload = {
        "n": args.n,
        "c": fraction_str(cfg.c),
        "degree": args.degree,
        "dimension": len(basis),
        "basis": [poly_json(f) for f in basis],
    }
    return payload, rows, True


def cmd_ideal_check(args):
    c = parse_fraction(args.c) if args.c is not None else None
    report = dunkl.ideal_stability_check(args.n, args.m, args.q, args.degree, c)
    rows = [
        {
            "n": args.n,
            "m": args.m,
            "q": args.q,
            "c": fraction_str(report.c),
            "degree": args.degree,
            "stable": report.stable,
            "failures": len(report.failures),
        }
    ]
    payload = {
        "n": args.n,
        "m": args.m,
        "q": args.q,
        "c": fraction_str(report.c),
        "degree": args.degree,
        "graded_dims": {str(d): report.graded_dims[d] for d in sorted(report.graded_dims)},
        "failures": report.failures,
        "stable": report.stable,
    }
    return payload, rows, report.stable


def cmd_fock_trace(args):
    series = fock.trace_series(args.m, args.max)
    rows = [
        {"deg_s": n, "deg_t": e, "coeff": coeff} for n, e, coeff in series.rows()
    ]
    payload = {"m": args.m, "truncation": args.max, "rows": rows}
    return payload, rows, True


def cmd_hecke_simples(args):
    report = hecke.count_simples(args.p, args.m, seed=args.seed)
    row = {
        "p": report.p,
        "m": report.m,
        "dim": report.dim,
        "rad_dim": report.rad_dim,
        "simples": report.simples,
        "expected_m_regular": report.expected_m_regular,
        "split_audit": report.split_audit,
        "ok": report.ok,
    }
    payload = dict(row)
    payload["block_dims"] = report.block_dims
    payload["upper_bound_only"] = report.upper_bound_only
    return payload, [row], report.ok


COMMANDS = {
    "support": cmd_support,
    "decompose": cmd_decompose,
    "census": cmd_census,
    "bo-verify": cmd_bo_verify,
    "weights": cmd_weights,
    "lr": cmd_lr,
    "dunkl-check": cmd_dunkl_check,
    "singular": cmd_singular,
    "ideal-check": cmd_ideal_check,
    "fock-trace": cmd_fock_trace,
    "hecke-simples": cmd_hecke_simples,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cherednik",
        description="Exact support, counting and operator checks for the "
        "type-A rational Cherednik algebra at c = r/m.",
    )
    parser.add_argument("--format", choices=["json", "csv", "table"], default="json")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    # the common flags are accepted on either side of the subcommand;
    # SUPPRESS keeps an unset trailing flag from clobbering a leading one
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["json", "csv", "table"], default=argparse.SUPPRESS
    )
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    p = add_parser("support", help="stratum of one irreducible")
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 3,1")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--sign", choices=["+", "-"], default="+")

    p = add_parser("decompose", help="split lambda into m*mu + nu")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--regular", choices=["transpose", "parts"], default="transpose")

    p = add_parser("census", help="all partitions of n grouped by stratum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add_parser("bo-verify", help="four-way stratum count comparison")
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--m", required=True, help="comma list of denominators, e.g. 2,3")

    p = add_parser("weights", help="lowest weights of all partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", required=True, help='rational parameter, e.g. "1/2"')

    p = add_parser("lr", help="induction product of two irreducibles")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--c", default=None, help="optional positive rational for the leading weight")

    p = add_parser("dunkl-check", help="defining relations on a monomial basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--degree", type=int, required=True)

    p = add_parser("singular", help="joint kernel of the deformed derivatives")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--degree", type=int, required=True)

    p = add_parser("ideal-check", help="stability of the stratum vanishing ideal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--c", default=None, help="override parameter (default 1/m)")

    p = add_parser("fock-trace", help="bigraded trace series coefficients")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max", type=int, required=True)

    p = add_parser("hecke-simples", help="simple module count at a root of unity")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    return parser


def _stringify(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return fraction_str(value)
    return str(value)


def _emit(args, payload: dict, rows: list[dict], ok: bool) -> None:
    if args.format == "json":
        envelope = {
            "tool": "cherednik",
            "version": __version__,
            "command": args.command,
            "ok": ok,
            "result": payload,
        }
        print(json.dumps(envelope, indent=2))
        return
    if not rows:
        return
    headers = list(rows[0].keys())
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        for row in rows:
            writer.writerow([_stringify(row[h]) for h in headers])
        sys.stdout.write(buf.getvalue())
        return
    cells = [[_stringify(row[h]) for h in headers] for row in rows]
    widths = [
        max(len(headers[j]), max((len(r[j]) for r in cells), default=0))
        for j in range(len(headers))
    ]
    print("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip())
    for r in cells:
        print("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())


def _merge_negative_rationals(argv: list[str]) -> list[str]:
    """Join `--c -1/2` into `--c=-1/2`: argparse's negative-number heuristic
    does not cover rationals with slashes."""
    merged = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--c" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            merged.append(f"--c={argv[i + 1]}")
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    args = parser.parse_args(_merge_negative_rationals(argv))
    try:
        payload, rows, ok = COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"identity violation: {exc}", file=sys.stderr)
        return 1
    _emit(args, payload, rows, ok)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
