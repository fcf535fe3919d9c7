"""Command line interface: branching tables, batch verification, and
inspection of single tableaux.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .branching import is_k_highest, is_k_lowest, p_aii, q_aii
from .crystal import (
    ghat_dominance_violation,
    tableau_eps,
    tableau_phi,
    wt_ghat,
    wt_k,
)
from .promotion import phi_factors, pr, psi_factors
from .shapes import format_partition, parse_partition
from .tableaux import Rows, inverse_column_word, validate_ssyt
from .verify import (
    BudgetExceeded,
    SuiteResult,
    VerificationReport,
    bijection_suite,
    promotion_suite_exhaustive,
    promotion_suite_random,
    verify_shape,
    verify_sweep,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def parse_tableau(text: str) -> Rows:
    """Parse "1,2;2,3;4" into rows; "" denotes the empty tableau."""
    text = text.strip()
    if not text:
        return []
    try:
        rows = [[int(tok) for tok in part.split(",")] for part in text.split(";")]
    except ValueError as exc:
        raise UsageError(f"bad tableau {text!r}") from exc
    if not validate_ssyt(rows):
        raise UsageError(f"not a semistandard tableau: {text!r}")
    return rows


def format_tableau(T: Rows) -> str:
    return ";".join(",".join(str(e) for e in row) for row in T)


def _tableau_grid(T: Rows) -> str:
    if not T:
        return "(empty)"
    return "\n".join(" ".join(str(e) for e in row) for row in T)


def _mu_text(mu) -> str:
    return format_partition(mu) if all(isinstance(c, int) and c >= 0 for c in mu) else str(mu)


def _report_lines(report: VerificationReport) -> list[str]:
    lines = []
    lam_text = format_partition(report.lam)
    for row in report.rows:
        status = "ok" if row.ok else "MISMATCH"
        lines.append(
            "\t".join(
                [
                    lam_text,
                    _mu_text(row.mu),
                    str(row.oracle),
                    str(row.g_dom),
                    str(row.khw),
                    str(row.klw),
                    str(row.rec),
                    status,
                ]
            )
        )
    return lines


def _report_dict(report: VerificationReport) -> dict:
    return {
        "n": report.n,
        "lambda": list(report.lam),
        "rows": [
            {
                "mu": list(row.mu),
                "oracle": row.oracle,
                "g_dominant": row.g_dom,
                "k_highest": row.khw,
                "k_lowest": row.klw,
                "recording": row.rec,
                "ok": row.ok,
            }
            for row in report.rows
        ],
        "sst_total": report.sst_total,
        "sp_dim_sum": report.sp_dim_sum,
        "dimension_ok": report.dim_ok,
        "passed": report.passed,
    }


def cmd_branch(args) -> int:
    lam = parse_partition(args.lam)
    if len(lam) > 2 * args.n:
        raise UsageError(f"lambda has more than {2 * args.n} rows")
    report = verify_shape(lam, args.n)
    if args.json:
        print(json.dumps(_report_dict(report), sort_keys=True))
    else:
        print("lambda\tmu\tmult\tg_dominant\tk_highest\tk_lowest\trecording\tstatus")
        for line in _report_lines(report):
            print(line)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    reports = verify_sweep(args.n, args.max_size, budget=args.budget)
    suite = SuiteResult()
    for report in reports:
        suite.merge(bijection_suite(report.lam, args.n))
    if args.n == 2:
        promo = promotion_suite_exhaustive(2, min(args.max_size, 4))
    else:
        promo = promotion_suite_random(args.n, trials=25, seed=args.seed)
    ok = all(r.passed for r in reports) and suite.passed and promo.passed
    if args.json:
        payload = {
            "reports": [_report_dict(r) for r in reports],
            "bijection_checked": suite.checked,
            "bijection_failures": suite.failures,
            "promotion_checked": promo.checked,
            "promotion_failures": promo.failures,
            "passed": ok,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print("lambda\tmu\tmult\tg_dominant\tk_highest\tk_lowest\trecording\tstatus")
        for report in reports:
            for line in _report_lines(report):
                print(line)
        bad_dim = [r for r in reports if not r.dim_ok]
        print(f"shapes checked\t{len(reports)}")
        print(f"dimension identity\t{'ok' if not bad_dim else 'MISMATCH'}")
        print(f"bijection suite\t{suite.checked} checks\t{len(suite.failures)} failures")
        print(f"promotion suite\t{promo.checked} checks\t{len(promo.failures)} failures")
        for failure in suite.failures + promo.failures:
            print(f"failure\t{failure}")
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_show(args) -> int:
    T = parse_tableau(args.tableau)
    n = args.n
    if any(e > 2 * n for row in T for e in row):
        raise UsageError(f"entries exceed {2 * n}")
    P = p_aii(T)
    Q = q_aii(T)
    if args.json:
        payload = {
            "tableau": T,
            "P": P,
            "Q": [
                {"box": [x, y], "step": j}
                for (x, y), j in sorted(Q.items(), key=lambda kv: (kv[1], kv[0][1], kv[0][0]))
            ],
            "k_highest": is_k_highest(T, n),
            "k_lowest": is_k_lowest(T, n),
            "wt_ghat": list(wt_ghat(T, n)),
            "wt_k": list(wt_k(T, n)),
            "ghat_dominant": ghat_dominance_violation(T, n) is None,
        }
        print(json.dumps(payload, sort_keys=True))
        return EXIT_PASS
    print("tableau:")
    print(_tableau_grid(T))
    print("P:")
    print(_tableau_grid(P))
    print("Q:")
    if not Q:
        print("(empty)")
    for (x, y), j in sorted(Q.items(), key=lambda kv: (kv[1], kv[0][1], kv[0][0])):
        print(f"step {j}: box ({x},{y})")
    print(f"k_highest: {is_k_highest(T, n)}")
    print(f"k_lowest: {is_k_lowest(T, n)}")
    print(f"wt_ghat: {wt_ghat(T, n)}")
    print(f"wt_k: {wt_k(T, n)}")
    violation = ghat_dominance_violation(T, n)
    word = inverse_column_word(T)
    print(f"inverse column word: {' '.join(str(c) for c in word)}")
    if violation is None:
        print("ghat_dominant: True")
    else:
        print(f"ghat_dominant: False (first failing prefix index {violation})")
    print("string data:")
    for i in range(1, 2 * n):
        print(f"i={i}: eps={tableau_eps(T, i)} phi={tableau_phi(T, i)}")
    return EXIT_PASS


def cmd_bijection(args) -> int:
    n = args.n
    factors = {"phi": phi_factors(n), "psi": psi_factors(n)}
    trace: dict[str, list] = {}
    if args.tableau is not None:
        T = parse_tableau(args.tableau)
        if any(e > 2 * n for row in T for e in row):
            raise UsageError(f"entries exceed {2 * n}")
        for name, seq in factors.items():
            steps = []
            current = T
            for a, b in seq:
                current = pr(current, a, b)
                steps.append({"window": [a, b], "result": current})
            trace[name] = steps
    if args.json:
        payload = {
            "n": n,
            "phi_factors": [list(w) for w in factors["phi"]],
            "psi_factors": [list(w) for w in factors["psi"]],
        }
        if trace:
            payload["trace"] = trace
        print(json.dumps(payload, sort_keys=True))
        return EXIT_PASS
    for name in ("phi", "psi"):
        seq = " ".join(f"pr[{a},{b}]" for a, b in reversed(factors[name]))
        print(f"{name} (n={n}): {seq if seq else 'id'}  (rightmost factor applies first)")
    for name, steps in trace.items():
        print(f"{name} trace:")
        for step in steps:
            a, b = step["window"]
            print(f"  pr[{a},{b}] -> {format_tableau(step['result']) or '(empty)'}")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artifact",
        description="Branching tables, batch verification, and tableau inspection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    branch = sub.add_parser("branch", help="decompose one shape into symplectic classes")
    branch.add_argument("--n", type=int, required=True)
    branch.add_argument("--lambda", dest="lam", required=True, help='partition, e.g. "2,1"')
    branch.add_argument("--json", action="store_true")
    branch.set_defaults(func=cmd_branch)

    ver = sub.add_parser("verify", help="sweep all shapes up to a size bound")
    ver.add_argument("--n", type=int, required=True)
    ver.add_argument("--max-size", type=int, required=True)
    ver.add_argument("--budget", type=int, default=None, help="cap on enumerated tableaux")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)

    show = sub.add_parser("show", help="inspect one tableau")
    show.add_argument("--n", type=int, required=True)
    show.add_argument("--tableau", required=True, help='rows, e.g. "1,2;2,3;4"')
    show.add_argument("--json", action="store_true")
    show.set_defaults(func=cmd_show)

    bij = sub.add_parser("bijection", help="print the phi/psi promotion factors")
    bij.add_argument("--n", type=int, required=True)
    bij.add_argument("--tableau", default=None, help="optional tableau to trace")
    bij.add_argument("--json", action="store_true")
    bij.set_defaults(func=cmd_bijection)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.command in ("branch", "verify", "show", "bijection") and args.n < 1:
            raise UsageError("n must be positive")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
