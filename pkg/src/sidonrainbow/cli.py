"""Command-line surface.

Subcommands: total, rainbow, bounds, search, verify, sweep. Every invocation
is deterministic given its flags; all randomness flows from explicit --seed.

Exit codes: 0 success, 1 usage or IO error, 2 verification mismatch,
3 search budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import random
import sys
from fractions import Fraction

from .bounds import bounds_report, lb_coefficient, report_to_json, report_to_text, ub_general_coefficient
from .core import Domain, mod_coloring, parse_coloring_lines, random_coloring
from .counting import (
    count_rainbow_cyclic_fast,
    count_rainbow_cyclic_naive,
    count_rainbow_fast,
    count_rainbow_naive,
    non_rainbow_lower_bound,
    rainbow_via_energy,
)
from .enumeration import (
    count_quads_by_sums,
    enumerate_quads,
    total_quads_formula,
)
from .repfn import (
    IntSet,
    additive_energy,
    check_energy_dominance,
    check_lev,
    check_sum_dominance,
    closed_energy4_interval,
    closed_rep_one_interval,
    closed_rep_two_intervals,
    rep_profile,
)
from .search import (
    BudgetExceededError,
    exhaustive_ar,
    local_search,
    result_to_json,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self.exit_code_on_error(message))

    def exit_code_on_error(self, message) -> int:
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return EXIT_USAGE


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise ValueError(f"bad range {text!r}, expected A..B")
    a, b = int(lo), int(hi)
    if a < 1 or b < a:
        raise ValueError(f"bad range {text!r}")
    return a, b


def _cmd_total(args) -> int:
    if args.range:
        lo, hi = _parse_range(args.range)
        ns = range(lo, hi + 1)
        prefix = True
    else:
        ns = [args.n]
        prefix = False
    status = EXIT_OK
    for n in ns:
        f = total_quads_formula(n)
        s = count_quads_by_sums(n)
        vals = [f, s]
        if n <= 60 or args.brute:
            vals.append(sum(1 for _ in enumerate_quads(n)))
        ok = len(set(vals)) == 1
        if not ok:
            status = EXIT_MISMATCH
        head = f"n={n} " if prefix else ""
        print(head + " ".join(str(v) for v in vals) + (" OK" if ok else " MISMATCH"))
    return status


def _rainbow_counts(c, method: str) -> dict[str, int]:
    out: dict[str, int] = {}
    if c.domain is Domain.CYCLIC:
        if method == "energy":
            raise ValueError("energy method applies to interval colorings only")
        if method in ("naive", "all"):
            out["naive"] = count_rainbow_cyclic_naive(c)
        if method in ("fast", "all"):
            out["fast"] = count_rainbow_cyclic_fast(c)
        return out
    if method in ("naive", "all"):
        out["naive"] = count_rainbow_naive(c).rainbow
    if method in ("fast", "all"):
        out["fast"] = count_rainbow_fast(c)
    if method == "energy" or (method == "all" and c.k == 4):
        out["energy"] = rainbow_via_energy(c)
    return out


def _cmd_rainbow(args) -> int:
    try:
        with open(args.coloring, encoding="utf-8") as fh:
            colorings = parse_coloring_lines(fh.read())
    except OSError as e:
        print(f"cannot read {args.coloring}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"bad coloring file: {e}", file=sys.stderr)
        return EXIT_USAGE
    status = EXIT_OK
    for c in colorings:
        try:
            counts = _rainbow_counts(c, args.method)
        except ValueError as e:
            print(str(e), file=sys.stderr)
            return EXIT_USAGE
        vals = list(counts.values())
        if args.method == "all":
            ok = len(set(vals)) == 1
            if not ok:
                status = EXIT_MISMATCH
            print(" ".join(str(v) for v in vals) + (" OK" if ok else " MISMATCH"))
        else:
            print(vals[0])
    return status


def _cmd_bounds(args) -> int:
    try:
        report = bounds_report(args.n, args.k)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    print(report_to_json(report) if args.json else report_to_text(report))
    return EXIT_OK


def _cmd_search(args) -> int:
    try:
        if args.exhaustive:
            result = exhaustive_ar(args.n, args.k)
        else:
            result = local_search(args.n, args.k, args.seed, args.restarts, args.moves)
    except BudgetExceededError as e:
        print(str(e), file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    print(result.best_count)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(result_to_json(result) + "\n")
        except OSError as e:
            print(f"cannot write {args.out}: {e}", file=sys.stderr)
            return EXIT_USAGE
    return EXIT_OK


def _suite_closed_forms() -> list[tuple[str, bool]]:
    checks = []
    ok = True
    for beta in range(1, 31):
        for alpha in range(1, beta + 1):
            prof = rep_profile(IntSet(range(-alpha, alpha + 1)), IntSet(range(-beta, beta + 1)))
            for m in range(-(alpha + beta) - 2, alpha + beta + 3):
                if closed_rep_two_intervals(alpha, beta, m) != prof[m]:
                    ok = False
    checks.append(("rep two intervals", ok))
    ok = True
    for alpha in range(1, 31):
        prof = rep_profile(IntSet(range(-alpha, alpha + 1)), IntSet(range(-alpha, alpha + 1)))
        for m in range(-2 * alpha - 2, 2 * alpha + 3):
            if closed_rep_one_interval(alpha, m) != prof[m]:
                ok = False
    checks.append(("rep one interval", ok))
    ok = True
    for alpha in range(1, 21):
        J = IntSet(range(-alpha, alpha + 1))
        if closed_energy4_interval(alpha) != additive_energy([J, J, J, J]):
            ok = False
    checks.append(("interval energy", ok))
    sum_ok = True
    product_ok = True
    for a1 in range(1, 9):
        for a2 in range(1, 9):
            for a3 in range(1, 9):
                for a4 in range(1, 9):
                    s = a1 + a2 + a3 + a4
                    if s % 4:
                        continue
                    # the pointwise bound holds inside both pair supports
                    reach = min(a1 + a2, a3 + a4, s // 2)
                    for m in range(-reach, reach + 1):
                        if not check_sum_dominance(a1, a2, a3, a4, m):
                            sum_ok = False
                    if not check_energy_dominance(a1, a2, a3, a4):
                        product_ok = False
    checks.append(("sum dominance", sum_ok))
    checks.append(("product dominance", product_ok))
    return checks


def _suite_lev(trials: int, seed: int) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    ok = True
    for _ in range(trials):
        t = rng.choice((2, 3, 4))
        sets = []
        for _ in range(t):
            size = rng.randint(1, 8)
            sets.append(IntSet(rng.sample(range(-10, 11), size)))
        if not check_lev(sets):
            ok = False
    return [("compression inequality", ok)]


def _suite_floor(trials: int, seed: int) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    ok = True
    for _ in range(trials):
        n = rng.randint(10, 60)
        k = rng.randint(2, 6)
        c = random_coloring(n, k, rng.randint(0, 10**9))
        bd = count_rainbow_naive(c)
        if Fraction(bd.total - bd.rainbow) < non_rainbow_lower_bound(c):
            ok = False
    return [("non-rainbow floor", ok)]


def _cmd_verify(args) -> int:
    checks: list[tuple[str, bool]] = []
    if args.suite in ("lemmas", "all"):
        checks += _suite_closed_forms()
    if args.suite in ("lev", "all"):
        checks += _suite_lev(args.trials, args.seed)
    if args.suite == "all":
        checks += _suite_floor(max(10, args.trials // 20), args.seed)
    status = EXIT_OK
    for name, ok in checks:
        print(f"{name} {'PASS' if ok else 'FAIL'}")
        if not ok:
            status = EXIT_MISMATCH
    return status


def _cmd_sweep(args) -> int:
    try:
        ns = [int(part) for part in args.n_list.split(",") if part.strip()]
    except ValueError:
        print(f"bad n-list {args.n_list!r}", file=sys.stderr)
        return EXIT_USAGE
    if not ns:
        print("empty n-list", file=sys.stderr)
        return EXIT_USAGE
    k = args.k
    rows = []
    for n in ns:
        try:
            if args.coloring == "mod":
                c = mod_coloring(n, k)
            else:
                c = random_coloring(n, k, args.seed)
        except ValueError as e:
            print(str(e), file=sys.stderr)
            return EXIT_USAGE
        rainbow = count_rainbow_fast(c)
        lb = lb_coefficient(k)
        ub = ub_general_coefficient(k)
        rows.append(
            {
                "n": n,
                "k": k,
                "coloring": args.coloring,
                "rainbow": rainbow,
                "total": total_quads_formula(n),
                "ratio": f"{float(Fraction(rainbow, n**3)):.8f}",
                "lb_coeff": f"{lb.numerator}/{lb.denominator}",
                "ub_coeff": f"{ub.numerator}/{ub.denominator}",
            }
        )
    try:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(
                fh, fieldnames=["n", "k", "coloring", "rainbow", "total", "ratio", "lb_coeff", "ub_coeff"]
            )
            writer.writeheader()
            writer.writerows(rows)
    except OSError as e:
        print(f"cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sidonrainbow")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("total", help="total Sidon 4-set counts by three methods")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--n", type=int)
    grp.add_argument("--range", help="inclusive range A..B")
    p.add_argument("--brute", action="store_true", help="force enumeration above n=60")
    p.set_defaults(func=_cmd_total)

    p = sub.add_parser("rainbow", help="rainbow counts for colorings in a file")
    p.add_argument("--coloring", required=True, help="coloring JSON file (one object per line)")
    p.add_argument("--method", choices=("naive", "fast", "energy", "all"), default="all")
    p.set_defaults(func=_cmd_rainbow)

    p = sub.add_parser("bounds", help="bound formulas for (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("search", help="search colorings for many rainbow quads")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--exhaustive", action="store_true")
    grp.add_argument("--local", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=4)
    p.add_argument("--moves", type=int, default=1000)
    p.add_argument("--out", help="write the result JSON here")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="closed-form and inequality self-checks")
    p.add_argument("--suite", choices=("lemmas", "lev", "all"), default="all")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="rainbow counts of a coloring family over many n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-list", required=True, help="comma-separated n values")
    p.add_argument("--coloring", choices=("mod", "random"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
