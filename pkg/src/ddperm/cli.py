"""Command-line interface.

Batch tool for researchers: every subcommand prints deterministic text
(byte-identical for identical invocations; ``--timing`` adds one extra
line) and exits 0 on success, 1 when a cross-check fails, 2 when a
resource cap refuses the computation, 64 on usage errors.

Exact integers in JSON output are encoded as strings so downstream
consumers cannot truncate them at 64 bits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import bruteforce, circular, conjectures, counting, rimhooks, series
from .errors import CapExceeded
from .render import csv_text, decimal_str, percent_str

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CAP = 2
EXIT_USAGE = 64

BRUTE_CAP_ENV = "DDPERM_BRUTE_CAP"


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 64, not argparse's default 2
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_set_option(text: str) -> tuple[int, ...]:
    """Index-set notation: "" is the empty set, "2,5" is {2,5}.
    Entries must be strictly increasing with no duplicates."""
    if text == "":
        return ()
    parts = text.split(",")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"not a comma-separated integer set: {text!r}") from None
    for a, b in zip(values, values[1:]):
        if a >= b:
            raise UsageError(
                f"set entries must be strictly increasing: {text!r}"
            )
    if any(v < 1 for v in values):
        raise UsageError(f"set entries must be positive: {text!r}")
    return tuple(values)


def _set_str(indices: tuple[int, ...]) -> str:
    return "{" + ",".join(str(i) for i in indices) + "}"


def _brute_cap() -> int:
    raw = os.environ.get(BRUTE_CAP_ENV)
    if raw is None:
        return bruteforce.DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{BRUTE_CAP_ENV} must be an integer, got {raw!r}") from None
    if not 0 <= cap <= bruteforce.HARD_CAP:
        raise UsageError(
            f"{BRUTE_CAP_ENV} must be between 0 and {bruteforce.HARD_CAP}"
        )
    return cap


def _count_one(method: str, indices: tuple[int, ...], n: int) -> int:
    if method == "dp":
        return counting.dd_count(indices, n)
    if method == "brute":
        return bruteforce.count_dd_exact(indices, n, cap=_brute_cap())
    if method == "rimhook":
        return rimhooks.dd_count_via_rimhooks(indices, n)
    raise UsageError(f"unknown method {method!r}")


def cmd_count(args) -> int:
    indices = parse_set_option(args.set)
    start = time.perf_counter()
    if args.all_methods:
        methods = ["dp"]
        if args.n <= _brute_cap():
            methods.append("brute")
        if args.n <= rimhooks.DEFAULT_LIST_CAP:
            methods.append("rimhook")
        results = {}
        for method in methods:
            value = _count_one(method, indices, args.n)
            results[method] = value
            print(f"dd({_set_str(indices)};{args.n}) = {value}  [method: {method}]")
        agreed = len(set(results.values())) == 1
        print(f"agreement: {'OK' if agreed else 'MISMATCH'}")
        code = EXIT_OK if agreed else EXIT_CHECK_FAILED
    else:
        value = _count_one(args.method, indices, args.n)
        print(f"dd({_set_str(indices)};{args.n}) = {value}  [method: {args.method}]")
        code = EXIT_OK
    if args.timing:
        print(f"time: {time.perf_counter() - start:.3f}s")
    return code


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def cmd_table(args) -> int:
    if args.family in ("b", "ddempty"):
        if args.to is None:
            raise UsageError(f"--family {args.family} needs --to")
        top = args.to
        values = (
            counting.no_dd_ascent_counts(top)
            if args.family == "b"
            else counting.no_dd_counts(top)
        )
        if args.format == "csv":
            text = csv_text(("n", "value"), list(enumerate(values)))
        else:
            text = json.dumps(
                {"family": args.family, "to": top,
                 "values": [str(v) for v in values]},
                indent=2,
            ) + "\n"
    else:  # singleton
        if args.n is None:
            raise UsageError("--family singleton needs --n")
        table = conjectures.singleton_table(args.n)
        if args.format == "csv":
            rows = [(args.n, i, str(v)) for i, v in sorted(table.items())]
            text = csv_text(("n", "i", "value"), rows)
        else:
            text = json.dumps(
                {"family": "singleton", "n": args.n,
                 "entries": [
                     {"i": i, "value": str(v)} for i, v in sorted(table.items())
                 ]},
                indent=2,
            ) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_rimhook(args) -> int:
    if args.action == "list":
        if args.length is None:
            raise UsageError("rimhook list needs --length")
        indices = parse_set_option(args.set)
        hooks = rimhooks.enumerate_rimhooks(indices, args.length)
        for hook in hooks:
            print(rimhooks.format_skew(hook))
            if args.ascii:
                print(hook.ascii())
                print()
        print(f"total: {len(hooks)}")
        return EXIT_OK
    if args.action == "count":
        if args.length is None:
            raise UsageError("rimhook count needs --length")
        indices = parse_set_option(args.set)
        n = args.length
        if n - 1 <= bruteforce.DEFAULT_MASK_CAP:
            value = bruteforce.count_rimhooks_exact(indices, n)
            method = "enumeration"
        elif indices == ():
            value = rimhooks.count_empty(n)
            method = "formula"
        elif len(indices) == 1:
            value = rimhooks.count_singleton(indices[0], n)
            method = "formula"
        else:
            raise CapExceeded(
                f"no formula for {_set_str(indices)} and n={n} is beyond the "
                "enumeration cap"
            )
        print(f"R({_set_str(indices)};{n}) = {value}  [method: {method}]")
        return EXIT_OK
    if args.action == "minimal":
        if args.height is None:
            raise UsageError("rimhook minimal needs --height")
        indices = parse_set_option(args.set)
        hook = rimhooks.minimal_search(indices, args.height)
        if hook is None:
            print(
                f"none found up to length "
                f"{2 * args.height + 2 * max(indices, default=0) + 2}"
            )
            return EXIT_OK
        print(rimhooks.format_skew(hook))
        if args.ascii:
            print(hook.ascii())
        return EXIT_OK
    if args.action == "bounds":
        if args.length is None:
            raise UsageError("rimhook bounds needs --length")
        indices = parse_set_option(args.set)
        low, high = rimhooks.dd_bounds(indices, args.length)
        exact = counting.dd_count(indices, args.length)
        print(f"lower = {low}")
        print(f"exact dd({_set_str(indices)};{args.length}) = {exact}")
        print(f"upper = {high}")
        bracketed = low <= exact <= high
        print(f"bracketed: {'yes' if bracketed else 'NO'}")
        return EXIT_OK if bracketed else EXIT_CHECK_FAILED
    raise UsageError(f"unknown rimhook action {args.action!r}")


def cmd_circular(args) -> int:
    if args.method == "formula":
        value = circular.count_no_cyclic_dd(args.n)
    else:
        value = bruteforce.count_circular_no_dd_exact(args.n, cap=_brute_cap())
    print(f"circular-no-dd({args.n}) = {value}  [method: {args.method}]")
    return EXIT_OK


def cmd_egf_check(args) -> int:
    order = args.order
    if args.which == "b":
        egf = series.egf_no_dd_ascent(order)
        expected = counting.no_dd_ascent_counts(order)
    else:
        egf = series.egf_no_dd(order)
        expected = counting.no_dd_counts(order)
    actual = series.integer_coefficients(egf)
    failures = 0
    for n, (got, want) in enumerate(zip(actual, expected)):
        ok = got == want
        failures += 0 if ok else 1
        print(f"n={n}  n!*coeff={got}  sequence={want}  {'PASS' if ok else 'FAIL'}")
    print(f"{args.which}: {order + 1} coefficients, {failures} failures")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


def cmd_estimate(args) -> int:
    estimate = counting.dd_singleton_estimate(args.m, args.n)
    print(f"estimate dd({{{args.m}}};{args.n + 1}) = {decimal_str(estimate, 3)}")
    exact = counting.dd_count((args.m,), args.n + 1)
    print(f"exact    dd({{{args.m}}};{args.n + 1}) = {exact}")
    if exact:
        rel = abs(estimate - exact) / exact
        print(f"relative error = {percent_str(rel, 2)}")
    return EXIT_OK


def cmd_conjecture(args) -> int:
    n = args.n
    if args.id == "6.1":
        report = conjectures.equidistribution_report(
            n or 30, Fraction(args.alpha), Fraction(args.beta)
        )
    elif args.id == "6.2":
        report = conjectures.down_up_report(n or 30)
    elif args.id == "6.3":
        report = conjectures.ratio_monotonicity_report(n or 30)
    elif args.id in ("6.4", "6.5"):
        set_i = parse_set_option(args.set_i if args.set_i is not None
                                 else ("2" if args.id == "6.4" else ""))
        set_j = parse_set_option(args.set_j if args.set_j is not None
                                 else ("4" if args.id == "6.4" else "2,5"))
        if args.id == "6.4" and (len(set_i) != 1 or len(set_j) != 1):
            raise UsageError("conjecture 6.4 takes singleton sets; use 6.5")
        report = conjectures.ratio_series_report(
            set_i, set_j, n or conjectures.DEFAULT_SWEEP_MAX,
            conjecture_id=args.id,
        )
    elif args.id == "3.2":
        report = conjectures.ratio_table_report(n or 12)
    else:
        raise UsageError(f"unknown conjecture id {args.id!r}")
    if args.out is not None:
        conjectures.write_report(report, args.format, args.out)
        print(f"wrote {args.format} report to {args.out}")
    else:
        if args.format == "csv":
            sys.stdout.write(csv_text(report.columns, report.rows))
        else:
            sys.stdout.write(json.dumps(report.to_json_dict(), indent=2) + "\n")
    print(f"verdict: {report.verdict.value}", file=sys.stderr)
    return EXIT_CHECK_FAILED if report.verdict is conjectures.Verdict.VIOLATED else EXIT_OK


def _selftest_checks():
    """(name, callable) pairs; each callable returns None when the check
    passes or a short witness string."""

    def known_values():
        expected = {
            ((2,), 4): 3, ((), 4): 17, ((3,), 6): 66, ((4,), 7): 462,
            ((5,), 8): 2904, ((6,), 7): 426, ((6,), 8): 2491,
            ((6,), 9): 22419,
        }
        for (indices, n), want in expected.items():
            got = counting.dd_count(indices, n)
            if got != want:
                return f"dd({_set_str(indices)};{n}) = {got}, expected {want}"
        if counting.no_dd_ascent_counts(4)[4] != 9:
            return "ascent-start count at n=4 is not 9"
        return None

    def dp_vs_brute():
        import itertools

        for n in range(0, 8):
            census = bruteforce.dd_census(n)
            positions = list(range(2, n))
            for r in range(len(positions) + 1):
                for indices in itertools.combinations(positions, r):
                    brute = census.get(indices, 0)
                    fast = counting.dd_count(indices, n)
                    if brute != fast:
                        return (
                            f"dd({_set_str(indices)};{n}): dp {fast} != "
                            f"brute {brute}"
                        )
        return None

    def partition_of_factorial():
        import itertools
        from math import factorial

        for n in range(0, 8):
            positions = list(range(2, n))
            total = sum(
                counting.dd_count(indices, n)
                for r in range(len(positions) + 1)
                for indices in itertools.combinations(positions, r)
            )
            if total != factorial(n):
                return f"sum over sets at n={n} is {total} != {n}!"
        return None

    def singleton_recursion():
        for m in range(4, 7):
            for n in range(m, 10):
                rec = counting.dd_singleton_recursion(m, n)
                direct = counting.dd_count((m,), n + 1)
                if rec != direct:
                    return f"recursion dd({{{m}}};{n + 1}) = {rec} != {direct}"
        return None

    def estimator_digits():
        estimate = counting.dd_singleton_estimate(6, 8)
        text = decimal_str(estimate, 3)
        if text != "22419.118":
            return f"estimate renders as {text}"
        rel = abs(estimate - 22419) / 22419
        if percent_str(rel, 2) != "0.00053%":
            return f"relative error renders as {percent_str(rel, 2)}"
        return None

    def egf_coefficients():
        order = 12
        if series.integer_coefficients(series.egf_no_dd_ascent(order)) != (
            counting.no_dd_ascent_counts(order)
        ):
            return "ascent-start generating function mismatch"
        if series.integer_coefficients(series.egf_no_dd(order)) != (
            counting.no_dd_counts(order)
        ):
            return "no-double-descent generating function mismatch"
        return None

    def rimhook_formulas():
        for n in range(2, 13):
            if rimhooks.count_empty(n) != bruteforce.count_rimhooks_exact((), n):
                return f"empty-set rim hook count differs at n={n}"
        for m in range(2, 7):
            for n in range(m + 1, 13):
                formula = rimhooks.count_singleton(m, n)
                oracle = bruteforce.count_rimhooks_exact((m,), n)
                if formula != oracle:
                    return f"singleton rim hook count differs at m={m}, n={n}"
        return None

    def tableau_sum_identity():
        import itertools

        for n in range(1, 8):
            positions = list(range(2, n))
            for r in range(len(positions) + 1):
                for indices in itertools.combinations(positions, r):
                    via = rimhooks.dd_count_via_rimhooks(indices, n)
                    fast = counting.dd_count(indices, n)
                    if via != fast:
                        return (
                            f"tableau sum dd({_set_str(indices)};{n}) = {via} "
                            f"!= {fast}"
                        )
        return None

    def bounds_bracket():
        for n in range(2, 8):
            low, high = rimhooks.dd_bounds((), n)
            exact = counting.dd_count((), n)
            if not low <= exact <= high:
                return f"bounds at n={n} do not bracket: {low}, {exact}, {high}"
        return None

    def circular_counts():
        for n in range(3, 9):
            exact = bruteforce.count_circular_no_dd_exact(n)
            formula = circular.count_no_cyclic_dd(n)
            if exact != formula:
                return f"circular count at n={n}: {exact} != {formula}"
        return None

    return [
        ("known-values", known_values),
        ("dp-vs-brute-exhaustive-n7", dp_vs_brute),
        ("partition-of-n-factorial", partition_of_factorial),
        ("singleton-recursion", singleton_recursion),
        ("estimator-digits", estimator_digits),
        ("generating-function-coefficients", egf_coefficients),
        ("rimhook-fibonacci-formulas", rimhook_formulas),
        ("tableau-sum-identity", tableau_sum_identity),
        ("tableau-bounds-bracket", bounds_bracket),
        ("circular-rotation-counts", circular_counts),
    ]


def cmd_selftest(args) -> int:
    first_witness = None
    for name, check in _selftest_checks():
        witness = check()
        if witness is None:
            print(f"PASS {name}")
        else:
            print(f"FAIL {name}: {witness}")
            if first_witness is None:
                first_witness = f"{name}: {witness}"
    if first_witness is not None:
        print(f"selftest failed, first witness: {first_witness}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="ddperm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("count",
                       help="count permutations with an exact double-descent set")
    p.add_argument("--set", required=True,
                   help='double-descent set, e.g. "2,5"; "" is the empty set')
    p.add_argument("--n", type=int, required=True, help="permutation length")
    p.add_argument("--method", choices=["dp", "brute", "rimhook"], default="dp")
    p.add_argument("--all-methods", action="store_true",
                   help="run every method within its cap and require agreement")
    p.add_argument("--timing", action="store_true", help="append a timing line")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table",
                       help="emit count tables (csv or json)")
    p.add_argument("--family", choices=["b", "ddempty", "singleton"],
                   required=True)
    p.add_argument("--to", type=int, help="largest length for b/ddempty")
    p.add_argument("--n", type=int, help="length for the singleton family")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("rimhook",
                       help="list, count, and bound via rim hooks")
    p.add_argument("action", choices=["list", "count", "minimal", "bounds"])
    p.add_argument("--set", default="", help="double-descent set")
    p.add_argument("--length", type=int, help="number of squares")
    p.add_argument("--height", type=int, help="rows, for minimal search")
    p.add_argument("--ascii", action="store_true", help="draw shapes")
    p.set_defaults(func=cmd_rimhook)

    p = sub.add_parser("circular",
                       help="rotation classes without cyclic double descents")
    p.add_argument("action", choices=["count"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["formula", "brute"], default="formula")
    p.set_defaults(func=cmd_circular)

    p = sub.add_parser("egf-check",
                       help="verify closed-form generating functions "
                            "coefficient by coefficient")
    p.add_argument("--which", choices=["b", "ddempty"], required=True)
    p.add_argument("--order", type=int, default=30)
    p.set_defaults(func=cmd_egf_check)

    p = sub.add_parser("estimate",
                       help="ratio-table estimate of a singleton count")
    p.add_argument("--m", type=int, required=True, help="double-descent position")
    p.add_argument("--n", type=int, required=True,
                   help="recursion depth; the estimated length is n+1")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("conjecture",
                       help="numeric evidence reports for the conjectures")
    p.add_argument("action", choices=["run"])
    p.add_argument("--id", required=True,
                   choices=["6.1", "6.2", "6.3", "6.4", "6.5", "3.2"])
    p.add_argument("--n", type=int, help="sweep limit (id-specific default)")
    p.add_argument("--alpha", default="1/4", help="window start for 6.1")
    p.add_argument("--beta", default="3/4", help="window end for 6.1")
    p.add_argument("--set-i", dest="set_i", help="numerator set for 6.4/6.5")
    p.add_argument("--set-j", dest="set_j", help="denominator set for 6.4/6.5")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="write the report to a file")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("selftest",
                       help="reduced-scale cross-method agreement suite")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"ddperm: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except UsageError as exc:
        print(f"ddperm: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"ddperm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
