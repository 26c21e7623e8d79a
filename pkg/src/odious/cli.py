"""Command-line front end: term generation, summation, case verification,
constructions, and full identity sweeps.

Exit codes: 0 success, 1 verification failure or arithmetic error, 2 usage
error. Output is plain decimal, deterministic for fixed arguments, and
independent of the worker count.
"""

import argparse
import sys

from . import characterization, shevelev, summation, sweeps
from .characterization import ConstructionError
from .formats import OutputFormat, render_terms
from .morphic import prefix
from .oracle import oracle_sum
from .sequences import SequenceSpec, evil, odious, term_range


def _spec_from(args):
    return SequenceSpec(args.j, args.d)


def _cmd_terms(args):
    if args.morphic:
        if args.d < 2:
            raise ValueError(f"radix must be >= 2, got {args.d}")
        values = prefix(args.d, args.n)
    else:
        values = term_range(_spec_from(args), args.n)
    sys.stdout.write(render_terms(values, OutputFormat(args.format), args.offset))
    return 0


def _cmd_sum(args):
    value = summation.summatory(_spec_from(args), args.upto)
    if args.check:
        reference = oracle_sum(_spec_from(args), args.upto)
        if value != reference:
            print(f"{value} MISMATCH oracle={reference}")
            return 1
        print(f"{value} MATCH")
        return 0
    print(value)
    return 0


def _cmd_shevelev_classify(args):
    case = shevelev.classify(args.n)
    if case is shevelev.ShevelevCase.NONE:
        print("NONE")
        return 0
    total = summation.odious_summatory(args.n)
    expected = shevelev.rhs(case, args.n)
    print(f"{case.value} S={total} rhs={expected}")
    return 0


def _cmd_shevelev_verify(args):
    report = shevelev.verify_range(args.lo, args.hi)
    c = report.counts
    tail = f"cases I={c['I']} II={c['II']} III={c['III']} IV={c['IV']} none={c['NONE']}"
    if report.passed:
        print(f"PASS {tail}")
        return 0
    print(f"FAIL n={report.first_counterexample} {tail}")
    return 1


def _prefix_line(label, values):
    body = " ".join(str(v) for v in values)
    return f"{label}: {body}" if body else f"{label}:"


def _cmd_construct(args):
    if args.method == "search":
        solutions = characterization.search_partition_solutions(args.n).solutions
        print(f"{len(solutions)} solutions")
        for xs, ys in solutions:
            print(_prefix_line("x", xs))
            print(_prefix_line("y", ys))
        return 0
    build = (
        characterization.construct_parity
        if args.method == "parity"
        else characterization.construct_offset
    )
    xs, ys = build(args.n)
    print(_prefix_line("x", xs))
    print(_prefix_line("y", ys))
    expected_x = tuple(odious(k) for k in range(args.n))
    expected_y = tuple(evil(k) for k in range(args.n))
    if xs == expected_x and ys == expected_y:
        print("MATCH")
        return 0
    print("MISMATCH")
    return 1


def _cmd_verify(args):
    reports = sweeps.run_suite(args.suite, args.n_max, jobs=args.jobs)
    for report in reports:
        if not report.passed:
            print(f"{report.identity} FAIL first={report.first_counterexample}")
    passed = sum(1 for report in reports if report.passed)
    verdict = "PASS" if passed == len(reports) else "FAIL"
    print(f"{passed}/{len(reports)} {verdict}")
    return 0 if passed == len(reports) else 1


def _add_class_flags(parser):
    parser.add_argument("-d", "--radix", dest="d", type=int, default=2)
    parser.add_argument("-j", "--class", dest="j", type=int, default=1)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="odious",
        description="Generate and verify digit-class sequences and their exact sum formulas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_terms = sub.add_parser("terms", help="render sequence terms")
    _add_class_flags(p_terms)
    p_terms.add_argument("-n", "--count", dest="n", type=int, default=16)
    p_terms.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default="plain"
    )
    p_terms.add_argument("--offset", type=int, choices=(0, 1), default=0)
    p_terms.add_argument(
        "--morphic",
        action="store_true",
        help="render fixed-point word letters instead of sequence terms",
    )
    p_terms.set_defaults(func=_cmd_terms)

    p_sum = sub.add_parser("sum", help="summatory value by closed form")
    _add_class_flags(p_sum)
    p_sum.add_argument("-N", "--upto", dest="upto", type=int, required=True)
    p_sum.add_argument(
        "--check", action="store_true", help="compare against brute-force accumulation"
    )
    p_sum.set_defaults(func=_cmd_sum)

    p_she = sub.add_parser("shevelev", help="mod-4 case analysis of the odious sum")
    she_sub = p_she.add_subparsers(dest="mode", required=True)
    p_cls = she_sub.add_parser("classify", help="case at one index")
    p_cls.add_argument("n", type=int)
    p_cls.set_defaults(func=_cmd_shevelev_classify)
    p_ver = she_sub.add_parser("verify", help="check every covered index in a range")
    p_ver.add_argument("lo", type=int)
    p_ver.add_argument("hi", type=int)
    p_ver.set_defaults(func=_cmd_shevelev_verify)

    p_con = sub.add_parser("construct", help="rebuild the pair from functional equations")
    p_con.add_argument("method", choices=("parity", "offset", "search"))
    p_con.add_argument("n", type=int)
    p_con.set_defaults(func=_cmd_construct)

    p_verify = sub.add_parser("verify", help="run identity sweeps")
    p_verify.add_argument("suite", choices=sweeps.SUITES)
    p_verify.add_argument("n_max", type=int)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OverflowError, ArithmeticError, MemoryError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
