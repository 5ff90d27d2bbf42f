"""Command-line front end.

Commands: factor, sigma, sigma-star, sigma-2star, verify-catalog, search,
mersenne, scan.  Exit status 0 means success/verified, 1 a verification
failure, 2 a usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import bup_search
from .divisor_sums import sigma, sigma_2star, sigma_star
from .factor import factorize
from .gf2poly import ParseError, parse
from .mersenne import M_SET, enumerate_mersenne_primes

_USAGE_ERROR = 2
_VERIFY_ERROR = 1

_ALIASES = sorted(
    ((f"({p})", f"M{i + 1}") for i, p in enumerate(M_SET)),
    key=lambda pair: len(pair[0]),
    reverse=True,
)


def _aliased(factored):
    for pattern, name in _ALIASES:
        factored = factored.replace(pattern, name)
    return factored


def _parse_or_exit(text):
    try:
        p = parse(text)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(_USAGE_ERROR) from None
    return p


def _cmd_unary(args, func):
    p = _parse_or_exit(args.poly)
    if p == 0:
        print("error: the zero polynomial has no divisor sum", file=sys.stderr)
        return _USAGE_ERROR
    line = str(factorize(func(p), seed=args.seed))
    if not args.records and line != _aliased(line):
        line = f"{line}\t# {_aliased(line)}"
    print(line)
    return 0


def _cmd_factor(args):
    p = _parse_or_exit(args.poly)
    if p == 0:
        print("error: cannot factor the zero polynomial", file=sys.stderr)
        return _USAGE_ERROR
    line = str(factorize(p, seed=args.seed))
    if not args.records and line != _aliased(line):
        line = f"{line}\t# {_aliased(line)}"
    print(line)
    return 0


def _cmd_verify_catalog(args):
    failed = None
    for name, ok, factored in bup_search.verify_catalog():
        status = "PASS" if ok else "FAIL"
        if args.records:
            print(f"{name}\t{status}\t{factored}")
        else:
            print(f"{name}\t{status}\t{factored}\t# {_aliased(factored)}")
        if not ok and failed is None:
            failed = name
    if failed is not None:
        print(f"error: catalog entry {failed} failed verification",
              file=sys.stderr)
        return _VERIFY_ERROR
    return 0


def _record_line(rec, records_mode):
    exps = rec.candidate.exponents() if rec.candidate else None
    tuple_text = "[" + ",".join(map(str, exps)) + "]" if exps else "-"
    factored = str(rec.factorization)
    if rec.catalog_index:
        tag = f"C{rec.catalog_index}"
    elif rec.conjugate_class.startswith("C"):
        tag = f"~{rec.conjugate_class}"
    else:
        tag = "-"
    line = f"{rec.case_tag}\t{tuple_text}\t{factored}\t{tag}"
    if not records_mode:
        line = f"{line}\t# {_aliased(factored)}"
    return line


def _cmd_search(args):
    cases = bup_search.CASES if args.case == "all" else (args.case,)
    start = time.perf_counter()
    found = set()
    footer = []
    for case in cases:
        result = bup_search.search_case(case, workers=args.workers)
        for rec in result.records:
            print(_record_line(rec, args.records))
            found.add(rec.poly.value)
        footer.append(f"# case {case}: {result.candidate_count} candidates, "
                      f"{len(result.records)} records, {result.seconds:.2f}s")
    if not args.records:
        for line in footer:
            print(line)
        print(f"# total wall time {time.perf_counter() - start:.2f}s")
    if found != bup_search.expected_hit_values(args.case):
        print("error: search results differ from the expected catalog subset",
              file=sys.stderr)
        return _VERIFY_ERROR
    return 0


def _cmd_mersenne(args):
    if args.max_degree < 1:
        print("error: --max-degree must be positive", file=sys.stderr)
        return _USAGE_ERROR
    for form, poly in enumerate_mersenne_primes(args.max_degree):
        print(f"({form.a},{form.b})\t{poly}")
    return 0


def _cmd_scan(args):
    if not 1 <= args.max_degree <= 20:
        print("error: --max-degree must be between 1 and 20", file=sys.stderr)
        return _USAGE_ERROR
    for rec in bup_search.exhaustive_low_degree_scan(args.max_degree):
        line = str(rec.factorization)
        if not args.records and line != _aliased(line):
            line = f"{line}\t# {_aliased(line)}"
        print(line)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gf2bup",
        description="Divisor-sum arithmetic and the bi-unitary perfect "
                    "polynomial search over GF(2).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_poly_command(name, func, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("poly", help="polynomial expression")
        cmd.add_argument("--records", action="store_true",
                         help="machine-readable output")
        cmd.add_argument("--seed", type=int, default=None,
                         help="seed for the factorization splitter")
        cmd.set_defaults(func=func)
        return cmd

    add_poly_command("factor", _cmd_factor, "factor a polynomial")
    add_poly_command("sigma", lambda a: _cmd_unary(a, sigma),
                     "factored sum of all divisors")
    add_poly_command("sigma-star", lambda a: _cmd_unary(a, sigma_star),
                     "factored sum of unitary divisors")
    add_poly_command("sigma-2star", lambda a: _cmd_unary(a, sigma_2star),
                     "factored sum of bi-unitary divisors")

    cmd = sub.add_parser("verify-catalog",
                         help="check the 23 catalog polynomials")
    cmd.add_argument("--records", action="store_true")
    cmd.set_defaults(func=_cmd_verify_catalog)

    cmd = sub.add_parser("search", help="run the candidate-tuple search")
    cmd.add_argument("--case", default="all",
                     choices=list(bup_search.CASES) + ["all"])
    cmd.add_argument("--workers", type=int, default=1)
    cmd.add_argument("--records", action="store_true")
    cmd.set_defaults(func=_cmd_search)

    cmd = sub.add_parser("mersenne", help="list Mersenne primes by degree")
    cmd.add_argument("--max-degree", type=int, required=True)
    cmd.set_defaults(func=_cmd_mersenne)

    cmd = sub.add_parser("scan",
                         help="brute-force fixpoint scan up to a degree bound")
    cmd.add_argument("--max-degree", type=int, required=True)
    cmd.add_argument("--records", action="store_true")
    cmd.set_defaults(func=_cmd_scan)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
