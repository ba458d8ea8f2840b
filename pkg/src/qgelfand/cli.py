"""Command-line entry point.

Every check builds a :class:`~qgelfand.reports.Report`, writes it to stdout
as JSON or CSV and exits with 0 (all items pass), 1 (some mathematical
assertion failed; witnesses are in the report) or 2 (usage or parse error).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import dual
from .hypergroup import from_linearization, verify_axioms
from .linearization import linearization_table, linearize_moment, row_checks
from .qpolynomials import ASKEY_WILSON_SYM, FAMILIES, LITTLE_Q_LEGENDRE, OrthogonalFamily
from .reports import Report, emit_report
from .scalars import QParameter, parse_half_integer, parse_rational
from .suq2 import SUq2
from .suq2_checks import DEFAULT_SEED, verify_haar, verify_hopf, verify_involutions

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- argument types -----------------------------------------------------

def _s_arg(text: str) -> Fraction:
    try:
        return QParameter(parse_rational(text)).s
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _sigma_arg(text: str) -> Fraction:
    try:
        return parse_half_integer(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from exc
    if n < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return n


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _family(args) -> OrthogonalFamily:
    if args.family == LITTLE_Q_LEGENDRE:
        return OrthogonalFamily.legendre(args.s)
    return OrthogonalFamily.askey_wilson(args.s, args.sigma)


def _family_params(args) -> dict:
    params = {"family": args.family, "s": args.s}
    if args.family == ASKEY_WILSON_SYM:
        params["sigma"] = args.sigma
    return params


# -- checks -------------------------------------------------------------

def run_linearize(args) -> Report:
    family = _family(args)
    params = {**_family_params(args), "lmax": args.lmax}
    report = Report("linearize", params)
    rows = linearization_table(family, args.lmax)
    n = len(rows)
    for name in ("nonnegative", "sum_is_one", "support_in_range"):
        bad = next((r for r in rows if not row_checks(r)[name]), None)
        witness = None if bad is None else {"l": bad.l, "m": bad.m, "negative": bad.negative_entries()}
        report.add(name, bad is None, window=n, witness=witness)
    bad = next((r for r in rows if not r.is_real()), None)
    report.add("real", bad is None, window=n, witness=None if bad is None else [bad.l, bad.m])
    if args.oracle:
        if family.kind != LITTLE_Q_LEGENDRE:
            raise UsageError("--oracle needs the little-q-legendre family")
        bad = next((r for r in rows if linearize_moment(r.l, r.m, family) != r), None)
        report.add("moment_oracle", bad is None, window=n, witness=None if bad is None else [bad.l, bad.m])
    table_rows = [line for r in rows for line in r.csv_rows()]
    report.table = (["l", "m", "k", "c"], table_rows)
    report.data = [{"l": r.l, "m": r.m, "coefficients": [[k, c] for k, c in r.coefficients.items()]}
                   for r in rows]
    return report


def run_verify_hypergroup(args) -> Report:
    family = _family(args)
    H = from_linearization(family, args.lmax)
    report = verify_axioms(H)
    report.params = {**_family_params(args), "N": H.N, "unit": H.unit}
    return report


def run_verify_hopf(args) -> Report:
    return verify_hopf(args.s, degree=4 if args.degree is None else args.degree)


def run_verify_involutions(args) -> Report:
    return verify_involutions(args.s, degree=4 if args.degree is None else args.degree, seed=args.seed)


def run_verify_haar(args) -> Report:
    return verify_haar(args.s, degree=6 if args.degree is None else args.degree, seed=args.seed)


def run_verify_coideal(args) -> Report:
    return dual.verify_coideal(SUq2(args.s), args.sigma, degree=3 if args.degree is None else args.degree)


def _check_corep_bound(two_l: int):
    if two_l > 4:
        raise UsageError(f"2l = {two_l} exceeds the corepresentation bound 4")


def run_spherical_u1(args) -> Report:
    lmax = 2 if args.lmax is None else args.lmax
    _check_corep_bound(2 * lmax)
    alg = SUq2(args.s)
    report = Report("spherical-u1", {"s": args.s, "lmax": lmax})
    data = []
    for l in range(lmax + 1):
        element = dual.spherical_u1(alg, l)
        report.add(f"l={l}: equals p_l(gamma gamma*; q^2)", element == dual.legendre_spherical(alg, l), window=1)
        data.append({"l": l, "element": element.to_json_list()})
    report.data = data
    return report


def run_spherical_j(args) -> Report:
    two_l_max = 4 if args.two_l_max is None else args.two_l_max
    _check_corep_bound(two_l_max)
    alg = SUq2(args.s)
    report = Report("spherical-j", {"s": args.s, "sigma": args.sigma, "two_l_max": two_l_max})
    data = []
    for two_l in range(two_l_max + 1):
        l = Fraction(two_l, 2)
        try:
            element = dual.spherical_j(alg, l, args.sigma)
            dim = 1
        except dual.SphericalDimensionError as exc:
            element, dim = None, exc.dimension
        expected = 1 if two_l % 2 == 0 else 0
        report.add(f"l={l}: biinvariant dimension", dim == expected, window=1,
                   witness={"dimension": dim, "expected": expected})
        entry = {"l": l, "dimension": dim}
        if element is not None:
            entry["element"] = element.to_json_list()
        data.append(entry)
    report.data = data
    return report


def run_gelfand_scan(args) -> Report:
    two_l_max = 8 if args.two_l_max is None else args.two_l_max
    report = Report("gelfand-scan", {"s": args.s, "sigma": args.sigma, "two_l_max": two_l_max})
    dims = dual.gelfand_scan(args.s, args.sigma, two_l_max)
    for two_l, dim in enumerate(dims):
        expected = 1 if two_l % 2 == 0 else 0
        report.add(f"l={Fraction(two_l, 2)}", dim == expected, window=1,
                   witness={"dimension": dim, "expected": expected})
    report.data = {"dimensions": dims}
    report.table = (["two_l", "l", "dimension"], [[n, Fraction(n, 2), d] for n, d in enumerate(dims)])
    return report


def run_compare_aw(args) -> Report:
    lmax = 2 if args.lmax is None else args.lmax
    _check_corep_bound(2 * lmax)
    alg = SUq2(args.s)
    report = Report("compare-aw", {"s": args.s, "sigma": args.sigma, "lmax": lmax})
    data = []
    for l in range(lmax + 1):
        d = dual.compare_aw_detail(alg, l, args.sigma)
        report.add(f"l={l}: spherical element equals normalised Askey-Wilson member", d["equal"], window=1)
        report.add(f"l={l}: relating multiple positive", d["multiple_positive"], window=1,
                   witness={"multiple": d["multiple"]})
        data.append({"l": l, "multiple": d["multiple"],
                     "equal_ab_parameters_match": d["equal_ab_parameters_match"]})
    report.data = data
    return report


CHECKS = {
    "linearize": run_linearize,
    "verify-hypergroup": run_verify_hypergroup,
    "verify-hopf": run_verify_hopf,
    "verify-involutions": run_verify_involutions,
    "verify-haar": run_verify_haar,
    "verify-coideal": run_verify_coideal,
    "spherical-u1": run_spherical_u1,
    "spherical-j": run_spherical_j,
    "gelfand-scan": run_gelfand_scan,
    "compare-aw": run_compare_aw,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qgelfand", description=__doc__.splitlines()[0])
    parser.add_argument("check", choices=sorted(CHECKS))
    parser.add_argument("--family", choices=FAMILIES, default=LITTLE_Q_LEGENDRE)
    parser.add_argument("--s", type=_s_arg, default=Fraction(1, 2), help="q = s^2, 0 < s < 1 (e.g. 1/2)")
    parser.add_argument("--sigma", type=_sigma_arg, default=Fraction(0), help="half-integer, e.g. 1/2")
    parser.add_argument("--lmax", type=_nonneg, default=None)
    parser.add_argument("--two-l-max", type=_nonneg, default=None)
    parser.add_argument("--degree", type=_nonneg, default=None)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--oracle", action="store_true",
                        help="linearize: also compare against the moment method")
    parser.add_argument("--out", choices=("json", "csv"), default="json")
    return parser


def run_check(argv) -> tuple[Report, str]:
    args = build_parser().parse_args(argv)
    if args.check in ("linearize", "verify-hypergroup") and args.lmax is None:
        args.lmax = 6 if args.check == "linearize" else 8
    return CHECKS[args.check](args), args.out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        report, fmt = run_check(argv)
    except UsageError as exc:
        print(f"qgelfand: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = getattr(sys.stdout, "buffer", None)
    payload = emit_report(report, fmt)
    if out is not None:
        out.write(payload)
        out.flush()
    else:
        sys.stdout.write(payload.decode())
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
