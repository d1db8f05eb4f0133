"""Command-line front end.

Exit codes: 0 success, 2 invalid input or usage, 3 enumeration ceiling hit.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import analysis, carlitz, orbit
from .combinatorics import Partition
from .errors import DomainError, ResourceCeilingError, ValidationError

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CEILING = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _emit_json(obj, out):
    json.dump(obj, out)
    out.write("\n")


# subcommand handlers: (args, out) -> None


def cmd_cpoly(args, out):
    lam = args.partition
    if args.method == "enum":
        p = carlitz.cpoly_enum(lam, args.ceiling).poly
    elif args.method == "macmahon":
        p = carlitz.cpoly_macmahon(lam).poly
    else:
        e = carlitz.cpoly_enum(lam, args.ceiling).poly
        mm = carlitz.cpoly_macmahon(lam).poly
        diff = e - mm
        if args.format == "json":
            _emit_json({"partition": list(lam.parts), "enumeration": e.to_text(),
                        "macmahon": mm.to_text(), "diff": diff.to_json()}, out)
        else:
            out.write(f"enumeration: {e}\nmacmahon: {mm}\ndiff: {'' if diff.is_zero() else diff}\n")
        return
    if args.format == "json":
        _emit_json({"partition": list(lam.parts), "poly": p.to_text(), "terms": p.to_json()}, out)
    else:
        out.write(p.to_text() + "\n")


def cmd_descent_poly(args, out):
    p = carlitz.descent_poly(args.partition)
    if args.format == "json":
        _emit_json({"partition": list(args.partition.parts), "poly": p.to_text(),
                    "terms": p.to_json()}, out)
    else:
        out.write(p.to_text() + "\n")


def cmd_funeq(args, out):
    lam = args.partition
    res = carlitz.funeq_check(lam)
    payload = {"partition": list(lam.parts), "polynomial": {
        "holds": res.holds, "d1": res.d1, "d2": res.d2,
        "descent_poly_leading_coeff": str(res.leading_x_coeff), "monic": res.monic}}
    if args.euler:
        e = orbit.euler_funeq(lam)
        payload["euler_factor"] = {"holds": e.holds, "sign": e.sign, "d1": e.d1, "d2": e.d2}
    if args.format == "json":
        _emit_json(payload, out)
        return
    if res.holds:
        out.write(f"C({lam}) satisfies C(1/x,1/q) = x^-{res.d1} q^-{res.d2} C(x,q)\n")
    else:
        out.write(f"C({lam}) has no functional equation; C(x,1) leading coefficient "
                  f"{res.leading_x_coeff}\n")
    if args.euler:
        e = orbit.euler_funeq(lam)
        if e.holds:
            out.write(f"Euler factor: d(1/p) = {e.sign:+d} p^{e.d1} t^{e.d2} d(p)\n")
        else:
            out.write("Euler factor: no functional equation\n")


def cmd_unitary(args, out):
    rep = carlitz.unitary_factor(args.partition)
    if args.format == "json":
        _emit_json(rep.to_json(), out)
        return
    out.write(f"charney_davis: {rep.charney_davis}\nstatus: {rep.status}\n")
    if rep.factor is not None:
        out.write(f"factor: {rep.factor}\n")
    if rep.cofactor is not None:
        out.write(f"cofactor: {rep.cofactor}\n")


def cmd_scan(args, out):
    rows = carlitz.iter_conjecture_scan(args.max_N)
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(carlitz.SCAN_HEADER)
        for row in rows:
            writer.writerow([row.lambda1, row.lambda2, str(row.value), int(row.stanton_covered)])
            out.flush()
        return
    rows = list(rows)
    zeros = [[r.lambda1, r.lambda2] for r in rows if r.value == 0]
    summary = {"max_N": args.max_N, "pairs": len(rows), "zeros": zeros,
               "stanton_covered": sum(r.stanton_covered for r in rows)}
    if args.format == "json":
        _emit_json(summary, out)
    else:
        out.write(f"pairs scanned: {len(rows)}\nzeros: {len(zeros)}\n"
                  f"stanton covered: {summary['stanton_covered']}\n")


def cmd_orbit_counts(args, out):
    data = orbit.dirichlet_coeffs(args.partition, args.n_max)
    if args.format == "json":
        _emit_json({"partition": list(args.partition.parts),
                    "orbits": [str(v) for v in data.values],
                    "partial_sums": [str(v) for v in data.partial_sums]}, out)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("n", "orbits", "partial_sum"))
    for n, v, s in data.rows():
        writer.writerow((n, str(v), str(s)))


def cmd_euler_factor(args, out):
    ef = orbit.euler_factor(args.partition, args.prime)
    if args.format == "text":
        out.write(ef.to_text() + "\n")
        out.write("series: " + " ".join(str(v) for v in ef.series(args.series_k)) + "\n")
    else:
        _emit_json(ef.to_json(args.series_k), out)


def cmd_asymptotics(args, out):
    fit = orbit.asymptotic_fit(args.partition, args.n_max)
    if args.format == "json":
        _emit_json({"partition": list(fit.partition.parts), "n_max": fit.n_max,
                    "fitted_exponent": f"{fit.fitted_exponent:.6f}",
                    "K_estimate": f"{fit.K_estimate:.6f}",
                    "residuals": {str(k): f"{v:.6f}" for k, v in fit.residuals.items()}}, out)
        return
    out.write(f"fitted_exponent: {fit.fitted_exponent:.6f}\nK_estimate: {fit.K_estimate:.6f}\n")
    for k, v in fit.residuals.items():
        out.write(f"S({k})/{k}^{fit.partition.N}: {v:.6f}\n")


def cmd_boundary(args, out):
    rep = analysis.natural_boundary_report(args.partition)
    if args.format == "json":
        _emit_json(rep.to_json(), out)
        return
    data = rep.to_json()
    for key in ("type", "boundary_re_s", "alpha", "beta", "ghost_factor", "gamma",
                "b_gamma_at_omega", "unitary_factor", "conjecture_dependency"):
        out.write(f"{key}: {data[key]}\n")
    for note in rep.notes:
        out.write(f"note: {note}\n")


def cmd_igusa(args, out):
    ok = analysis.igusa_check(args.partition, args.prime, args.degree, args.ceiling)
    if args.format == "json":
        _emit_json({"partition": list(args.partition.parts), "prime": args.prime,
                    "degree": args.degree, "equal": ok}, out)
    else:
        out.write(("equal" if ok else "DIFFERENT") + "\n")


def cmd_reduced(args, out):
    f = analysis.reduced_series(args.partition)
    if args.format == "json":
        _emit_json({"partition": list(args.partition.parts), **f.to_json()}, out)
    else:
        out.write(f.to_text() + "\n")


def cmd_hilbert(args, out):
    f = analysis.hilbert_sd_simplex(args.m)
    same = f == analysis.reduced_series(Partition((1,) * args.m))
    if args.format == "json":
        _emit_json({"m": args.m, "f_vector": analysis.f_vector_sd(args.m), **f.to_json(),
                    "equals_reduced_series": same}, out)
    else:
        out.write(f.to_text() + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=None,
                        help="output format (default depends on the subcommand)")
    common.add_argument("--ceiling", type=_positive, default=None,
                        help="override the enumeration ceiling (default 10^8 or $ORBITSERIES_CEILING)")

    parser = _Parser(prog="orbitseries",
                     description="Orbit Dirichlet series of products of subgroup-growth maps.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, handler, help_text, default_format, partition=True):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if partition:
            p.add_argument("partition", type=_partition, help='parts like "3,3,1" or "2^3"')
        p.set_defaults(handler=handler, default_format=default_format)
        return p

    p = add("cpoly", cmd_cpoly,
            "Carlitz-type polynomial C_lambda(x,q): joint des/maj distribution on S_lambda", "text")
    p.add_argument("--method", choices=("enum", "macmahon", "both-with-diff"), default="macmahon")
    add("descent-poly", cmd_descent_poly, "descent polynomial C_lambda(x,1)", "text")
    p = add("funeq", cmd_funeq,
            "functional equation of C_lambda under (x,q) -> (1/x,1/q), and of the Euler factor",
            "text")
    p.add_argument("--euler", action="store_true", help="also check the Euler-factor identity")
    add("unitary", cmd_unitary,
        "Charney-Davis value C_lambda(-1,1) and the prescribed unitary factor 1 + x q^(rm/2)", "text")
    p = add("scan-conjecture", cmd_scan,
            "scan C_(l1,l2)(-1,1) != 0 for l1 > l2 (two-part nonvanishing conjecture)", "json",
            partition=False)
    p.add_argument("--max-N", dest="max_N", type=_positive, required=True)
    p = add("orbit-counts", cmd_orbit_counts,
            "closed-orbit counts O(n) of T_lambda and their partial sums", "csv")
    p.add_argument("--n-max", dest="n_max", type=_positive, required=True)
    p = add("euler-factor", cmd_euler_factor,
            "Euler factor C_lambda(t/p,p) / prod (1 - p^(i-1) t) of the orbit Dirichlet series",
            "json")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--series-k", dest="series_k", type=_nonnegative, default=10)
    p = add("asymptotics", cmd_asymptotics,
            "fit of partial orbit sums against K_lambda n^N", "text")
    p.add_argument("--n-max", dest="n_max", type=_positive, default=10**5)
    add("boundary-report", cmd_boundary,
        "Newton data, ghost factor and B-polynomials behind the natural boundary Re(s)=N-2",
        "json")
    p = add("igusa-check", cmd_igusa,
            "compare the Euler factor with its Igusa-function form over descent-set counts", "text")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--degree", type=_nonnegative, default=15)
    add("reduced", cmd_reduced, "reduced orbit Dirichlet series C_lambda(t,1)/(1-t)^N", "text")
    p = add("hilbert-sd", cmd_hilbert,
            "Hilbert series of the face ring of the barycentric subdivision of a simplex", "text",
            partition=False)
    p.add_argument("m", type=_positive)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.format is None:
        args.format = args.default_format
    try:
        args.handler(args, out)
    except ResourceCeilingError as exc:
        print(f"orbitseries: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except (ValidationError, DomainError) as exc:
        print(f"orbitseries: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
