"""Command-line interface.

One machine-readable line of key=value pairs per result on stdout; one-line
diagnostics on stderr. Exit codes: 0 success, 2 usage/domain error, 1 internal
numerics failure.
"""

import argparse
import sys

from betadome.dome import DomePoint, classify_region, to_shape
from betadome.dominance import (
    crossing_point,
    hasse_path,
    mps_magnitude,
    one_param_order,
    ssd_compare,
)
from betadome.errors import DomainError, NumericsError
from betadome.laws import BetaLaw
from betadome.portfolio import PortfolioProblem, optimal_gamma
from betadome.sweep import run_sweep, write_csv, write_heatmap


def _fmt(x):
    return format(float(x), ".9g")


def _law_at(mean, variance):
    return BetaLaw.from_point(DomePoint(mean, variance))


def _cmd_classify(args):
    pt = DomePoint(args.mean, args.variance)
    region = classify_region(pt)
    shape = to_shape(pt)
    print(f"region={region.value} alpha={_fmt(shape.alpha)} beta={_fmt(shape.beta)}")
    return 0


def _cmd_cdf(args):
    law = _law_at(args.mean, args.variance)
    print(f"cdf={_fmt(law.cdf(args.x))}")
    return 0


def _cmd_moments(args):
    ms = _law_at(args.mean, args.variance).moments()
    skew = "undefined" if ms.skewness is None else _fmt(ms.skewness)
    kurt = "undefined" if ms.kurtosis is None else _fmt(ms.kurtosis)
    print(
        f"mean={_fmt(ms.mean)} variance={_fmt(ms.variance)} "
        f"skewness={skew} kurtosis={kurt}"
    )
    return 0


def _cmd_compare(args):
    result = ssd_compare(_law_at(args.m1, args.v1), _law_at(args.m2, args.v2))
    line = (
        f"verdict={result.verdict.value} "
        f"order={result.order.value if result.order else 'None'} "
        f"delta_min={_fmt(result.delta_min)} delta_max={_fmt(result.delta_max)}"
    )
    if result.witness_x is not None:
        line += f" witness_x={_fmt(result.witness_x)}"
    print(line)
    return 0


def _cmd_crossing(args):
    a = BetaLaw.interior(args.mean, args.v1)
    b = BetaLaw.interior(args.mean, args.v2)
    print(f"x_c={_fmt(crossing_point(a, b))}")
    return 0


def _cmd_mps(args):
    by_alpha = args.alpha1 is not None or args.alpha2 is not None
    by_dome = args.mean is not None or args.v1 is not None or args.v2 is not None
    if by_alpha == by_dome:
        raise DomainError(
            "mps takes either --alpha1/--alpha2 or --mean/--v1/--v2, not a mix"
        )
    if by_alpha:
        if args.alpha1 is None or args.alpha2 is None:
            raise DomainError("mps by shape needs both --alpha1 and --alpha2")
        if not (args.alpha1 > 0.0 and args.alpha2 > 0.0):
            raise DomainError("alphas must be positive")
        a = BetaLaw.interior(0.5, 0.25 / (1.0 + 2.0 * args.alpha1))
        b = BetaLaw.interior(0.5, 0.25 / (1.0 + 2.0 * args.alpha2))
    else:
        if args.mean is None or args.v1 is None or args.v2 is None:
            raise DomainError("mps by dome point needs --mean, --v1 and --v2")
        a = _law_at(args.mean, args.v1)
        b = _law_at(args.mean, args.v2)
    print(f"mps={mps_magnitude(a, b):.9f}")
    return 0


def _cmd_hasse(args):
    path = hasse_path(args.mean, args.variance)
    for idx, law in enumerate(path.nodes):
        print(f"node={idx} kind={law.kind.value} m={_fmt(law.m)} v={_fmt(law.v)}")
    for idx, check in enumerate(path.edge_checks):
        print(
            f"edge={idx} verdict={check.verdict.value} "
            f"order={check.order.value if check.order else 'None'} "
            f"margin={_fmt(check.delta_max)}"
        )
    print(f"path=verified nodes={len(path.nodes)} edges={len(path.edge_checks)}")
    return 0


def _cmd_optimize(args):
    law = _law_at(args.mean, args.variance)
    result = optimal_gamma(PortfolioProblem(law, args.lam, args.rate))
    print(
        f"gamma_star={_fmt(result.gamma_star)} eu={_fmt(result.eu_at_optimum)} "
        f"boundary={result.boundary_active.value}"
    )
    return 0


def _cmd_sweep(args):
    grid = run_sweep(args.grid_mean, args.grid_var, args.lam, args.rate)
    write_csv(grid, args.csv)
    line = f"cells={len(grid.cells)} csv={args.csv}"
    if args.ppm:
        write_heatmap(grid, args.ppm)
        line += f" ppm={args.ppm}"
    print(line)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="betadome",
        description="Beta laws on the mean-variance dome: classification, "
        "stochastic dominance, mean-preserving spreads, and CARA portfolio sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="shape region and (alpha, beta) of an interior point")
    p.add_argument("--mean", type=float, required=True)
    p.add_argument("--variance", type=float, required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("cdf", help="CDF of the family member at a dome point")
    p.add_argument("--mean", type=float, required=True)
    p.add_argument("--variance", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(func=_cmd_cdf)

    p = sub.add_parser("moments", help="mean/variance/skewness/kurtosis at a dome point")
    p.add_argument("--mean", type=float, required=True)
    p.add_argument("--variance", type=float, required=True)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("compare", help="second-order dominance verdict for two dome points")
    p.add_argument("--m1", type=float, required=True)
    p.add_argument("--v1", type=float, required=True)
    p.add_argument("--m2", type=float, required=True)
    p.add_argument("--v2", type=float, required=True)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("crossing", help="CDF crossing point of two equal-mean interior laws")
    p.add_argument("--mean", type=float, required=True)
    p.add_argument("--v1", type=float, required=True)
    p.add_argument("--v2", type=float, required=True)
    p.set_defaults(func=_cmd_crossing)

    p = sub.add_parser("mps", help="mean-preserving-spread magnitude")
    p.add_argument("--alpha1", type=float)
    p.add_argument("--alpha2", type=float)
    p.add_argument("--mean", type=float)
    p.add_argument("--v1", type=float)
    p.add_argument("--v2", type=float)
    p.set_defaults(func=_cmd_mps)

    p = sub.add_parser("hasse", help="verified five-node chain through an interior point")
    p.add_argument("--mean", type=float, required=True)
    p.add_argument("--variance", type=float, required=True)
    p.set_defaults(func=_cmd_hasse)

    p = sub.add_parser("optimize", help="optimal risky fraction for a CARA investor")
    p.add_argument("--mean", type=float, required=True)
    p.add_argument("--variance", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--rate", type=float, required=True)
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("sweep", help="per-node optimal fractions over the whole dome")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--rate", type=float, required=True)
    p.add_argument("--grid-mean", type=int, required=True)
    p.add_argument("--grid-var", type=int, required=True)
    p.add_argument("--csv", required=True)
    p.add_argument("--ppm")
    p.set_defaults(func=_cmd_sweep)

    return parser


def cli_dispatch(argv=None):
    """Parse argv and run one subcommand; returns the process exit code."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericsError as exc:
        print(f"internal numerics failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
