"""betadome: the Beta family on the mean-variance dome.

Computes with Beta laws parametrized by (mean, variance) over the dome
{0 < m < 1, 0 < v < m - m^2} and its closure (point masses on the bottom
edge, two-point laws on the parabola), decides first- and second-order
stochastic dominance between any two members, quantifies mean-preserving
spreads, builds verified chains through the dominance lattice, and solves the
CARA-utility one-risky-asset allocation problem exhaustively over the dome.
"""

from betadome import errors
from betadome.dome import (
    BOUNDARY_SNAP,
    Boundary,
    DomePoint,
    DomeRegion,
    classify_region,
    curve_c1,
    curve_c2,
    from_shape,
    parabola,
    to_shape,
)
from betadome.dominance import (
    DominanceResult,
    HassePath,
    OrderKind,
    Verdict,
    crossing_point,
    fsd_compare,
    hasse_path,
    mps_magnitude,
    one_param_order,
    probe_grid,
    ssd_compare,
)
from betadome.kernels import BACKEND
from betadome.laws import (
    BetaLaw,
    LawKind,
    MomentSummary,
    boundary_limit_check,
)
from betadome.portfolio import (
    OptimalAllocation,
    PortfolioProblem,
    Saturation,
    closed_form_boundary_gamma,
    expected_utility,
    in_full_risk_region,
    laplace_transform,
    mean_threshold,
    optimal_gamma,
)
from betadome.special import (
    ShapeParams,
    beta_fn,
    digamma,
    log_beta_fn,
    log_gamma,
    reg_inc_beta,
)
from betadome.sweep import (
    SweepCell,
    SweepGrid,
    interpolate,
    run_sweep,
    write_csv,
    write_heatmap,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BOUNDARY_SNAP",
    "BetaLaw",
    "Boundary",
    "DomePoint",
    "DomeRegion",
    "DominanceResult",
    "HassePath",
    "LawKind",
    "MomentSummary",
    "OptimalAllocation",
    "OrderKind",
    "PortfolioProblem",
    "Saturation",
    "ShapeParams",
    "SweepCell",
    "SweepGrid",
    "Verdict",
    "beta_fn",
    "boundary_limit_check",
    "classify_region",
    "closed_form_boundary_gamma",
    "crossing_point",
    "curve_c1",
    "curve_c2",
    "digamma",
    "errors",
    "expected_utility",
    "from_shape",
    "fsd_compare",
    "hasse_path",
    "in_full_risk_region",
    "interpolate",
    "laplace_transform",
    "log_beta_fn",
    "log_gamma",
    "mean_threshold",
    "mps_magnitude",
    "one_param_order",
    "optimal_gamma",
    "parabola",
    "probe_grid",
    "reg_inc_beta",
    "run_sweep",
    "ssd_compare",
    "to_shape",
    "write_csv",
    "write_heatmap",
    "__version__",
]
