"""Exhaustive dome sweep: per-node optimal fractions, interpolation, CSV and
PPM outputs.

The grid is the uniform mesh m_i = i/(n_mean-1), v_j = j/4(n_var-1); nodes
above the parabola are absent. Bottom-edge and parabola nodes are discrete
laws (point mass / two-point), so they use the exact closed-form solutions;
interior nodes run the numeric optimizer. Columns are independent, so the
sweep can fan out over processes; assembly is order-independent and
deterministic.
"""

import math
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, Tuple

from betadome.dome import BOUNDARY_SNAP
from betadome.errors import DomainError, OutsideDomeError, VerificationError
from betadome.laws import BetaLaw
from betadome.portfolio import (
    PortfolioProblem,
    closed_form_boundary_gamma,
    optimal_gamma,
)

#: tolerated non-monotonicity in a sweep column before aborting
_MONOTONE_TOL = 1e-6


@dataclass(frozen=True)
class SweepCell:
    m: float
    v: float
    gamma_star: float


@dataclass
class SweepGrid:
    """Sweep result: grid geometry plus per-node cells keyed by (i, j)."""

    n_mean: int
    n_var: int
    lam: float
    rate: float
    cells: Dict[Tuple[int, int], SweepCell] = field(default_factory=dict)

    def mean_value(self, i):
        return i / (self.n_mean - 1)

    def var_value(self, j):
        return 0.25 * j / (self.n_var - 1)

    def sorted_cells(self):
        """Cells in row-major order: increasing m, then increasing v."""
        for i in range(self.n_mean):
            for j in range(self.n_var):
                cell = self.cells.get((i, j))
                if cell is not None:
                    yield cell


def _solve_node(m, v, lam, rate):
    """gamma* at one grid node, dispatching on the closure regime."""
    if v <= BOUNDARY_SNAP:
        return 1.0 if m > rate else 0.0
    if v >= m - m * m - BOUNDARY_SNAP:
        if m <= rate:
            return 0.0
        return closed_form_boundary_gamma(m, lam, rate)
    law = BetaLaw.interior(m, v)
    return optimal_gamma(PortfolioProblem(law, lam, rate)).gamma_star


def _solve_column(task):
    """Worker: solve one grid column. task = (i, m, [(j, v), ...], lam, rate)."""
    i, m, nodes, lam, rate = task
    return i, [(j, v, _solve_node(m, v, lam, rate)) for j, v in nodes]


def run_sweep(n_mean, n_var, lam, rate, workers=1):
    """Sweep the dome closure on an n_mean x n_var mesh.

    ``workers`` > 1 distributes columns over a process pool; the result is
    identical to the serial sweep (cells are independent).
    """
    if not (isinstance(n_mean, int) and n_mean >= 2):
        raise DomainError(f"n_mean must be an integer >= 2, got {n_mean}")
    if not (isinstance(n_var, int) and n_var >= 2):
        raise DomainError(f"n_var must be an integer >= 2, got {n_var}")
    grid = SweepGrid(n_mean=n_mean, n_var=n_var, lam=lam, rate=rate)
    # validate lam/rate once up front with the same rules the solvers use
    PortfolioProblem(BetaLaw.point_mass(0.5), lam, rate)

    tasks = []
    for i in range(n_mean):
        m = grid.mean_value(i)
        cap = m - m * m + BOUNDARY_SNAP
        nodes = [(j, grid.var_value(j)) for j in range(n_var) if grid.var_value(j) <= cap]
        if nodes:
            tasks.append((i, m, nodes, lam, rate))

    if workers and workers > 1:
        with Pool(processes=workers) as pool:
            results = pool.map(_solve_column, tasks)
    else:
        results = [_solve_column(task) for task in tasks]

    for i, column in results:
        m = grid.mean_value(i)
        for j, v, gamma in column:
            grid.cells[(i, j)] = SweepCell(m=m, v=v, gamma_star=gamma)

    _check_columns_monotone(grid)
    return grid


def _check_columns_monotone(grid):
    """gamma* must be nonincreasing in v within every column (higher variance
    is dominated, so the optimizer cannot become more aggressive). A violation
    beyond tolerance is a numerics bug and aborts with diagnostics."""
    for i in range(grid.n_mean):
        prev = None
        for j in range(grid.n_var):
            cell = grid.cells.get((i, j))
            if cell is None:
                continue
            if prev is not None and cell.gamma_star - prev.gamma_star > _MONOTONE_TOL:
                raise VerificationError(
                    "sweep column monotonicity violated: "
                    f"m={cell.m}, gamma*({prev.v})={prev.gamma_star} but "
                    f"gamma*({cell.v})={cell.gamma_star}"
                )
            prev = cell


def interpolate(grid, m, v):
    """gamma* at an off-grid dome point.

    Bilinear over the four surrounding nodes; near the parabola, where corner
    nodes are absent, falls back to an affine fit on the surviving triangle,
    then to the nearest stored cell. Clamped to [0, 1].
    """
    if not 0.0 <= m <= 1.0:
        raise OutsideDomeError(f"mean {m} outside [0, 1]")
    if not -BOUNDARY_SNAP <= v <= m - m * m + BOUNDARY_SNAP:
        raise OutsideDomeError(
            f"variance {v} outside [0, D({m})] with D({m}) = {m - m * m}"
        )
    fi = m * (grid.n_mean - 1)
    fj = v * (grid.n_var - 1) / 0.25
    i0 = max(0, min(int(math.floor(fi)), grid.n_mean - 2))
    j0 = max(0, min(int(math.floor(fj)), grid.n_var - 2))
    tx = fi - i0
    ty = fj - j0
    corners = (
        ((i0, j0), (1.0 - tx) * (1.0 - ty)),
        ((i0 + 1, j0), tx * (1.0 - ty)),
        ((i0, j0 + 1), (1.0 - tx) * ty),
        ((i0 + 1, j0 + 1), tx * ty),
    )
    present = [(grid.cells[idx], w) for idx, w in corners if idx in grid.cells]

    if len(present) == 4:
        value = sum(cell.gamma_star * w for cell, w in present)
    elif len(present) == 3:
        value = _affine_fit([cell for cell, _ in present], m, v)
    elif present:
        nearest = min(present, key=lambda cw: (cw[0].m - m) ** 2 + (cw[0].v - v) ** 2)
        value = nearest[0].gamma_star
    else:
        nearest = min(
            grid.cells.values(), key=lambda c: (c.m - m) ** 2 + (c.v - v) ** 2
        )
        value = nearest.gamma_star
    return min(1.0, max(0.0, value))


def _affine_fit(cells, m, v):
    """Evaluate the plane through three (m, v, gamma*) points at (m, v)."""
    (m1, v1, g1), (m2, v2, g2), (m3, v3, g3) = (
        (c.m, c.v, c.gamma_star) for c in cells
    )
    det = (m2 - m1) * (v3 - v1) - (m3 - m1) * (v2 - v1)
    wa = ((m2 - m) * (v3 - v) - (m3 - m) * (v2 - v)) / det
    wb = ((m3 - m) * (v1 - v) - (m1 - m) * (v3 - v)) / det
    return wa * g1 + wb * g2 + (1.0 - wa - wb) * g3


def _fmt9(x):
    return format(float(x), ".9g")


def write_csv(grid, path):
    """Write cells as `m,v,gamma_star` rows (9 significant digits, LF endings,
    row-major by increasing m then v; above-parabola nodes are absent)."""
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("m,v,gamma_star\n")
            for cell in grid.sorted_cells():
                fh.write(f"{_fmt9(cell.m)},{_fmt9(cell.v)},{_fmt9(cell.gamma_star)}\n")
    except OSError as exc:
        raise OSError(f"failed writing sweep CSV to {path}: {exc}") from exc


def write_heatmap(grid, path):
    """Write the binary PPM (P6) heatmap: red = round(255 gamma*), green = 0,
    blue = round(255 (1 - gamma*)); white above the parabola; top row is the
    largest variance."""
    buf = bytearray(f"P6\n{grid.n_mean} {grid.n_var}\n255\n".encode("ascii"))
    for j in range(grid.n_var - 1, -1, -1):
        for i in range(grid.n_mean):
            cell = grid.cells.get((i, j))
            if cell is None:
                buf += b"\xff\xff\xff"
            else:
                buf.append(int(round(255.0 * cell.gamma_star)))
                buf.append(0)
                buf.append(int(round(255.0 * (1.0 - cell.gamma_star))))
    try:
        with open(path, "wb") as fh:
            fh.write(bytes(buf))
    except OSError as exc:
        raise OSError(f"failed writing sweep heatmap to {path}: {exc}") from exc
