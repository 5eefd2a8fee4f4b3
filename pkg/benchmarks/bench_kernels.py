"""Compiled-vs-pure kernel benchmark.

Times the hot kernels (incomplete beta over probe grids, the paired
CDF/integrated-CDF evaluation the dominance comparator uses, the Laplace
series the portfolio optimizer calls, and scalar log-gamma) on both backends
and prints the speedup. Run:

    python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

import betadome._kernels_py as pure

try:
    import betadome._kernels_c as compiled
except ImportError:
    compiled = None


def timeit(fn, *args, repeat=5, min_calls=1):
    """Best-of-`repeat` wall time for `min_calls` calls of fn(*args)."""
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for _ in range(min_calls):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / min_calls)
    return best


def bench(name, fn_name, args, calls):
    rows = []
    t_pure = timeit(getattr(pure, fn_name), *args, min_calls=calls)
    rows.append(("python", t_pure))
    if compiled is not None:
        t_comp = timeit(getattr(compiled, fn_name), *args, min_calls=calls)
        rows.append(("compiled", t_comp))
        ratio = t_pure / t_comp if t_comp > 0 else float("inf")
    else:
        ratio = float("nan")
    per_call = {backend: t for backend, t in rows}
    line = f"{name:<44s}"
    for backend in ("python", "compiled"):
        if backend in per_call:
            line += f"  {backend}: {per_call[backend] * 1e6:10.1f} us"
        else:
            line += f"  {backend}: {'n/a':>13s}"
    line += f"  speedup: {ratio:6.1f}x"
    print(line)
    return ratio


def main():
    xs_small = np.linspace(0.0, 1.0, 65)
    xs_probe = np.linspace(0.0, 1.0, 2049)

    print(f"compiled backend available: {compiled is not None}\n")
    ratios = []
    ratios.append(bench("reg_inc_beta_many (65 pts, a=b=2)",
                        "reg_inc_beta_many", (xs_small, 2.0, 2.0), 50))
    ratios.append(bench("reg_inc_beta_many (2049 pts, a=0.7, b=3.1)",
                        "reg_inc_beta_many", (xs_probe, 0.7, 3.1), 5))
    ratios.append(bench("cdf_and_integrated_many (2049 pts)",
                        "cdf_and_integrated_many", (xs_probe, 1.3, 0.4), 5))
    ratios.append(bench("laplace_series (a=0.8, b=2.5, s=4)",
                        "laplace_series", (0.8, 2.5, 4.0), 2000))
    ratios.append(bench("laplace_series (a=0.05, b=0.03, s=25)",
                        "laplace_series", (0.05, 0.03, 25.0), 2000))
    ratios.append(bench("log_gamma scalar (x=7.3)",
                        "log_gamma", (7.3,), 20000))
    ratios.append(bench("digamma scalar (x=0.4)",
                        "digamma", (0.4,), 20000))
    if compiled is not None:
        print(f"\ngeometric-mean speedup: "
              f"{float(np.exp(np.mean(np.log(ratios)))):.1f}x")


if __name__ == "__main__":
    main()
