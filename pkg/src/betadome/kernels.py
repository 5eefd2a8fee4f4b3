"""Kernel backend selector.

Prefers the compiled Cython kernels and falls back to the pure-Python twin
when the extension is unavailable. Set ``BETADOME_FORCE_PYTHON_KERNELS=1`` to
force the fallback (used by the benchmark and parity tests).

``BACKEND`` is ``"compiled"`` or ``"python"``.
"""

import os

if os.environ.get("BETADOME_FORCE_PYTHON_KERNELS"):
    from betadome import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from betadome import _kernels_c as _impl

        BACKEND = "compiled"
    except ImportError:
        from betadome import _kernels_py as _impl

        BACKEND = "python"

log_gamma = _impl.log_gamma
digamma = _impl.digamma
log_beta = _impl.log_beta
reg_inc_beta = _impl.reg_inc_beta
integrated_cdf_ab = _impl.integrated_cdf_ab
reg_inc_beta_many = _impl.reg_inc_beta_many
integrated_cdf_many = _impl.integrated_cdf_many
cdf_and_integrated_many = _impl.cdf_and_integrated_many
laplace_series = _impl.laplace_series

__all__ = [
    "BACKEND",
    "log_gamma",
    "digamma",
    "log_beta",
    "reg_inc_beta",
    "integrated_cdf_ab",
    "reg_inc_beta_many",
    "integrated_cdf_many",
    "cdf_and_integrated_many",
    "laplace_series",
]
