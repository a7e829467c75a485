"""Dispatch to the numba or numpy kernel set (see ``_accel``)."""

from ._accel import USE_NUMBA, backend_name

if USE_NUMBA:
    from . import _kernels_nb as _impl
else:
    from . import _kernels_np as _impl

bose_entropy = _impl.bose_entropy
ln_binom_sum = _impl.ln_binom_sum
occupancy_sums = _impl.occupancy_sums
solve_log_z = _impl.solve_log_z
fit_nested = _impl.fit_nested
warmup = _impl.warmup

STATUS_OK = _impl.STATUS_OK
STATUS_OUTER_CAP = _impl.STATUS_OUTER_CAP
STATUS_INNER_CAP = _impl.STATUS_INNER_CAP
STATUS_BRACKET = _impl.STATUS_BRACKET

__all__ = [
    "USE_NUMBA",
    "backend_name",
    "bose_entropy",
    "ln_binom_sum",
    "occupancy_sums",
    "solve_log_z",
    "fit_nested",
    "warmup",
]
