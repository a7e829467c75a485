"""Pure-numpy versions of the kernels in ``_kernels_nb``.

Same control flow; the per-level loops are replaced by array expressions.
"""

import math

import numpy as np

STATUS_OK = 0
STATUS_OUTER_CAP = 1
STATUS_INNER_CAP = 2
STATUS_BRACKET = 3

_lgamma = np.vectorize(math.lgamma, otypes=[float])


def bose_entropy(nbar, g):
    nbar = np.asarray(nbar, dtype=float)
    g = np.asarray(g, dtype=float)
    mask = nbar > 0.0
    n = nbar[mask]
    return float(np.sum(g[mask] * (np.log1p(n) + n * np.log1p(1.0 / n))))


def ln_binom_sum(usage, size):
    usage = np.asarray(usage, dtype=float)
    size = np.asarray(size, dtype=float)
    if usage.size == 0:
        return 0.0
    return float(np.sum(_lgamma(usage + size) - _lgamma(usage + 1.0) - _lgamma(size)))


def occupancy_sums(log_z, beta, deps, g):
    with np.errstate(divide="ignore", over="ignore"):
        occ = 1.0 / np.expm1(math.exp(log_z) + beta * deps)
    weighted = g * occ
    return float(weighted.sum()), float((deps * weighted).sum())


def solve_log_z(beta, deps, g, n_target, max_iter):
    lo = hi = 0.0
    c0, _ = occupancy_sums(0.0, beta, deps, g)
    step = 1.0
    if c0 > n_target:
        hi = lo + step
        for _ in range(max_iter):
            c, _ = occupancy_sums(hi, beta, deps, g)
            if c <= n_target:
                break
            lo = hi
            step *= 2.0
            hi = lo + step
        else:
            return hi, STATUS_BRACKET
    else:
        lo = hi - step
        for _ in range(max_iter):
            c, _ = occupancy_sums(lo, beta, deps, g)
            if c > n_target:
                break
            hi = lo
            step *= 2.0
            lo = hi - step
        else:
            return lo, STATUS_BRACKET
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid, STATUS_OK
        c, _ = occupancy_sums(mid, beta, deps, g)
        if c == n_target:
            return mid, STATUS_OK
        if c > n_target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi), STATUS_INNER_CAP


def _mean_excess(log_beta, deps, g, n_target, max_iter):
    beta = math.exp(log_beta)
    log_z, status = solve_log_z(beta, deps, g, n_target, max_iter)
    count, excess = occupancy_sums(log_z, beta, deps, g)
    return excess / count, log_z, status


def fit_nested(deps, g, n_target, excess_target, max_iter):
    deps = np.asarray(deps, dtype=float)
    g = np.asarray(g, dtype=float)
    t0 = -math.log(float(deps.max()))
    m0, s0, st = _mean_excess(t0, deps, g, n_target, max_iter)
    if st != STATUS_OK:
        return t0, s0, st
    step = 1.0
    if m0 > excess_target:
        lo = t0
        hi = lo + step
        for _ in range(max_iter):
            m, s, st = _mean_excess(hi, deps, g, n_target, max_iter)
            if st != STATUS_OK:
                return hi, s, st
            if m <= excess_target:
                break
            lo = hi
            step *= 2.0
            hi = lo + step
        else:
            return hi, s, STATUS_BRACKET
    else:
        hi = t0
        lo = hi - step
        for _ in range(max_iter):
            m, s, st = _mean_excess(lo, deps, g, n_target, max_iter)
            if st != STATUS_OK:
                return lo, s, st
            if m > excess_target:
                break
            hi = lo
            step *= 2.0
            lo = hi - step
        else:
            return lo, s, STATUS_BRACKET
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            m, s, st = _mean_excess(mid, deps, g, n_target, max_iter)
            return mid, s, st
        m, s, st = _mean_excess(mid, deps, g, n_target, max_iter)
        if st != STATUS_OK:
            return mid, s, st
        if m == excess_target:
            return mid, s, STATUS_OK
        if m > excess_target:
            lo = mid
        else:
            hi = mid
    mid = 0.5 * (lo + hi)
    m, s, st = _mean_excess(mid, deps, g, n_target, max_iter)
    return mid, s, STATUS_OUTER_CAP


def warmup():
    pass
