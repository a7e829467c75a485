"""Loop kernels compiled with numba.

Mirrors ``_kernels_np`` statement for statement; the two are cross-checked
in the test suite. All arrays are float64.
"""

import math

import numpy as np
from numba import njit

STATUS_OK = 0
STATUS_OUTER_CAP = 1
STATUS_INNER_CAP = 2
STATUS_BRACKET = 3

_JIT = dict(cache=True, error_model="numpy")


@njit(**_JIT)
def bose_entropy(nbar, g):
    # sum_j G_j [(1+n)ln(1+n) - n ln n], written as G [ln(1+n) + n ln(1+1/n)]
    total = 0.0
    for i in range(nbar.shape[0]):
        n = nbar[i]
        if n > 0.0:
            total += g[i] * (math.log1p(n) + n * math.log1p(1.0 / n))
    return total


@njit(**_JIT)
def ln_binom_sum(usage, size):
    total = 0.0
    for i in range(usage.shape[0]):
        n = usage[i]
        m = size[i]
        total += math.lgamma(n + m) - math.lgamma(n + 1.0) - math.lgamma(m)
    return total


@njit(**_JIT)
def occupancy_sums(log_z, beta, deps, g):
    z = math.exp(log_z)
    count = 0.0
    excess = 0.0
    for i in range(deps.shape[0]):
        occ = 1.0 / math.expm1(z + beta * deps[i])
        count += g[i] * occ
        excess += deps[i] * g[i] * occ
    return count, excess


@njit(**_JIT)
def solve_log_z(beta, deps, g, n_target, max_iter):
    """Root of sum_i G_i / (exp(z + beta*deps_i) - 1) = n_target in log z."""
    lo = 0.0
    hi = 0.0
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


@njit(**_JIT)
def _mean_excess(log_beta, deps, g, n_target, max_iter):
    beta = math.exp(log_beta)
    log_z, status = solve_log_z(beta, deps, g, n_target, max_iter)
    count, excess = occupancy_sums(log_z, beta, deps, g)
    return excess / count, log_z, status


@njit(**_JIT)
def fit_nested(deps, g, n_target, excess_target, max_iter):
    """Nested monotone bisection for (log beta, log z).

    ``deps`` are level energies shifted so min(deps) == 0 and
    ``excess_target`` is E/N - min(eps). Mean excess energy is strictly
    decreasing in beta, so the outer search is a plain bracket in log beta.
    """
    spread = 0.0
    for i in range(deps.shape[0]):
        if deps[i] > spread:
            spread = deps[i]
    t0 = -math.log(spread)
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
    x = np.array([0.0, 1.0])
    w = np.array([1.0, 1.0])
    bose_entropy(x, w)
    ln_binom_sum(x, w)
    fit_nested(x, w, 1.0, 0.3, 200)
