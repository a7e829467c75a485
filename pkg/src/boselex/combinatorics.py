"""Configuration counts for a descriptor system.

``N`` indistinguishable uses spread over ``G`` distinguishable member words
can be arranged in C(N+G-1, N) ways (stars and bars). The logarithm of the
product over classes is the configuration entropy; for large ``N`` and ``G``
it is approximated by the Bose-Einstein form ``G[(1+n)ln(1+n) - n ln n]``.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import DomainError, OracleTooLargeError

ENUMERATION_LIMIT = 10**6
EXACT_LOG_LIMIT = 64


def _check_pair(n, g):
    if n < 0 or int(n) != n:
        raise DomainError(f"usage N must be a nonnegative integer, got {n!r}")
    if g < 1 or int(g) != g:
        raise DomainError(f"degeneracy G must be a positive integer, got {g!r}")


def count_configurations_exact(n: int, g: int) -> int:
    """(N+G-1)! / (N! (G-1)!) as an exact integer."""
    _check_pair(n, g)
    return math.comb(int(n) + int(g) - 1, int(n))


def enumerate_configurations(n: int, g: int) -> list[tuple[int, ...]]:
    """All G-tuples of nonnegative integers summing to N, in lexicographic order.

    Brute-force oracle for :func:`count_configurations_exact`; refuses
    instances with more than ``ENUMERATION_LIMIT`` tuples.
    """
    total = count_configurations_exact(n, g)
    if total > ENUMERATION_LIMIT:
        raise OracleTooLargeError(f"C({n}+{g}-1, {n}) = {total} exceeds {ENUMERATION_LIMIT}")
    out: list[tuple[int, ...]] = []

    def extend(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for first in range(remaining + 1):
            extend(prefix + (first,), remaining - first, slots - 1)

    extend((), int(n), int(g))
    return out


def _as_arrays(stats: Iterable[Sequence[float]]):
    pairs = [(s[0], s[1]) for s in stats]
    for n, g in pairs:
        if g < 1:
            raise DomainError(f"degeneracy G must be >= 1, got {g!r}")
        if n < 0:
            raise DomainError(f"usage N must be >= 0, got {n!r}")
    usage = np.array([p[0] for p in pairs], dtype=float)
    size = np.array([p[1] for p in pairs], dtype=float)
    return pairs, usage, size


def ln_count_total(stats: Iterable[Sequence[float]], method: str = "auto") -> float:
    """ln prod_i C(N_i+G_i-1, N_i) in nats.

    ``method`` is ``"lgamma"``, ``"exact"`` (log of the exact integer) or
    ``"auto"``, which takes the exact route when every N_i + G_i is at most
    ``EXACT_LOG_LIMIT``.
    """
    pairs, usage, size = _as_arrays(stats)
    if method == "auto":
        exact = all(n + g <= EXACT_LOG_LIMIT for n, g in pairs)
        method = "exact" if exact else "lgamma"
    if method == "exact":
        return math.fsum(math.log(count_configurations_exact(n, g)) for n, g in pairs)
    if method == "lgamma":
        return kernels.ln_binom_sum(usage, size)
    raise ValueError(f"unknown method {method!r}")


def stirling_entropy(stats: Iterable[Sequence[float]]) -> float:
    """sum_j G_j [(1+n_j)ln(1+n_j) - n_j ln n_j] with n_j = N_j/G_j.

    Classes with N_j = 0 contribute nothing. N and G may be real.
    """
    _, usage, size = _as_arrays(stats)
    if usage.size == 0:
        return 0.0
    return kernels.bose_entropy(usage / size, size)
