"""Specific (per-token) entropy, Shannon entropy and the dilute limit."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .combinatorics import stirling_entropy
from .errors import DomainError

SUM_TOL = 1e-9


def _xlogx_pair(u: float, v: float) -> float:
    # (u+v)ln(u+v) - u ln u - v ln v, with 0 ln 0 = 0
    if u <= 0.0 or v <= 0.0:
        return 0.0
    return u * math.log1p(v / u) + v * math.log1p(u / v)


@dataclass(frozen=True)
class SpecificEntropyInput:
    """Thermodynamic-limit description of a descriptor system.

    ``p[i]`` is the limiting token share of class i, ``g[i]`` its share of
    member slots and ``rho`` the limiting tokens per slot.
    """

    p: tuple[float, ...]
    g: tuple[float, ...]
    rho: float

    def __post_init__(self):
        p = tuple(float(x) for x in self.p)
        g = tuple(float(x) for x in self.g)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "g", g)
        if len(p) != len(g):
            raise DomainError(f"p has {len(p)} entries but g has {len(g)}")
        if not self.rho > 0:
            raise DomainError("rho must be positive")
        for name, xs in (("p", p), ("g", g)):
            if any(x < 0 or x > 1 for x in xs):
                raise DomainError(f"{name} entries must lie in [0, 1]")
            if abs(math.fsum(xs) - 1.0) > SUM_TOL:
                raise DomainError(f"{name} must sum to 1")

    @classmethod
    def from_stats(cls, stats: Iterable[Sequence[float]]) -> "SpecificEntropyInput":
        stats = list(stats)
        total_n = math.fsum(s[0] for s in stats)
        total_g = math.fsum(s[1] for s in stats)
        return cls(
            p=tuple(s[0] / total_n for s in stats),
            g=tuple(s[1] / total_g for s in stats),
            rho=total_n / total_g,
        )


@dataclass(frozen=True)
class EntropyComparison:
    be_total: float
    shannon: float
    boltzmann_limit: float
    max_occupancy: float

    def as_dict(self) -> dict:
        return {
            "be_total_nats": self.be_total,
            "shannon_nats": self.shannon,
            "boltzmann_limit_nats": self.boltzmann_limit,
            "max_occupancy": self.max_occupancy,
        }


def specific_entropy(inp: SpecificEntropyInput) -> float:
    """Per-token entropy sum_i [(p+q)ln(p+q) - p ln p - q ln q], q = g/rho."""
    terms = []
    for p_i, g_i in zip(inp.p, inp.g):
        q_i = g_i / inp.rho
        if p_i + q_i <= 0:
            raise DomainError("every p_i + g_i/rho must be positive")
        terms.append(_xlogx_pair(p_i, q_i))
    return math.fsum(terms)


def shannon_entropy(p: Sequence[float]) -> float:
    p = np.asarray(p, dtype=float)
    if np.any(p < 0):
        raise DomainError("probabilities must be nonnegative")
    if abs(math.fsum(p) - 1.0) > SUM_TOL:
        raise DomainError("probabilities must sum to 1")
    nz = p[p > 0]
    return float(-math.fsum(nz * np.log(nz)))


def boltzmann_limit_entropy(stats: Iterable[Sequence[float]]) -> float:
    """sum_i N_i (1 + ln(G_i/N_i)): the n -> 0 limit of the Bose-Einstein form.

    Classes with N_i = 0 contribute their limiting value, zero.
    """
    terms = []
    for s in stats:
        n, g = float(s[0]), float(s[1])
        if g <= 0 or n < 0:
            raise DomainError(f"need N >= 0 and G > 0, got ({n}, {g})")
        if n > 0:
            terms.append(n * (1.0 + math.log(g / n)))
    return math.fsum(terms)


def compare_entropies(stats: Iterable[Sequence[float]]) -> EntropyComparison:
    stats = [(float(s[0]), float(s[1])) for s in stats]
    total = math.fsum(n for n, _ in stats)
    if not stats or total == 0:
        return EntropyComparison(0.0, 0.0, 0.0, 0.0)
    return EntropyComparison(
        be_total=stirling_entropy(stats),
        shannon=shannon_entropy([n / total for n, _ in stats]),
        boltzmann_limit=boltzmann_limit_entropy(stats),
        max_occupancy=max(n / g for n, g in stats),
    )
