"""Bose-Einstein occupations, the Lagrange function and informatibility.

Conventions: ``theta`` is the temperature-like multiplier on the entropy,
``beta = 1/theta``; ``alpha`` is the multiplier on the token-count
constraint. The stationary occupation of a level with informatibility
``eps`` and degeneracy ``G`` is ``1 / (exp(beta * (alpha + eps)) - 1)``.
Energies and informatibilities are in nats per use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import ConvergenceError, DivergenceError, DomainError, InfeasibleError

MAX_ITER = 200
RESIDUAL_TOL = 1e-10


class Gauge(NamedTuple):
    theta: float = 1.0
    alpha: float = 0.0


DEFAULT_GAUGE = Gauge()


@dataclass(frozen=True)
class EnergyLevels:
    epsilon: tuple[float, ...]
    g: tuple[float, ...]

    def __post_init__(self):
        eps = tuple(float(e) for e in self.epsilon)
        g = tuple(float(x) for x in self.g)
        if len(eps) != len(g) or not eps:
            raise DomainError("epsilon and g must be nonempty and of equal length")
        if any(x <= 0 for x in g):
            raise DomainError("degeneracies must be positive")
        if not all(math.isfinite(e) for e in eps):
            raise DomainError("epsilon must be finite")
        object.__setattr__(self, "epsilon", eps)
        object.__setattr__(self, "g", g)

    def __len__(self):
        return len(self.epsilon)

    @property
    def eps_array(self) -> np.ndarray:
        return np.array(self.epsilon)

    @property
    def g_array(self) -> np.ndarray:
        return np.array(self.g)


@dataclass(frozen=True)
class EquilibriumSolution:
    beta: float
    alpha: float
    occupations: tuple[float, ...]
    residual_N: float = 0.0
    residual_E: float = 0.0
    theta: float = field(init=False)

    def __post_init__(self):
        if not self.beta > 0:
            raise DomainError("beta must be positive")
        object.__setattr__(self, "theta", 1.0 / self.beta)
        object.__setattr__(self, "occupations", tuple(float(x) for x in self.occupations))

    def as_dict(self) -> dict:
        return {
            "beta": self.beta,
            "alpha": self.alpha,
            "theta": self.theta,
            "residual_N": self.residual_N,
            "residual_E": self.residual_E,
        }


@dataclass(frozen=True)
class InformatibilityAssignment:
    """Per-class informatibility under a gauge.

    Classes with zero occupancy have no finite informatibility; their
    ``epsilon`` is ``inf``, their cost is 0 and their id is listed in
    ``infinite``.
    """

    ids: tuple[str, ...]
    epsilon: tuple[float, ...]
    costs: tuple[float, ...]
    gauge: Gauge
    infinite: tuple[str, ...] = ()

    def epsilon_by_id(self) -> dict[str, float]:
        return dict(zip(self.ids, self.epsilon))


class ThetaSensitivity(NamedTuple):
    derivative: float
    minus_entropy: float


def occupation(eps, beta, alpha=0.0, printed: bool = False):
    """Bose-Einstein occupation ``1/(exp(beta*(alpha+eps)) - 1)``.

    ``printed=True`` evaluates the exponent-free variant
    ``1/((alpha+eps)*beta - 1)`` instead, for comparison runs only.
    Works elementwise on arrays.
    """
    x = beta * (np.asarray(alpha, dtype=float) + np.asarray(eps, dtype=float))
    if printed:
        if np.any(x <= 1.0):
            raise DivergenceError("(alpha+eps)*beta must exceed 1 in the printed form")
        out = 1.0 / (x - 1.0)
    else:
        if not beta > 0 or np.any(x <= 0.0):
            raise DivergenceError(
                "beta*(alpha+eps) must be positive (condensation boundary reached)"
            )
        with np.errstate(over="ignore"):
            out = 1.0 / np.expm1(x)
    return float(out) if out.ndim == 0 else out


def _occupations_array(levels: EnergyLevels, occupations) -> np.ndarray:
    occ = np.asarray(occupations, dtype=float)
    if occ.shape != (len(levels),):
        raise DomainError("need one occupation per level")
    if np.any(occ < 0):
        raise DomainError("occupations must be nonnegative")
    return occ


def lagrange_value(levels: EnergyLevels, occupations, theta: float, alpha: float) -> float:
    """F = E - theta*S + alpha*sum_i G_i n_i for the given occupations."""
    occ = _occupations_array(levels, occupations)
    g = levels.g_array
    energy = math.fsum(levels.eps_array * g * occ)
    count = math.fsum(g * occ)
    return energy - theta * kernels.bose_entropy(occ, g) + alpha * count


def lagrange_gradient(levels: EnergyLevels, occupations, theta: float, alpha: float) -> np.ndarray:
    """Analytic dF/dn_i = G_i (eps_i + alpha - theta ln(1 + 1/n_i))."""
    occ = _occupations_array(levels, occupations)
    return levels.g_array * (levels.eps_array + alpha - theta * np.log1p(1.0 / occ))


def lagrange_gradient_fd(levels: EnergyLevels, occupations, theta: float, alpha: float,
                         h: float = 1e-5) -> np.ndarray:
    """Central finite differences of F in each occupation.

    F is separable over levels, so each derivative differences only its own
    term. The step is ``h`` scaled by the occupation when that is below 1,
    keeping the stencil inside n > 0.
    """
    occ = _occupations_array(levels, occupations)
    out = np.empty_like(occ)
    for i, (e, g, n) in enumerate(zip(levels.epsilon, levels.g, occ)):
        step = h * min(n, 1.0)
        if step <= 0:
            raise DomainError("finite differences need positive occupations")

        def term(x):
            s = g * (math.log1p(x) + x * math.log1p(1.0 / x))
            return (e + alpha) * g * x - theta * s

        out[i] = (term(n + step) - term(n - step)) / (2.0 * step)
    return out


def entropy_change(g, occupations, delta) -> float:
    """S(n + delta) - S(n) for the Bose-Einstein entropy, without cancellation.

    Each class contributes
    ``(1+n) ln(1+d/(1+n)) - n ln(1+d/n) + d ln((1+n+d)/(n+d))``.
    """
    g = np.asarray(g, dtype=float)
    n = np.asarray(occupations, dtype=float)
    d = np.asarray(delta, dtype=float)
    if np.any(n <= 0) or np.any(n + d <= 0):
        raise DomainError("occupations must stay positive")
    terms = g * ((1.0 + n) * np.log1p(d / (1.0 + n)) - n * np.log1p(d / n)
                 + d * np.log1p(1.0 / (n + d)))
    return math.fsum(terms)


def _solution_from(levels: EnergyLevels, beta: float, alpha: float, occ: np.ndarray,
                   n_target: float, e_target: float) -> EquilibriumSolution:
    g = levels.g_array
    return EquilibriumSolution(
        beta=beta,
        alpha=alpha,
        occupations=tuple(occ),
        residual_N=math.fsum(g * occ) - n_target,
        residual_E=math.fsum(levels.eps_array * g * occ) - e_target,
    )


def achievable_mean_energy(levels: EnergyLevels) -> tuple[float, float]:
    """Open interval of E/N reachable with beta > 0: (min eps, G-weighted mean eps)."""
    eps, g = levels.eps_array, levels.g_array
    return float(eps.min()), math.fsum(eps * g) / math.fsum(g)


def fit_equilibrium(levels: EnergyLevels, n_target: float, e_target: float,
                    max_iter: int = MAX_ITER) -> EquilibriumSolution:
    """Find (beta, alpha) so that the occupations reproduce N and E.

    The count constraint is solved for alpha at fixed beta, and the mean
    energy E/N for beta in an outer search; both are monotone bisections
    run until the bracket cannot shrink further.
    """
    if not n_target > 0:
        raise DomainError("N target must be positive")
    eps, g = levels.eps_array, levels.g_array
    emin, emax = float(eps.min()), float(eps.max())
    total_g = math.fsum(g)
    mean = e_target / n_target

    if emax == emin:
        if not math.isclose(e_target, emin * n_target, rel_tol=1e-12, abs_tol=1e-300):
            raise InfeasibleError(
                f"all levels have eps={emin!r}, so E must equal eps*N={emin * n_target!r}",
                achievable=(emin, emin),
            )
        x = math.log1p(total_g / n_target)
        beta, alpha = (x / emin, 0.0) if emin > 0 else (1.0, x - emin)
        occ = np.full(len(levels), n_target / total_g)
        return _solution_from(levels, beta, alpha, occ, n_target, e_target)

    lo, hi = achievable_mean_energy(levels)
    if not lo < mean < hi:
        raise InfeasibleError(
            f"mean energy E/N={mean!r} outside achievable range ({lo!r}, {hi!r})",
            achievable=(lo, hi),
        )

    deps = eps - emin
    log_beta, log_z, status = kernels.fit_nested(deps, g, float(n_target), mean - emin, max_iter)
    beta = math.exp(log_beta)
    z = math.exp(log_z)
    with np.errstate(over="ignore"):
        occ = 1.0 / np.expm1(z + beta * deps)
    solution = _solution_from(levels, beta, z / beta - emin, occ, n_target, e_target)
    rel_n = abs(solution.residual_N) / n_target
    rel_e = abs(solution.residual_E) / max(abs(e_target), 1e-300)
    if status != kernels.STATUS_OK or rel_n > RESIDUAL_TOL or rel_e > RESIDUAL_TOL:
        raise ConvergenceError(
            f"equilibrium fit did not converge (status {status}); "
            f"residual_N={solution.residual_N!r}, residual_E={solution.residual_E!r}",
            residuals=(solution.residual_N, solution.residual_E),
        )
    return solution


def informatibility(occupations: Sequence[float], theta: float = 1.0, alpha: float = 0.0,
                    degeneracies: Sequence[float] | None = None,
                    ids: Sequence[str] | None = None,
                    printed: bool = False) -> InformatibilityAssignment:
    """Invert the occupation law: eps_i = theta*ln(1 + 1/n_i) - alpha.

    Costs are ``G_i * n_i * eps_i`` (= N_i eps_i); without ``degeneracies``
    every G_i is taken as 1.
    """
    if not theta > 0:
        raise DomainError("theta must be positive")
    occ = [float(x) for x in occupations]
    if any(x < 0 for x in occ):
        raise DomainError("occupations must be nonnegative")
    g = [1.0] * len(occ) if degeneracies is None else [float(x) for x in degeneracies]
    ids = tuple(str(i) for i in range(len(occ))) if ids is None else tuple(ids)
    if len(g) != len(occ) or len(ids) != len(occ):
        raise DomainError("occupations, degeneracies and ids must have equal length")
    eps, costs, infinite = [], [], []
    for cid, n, gi in zip(ids, occ, g):
        if n == 0:
            eps.append(math.inf)
            costs.append(0.0)
            infinite.append(cid)
            continue
        e = theta * (1.0 + 1.0 / n) - alpha if printed else theta * math.log1p(1.0 / n) - alpha
        eps.append(e)
        costs.append(gi * n * e)
    return InformatibilityAssignment(ids, tuple(eps), tuple(costs), Gauge(theta, alpha), tuple(infinite))


def calibrate_gauge(occupations: Sequence[float], g: Sequence[float], e_target: float) -> Gauge:
    """Scale theta (alpha = 0) so that sum_i N_i eps_i equals ``e_target``."""
    if not e_target > 0:
        raise DomainError("E target must be positive")
    occ = np.asarray(occupations, dtype=float)
    g = np.asarray(g, dtype=float)
    if np.any(occ <= 0):
        raise DomainError("calibration needs positive occupations")
    denom = math.fsum(g * occ * np.log1p(1.0 / occ))
    return Gauge(theta=e_target / denom, alpha=0.0)


def theta_sensitivity(levels: EnergyLevels, solution, h: float = 1e-5) -> ThetaSensitivity:
    """dF/dtheta by central differences at fixed occupations, with -S for reference."""
    if not 1e-8 <= h <= 1e-3:
        raise DomainError("step h must lie in [1e-8, 1e-3]")
    occ = _occupations_array(levels, solution.occupations)
    theta, alpha = solution.theta, solution.alpha
    upper = lagrange_value(levels, occ, theta + h, alpha)
    lower = lagrange_value(levels, occ, theta - h, alpha)
    return ThetaSensitivity((upper - lower) / (2.0 * h), -kernels.bose_entropy(occ, levels.g_array))
