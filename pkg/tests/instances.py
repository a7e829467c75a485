"""Forward-generated equilibrium instances with known multipliers."""

import math

import numpy as np


def forward(eps, g, beta, alpha):
    occ = 1.0 / np.expm1(beta * (alpha + np.asarray(eps)))
    n = math.fsum(np.asarray(g) * occ)
    e = math.fsum(np.asarray(eps) * np.asarray(g) * occ)
    return occ, n, e


def random_instance(rng, k_max=50, eps_range=(0.0, 5.0), beta_range=(0.1, 10.0), alpha_range=(0.0, 2.0)):
    k = int(rng.integers(2, k_max + 1))
    lo, hi = eps_range
    eps = hi - rng.uniform(0.0, hi - lo, k)          # (lo, hi]
    g = rng.integers(1, 1001, k).astype(float)
    beta = rng.uniform(*beta_range)
    alpha = rng.uniform(*alpha_range)
    occ, n, e = forward(eps, g, beta, alpha)
    return eps, g, beta, alpha, occ, n, e
