"""Compare the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 20] [--classes 50]

Both kernel modules are imported directly, so the env flag does not matter here.
"""

import argparse
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from boselex import _kernels_np as npk  # noqa: E402
from instances import random_instance  # noqa: E402

try:
    from boselex import _kernels_nb as nbk
except ImportError:
    nbk = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--classes", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    fits = []
    while len(fits) < 20:
        eps, g, _, _, _, n, e = random_instance(rng, k_max=args.classes)
        emin = eps.min()
        fits.append((eps - emin, g, n, e / n - emin))
    occ = 10.0 ** rng.uniform(-6, 3, 100_000)
    deg = rng.integers(1, 1000, occ.size).astype(float)
    usage = rng.integers(0, 10**5, 100_000).astype(float)

    modules = [("numpy", npk)]
    if nbk is not None:
        t0 = time.perf_counter()
        nbk.warmup()
        print(f"numba warmup (compile or cache load): {time.perf_counter() - t0:.2f}s")
        modules.insert(0, ("numba", nbk))
    else:
        print("numba not importable; numpy only")

    cases = {
        "fit_nested x20": lambda m: [m.fit_nested(d, g, n, x, 200) for d, g, n, x in fits],
        "bose_entropy 1e5": lambda m: m.bose_entropy(occ, deg),
        "ln_binom_sum 1e5": lambda m: m.ln_binom_sum(usage, deg),
    }
    print(f"{'kernel':<18}" + "".join(f"{name:>12}" for name, _ in modules) + "     speedup")
    for label, case in cases.items():
        row = [best_of(lambda: case(mod), args.repeat) for _, mod in modules]
        line = f"{label:<18}" + "".join(f"{t * 1e3:>10.3f}ms" for t in row)
        if len(row) == 2:
            line += f"{row[1] / row[0]:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
