"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each kernel is run once per path before timing so numba compilation is
excluded.  Results are checked for agreement before they are reported.
"""

import argparse
import time

import numpy as np

from bclab import _kernels
from bclab.hardy import HARDY
from bclab.operators import DiscAutomorphism, composition_matrix
from bclab.core import BicomplexNumber


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(rng):
    coeffs = rng.standard_normal(257) + 1j * rng.standard_normal(257)
    points = 0.9 * np.exp(2j * np.pi * rng.uniform(size=4096))
    psi = DiscAutomorphism(BicomplexNumber(1, 0), BicomplexNumber.from_idempotent(0.4, 0.3j))
    phi = psi.taylor(512).c1
    mat = composition_matrix(psi, HARDY, 128).matrix.A1
    return [
        ("horner deg 256 x 4096 pts", "horner", (coeffs, points)),
        ("horner deg 64 x 1 pt", "horner", (coeffs[:65], points[:1])),
        ("truncated_powers m=32 n=512", "truncated_powers", (phi, 32, 512)),
        ("truncated_powers m=128 n=128", "truncated_powers", (phi[:129], 128, 128)),
        ("gram_top_eig 129x129", "gram_top_eig", (mat, 1e-12, 64)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    if _kernels.numba_impl is None:
        raise SystemExit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(0)
    print(f"{'kernel':32s} {'numpy [ms]':>11s} {'numba [ms]':>11s} {'speedup':>8s}")
    for label, name, argv in cases(rng):
        f_np = getattr(_kernels.numpy_impl, name)
        f_nb = getattr(_kernels.numba_impl, name)
        a = f_np(*argv)
        b = f_nb(*argv)
        ra = a[0] if isinstance(a, tuple) else a
        rb = b[0] if isinstance(b, tuple) else b
        if not np.allclose(ra, rb, rtol=1e-10, atol=1e-12):
            raise SystemExit(f"{label}: paths disagree")
        t_np = best_of(lambda: f_np(*argv), args.repeat)
        t_nb = best_of(lambda: f_nb(*argv), args.repeat)
        print(f"{label:32s} {1e3 * t_np:11.3f} {1e3 * t_nb:11.3f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
