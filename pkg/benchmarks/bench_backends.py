"""Benchmark the compiled kernel against the pure NumPy fallback.

The hot loop of the library is the batched weighted exponential sum behind
the parabolic-cylinder integral.  This script times both backends on the
raw kernel and on a full zeta evaluation, and checks they agree.

Usage: python benchmarks/bench_backends.py [--repeats N] [--batch N]
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

import siegelzeta._kernels as kernels
from siegelzeta._kernels import fallback
from siegelzeta.numeric_core import QuadratureConfig
from siegelzeta.riemann_siegel import METHOD_PCF, zeta


def _time_fn(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def bench_raw(repeats: int, batch: int, width: int):
    rng = np.random.RandomState(7)
    pref = -0.25 * (rng.uniform(0, 5, batch) + 1j * rng.uniform(-3, 3, batch)) ** 2
    c1 = rng.uniform(-4, 4, batch) + 1j * rng.uniform(-4, 4, batch)
    c2 = np.exp(2j * rng.uniform(-0.6, 0.6, batch))
    w = np.linspace(0.05, 12.0, width)
    lw = np.log(w)
    wt = np.full(width, (w[-1] - w[0]) / width)
    am = 1.5 + 8.0j

    backends = [("active:" + kernels.BACKEND, kernels.weighted_exp_sum)]
    if kernels.BACKEND != fallback.BACKEND:
        backends.append(("fallback:" + fallback.BACKEND, fallback.weighted_exp_sum))

    results = {}
    for name, fn in backends:
        out = fn(pref, c1, c2, am, w, lw, wt)
        t = _time_fn(lambda: fn(pref, c1, c2, am, w, lw, wt), repeats)
        results[name] = (t, out)
        print(f"raw kernel  {name:18s} {t * 1e3:8.2f} ms   ({batch}x{width})")
    outs = [v for _, v in results.values()]
    if len(outs) == 2:
        rel = float(np.max(np.abs(outs[0] - outs[1]) / (1.0 + np.abs(outs[0]))))
        print(f"backend agreement: {rel:.2e}")


def bench_zeta(repeats: int):
    cfg = QuadratureConfig()
    s = 0.75 + 12.0j

    active = kernels.weighted_exp_sum

    def run():
        return zeta(s, cfg, METHOD_PCF).value

    t_active = _time_fn(run, repeats)
    print(f"zeta (pcf)  active:{kernels.BACKEND:11s} {t_active * 1e3:8.1f} ms")
    if kernels.BACKEND != fallback.BACKEND:
        kernels.weighted_exp_sum = fallback.weighted_exp_sum
        try:
            t_fb = _time_fn(run, repeats)
        finally:
            kernels.weighted_exp_sum = active
        print(f"zeta (pcf)  fallback:{fallback.BACKEND:9s} {t_fb * 1e3:8.1f} ms")
        print(f"speedup: {t_fb / t_active:.2f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--batch", type=int, default=512)
    parser.add_argument("--width", type=int, default=2048)
    args = parser.parse_args()
    bench_raw(args.repeats, args.batch, args.width)
    bench_zeta(max(2, args.repeats // 2))


if __name__ == "__main__":
    main()
