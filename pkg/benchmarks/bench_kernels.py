"""Compare the numba and numpy kernel paths.

    python benchmarks/bench_kernels.py [--trials 4096] [--n-r 100] [--repeat 20]

Also times a full Monte Carlo run under each backend by re-launching the
interpreter with SECURE_SWIPT_NUMBA set, since the flag is read at import.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from secure_swipt import _kernels
from secure_swipt.channel import complex_gaussian

END_TO_END = """
import time
from secure_swipt import SystemParams, _kernels
from secure_swipt.montecarlo import simulate
p = SystemParams(n_r={n_r})
simulate(p, 1000, 0)  # warm-up / JIT
t = time.perf_counter()
simulate(p, {trials}, 1)
print(_kernels.BACKEND, time.perf_counter() - t)
"""


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=4096)
    ap.add_argument("--n-r", type=int, default=100)
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--e2e-trials", type=int, default=100_000)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    arrays = [complex_gaussian(rng, (args.trials, args.n_r)) for _ in range(4)]
    s, g, q, _ = _kernels.channel_stats_numpy(*arrays)

    # compile outside the timed region
    _kernels.channel_stats_numba(*arrays)
    _kernels.af_snr_numba(80.0, 8.0, 10.0, 0.1, s, g, q)

    rows = [
        ("channel_stats", lambda: _kernels.channel_stats_numpy(*arrays), lambda: _kernels.channel_stats_numba(*arrays)),
        ("af_snr", lambda: _kernels.af_snr_numpy(80.0, 8.0, 10.0, 0.1, s, g, q),
         lambda: _kernels.af_snr_numba(80.0, 8.0, 10.0, 0.1, s, g, q)),
    ]
    print(f"numba available: {_kernels.NUMBA_AVAILABLE}; block = {args.trials} x {args.n_r}")
    print(f"{'kernel':<15}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}")
    for name, slow, fast in rows:
        t_np = best_of(slow, args.repeat) * 1e3
        t_nb = best_of(fast, args.repeat) * 1e3
        print(f"{name:<15}{t_np:>12.3f}{t_nb:>12.3f}{t_np / t_nb:>9.1f}x")

    print(f"\nend-to-end simulate, {args.e2e_trials} trials (includes RNG):")
    code = END_TO_END.format(n_r=args.n_r, trials=args.e2e_trials)
    for flag in ("0", "1"):
        env = dict(os.environ, SECURE_SWIPT_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, secs = out.stdout.split()
        print(f"  {backend:<6} {float(secs):.2f} s")


if __name__ == "__main__":
    main()
