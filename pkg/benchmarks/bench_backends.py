#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two slot-stepping hot loops (message transmission and queue
simulation) on both backends and prints per-loop throughput plus the
speedup.  Usage: ``python benchmarks/bench_backends.py [--slots N]``.
"""

import argparse
import time

import numpy as np

from cqclab.backend import get_backend
from cqclab.bits import as_bit_array


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--slots", type=int, default=1_000_000,
                        help="queue-simulation length (default 1e6)")
    parser.add_argument("--bits", type=int, default=200_000,
                        help="message length for the transmit loop")
    args = parser.parse_args()

    try:
        backends = [("pure-python", get_backend("pure")),
                    ("compiled", get_backend("compiled"))]
    except ImportError:
        print("compiled extension unavailable; benchmarking the fallback only")
        backends = [("pure-python", get_backend("pure"))]

    rng = np.random.default_rng(0)

    bits = as_bit_array(rng.integers(0, 2, size=args.bits))
    u_alice = rng.random(int(bits.sum()))
    u_bob = rng.random(2 * args.bits + 2)
    arr_a = (rng.random(args.slots) < 0.45).astype(np.uint8)
    arr_b = (rng.random(args.slots) < 0.45).astype(np.uint8)

    print(f"{'kernel':<16}{'backend':<14}{'time':>10}{'throughput':>16}")
    results = {}
    for name, mod in backends:
        t = best_of(lambda: mod.transmit_loop(bits, 100, 0.3, u_alice, u_bob))
        results[("transmit", name)] = t
        print(f"{'transmit_loop':<16}{name:<14}{t:>9.4f}s"
              f"{args.bits / t / 1e6:>12.2f} Mbit/s")
    for name, mod in backends:
        t = best_of(lambda: mod.queue_sim_loop(arr_a, arr_b))
        results[("queue", name)] = t
        print(f"{'queue_sim_loop':<16}{name:<14}{t:>9.4f}s"
              f"{args.slots / t / 1e6:>12.2f} Mslot/s")

    if len(backends) == 2:
        for kernel in ("transmit", "queue"):
            ratio = results[(kernel, "pure-python")] / results[(kernel, "compiled")]
            print(f"{kernel}: compiled is {ratio:.0f}x faster")


if __name__ == "__main__":
    main()
