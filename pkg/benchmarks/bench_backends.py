"""Timing comparison for the binary mask scan backends.

Runs the same exhaustive scan with the compiled kernel and with the
vectorized numpy fallback, and prints best-of-N wall times.  Invoke as

    python3 benchmarks/bench_backends.py [--sizes 16,18,20,22] [--repeats 3]
"""

import argparse
import time

from rrseq._kernels import _HAVE_NUMBA, scan_masks


def best_time(backend: str, n: int, repeats: int) -> tuple[float, int]:
    best = float("inf")
    hits = 0
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = scan_masks(n, backend=backend)
        best = min(best, time.perf_counter() - t0)
        hits = len(out)
    return best, hits


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="16,18,20,22")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _HAVE_NUMBA:
        scan_masks(8, backend="numba")  # trigger JIT compile outside the timers
    else:
        print("numba not importable; numpy fallback only")

    print(f"{'n':>3} {'masks':>10} {'hits':>7} {'numpy[s]':>10} {'numba[s]':>10} {'speedup':>8}")
    for n in sizes:
        t_np, hits = best_time("numpy", n, args.repeats)
        if _HAVE_NUMBA:
            t_nb, _ = best_time("numba", n, args.repeats)
            print(f"{n:>3} {1 << n:>10} {hits:>7} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x")
        else:
            print(f"{n:>3} {1 << n:>10} {hits:>7} {t_np:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
