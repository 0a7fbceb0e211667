"""Micro benchmark of the row reduction kernels.

Times the compiled extension against the pure-Python fallback on random
GF(2) bitmask matrices and random GF(p) residue matrices, then times one
library-level workload (a witness sweep slice) under whichever backend the
package selected at import.  Run with ZKMASSEY_PURE=1 to force the fallback
for the library-level part.
"""

import argparse
import random
import time

from zkmassey import BACKEND
from zkmassey import _core_py

try:
    from zkmassey import _core
except ImportError:
    _core = None


def gf2_instances(rng, nrows, ncols, count):
    return [[rng.randrange(1 << ncols) for _ in range(nrows)] for _ in range(count)]


def mod_instances(rng, nrows, ncols, p, count):
    return [
        [[rng.randrange(p) for _ in range(ncols)] for _ in range(nrows)]
        for _ in range(count)
    ]


def bench(label, fn, instances, reps):
    best = None
    for _ in range(reps):
        t0 = time.perf_counter()
        for inst in instances:
            fn(inst)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    per = best / len(instances) * 1e6
    print(f"  {label:<10} {best * 1e3:8.2f} ms total  {per:8.1f} us/matrix")
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=64)
    ap.add_argument("--cols", type=int, default=64)
    ap.add_argument("--count", type=int, default=200, help="matrices per timing")
    ap.add_argument("--reps", type=int, default=3, help="repetitions, best taken")
    ap.add_argument("--p", type=int, default=31, help="odd prime modulus")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--skip-sweep", action="store_true", help="kernel timings only")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"backend selected at import: {BACKEND}")

    print(f"rref over GF(2), {args.rows}x{args.cols}, {args.count} matrices:")
    mats = gf2_instances(rng, args.rows, args.cols, args.count)
    t_py = bench("python", lambda m: _core_py.rref_gf2(list(m), args.cols), mats, args.reps)
    if _core is not None:
        t_c = bench("compiled", lambda m: _core.rref_gf2(list(m), args.cols), mats, args.reps)
        print(f"  speedup    {t_py / t_c:8.1f}x")
    else:
        print("  compiled kernel not available")

    print(f"rref over GF({args.p}), {args.rows}x{args.cols}, {args.count // 4} matrices:")
    mats = mod_instances(rng, args.rows, args.cols, args.p, max(1, args.count // 4))
    t_py = bench(
        "python", lambda m: _core_py.rref_mod([r[:] for r in m], args.p), mats, args.reps
    )
    if _core is not None:
        t_c = bench(
            "compiled", lambda m: _core.rref_mod([r[:] for r in m], args.p), mats, args.reps
        )
        print(f"  speedup    {t_py / t_c:8.1f}x")

    if not args.skip_sweep:
        from zkmassey.fields import GF2
        from zkmassey.oracle import _sweep_range

        print(f"witness sweep of 2048 six-vertex graphs (backend: {BACKEND}):")
        t0 = time.perf_counter()
        out = _sweep_range(GF2, "graph", 0, 2048)
        dt = time.perf_counter() - t0
        print(
            f"  {dt * 1e3:8.0f} ms, detected={out['detected']} "
            f"witnesses={out['witness']} disagreements={len(out['disagreements'])}"
        )


if __name__ == "__main__":
    main()
