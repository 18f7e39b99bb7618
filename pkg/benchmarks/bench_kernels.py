"""Time root isolation with the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--n 200] [--repeat 3]
"""

import argparse
import random
import time
from fractions import Fraction

from crnwitness.realroots import UniPoly, isolate_roots
from crnwitness.realroots import _backend, _kernels_py

NAMES = ("primitive", "prem_pos", "sign_at", "variations", "variations_inf")


def use(mod):
    for name in NAMES:
        setattr(_backend, name, getattr(mod, name))


def workload(n, seed=0):
    rng = random.Random(seed)
    polys = []
    for _ in range(n):
        roots = []
        for _ in range(rng.randint(2, 6)):
            r = Fraction(rng.randint(-200, 200), rng.randint(1, 30))
            roots += [r] * rng.randint(1, 3)
        polys.append(UniPoly.from_roots(roots))
    return polys


def run(polys, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for p in polys:
            isolate_roots(p)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    polys = workload(args.n)
    try:
        from crnwitness.realroots import _kernels as compiled
    except ImportError:
        compiled = None
    use(_kernels_py)
    t_py = run(polys, args.repeat)
    print(f"python  {t_py * 1000:9.1f} ms  ({args.n} polynomials, best of {args.repeat})")
    if compiled is None:
        print("cython  not built")
        return
    use(compiled)
    t_cy = run(polys, args.repeat)
    print(f"cython  {t_cy * 1000:9.1f} ms  speedup {t_py / t_cy:.2f}x")


if __name__ == "__main__":
    main()
