"""Compare the compiled kernels with their pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat 5]

Each row times one kernel on the same inputs under both backends and checks
that the answers agree.
"""

import argparse
import random
import sys
import timeit
from itertools import combinations

from polychrome import _pykernels
from polychrome.families import no_shallow_family

try:
    from polychrome import _ckernels
except ImportError:
    _ckernels = None


def interval_masks(rng, n, m):
    # intervals never form an ABA pattern, so aba_pair has to scan every pair
    out = []
    for _ in range(m):
        a, b = sorted(rng.sample(range(n + 1), 2))
        out.append(((1 << b) - 1) & ~((1 << a) - 1))
    return out


def cases(rng):
    n = 60
    masks = interval_masks(rng, n, 400)
    yield "aba_pair (n=60, m=400)", "aba_pair", (masks, n)
    anti = [rng.getrandbits(n) for _ in range(400)]
    yield "containment_free random (n=60, m=400)", "containment_free", (anti, n)
    sharp = [sum(1 << v for v in c) for c in combinations(range(9), 8)]
    yield "poly_search sharpness k=5 (n=9)", "poly_search", (sharp, 9, 5, 8)
    rnd = [rng.getrandbits(16) | 1 for _ in range(30)]
    yield "poly_search random (n=16, k=2, m=4)", "poly_search", (rnd, 16, 2, 4)
    _, h = no_shallow_family(8)
    yield "shallow_search no-shallow k=8, c=3 (n=16)", "shallow_search", (list(h.masks), h.n, 3)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; only the Python backend is available", file=sys.stderr)
        return 1

    rng = random.Random(args.seed)
    print(f"{'kernel':44s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for label, name, call in cases(rng):
        py, cy = getattr(_pykernels, name), getattr(_ckernels, name)
        if py(*call) != cy(*call):
            print(f"{label}: backends disagree", file=sys.stderr)
            return 2
        tp = min(timeit.repeat(lambda: py(*call), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: cy(*call), number=1, repeat=args.repeat))
        print(f"{label:44s} {tp:10.4f} {tc:10.4f} {tp / tc if tc else float('inf'):7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
