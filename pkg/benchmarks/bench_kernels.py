"""Compare the compiled and pure-Python row-reduction kernels.

Run with ``python benchmarks/bench_kernels.py``.  Each case reduces a batch
of random integer matrices of the shapes that occur in boundary matrices
of small algebras, checks that both kernels agree, and reports the time
per batch.  ``fallbacks`` counts matrices whose fraction-free elimination
overflows int64 in the compiled kernel and is re-run in Python.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from homlie.exactlin import _backend
from homlie.homology import HomModule, chain_complex
from homlie.random_algebras import algebra_corpus


def random_batch(rng, rows, cols, count, lo=-3, hi=3, density=0.4):
    return [
        [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]
        for _ in range(count)
    ]


def boundary_batch():
    """Integer boundary matrices from the seeded corpus."""
    out = []
    for _, L in algebra_corpus(seed=0, size=40):
        cc = chain_complex(L, HomModule.trivial(L))
        for n in range(1, L.dim + 1):
            rows = [list(r) for r in cc.d(n).rows]
            if rows and all(type(x) is int for r in rows for x in r):
                out.append((rows, cc.d(n).ncols))
    return out


def fallbacks(batch) -> int:
    n = 0
    for rows, ncols in batch:
        try:
            _backend._c_rref_int(rows, ncols)
        except OverflowError:
            n += 1
    return n


def run(batch, backend):
    for rows, ncols in batch:
        _backend.rref_int(rows, ncols, backend=backend)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    if _backend.BACKEND != "cython":
        print("compiled kernel not built; only the Python kernel is available", file=sys.stderr)
        return 1
    rng = random.Random(args.seed)
    cases = {
        "boundaries (corpus)": boundary_batch(),
        "6x15 dense": [(m, 15) for m in random_batch(rng, 6, 15, 200, density=0.9)],
        "20x30 sparse": [(m, 30) for m in random_batch(rng, 20, 30, 50)],
        "40x40 sparse": [(m, 40) for m in random_batch(rng, 40, 40, 10)],
    }
    print(f"{'case':<22}{'python ms':>12}{'cython ms':>12}{'speedup':>10}{'fallbacks':>12}")
    for name, batch in cases.items():
        for rows, ncols in batch:
            py = _backend.rref_int(rows, ncols, backend="python")
            assert _backend.rref_int(rows, ncols, backend="cython") == py, name
        t_py = min(timeit.repeat(lambda: run(batch, "python"), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: run(batch, "cython"), number=1, repeat=args.repeat))
        fb = f"{fallbacks(batch)}/{len(batch)}"
        print(f"{name:<22}{t_py * 1e3:>12.2f}{t_c * 1e3:>12.2f}{t_py / t_c:>9.1f}x{fb:>12}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
