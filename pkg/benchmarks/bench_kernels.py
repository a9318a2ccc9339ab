"""Compare the compiled and pure-Python kernels on the hot loops.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from tracech import kernels
from tracech.graph import from_matrix


def workloads(seed=0):
    rng = random.Random(seed)
    m5 = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
    g5 = from_matrix(m5)
    walks = kernels.python_backend.closed_walks(g5._succ, 5, 6)
    masks = []
    for _ in walks:
        mask = bytearray(6)
        for v in rng.sample(range(1, 6), rng.randint(0, 2)):
            mask[v] = 1
        masks.append(mask)
    return [
        ("int_walk_weight_sum n=5 k=8", lambda b: b.int_walk_weight_sum(m5, 5, 8)),
        ("closed_walks n=5 k=7", lambda b: b.closed_walks(g5._succ, 5, 7)),
        ("classify_walk x%d" % len(walks),
         lambda b: [b.classify_walk(w, mk) for w, mk in zip(walks, masks)]),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", kernels.python_backend)]
    if kernels.compiled_backend is not None:
        backends.append(("cython", kernels.compiled_backend))
    else:
        print("compiled kernels not built; timing the fallback only")
    for name, fn in workloads():
        results = {}
        for bname, backend in backends:
            results[bname] = fn(backend)
            results[bname + "_t"] = min(timeit.repeat(lambda: fn(backend), number=1, repeat=args.repeat))
        line = f"{name:34s} python {results['python_t'] * 1e3:9.1f} ms"
        if "cython" in results:
            assert results["cython"] == results["python"], name
            speedup = results["python_t"] / results["cython_t"]
            line += f"   cython {results['cython_t'] * 1e3:9.1f} ms   x{speedup:5.1f}"
        print(line)


if __name__ == "__main__":
    main()
