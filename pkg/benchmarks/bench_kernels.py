"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from ivdesign import kernels
from ivdesign.exact import exact_min_cost_coloring
from ivdesign.generate import GeneratorParams, generate_chordal


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python fallback is available")

    cases = [
        ("mcs n=10000", generate_chordal(GeneratorParams(10_000, 10, 0.85, 2.0, 0)), "mcs"),
        ("dp n=300 m=4", generate_chordal(GeneratorParams(300, 10, 0.85, 2.0, 1)), "dp"),
        ("dp n=500 m=5", generate_chordal(GeneratorParams(500, 10, 0.5, 2.0, 2)), "dp"),
    ]
    print(f"{'case':<16}" + "".join(f"{b:>12}" for b in backends) + "   speedup")
    for name, g, kind in cases:
        row = {}
        for b in backends:
            if kind == "mcs":
                indptr, indices = g.csr
                row[b] = best_of(lambda: kernels.mcs_order(g.n, indptr, indices, backend=b), args.repeat)
            else:
                m = int(name.split("m=")[1])
                row[b] = best_of(lambda: exact_min_cost_coloring(g, m, backend=b), args.repeat)
        speed = row["python"] / row["cython"] if "cython" in row else float("nan")
        print(f"{name:<16}" + "".join(f"{row[b]:>11.4f}s" for b in backends) + f"   {speed:6.1f}x")


if __name__ == "__main__":
    main()
