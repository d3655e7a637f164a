"""Benchmark the compiled coloring-enumeration kernel against the fallback.

The workload is the package's hot loop: summing crossing weights over
every coloring of a closed-braid diagram (p^dim colorings times word
length).  Run after an editable install:

    python benchmarks/bench_shadow.py
    python benchmarks/bench_shadow.py --strands 5 -p 7 --power 2 --repeat 5
"""

from __future__ import annotations

import argparse
import time

from toruslink import BraidWord, backend_name, coloring_kernel, sigma
from toruslink._shadow import weight_histogram, weight_histogram_py
from toruslink.cocycle import theta_table


def workload(strands: int, p: int, power: int) -> tuple[BraidWord, list, tuple]:
    word = BraidWord.identity(strands)
    for i in range(1, strands):
        word = word * (sigma(strands, i) ** (p * power))
    space = coloring_kernel([word], p)
    return word, [list(v) for v in space.basis], theta_table(p)


def timed(fn, repeat: int) -> tuple[float, list]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--strands", type=int, default=5)
    parser.add_argument("-p", type=int, default=7)
    parser.add_argument("--power", type=int, default=2, help="per-strand twist multiple")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    word, basis, theta = workload(args.strands, args.p, args.power)
    colorings = args.p ** len(basis)
    print(
        f"word of {len(word.letters)} letters on {args.strands} strands, "
        f"p={args.p}, {colorings} colorings (active backend: {backend_name()})"
    )

    t_py, r_py = timed(
        lambda: weight_histogram_py(args.p, args.strands, word.letters, basis, theta, 0),
        args.repeat,
    )
    print(f"pure python : {t_py * 1000:10.2f} ms")

    if backend_name() == "cython":
        t_cy, r_cy = timed(
            lambda: weight_histogram(args.p, args.strands, word.letters, basis, theta, 0),
            args.repeat,
        )
        assert r_cy == r_py, "backends disagree"
        print(f"cython      : {t_cy * 1000:10.2f} ms")
        print(f"speedup     : {t_py / t_cy:10.1f}x")
    else:
        print("cython      : extension not built (install without TORUSLINK_PURE=1)")


if __name__ == "__main__":
    main()
