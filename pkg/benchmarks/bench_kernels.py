#!/usr/bin/env python3
"""Benchmark the compiled convolution kernels against the pure-Python ones.

The kernels are the hot loops of the brute-force oracles: each timing runs
k-1 convolution steps of a source indicator over the ring, exactly as
count/reach queries do.  Usage:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --ring "Z/5003" --ring "GF(49)+GF(16)" -k 4
"""

import argparse
import time
from array import array

from exunits import _kernels_py
from exunits.parsing import parse_ring

try:
    from exunits import _kernels
except ImportError:
    _kernels = None

DEFAULT_RINGS = ["Z/1009", "Z/2048", "GF(49)+GF(16)", "N(9,2)+GF(7)"]


def _sum_inputs(ring):
    radices = ring.digit_radices()
    src = [ring.index(u) for u in ring.units(cap=ring.size)]
    table = [0] * ring.size
    for i in src:
        table[i] = 1
    return radices, src, table


def _prod_inputs(ring):
    units = list(ring.units(cap=ring.size))
    pos = {u: i for i, u in enumerate(units)}
    exu = [u for u in units if ring.is_exceptional_unit(u)]
    flat = array("q", bytes(8 * len(units) * len(exu)))
    for s, y in enumerate(exu):
        for w, u in enumerate(units):
            flat[s * len(units) + w] = pos[ring.mul(u, y)]
    table = [1 if ring.is_exceptional_unit(u) else 0 for u in units]
    return flat, len(units), table


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_ring(spec, k, repeat):
    ring = parse_ring(spec)
    rows = []

    radices, src, table = _sum_inputs(ring)

    def pure_sum():
        t = table
        for _ in range(k - 1):
            t = _kernels_py.sum_counts_step(radices, src, t)
        return t

    def fast_sum():
        t = array("q", table)
        r, s = array("q", radices), array("q", src)
        for _ in range(k - 1):
            t = _kernels.sum_counts_step(r, s, t)
        return t

    row = {"kernel": "sum_counts", "ring": str(ring), "n": ring.size, "src": len(src)}
    row["pure"] = _time(pure_sum, repeat)
    if _kernels is not None:
        row["fast"] = _time(fast_sum, repeat)
        assert list(fast_sum()) == pure_sum(), "backends disagree"
    rows.append(row)

    if all(c.residue_size > 2 for c in ring.components):
        flat, n_units, ptable = _prod_inputs(ring)

        def pure_prod():
            t = ptable
            for _ in range(k - 1):
                t = _kernels_py.prod_counts_step(flat, n_units, t)
            return t

        def fast_prod():
            t = array("q", ptable)
            for _ in range(k - 1):
                t = _kernels.prod_counts_step(flat, n_units, t)
            return t

        row = {"kernel": "prod_counts", "ring": str(ring), "n": n_units, "src": sum(ptable)}
        row["pure"] = _time(pure_prod, repeat)
        if _kernels is not None:
            row["fast"] = _time(fast_prod, repeat)
            assert list(fast_prod()) == pure_prod(), "backends disagree"
        rows.append(row)
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--ring", action="append", help="ring spec (repeatable)")
    parser.add_argument("-k", type=int, default=3, help="number of factors/summands")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = parser.parse_args()

    if _kernels is None:
        print("note: compiled kernels unavailable; timing the pure-Python path only")

    specs = args.ring or DEFAULT_RINGS
    header = f"{'kernel':<12} {'ring':<16} {'table':>7} {'|src|':>7} {'pure':>10}"
    if _kernels is not None:
        header += f" {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for spec in specs:
        for row in bench_ring(spec, args.k, args.repeat):
            line = (
                f"{row['kernel']:<12} {row['ring']:<16} {row['n']:>7} {row['src']:>7}"
                f" {row['pure']:>9.4f}s"
            )
            if _kernels is not None:
                line += f" {row['fast']:>9.4f}s {row['pure'] / row['fast']:>8.1f}x"
            print(line)


if __name__ == "__main__":
    main()
