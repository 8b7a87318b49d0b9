"""Pure-Python convolution kernels.

These are the hot inner loops of the brute-force oracles: one step of an
additive (or multiplicative) convolution of a count/reachability table
with a source set.  A compiled Cython twin (``exunits._kernels``) with
identical semantics is preferred at import time by ``exunits._backend``;
this module is the always-available fallback and the arbitrary-precision
path (Python ints never overflow).

Tables are indexed by the ring's element index.  Addition acts digit-wise
on the mixed-radix decomposition of the index (see ``RingSpec.digit_radices``),
so the additive kernels need only the radix vector.  The multiplicative
kernels take precomputed permutations of the unit list, one per source
element, flattened row-major into a single buffer.
"""

from __future__ import annotations


def _digits(idx: int, radices) -> list[int]:
    out = []
    for r in radices:
        idx, v = divmod(idx, r)
        out.append(v)
    return out


def sum_counts_step(radices, src, table):
    """One additive convolution step: new[w + s] += table[w] for s in src."""
    n = len(table)
    new = [0] * n
    if len(radices) == 1:
        for w, cnt in enumerate(table):
            if cnt:
                for s in src:
                    i = w + s
                    if i >= n:
                        i -= n
                    new[i] += cnt
        return new
    weights = [1] * len(radices)
    for t in range(1, len(radices)):
        weights[t] = weights[t - 1] * radices[t - 1]
    src_digits = [_digits(s, radices) for s in src]
    for w, cnt in enumerate(table):
        if cnt:
            wd = _digits(w, radices)
            for sd in src_digits:
                idx = 0
                for t, r in enumerate(radices):
                    v = wd[t] + sd[t]
                    if v >= r:
                        v -= r
                    idx += v * weights[t]
                new[idx] += cnt
    return new


def sum_reach_step(radices, src, reach):
    """One reachability step: new[w + s] = 1 wherever reach[w] = 1."""
    n = len(reach)
    new = bytearray(n)
    if len(radices) == 1:
        for w, hit in enumerate(reach):
            if hit:
                for s in src:
                    i = w + s
                    if i >= n:
                        i -= n
                    new[i] = 1
        return bytes(new)
    weights = [1] * len(radices)
    for t in range(1, len(radices)):
        weights[t] = weights[t - 1] * radices[t - 1]
    src_digits = [_digits(s, radices) for s in src]
    for w, hit in enumerate(reach):
        if hit:
            wd = _digits(w, radices)
            for sd in src_digits:
                idx = 0
                for t, r in enumerate(radices):
                    v = wd[t] + sd[t]
                    if v >= r:
                        v -= r
                    idx += v * weights[t]
                new[idx] = 1
    return bytes(new)


def prod_counts_step(perm_flat, n, table):
    """One multiplicative step over unit positions: new[perm_s[w]] += table[w]."""
    new = [0] * n
    for base in range(0, len(perm_flat), n):
        for w, cnt in enumerate(table):
            if cnt:
                new[perm_flat[base + w]] += cnt
    return new


def prod_reach_step(perm_flat, n, reach):
    new = bytearray(n)
    for base in range(0, len(perm_flat), n):
        for w, hit in enumerate(reach):
            if hit:
                new[perm_flat[base + w]] = 1
    return bytes(new)
