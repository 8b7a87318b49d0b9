"""Parity between the compiled and pure-Python kernels, and overflow routing."""

import random
from array import array

import pytest

from exunits import _backend, _kernels_py
from exunits.parsing import parse_ring

compiled = pytest.importorskip("exunits._kernels") if _backend.BACKEND == "compiled" else None
needs_compiled = pytest.mark.skipif(
    _backend.BACKEND != "compiled", reason="compiled kernels not built"
)


def _random_case(rng, spec):
    ring = parse_ring(spec)
    radices = ring.digit_radices()
    n = ring.size
    src = sorted(rng.sample(range(n), k=rng.randint(1, min(n, 12))))
    table = [rng.randint(0, 50) for _ in range(n)]
    reach = bytes(rng.randint(0, 1) for _ in range(n))
    return radices, src, table, reach


@needs_compiled
@pytest.mark.parametrize("spec", ["Z/97", "Z/12", "GF(16)", "N(3,2)+GF(5)", "Z/8+GF(9)"])
def test_sum_kernels_agree(spec):
    rng = random.Random(12345)
    for _ in range(5):
        radices, src, table, reach = _random_case(rng, spec)
        pure = _kernels_py.sum_counts_step(radices, src, table)
        fast = list(
            compiled.sum_counts_step(array("q", radices), array("q", src), array("q", table))
        )
        assert pure == fast
        pure_r = _kernels_py.sum_reach_step(radices, src, reach)
        fast_r = bytes(compiled.sum_reach_step(array("q", radices), array("q", src), reach))
        assert pure_r == fast_r


@needs_compiled
def test_prod_kernels_agree():
    rng = random.Random(999)
    n, n_src = 24, 5
    perm_flat = array("q")
    for _ in range(n_src):
        perm = list(range(n))
        rng.shuffle(perm)
        perm_flat.extend(perm)
    table = [rng.randint(0, 9) for _ in range(n)]
    reach = bytes(rng.randint(0, 1) for _ in range(n))
    assert _kernels_py.prod_counts_step(perm_flat, n, table) == list(
        compiled.prod_counts_step(perm_flat, n, array("q", table))
    )
    assert _kernels_py.prod_reach_step(perm_flat, n, reach) == bytes(
        compiled.prod_reach_step(perm_flat, n, reach)
    )


def test_backend_routes_big_counts_to_pure_python():
    # entries near the int64 limit must fall back to Python ints
    radices = (5,)
    src = [1, 2]
    table = [2**61, 2**61, 0, 0, 1]
    out = _backend.sum_counts_step(radices, src, table)
    assert out[2] == 2**62  # w=0,s=2 and w=1,s=1 both land on 2
    expected = [0] * 5
    for w, cnt in enumerate(table):
        for s in src:
            expected[(w + s) % 5] += cnt
    assert out == expected
    assert all(isinstance(v, int) for v in out)


def test_conservation_of_mass():
    ring = parse_ring("Z/9+GF(4)")
    radices = ring.digit_radices()
    src = [ring.index(u) for u in ring.units()]
    table = [1 if i in src else 0 for i in range(ring.size)]
    for _ in range(3):
        table = _backend.sum_counts_step(radices, src, table)
    assert sum(table) == len(src) ** 4


def test_empty_source():
    radices = (9,)
    out = _backend.sum_counts_step(radices, [], [1] * 9)
    assert out == [0] * 9
    assert _backend.sum_reach_step(radices, [], bytes([1] * 9)) == bytes(9)
