"""Brute-force oracle behavior, including the oracle-of-the-oracle checks."""

import itertools
from collections import Counter
from functools import reduce

import pytest

from exunits import oracle
from exunits.parsing import parse_element, parse_ring
from exunits.rings import EnumerationCapError, NoExceptionalUnitsError


def test_count_sum_examples():
    f5 = parse_ring("GF(5)")
    assert oracle.count_sum_tuples(f5, 2, parse_element(f5, "0"), oracle.UNITS) == 4
    z9 = parse_ring("Z/9")
    assert oracle.count_sum_tuples(z9, 3, (0,), oracle.EXUNITS) == 9
    z12 = parse_ring("Z/12")
    for c in z12.elements():
        assert oracle.count_sum_tuples(z12, 2, c, oracle.EXUNITS) == 0


def test_count_prod_examples():
    f5 = parse_ring("GF(5)")
    assert oracle.count_prod_tuples(f5, 2, parse_element(f5, "1")) == 3
    f4 = parse_ring("GF(4)")
    a = ((0, 1),)
    assert oracle.count_prod_tuples(f4, 3, a) == 3
    f3 = parse_ring("GF(3)")
    assert oracle.count_prod_tuples(f3, 4, parse_element(f3, "1")) == 1


@pytest.mark.parametrize("spec", ["Z/24", "GF(9)", "N(3,2)", "GF(3)+GF(5)", "Z/8+GF(3)"])
@pytest.mark.parametrize("source", [oracle.UNITS, oracle.EXUNITS])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_convolution_matches_naive_enumeration(spec, source, k):
    ring = parse_ring(spec)
    table = oracle.sum_count_table(ring, k, source)
    pred = ring.is_unit if source == oracle.UNITS else ring.is_exceptional_unit
    src = [a for a in ring.elements() if pred(a)]
    naive = Counter(reduce(ring.add, t) for t in itertools.product(src, repeat=k))
    for i, c in enumerate(ring.elements()):
        assert table[i] == naive[c] == oracle.count_sum_tuples_naive(ring, k, c, source)


@pytest.mark.parametrize("spec", ["GF(7)", "Z/9", "N(3,2)", "GF(3)+GF(5)"])
@pytest.mark.parametrize("k", [2, 3])
def test_prod_dp_matches_naive_enumeration(spec, k):
    ring = parse_ring(spec)
    units, table = oracle.prod_count_table(ring, k)
    for u, cnt in zip(units, table):
        assert cnt == oracle.count_prod_tuples_naive(ring, k, u)


@pytest.mark.parametrize("spec", ["Z/20", "GF(8)", "Z/9+GF(4)"])
def test_total_mass(spec):
    ring = parse_ring(spec)
    for source in (oracle.UNITS, oracle.EXUNITS):
        n_src = sum(
            1
            for a in ring.elements()
            if (ring.is_unit(a) if source == oracle.UNITS else ring.is_exceptional_unit(a))
        )
        for k in range(1, 6):
            assert sum(oracle.sum_count_table(ring, k, source)) == n_src**k


def test_prod_multiplicativity_over_components():
    ring = parse_ring("GF(3)+GF(5)")
    left = parse_ring("GF(3)")
    right = parse_ring("GF(5)")
    for k in range(2, 5):
        for u in ring.units():
            combined = oracle.count_prod_tuples(ring, k, u)
            split = oracle.count_prod_tuples(left, k, (u[0],)) * oracle.count_prod_tuples(
                right, k, (u[1],)
            )
            assert combined == split


def test_reachable_sets():
    z12 = parse_ring("Z/12")
    evens = {a for a in z12.elements() if a[0] % 2 == 0}
    assert oracle.reachable_set(z12, 2, oracle.SUM, oracle.UNITS) == evens

    f4 = parse_ring("GF(4)")
    assert oracle.reachable_set(f4, 2, oracle.SUM, oracle.EXUNITS) == {
        ((0, 0),),
        ((1, 0),),
    }

    r = parse_ring("GF(3)+GF(5)")
    expected = {((1,), (y,)) for y in (1, 2, 3, 4)}
    assert oracle.reachable_set(r, 2, oracle.PROD, oracle.EXUNITS) == expected


def test_generation_closures():
    z6 = parse_ring("Z/6")
    assert len(oracle.generation_closure(z6, oracle.UNITS)) == 6

    z2z2 = parse_ring("GF(2)+GF(2)")
    assert oracle.generation_closure(z2z2, oracle.UNITS) == {((0,), (0,)), ((1,), (1,))}

    f3f3 = parse_ring("GF(3)+GF(3)")
    closure = oracle.generation_closure(f3f3, oracle.EXUNITS)
    assert closure == {((0,), (0,)), ((1,), (1,)), ((2,), (2,))}
    assert len(closure) < f3f3.size

    # no exceptional units at all: the closure is empty
    assert oracle.generation_closure(parse_ring("Z/12"), oracle.EXUNITS) == frozenset()


@pytest.mark.parametrize("spec", ["Z/12", "Z/9", "GF(3)+GF(4)+GF(7)"])
@pytest.mark.parametrize("source", [oracle.UNITS, oracle.EXUNITS])
def test_partial_union_monotonicity(spec, source):
    ring = parse_ring(spec)
    union = set()
    for k in range(1, 10):
        step = oracle.reachable_set(ring, k, oracle.SUM, source)
        assert union <= union | step
        union |= step
    assert union <= oracle.generation_closure(ring, source)


def test_preconditions():
    z12 = parse_ring("Z/12")
    with pytest.raises(NoExceptionalUnitsError):
        oracle.count_prod_tuples(z12, 2, (1, (1,)))
    f5 = parse_ring("GF(5)")
    with pytest.raises(ValueError):
        oracle.count_prod_tuples(f5, 2, f5.zero())  # not a unit
    with pytest.raises(ValueError):
        oracle.reachable_set(f5, 2, oracle.PROD, oracle.UNITS)
    with pytest.raises(ValueError):
        oracle.count_sum_tuples(f5, 0, f5.zero(), oracle.UNITS)
    with pytest.raises(ValueError):
        oracle.count_sum_tuples(f5, 2, f5.zero(), "everything")
    with pytest.raises(EnumerationCapError):
        oracle.count_sum_tuples(parse_ring("Z/1048576"), 2, (0,), oracle.UNITS, cap=10**4)


def test_naive_guards():
    f5 = parse_ring("GF(5)")
    with pytest.raises(ValueError):
        oracle.count_sum_tuples_naive(f5, 4, f5.zero(), oracle.UNITS)
    with pytest.raises(ValueError):
        oracle.count_sum_tuples_naive(parse_ring("Z/256"), 2, (0,), oracle.UNITS)
