"""Symbolic sumset/product-set descriptors against the oracle sets."""

import pytest

from exunits import counting, oracle, structure
from exunits.parsing import parse_ring
from exunits.structure import (
    COMPL_M_UNION_ONEPM,
    EMPTY,
    M_UNION_ONEPM,
    MAX_IDEAL,
    UNIT_PART,
    UNITS,
    UNITS_MINUS_ONE_COSET,
    WHOLE,
    coset,
    exunit_prodset,
    exunit_sumset,
    generated_by_exceptional_units,
    generated_by_units,
    has_exceptional_units,
    unit_sumset,
)


def test_unit_sumset_examples():
    z12 = parse_ring("Z/12")
    d = unit_sumset(z12, 2)
    assert d.parts == (MAX_IDEAL, WHOLE)
    assert d.describe() == "M ⊕ R"
    assert d.cardinality() == 6
    assert d.as_set() == {a for a in z12.elements() if a[0] % 2 == 0}

    f7 = parse_ring("GF(7)")
    assert unit_sumset(f7, 3).parts == (WHOLE,)
    assert unit_sumset(f7, 3).as_set() == set(f7.elements())

    z2z2 = parse_ring("GF(2)+GF(2)")
    d = unit_sumset(z2z2, 3)
    assert d.parts == (UNIT_PART, UNIT_PART)
    assert d.as_set() == {((1,), (1,))}


def test_exunit_sumset_examples():
    r = parse_ring("GF(3)+GF(5)")
    d = exunit_sumset(r, 2)
    assert d.parts == (coset(1), WHOLE)
    assert d.as_set() == {((1,), (y,)) for y in range(5)}

    f4 = parse_ring("GF(4)")
    d = exunit_sumset(f4, 2)
    assert d.parts == (M_UNION_ONEPM,)
    assert d.as_set() == {((0, 0),), ((1, 0),)}

    r = parse_ring("GF(3)+GF(4)+GF(7)")
    assert exunit_sumset(r, 5).parts == (coset(1), COMPL_M_UNION_ONEPM, WHOLE)

    # a residue field of size 2 empties everything
    assert exunit_sumset(parse_ring("Z/12"), 4).parts == (EMPTY, EMPTY)
    assert exunit_sumset(parse_ring("Z/12"), 4).cardinality() == 0


def test_exunit_prodset_examples():
    r = parse_ring("GF(3)+GF(5)")
    d = exunit_prodset(r, 2)
    assert d.parts == (coset(1), UNITS)
    assert d.as_set() == {((1,), (y,)) for y in (1, 2, 3, 4)}

    f3 = parse_ring("GF(3)")
    d = exunit_prodset(f3, 3)
    assert d.parts == (UNITS_MINUS_ONE_COSET,)
    assert d.describe() == "R*∖(1+M)"
    assert d.as_set() == {((2,),)}

    f7 = parse_ring("GF(7)")
    assert exunit_prodset(f7, 2).parts == (UNITS,)
    assert exunit_prodset(f7, 2).as_set() == set(f7.units())


# paper-table rows for a ring mixing residue sizes 3, 4, and > 4,
# keyed by k mod 6
CASE_TABLE = {
    0: (MAX_IDEAL, M_UNION_ONEPM, WHOLE),
    1: (coset(2), COMPL_M_UNION_ONEPM, WHOLE),
    2: (coset(1), M_UNION_ONEPM, WHOLE),
    3: (MAX_IDEAL, COMPL_M_UNION_ONEPM, WHOLE),
    4: (coset(2), M_UNION_ONEPM, WHOLE),
    5: (coset(1), COMPL_M_UNION_ONEPM, WHOLE),
}


def test_mixed_ring_reproduces_mod6_case_table():
    ring = parse_ring("GF(3)+GF(4)+GF(7)")
    for k in range(2, 14):
        d = exunit_sumset(ring, k)
        assert d.parts == CASE_TABLE[k % 6]
        assert d.as_set() == oracle.reachable_set(ring, k, oracle.SUM, oracle.EXUNITS)


STRUCTURE_CORPUS = [
    "Z/9", "Z/12", "GF(4)", "GF(9)", "N(3,2)", "N(4,2)",
    "GF(3)+GF(5)", "GF(3)+GF(3)", "GF(4)+GF(4)", "Z/8+GF(9)",
]


@pytest.mark.parametrize("spec", STRUCTURE_CORPUS)
def test_descriptors_match_oracle_sets(spec):
    ring = parse_ring(spec)
    exceptional = has_exceptional_units(ring)
    for k in range(2, 14):
        d = unit_sumset(ring, k)
        assert d.as_set() == oracle.reachable_set(ring, k, oracle.SUM, oracle.UNITS)
        assert d.cardinality() == len(d.as_set())
        d = exunit_sumset(ring, k)
        assert d.as_set() == oracle.reachable_set(ring, k, oracle.SUM, oracle.EXUNITS)
        assert d.cardinality() == len(d.as_set())
        if exceptional:
            d = exunit_prodset(ring, k)
            assert d.as_set() == oracle.reachable_set(ring, k, oracle.PROD, oracle.EXUNITS)
            assert d.cardinality() == len(d.as_set())


@pytest.mark.parametrize("spec", STRUCTURE_CORPUS)
def test_membership_agrees_with_positive_counts(spec):
    ring = parse_ring(spec)
    for k in range(2, 6):
        sum_units = unit_sumset(ring, k)
        sum_exunits = exunit_sumset(ring, k)
        for c in ring.elements():
            assert sum_units.contains(c) == (counting.psi(ring, k, c) > 0)
            assert sum_exunits.contains(c) == (counting.phi(ring, k, c) > 0)
        if has_exceptional_units(ring):
            prod = exunit_prodset(ring, k)
            for u in ring.units():
                assert prod.contains(u) == (counting.theta(ring, k, u) > 0)


def test_predicates():
    assert not has_exceptional_units(parse_ring("Z/12"))
    assert has_exceptional_units(parse_ring("GF(3)"))
    assert has_exceptional_units(parse_ring("Z/9+GF(4)"))

    assert generated_by_units(parse_ring("Z/6"))
    assert not generated_by_units(parse_ring("GF(2)+GF(2)"))
    assert generated_by_units(parse_ring("GF(9)"))

    assert not generated_by_exceptional_units(parse_ring("GF(3)+GF(3)"))
    assert generated_by_exceptional_units(parse_ring("Z/9"))
    assert generated_by_exceptional_units(parse_ring("GF(3)+GF(5)"))
    assert generated_by_exceptional_units(parse_ring("GF(3)+GF(4)+GF(7)"))
    assert not generated_by_exceptional_units(parse_ring("Z/12"))  # q = 2 present
    # two size-4 residue fields rotate in lockstep; sums never cover R
    assert not generated_by_exceptional_units(parse_ring("GF(4)+GF(4)"))


@pytest.mark.parametrize(
    "spec",
    [
        "Z/6", "Z/9", "Z/12", "GF(2)+GF(2)", "GF(3)+GF(3)", "GF(3)+GF(5)",
        "N(3,2)", "Z/4+GF(3)", "GF(4)+GF(4)", "N(4,2)+GF(4)", "GF(3)+GF(4)+GF(7)",
    ],
)
def test_predicates_agree_with_closures(spec):
    ring = parse_ring(spec)
    closure = oracle.generation_closure(ring, oracle.UNITS)
    assert generated_by_units(ring) == (len(closure) == ring.size)
    closure = oracle.generation_closure(ring, oracle.EXUNITS)
    assert generated_by_exceptional_units(ring) == (len(closure) == ring.size)


def test_k_must_be_at_least_two():
    ring = parse_ring("GF(5)")
    for fn in (unit_sumset, exunit_sumset, exunit_prodset):
        with pytest.raises(ValueError):
            fn(ring, 1)


def test_component_set_validation():
    with pytest.raises(ValueError):
        coset(3)
    with pytest.raises(ValueError):
        structure.ComponentSet("everything")
    ring = parse_ring("Z/12")
    with pytest.raises(ValueError):
        structure.SetDescriptor(ring, (WHOLE,))  # arity mismatch
