"""The ring-spec DSL and element literals."""

import pytest

from exunits.parsing import (
    RingParseError,
    parse_element,
    parse_ring,
    render_element,
    render_ring,
)
from exunits.rings import GF, NILEXT, ZPE


def test_zn_expansion():
    ring = parse_ring("Z/12")
    kinds = [(c.kind, c.p, c.e) for c in ring.components]
    assert kinds == [(ZPE, 2, 2), (ZPE, 3, 1)]

    ring = parse_ring("Z/360")
    assert [c.size for c in ring.components] == [8, 9, 5]  # increasing primes


def test_mixed_spec():
    ring = parse_ring("GF(9)+N(4,2)")
    gf9, n42 = ring.components
    assert (gf9.kind, gf9.p, gf9.d) == (GF, 3, 2)
    assert (n42.kind, n42.p, n42.d, n42.e) == (NILEXT, 2, 2, 2)


def test_whitespace_tolerated():
    assert parse_ring(" Z/4 + GF( 9 ) ") == parse_ring("Z/4+GF(9)")


@pytest.mark.parametrize(
    "text",
    ["GF(6)", "Z/0", "Z/1", "Q/5", "Z/5)", "", "Z/4+", "N(6,2)", "GF(9", "N(4)", "Z/4 GF(3)"],
)
def test_parse_errors(text):
    with pytest.raises(RingParseError) as err:
        parse_ring(text)
    assert isinstance(err.value.position, int)
    assert "position" in str(err.value)


@pytest.mark.parametrize(
    "text", ["Z/4", "Z/12", "GF(49)", "N(8,3)", "GF(3)+GF(4)+GF(7)", "Z/100+N(9,2)"]
)
def test_ring_round_trip(text):
    ring = parse_ring(text)
    assert parse_ring(render_ring(ring)) == ring
    assert render_ring(parse_ring(render_ring(ring))) == render_ring(ring)


def test_element_literals():
    ring = parse_ring("Z/9+GF(4)")
    elem = parse_element(ring, "7;1,1")
    assert elem == (7, (1, 1))
    assert render_element(ring, elem) == "7;1,1"

    n92 = parse_ring("N(9,2)")
    elem = parse_element(n92, "[1,2],[0,1]")
    assert elem == (((1, 2), (0, 1)),)
    assert render_element(n92, elem) == "[1,2],[0,1]"


@pytest.mark.parametrize("spec", ["Z/12", "GF(8)", "N(4,2)", "Z/4+GF(9)+N(3,2)"])
def test_element_round_trip_everywhere(spec):
    ring = parse_ring(spec)
    for a in ring.elements():
        assert parse_element(ring, render_element(ring, a)) == a


@pytest.mark.parametrize(
    "spec, text",
    [
        ("Z/9+GF(4)", "7"),          # wrong arity
        ("Z/9", "9"),                # out of range
        ("Z/9", "x"),
        ("GF(4)", "1"),              # needs two digits
        ("GF(4)", "1,2"),            # digit out of range
        ("N(9,2)", "[1,2]"),         # needs two groups
        ("N(9,2)", "[1,2],[0,1"),    # unterminated group
        ("N(9,2)", "1,2"),           # missing brackets
    ],
)
def test_element_literal_errors(spec, text):
    ring = parse_ring(spec)
    with pytest.raises(RingParseError):
        parse_element(ring, text)
