"""Exact unit and exceptional-unit arithmetic in finite commutative rings.

A unit u is exceptional when 1 - u is also a unit.  This package builds
finite commutative rings as direct sums of local components, evaluates
the closed-form counts of representations as sums of k units, sums of k
exceptional units, and products of k exceptional units, describes the
corresponding k-fold sumsets and product sets symbolically, and checks
everything against independent brute-force oracles.
"""

from ._backend import BACKEND
from .charsum import build_table, nontrivial_char_sum_identity, orthogonality_check, theta_via_chars
from .counting import IntegralityError, exceptional_count, phi, psi, theta
from .parsing import RingParseError, parse_element, parse_ring, render_element, render_ring
from .rings import (
    EnumerationCapError,
    Element,
    LocalRingSpec,
    NoExceptionalUnitsError,
    RingSpec,
    gf,
    mk_ring,
    nilext,
    zpe,
)
from .structure import (
    SetDescriptor,
    exunit_prodset,
    exunit_sumset,
    generated_by_exceptional_units,
    generated_by_units,
    has_exceptional_units,
    unit_sumset,
)
from .verify import DEFAULT_CORPUS, run_verify

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DEFAULT_CORPUS",
    "Element",
    "EnumerationCapError",
    "IntegralityError",
    "LocalRingSpec",
    "NoExceptionalUnitsError",
    "RingParseError",
    "RingSpec",
    "SetDescriptor",
    "build_table",
    "exceptional_count",
    "exunit_prodset",
    "exunit_sumset",
    "generated_by_exceptional_units",
    "generated_by_units",
    "gf",
    "has_exceptional_units",
    "mk_ring",
    "nilext",
    "nontrivial_char_sum_identity",
    "orthogonality_check",
    "parse_element",
    "parse_ring",
    "phi",
    "psi",
    "render_element",
    "render_ring",
    "run_verify",
    "theta",
    "theta_via_chars",
    "unit_sumset",
    "zpe",
]
