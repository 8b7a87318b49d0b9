"""Multiplicative character sums over small finite fields.

Recomputes the exceptional-unit product counts on F_q through the
character group of F_q*: with S_chi the sum of chi over the exceptional
units, the count of k-tuples with product c is

    (1/(q-1)) * sum over chi of S_chi^k * chi(c^{-1}).

Characters are realized numerically as double-precision roots of unity
indexed by discrete logarithm; the sums involve at most a few thousand
unit-magnitude terms, so results round to exact integers with residuals
far below the tolerances checked here.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

from .rings import LocalRingSpec, gf, prime_power_decomposition

MAX_FIELD_SIZE = 64
ORTHOGONALITY_TOL = 1e-9
ROUNDING_TOL = 1e-6


class CharacterTable:
    """Discrete logs and multiplicative characters of F_q*.

    The generator is the first element of multiplicative order q-1 in the
    canonical element order, so tables are reproducible.  Character t maps
    g^a to exp(2*pi*i * t*a / (q-1)); t = 0 is the trivial character.
    """

    def __init__(self, q: int):
        pd = prime_power_decomposition(q)
        if pd is None:
            raise ValueError(f"{q} is not a prime power")
        if not 2 <= q <= MAX_FIELD_SIZE:
            raise ValueError(f"field size must be in [2, {MAX_FIELD_SIZE}], got {q}")
        self.q = q
        self.field: LocalRingSpec = gf(q)
        self.has_exceptional_units = q > 2
        self.generator = self._find_generator()
        self.log = self._build_log()

    def _find_generator(self):
        field, q = self.field, self.q
        for i in range(1, q):
            g = field.element_at(i)
            x, order = g, 1
            while x != field.one():
                x = field.mul(x, g)
                order += 1
            if order == q - 1:
                return g
        raise AssertionError(f"F_{q} has no generator")  # unreachable

    def _build_log(self):
        log = {}
        x = self.field.one()
        for a in range(self.q - 1):
            log[x] = a
            x = self.field.mul(x, self.generator)
        return log

    def nonzero_elements(self):
        return tuple(self.field.element_at(i) for i in range(1, self.q))

    def exceptional_elements(self):
        one = self.field.one()
        return tuple(x for x in self.nonzero_elements() if x != one)

    def chi(self, t: int, x) -> complex:
        """Value of character t at the nonzero element x."""
        return cmath.exp(2j * cmath.pi * (t * self.log[x] % (self.q - 1)) / (self.q - 1))


@lru_cache(maxsize=None)
def build_table(q: int) -> CharacterTable:
    return CharacterTable(q)


@dataclass(frozen=True)
class OrthogonalityReport:
    q: int
    max_element_sum_deviation: float
    max_character_sum_deviation: float

    @property
    def max_deviation(self) -> float:
        return max(self.max_element_sum_deviation, self.max_character_sum_deviation)


def orthogonality_check(q: int) -> OrthogonalityReport:
    """Largest deviation of both orthogonality relations from their exact
    values (q-1 in the trivial cases, 0 otherwise)."""
    table = build_table(q)
    nonzero = table.nonzero_elements()
    dev_elem = 0.0
    for t in range(q - 1):
        total = sum(table.chi(t, x) for x in nonzero)
        expected = q - 1 if t == 0 else 0
        dev_elem = max(dev_elem, abs(total - expected))
    dev_char = 0.0
    one = table.field.one()
    for x in nonzero:
        total = sum(table.chi(t, x) for t in range(q - 1))
        expected = q - 1 if x == one else 0
        dev_char = max(dev_char, abs(total - expected))
    return OrthogonalityReport(q, dev_elem, dev_char)


def source_char_sums(q: int) -> list[complex]:
    """S_chi for every character: the sum of chi over the exceptional units."""
    table = build_table(q)
    exceptional = table.exceptional_elements()
    return [sum(table.chi(t, x) for x in exceptional) for t in range(q - 1)]


def theta_via_chars(q: int, k: int, c) -> int:
    """Count of k-tuples of exceptional units of F_q with product c,
    extracted from character sums and rounded to the nearest integer."""
    if k < 2:
        raise ValueError("character-sum counting requires k >= 2")
    if q < 3:
        raise ValueError("F_2 has no exceptional units")
    table = build_table(q)
    table.field.validate(c)
    if c == table.field.zero():
        raise ValueError("products of units are units; c must be nonzero")
    sums = source_char_sums(q)
    # chi(c^{-1}) is the complex conjugate of chi(c)
    total = sum(s**k * table.chi(t, c).conjugate() for t, s in enumerate(sums))
    value = total / (q - 1)
    count = round(value.real)
    residual = abs(value - count)
    if residual > ROUNDING_TOL or count < 0:
        raise ArithmeticError(
            f"character sum failed to round to a count: {value} (residual {residual:g})"
        )
    return count


def nontrivial_char_sum_identity(q: int, c=None) -> bool:
    """Check the two identities behind the closed form: S_chi = -1 for every
    nontrivial character, and the sum of chi(c^{-1}) over nontrivial
    characters is q-2 for c = 1 and -1 otherwise.

    Checks a single element when c is given, every nonzero element otherwise.
    """
    table = build_table(q)
    sums = source_char_sums(q)
    if abs(sums[0] - (q - 2)) > ORTHOGONALITY_TOL:
        return False
    if any(abs(s + 1) > ORTHOGONALITY_TOL for s in sums[1:]):
        return False
    one = table.field.one()
    targets = (c,) if c is not None else table.nonzero_elements()
    for x in targets:
        table.field.validate(x)
        total = sum(table.chi(t, x).conjugate() for t in range(1, q - 1))
        expected = q - 2 if x == one else -1
        if abs(total - expected) > ORTHOGONALITY_TOL:
            return False
    return True
