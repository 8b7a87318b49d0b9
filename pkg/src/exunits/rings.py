"""Finite commutative rings as direct sums of local rings.

Three families of local components are supported, chosen so that every
(max-ideal size, residue-field size) pair that matters is realizable:

* ``Z/p^e``            -- integers modulo a prime power ("zpe"),
* ``GF(p^d)``          -- finite fields ("gf"),
* ``GF(p^d)[x]/(x^e)`` -- nilpotent extensions of finite fields ("nilext").

A ring is an ordered direct sum of such components; an element is a tuple
with one coordinate per component.  Coordinate encodings:

* zpe:    an integer in ``[0, p^e)``,
* gf:     a tuple of ``d`` coefficients in ``[0, p)``, little-endian with
          respect to a fixed monic irreducible modulus of degree ``d``,
* nilext: a tuple of ``e`` gf-tuples (coefficients of ``x^0 .. x^{e-1}``).

All operations return canonical encodings, all types are immutable, and
every element has a stable integer index (mixed-radix, last component
least significant) under which ring addition is digit-wise modular
addition -- the property the enumeration kernels rely on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import isqrt
from typing import Iterator

ZPE = "zpe"
GF = "gf"
NILEXT = "nilext"

DEFAULT_ENUMERATION_CAP = 10**6

LocalElement = int | tuple
Element = tuple


class EnumerationCapError(Exception):
    """Raised when an enumeration would exceed the configured cap."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"ring has {size} elements, enumeration cap is {cap}")
        self.size = size
        self.cap = cap


class NoExceptionalUnitsError(ValueError):
    """Raised by operations that need exceptional units when there are none
    (some residue field has only two elements)."""


# ---------------------------------------------------------------------------
# number-theory helpers (trial division; desk scale)

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f <= isqrt(n):
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 2 as (p, multiplicity) pairs, p increasing."""
    if n < 2:
        raise ValueError(f"cannot factorize {n}")
    out = []
    for p in itertools.chain((2,), itertools.count(3, 2)):
        if p * p > n:
            break
        if n % p:
            continue
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return out


def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """Return (p, d) with q = p^d, or None if q is not a prime power."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    return fac[0]


def is_prime_power(q: int) -> bool:
    return prime_power_decomposition(q) is not None


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_p (little-endian coefficient tuples)

def _poly_trim(a: list[int]) -> tuple[int, ...]:
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _poly_mul(p: int, a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(p: int, a, mod) -> tuple[int, ...]:
    # mod is monic; reduce a in place from the top
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return _poly_trim(a[:dm])


def _poly_divides(p: int, div, a) -> bool:
    return not _poly_mod(p, a, div)


@lru_cache(maxsize=None)
def min_irreducible(p: int, d: int) -> tuple[int, ...]:
    """The monic irreducible of degree d over F_p with the smallest
    little-endian coefficient encoding.  Degree-1 case is x itself."""
    if d == 1:
        return (0, 1)
    for enc in range(p**d):
        cand = tuple((enc // p**i) % p for i in range(d)) + (1,)
        for ddiv in range(1, d // 2 + 1):
            if any(
                _poly_divides(p, tuple((m // p**i) % p for i in range(ddiv)) + (1,), cand)
                for m in range(p**ddiv)
            ):
                break
        else:
            return cand
    raise AssertionError(f"no irreducible of degree {d} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------
# local components

@dataclass(frozen=True)
class LocalRingSpec:
    """One local component: parameters plus exact element arithmetic."""

    kind: str
    p: int
    d: int = 1
    e: int = 1

    def __post_init__(self):
        if self.kind not in (ZPE, GF, NILEXT):
            raise ValueError(f"unknown local ring kind {self.kind!r}")
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.d < 1 or self.e < 1:
            raise ValueError("extension degree and exponent must be >= 1")
        if self.kind == ZPE and self.d != 1:
            raise ValueError("Z/p^e components have d = 1")
        if self.kind == GF and self.e != 1:
            raise ValueError("field components have e = 1")

    # -- derived sizes ------------------------------------------------------

    @cached_property
    def size(self) -> int:
        if self.kind == ZPE:
            return self.p**self.e
        if self.kind == GF:
            return self.p**self.d
        return self.p ** (self.d * self.e)

    @cached_property
    def max_ideal_size(self) -> int:
        return self.size // self.residue_size

    @cached_property
    def residue_size(self) -> int:
        return self.p if self.kind == ZPE else self.p**self.d

    @cached_property
    def modulus(self) -> tuple[int, ...]:
        """Monic irreducible modulus of the residue field (gf/nilext only)."""
        return min_irreducible(self.p, self.d)

    def residue_field(self) -> "LocalRingSpec":
        """The residue field as a gf component; residue tuples are its elements."""
        return LocalRingSpec(GF, self.p, self.d if self.kind != ZPE else 1, 1)

    # -- element validation and canonical indexing --------------------------

    def validate(self, a: LocalElement) -> None:
        if self.kind == ZPE:
            if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.size:
                raise ValueError(f"{a!r} is not a canonical element of {self}")
        elif self.kind == GF:
            if not self._is_gf_tuple(a):
                raise ValueError(f"{a!r} is not a canonical element of {self}")
        else:
            if (
                not isinstance(a, tuple)
                or len(a) != self.e
                or not all(self._is_gf_tuple(c) for c in a)
            ):
                raise ValueError(f"{a!r} is not a canonical element of {self}")

    def _is_gf_tuple(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == self.d
            and all(isinstance(c, int) and not isinstance(c, bool) and 0 <= c < self.p for c in a)
        )

    def index(self, a: LocalElement) -> int:
        if self.kind == ZPE:
            return a
        if self.kind == GF:
            return self._gf_index(a)
        q = self.p**self.d
        return sum(self._gf_index(c) * q**m for m, c in enumerate(a))

    def element_at(self, i: int) -> LocalElement:
        if self.kind == ZPE:
            return i
        if self.kind == GF:
            return self._gf_at(i)
        q = self.p**self.d
        return tuple(self._gf_at((i // q**m) % q) for m in range(self.e))

    def _gf_index(self, a) -> int:
        return sum(c * self.p**j for j, c in enumerate(a))

    def _gf_at(self, i: int) -> tuple[int, ...]:
        return tuple((i // self.p**j) % self.p for j in range(self.d))

    def elements(self) -> Iterator[LocalElement]:
        return (self.element_at(i) for i in range(self.size))

    def digit_radices(self) -> tuple[int, ...]:
        """Mixed-radix digits of the index, least significant first.  Ring
        addition is digit-wise modular addition in this decomposition."""
        if self.kind == ZPE:
            return (self.size,)
        return (self.p,) * (self.d * self.e)

    # -- arithmetic ----------------------------------------------------------

    def zero(self) -> LocalElement:
        return self.element_at(0)

    def one(self) -> LocalElement:
        if self.kind == ZPE:
            return 1
        if self.kind == GF:
            return (1,) + (0,) * (self.d - 1)
        return ((1,) + (0,) * (self.d - 1),) + ((0,) * self.d,) * (self.e - 1)

    def add(self, a: LocalElement, b: LocalElement) -> LocalElement:
        if self.kind == ZPE:
            return (a + b) % self.size
        if self.kind == GF:
            return tuple((x + y) % self.p for x, y in zip(a, b))
        return tuple(tuple((x + y) % self.p for x, y in zip(ca, cb)) for ca, cb in zip(a, b))

    def neg(self, a: LocalElement) -> LocalElement:
        if self.kind == ZPE:
            return (-a) % self.size
        if self.kind == GF:
            return tuple((-x) % self.p for x in a)
        return tuple(tuple((-x) % self.p for x in c) for c in a)

    def mul(self, a: LocalElement, b: LocalElement) -> LocalElement:
        if self.kind == ZPE:
            return (a * b) % self.size
        if self.kind == GF:
            return self._gf_mul(a, b)
        # truncated polynomial product in GF(p^d)[x]/(x^e)
        out = [(0,) * self.d] * self.e
        for i, ca in enumerate(a):
            if any(ca):
                for j in range(self.e - i):
                    cb = b[j]
                    if any(cb):
                        prod = self._gf_mul(ca, cb)
                        out[i + j] = tuple(
                            (x + y) % self.p for x, y in zip(out[i + j], prod)
                        )
        return tuple(out)

    def _gf_mul(self, a, b) -> tuple[int, ...]:
        prod = _poly_mod(self.p, _poly_mul(self.p, a, b), self.modulus)
        return prod + (0,) * (self.d - len(prod))

    # -- unit structure ------------------------------------------------------

    def is_unit(self, a: LocalElement) -> bool:
        if self.kind == ZPE:
            return a % self.p != 0
        if self.kind == GF:
            return any(a)
        return any(a[0])

    def residue(self, a: LocalElement) -> tuple[int, ...]:
        """Image of a in the residue field, as a gf coefficient tuple."""
        if self.kind == ZPE:
            return (a % self.p,)
        if self.kind == GF:
            return a
        return a[0]

    def int_residue(self, j: int) -> tuple[int, ...]:
        """Image of the integer j in the residue field: (j mod p) * 1."""
        width = 1 if self.kind == ZPE else self.d
        return (j % self.p,) + (0,) * (width - 1)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if self.kind == ZPE:
            return f"Z/{self.size}"
        if self.kind == GF:
            return f"GF({self.size})"
        return f"N({self.p ** self.d},{self.e})"


def zpe(p: int, e: int) -> LocalRingSpec:
    """The local ring Z/p^e."""
    return LocalRingSpec(ZPE, p, 1, e)


def gf(q: int) -> LocalRingSpec:
    """The finite field with q = p^d elements."""
    pd = prime_power_decomposition(q)
    if pd is None:
        raise ValueError(f"{q} is not a prime power")
    return LocalRingSpec(GF, pd[0], pd[1], 1)


def nilext(q: int, e: int) -> LocalRingSpec:
    """The local ring GF(q)[x]/(x^e)."""
    pd = prime_power_decomposition(q)
    if pd is None:
        raise ValueError(f"{q} is not a prime power")
    return LocalRingSpec(NILEXT, pd[0], pd[1], e)


# ---------------------------------------------------------------------------
# direct sums

@dataclass(frozen=True)
class RingSpec:
    """An ordered direct sum of local components.

    Component order is part of the ring's identity; elements are tuples
    with one local coordinate per component.
    """

    components: tuple[LocalRingSpec, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("a ring needs at least one component")

    @cached_property
    def size(self) -> int:
        n = 1
        for c in self.components:
            n *= c.size
        return n

    @cached_property
    def unit_count(self) -> int:
        n = 1
        for c in self.components:
            n *= c.size - c.max_ideal_size
        return n

    @property
    def n_components(self) -> int:
        return len(self.components)

    # -- element plumbing ----------------------------------------------------

    def validate(self, a: Element) -> None:
        if not isinstance(a, tuple) or len(a) != len(self.components):
            raise ValueError(f"element {a!r} has wrong arity for {self}")
        for comp, c in zip(self.components, a):
            comp.validate(c)

    def zero(self) -> Element:
        return tuple(c.zero() for c in self.components)

    def one(self) -> Element:
        return tuple(c.one() for c in self.components)

    def add(self, a: Element, b: Element) -> Element:
        self.validate(a)
        self.validate(b)
        return tuple(c.add(x, y) for c, x, y in zip(self.components, a, b))

    def neg(self, a: Element) -> Element:
        self.validate(a)
        return tuple(c.neg(x) for c, x in zip(self.components, a))

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def mul(self, a: Element, b: Element) -> Element:
        self.validate(a)
        self.validate(b)
        return tuple(c.mul(x, y) for c, x, y in zip(self.components, a, b))

    def is_unit(self, a: Element) -> bool:
        self.validate(a)
        return all(c.is_unit(x) for c, x in zip(self.components, a))

    def is_exceptional_unit(self, a: Element) -> bool:
        return self.is_unit(a) and self.is_unit(self.sub(self.one(), a))

    def residue_index(self, i: int, a_i: LocalElement) -> tuple[int, ...]:
        """Residue-field image of the i-th coordinate."""
        comp = self.components[i]
        comp.validate(a_i)
        return comp.residue(a_i)

    def int_residue(self, i: int, j: int) -> tuple[int, ...]:
        """Image of the integer j in the i-th residue field."""
        return self.components[i].int_residue(j)

    # -- indexing and enumeration --------------------------------------------

    def index(self, a: Element) -> int:
        idx = 0
        for comp, c in zip(self.components, a):
            idx = idx * comp.size + comp.index(c)
        return idx

    def element_at(self, idx: int) -> Element:
        if not 0 <= idx < self.size:
            raise ValueError(f"element index {idx} out of range for {self}")
        coords = []
        for comp in reversed(self.components):
            idx, i = divmod(idx, comp.size)
            coords.append(comp.element_at(i))
        return tuple(reversed(coords))

    def digit_radices(self) -> tuple[int, ...]:
        """Flat mixed-radix digits of the element index, least significant
        first; ring addition is digit-wise modular addition."""
        out = []
        for comp in reversed(self.components):
            out.extend(comp.digit_radices())
        return tuple(out)

    def elements(self, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Element]:
        """All elements in index order (lexicographic on component indices)."""
        if self.size > cap:
            raise EnumerationCapError(self.size, cap)
        return itertools.product(*(tuple(c.elements()) for c in self.components))

    def units(self, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Element]:
        return (a for a in self.elements(cap) if self.is_unit(a))

    def exceptional_units(self, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Element]:
        return (a for a in self.elements(cap) if self.is_exceptional_unit(a))

    def __str__(self) -> str:
        return "+".join(str(c) for c in self.components)


def mk_ring(components) -> RingSpec:
    """Build a ring from an iterable of local components."""
    return RingSpec(tuple(components))
