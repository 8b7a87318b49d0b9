"""Brute-force and DP ground truth for counts, sets, and generation tests.

Everything here is computed directly from ring arithmetic and table
convolutions -- nothing consults the closed-form counting module, so these
results serve as an independent check of it.

Additive counts use k-1 successive convolutions of the source indicator
with the running table (cost O(k * |R| * |source|)).  Multiplicative
counts run the same DP over the unit list using forward multiplication
(no inverses needed).  A naive tuple-enumeration cross-check is kept for
small instances as an oracle of the oracle.
"""

from __future__ import annotations

import itertools
from array import array
from functools import lru_cache, reduce

from . import _backend
from .rings import Element, EnumerationCapError, NoExceptionalUnitsError, RingSpec

SUM = "sum"
PROD = "prod"
UNITS = "units"
EXUNITS = "exunits"

DEFAULT_QUERY_CAP = 10**6
DEFAULT_SWEEP_CAP = 10**4

# beyond this many entries, multiplication permutations are not materialized
_PERM_BUDGET = 2**24

_STABLE_WINDOW = 6  # sumset periods divide 6, see the structure rules


def _check_source(source: str) -> None:
    if source not in (UNITS, EXUNITS):
        raise ValueError(f"unknown source {source!r}")


def _warmed(table_fn, ring, k, *rest):
    # fill the cache bottom-up so the recursive step never nests deeply
    for j in range(1, k):
        table_fn(ring, j, *rest)
    return table_fn(ring, k, *rest)


def _check_cap(ring: RingSpec, cap: int) -> None:
    if ring.size > cap:
        raise EnumerationCapError(ring.size, cap)


@lru_cache(maxsize=256)
def _source_indices(ring: RingSpec, source: str) -> tuple[int, ...]:
    pred = ring.is_unit if source == UNITS else ring.is_exceptional_unit
    return tuple(i for i, a in enumerate(ring.elements(cap=ring.size)) if pred(a))


@lru_cache(maxsize=512)
def _sum_table(ring: RingSpec, k: int, source: str) -> tuple[int, ...]:
    src = _source_indices(ring, source)
    if k == 1:
        table = [0] * ring.size
        for i in src:
            table[i] = 1
        return tuple(table)
    prev = _sum_table(ring, k - 1, source)
    return tuple(_backend.sum_counts_step(ring.digit_radices(), src, list(prev)))


@lru_cache(maxsize=512)
def _sum_reach(ring: RingSpec, k: int, source: str) -> bytes:
    src = _source_indices(ring, source)
    if k == 1:
        reach = bytearray(ring.size)
        for i in src:
            reach[i] = 1
        return bytes(reach)
    prev = _sum_reach(ring, k - 1, source)
    return _backend.sum_reach_step(ring.digit_radices(), src, prev)


# -- multiplicative DP over the unit list -----------------------------------

@lru_cache(maxsize=256)
def _unit_elements(ring: RingSpec) -> tuple[Element, ...]:
    return tuple(ring.units(cap=ring.size))


@lru_cache(maxsize=256)
def _unit_positions(ring: RingSpec) -> dict:
    return {u: pos for pos, u in enumerate(_unit_elements(ring))}


def _require_exceptional_units(ring: RingSpec) -> None:
    if any(c.residue_size == 2 for c in ring.components):
        raise NoExceptionalUnitsError(
            f"{ring} has a residue field of size 2, so it has no exceptional units"
        )


@lru_cache(maxsize=64)
def _prod_perms(ring: RingSpec):
    """Unit-position permutations for multiplication by each exceptional
    unit, flattened row-major; None when over the memory budget."""
    units = _unit_elements(ring)
    pos = _unit_positions(ring)
    exu = [u for u in units if ring.is_exceptional_unit(u)]
    if len(units) * len(exu) > _PERM_BUDGET:
        return None
    flat = array("q", bytes(8 * len(units) * len(exu)))
    for s, y in enumerate(exu):
        base = s * len(units)
        for w, u in enumerate(units):
            flat[base + w] = pos[ring.mul(u, y)]
    return flat


@lru_cache(maxsize=512)
def _prod_table(ring: RingSpec, k: int) -> tuple[int, ...]:
    units = _unit_elements(ring)
    if k == 1:
        return tuple(1 if ring.is_exceptional_unit(u) else 0 for u in units)
    prev = _prod_table(ring, k - 1)
    perms = _prod_perms(ring)
    if perms is not None:
        return tuple(_backend.prod_counts_step(perms, len(units), list(prev)))
    # over budget: multiply elements directly
    pos = _unit_positions(ring)
    new = [0] * len(units)
    for y in units:
        if ring.is_exceptional_unit(y):
            for w, cnt in enumerate(prev):
                if cnt:
                    new[pos[ring.mul(units[w], y)]] += cnt
    return tuple(new)


# -- public API ---------------------------------------------------------------

def count_sum_tuples(
    ring: RingSpec, k: int, c: Element, source: str, cap: int = DEFAULT_QUERY_CAP
) -> int:
    """Number of k-tuples from the source set summing to c."""
    _check_source(source)
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_cap(ring, cap)
    ring.validate(c)
    return _warmed(_sum_table, ring, k, source)[ring.index(c)]


def sum_count_table(
    ring: RingSpec, k: int, source: str, cap: int = DEFAULT_QUERY_CAP
) -> tuple[int, ...]:
    """Counts of k-fold source sums for every element, indexed by element index."""
    _check_source(source)
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_cap(ring, cap)
    return _warmed(_sum_table, ring, k, source)


def count_prod_tuples(
    ring: RingSpec, k: int, u: Element, source: str = EXUNITS, cap: int = DEFAULT_QUERY_CAP
) -> int:
    """Number of k-tuples of exceptional units with product u."""
    if source != EXUNITS:
        raise ValueError("product counting is defined for the exceptional-unit source")
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_cap(ring, cap)
    _require_exceptional_units(ring)
    if not ring.is_unit(u):
        raise ValueError(f"{u!r} is not a unit of {ring}")
    return _warmed(_prod_table, ring, k)[_unit_positions(ring)[u]]


def prod_count_table(
    ring: RingSpec, k: int, cap: int = DEFAULT_QUERY_CAP
) -> tuple[tuple[Element, ...], tuple[int, ...]]:
    """(units, counts): k-fold exceptional-unit product counts per unit."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_cap(ring, cap)
    _require_exceptional_units(ring)
    return _unit_elements(ring), _warmed(_prod_table, ring, k)


def reachable_set(
    ring: RingSpec, k: int, op: str, source: str, cap: int = DEFAULT_QUERY_CAP
) -> frozenset:
    """The set of values of k-fold sums (or products) from the source set."""
    _check_source(source)
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_cap(ring, cap)
    if op == SUM:
        reach = _warmed(_sum_reach, ring, k, source)
        return frozenset(ring.element_at(i) for i, hit in enumerate(reach) if hit)
    if op == PROD:
        if source != EXUNITS:
            raise ValueError("product sets are defined for the exceptional-unit source")
        _require_exceptional_units(ring)
        units = _unit_elements(ring)
        return frozenset(u for u, cnt in zip(units, _warmed(_prod_table, ring, k)) if cnt)
    raise ValueError(f"unknown operation {op!r}")


def generation_closure(ring: RingSpec, source: str, cap: int = DEFAULT_QUERY_CAP) -> frozenset:
    """Union of the k-fold sumsets of the source over all k >= 1.

    Iterates until the union is unchanged for six consecutive values of k
    (the sumset periods divide 6) or everything is covered.
    """
    _check_source(source)
    _check_cap(ring, cap)
    src = _source_indices(ring, source)
    if not src:
        return frozenset()
    n = ring.size
    radices = ring.digit_radices()
    cur = bytearray(n)
    for i in src:
        cur[i] = 1
    union = bytearray(cur)
    covered = sum(union)
    streak = 0
    while streak < _STABLE_WINDOW and covered < n:
        cur = bytearray(_backend.sum_reach_step(radices, src, bytes(cur)))
        grew = False
        for i, hit in enumerate(cur):
            if hit and not union[i]:
                union[i] = 1
                covered += 1
                grew = True
        streak = 0 if grew else streak + 1
    return frozenset(ring.element_at(i) for i, hit in enumerate(union) if hit)


# -- naive second-level cross-checks ------------------------------------------

_NAIVE_MAX_K = 3
_NAIVE_MAX_SIZE = 200


def _naive_guard(ring: RingSpec, k: int) -> None:
    if k < 1 or k > _NAIVE_MAX_K:
        raise ValueError(f"naive enumeration supports 1 <= k <= {_NAIVE_MAX_K}")
    if ring.size > _NAIVE_MAX_SIZE:
        raise ValueError(f"naive enumeration supports |R| <= {_NAIVE_MAX_SIZE}")


def count_sum_tuples_naive(ring: RingSpec, k: int, c: Element, source: str) -> int:
    """Direct tuple enumeration; independent of the convolution kernels."""
    _check_source(source)
    _naive_guard(ring, k)
    ring.validate(c)
    pred = ring.is_unit if source == UNITS else ring.is_exceptional_unit
    src = [a for a in ring.elements(cap=ring.size) if pred(a)]
    return sum(
        1
        for t in itertools.product(src, repeat=k)
        if reduce(ring.add, t) == c
    )


def count_prod_tuples_naive(ring: RingSpec, k: int, u: Element) -> int:
    _naive_guard(ring, k)
    _require_exceptional_units(ring)
    if not ring.is_unit(u):
        raise ValueError(f"{u!r} is not a unit of {ring}")
    src = [a for a in ring.elements(cap=ring.size) if ring.is_exceptional_unit(a)]
    return sum(
        1
        for t in itertools.product(src, repeat=k)
        if reduce(ring.mul, t) == u
    )
