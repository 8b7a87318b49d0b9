"""Closed-form counts of representations by units and exceptional units.

For a ring R = R_1 + ... + R_n with max-ideal sizes m_i and residue-field
sizes q_i, the number of ways to write an element as a sum of k units,
a sum of k exceptional units, or a unit as a product of k exceptional
units all factor over the components.  Each per-component factor is a
signed local term (``mu_local``, ``rho_local``, ``sigma_local``) scaled
by m_i^(k-1) and divided exactly by q_i (resp. q_i - 1).

All arithmetic is exact; the divisions are asserted exact and the final
counts asserted nonnegative, so any internal inconsistency surfaces as an
IntegralityError instead of a wrong number.
"""

from __future__ import annotations

from math import comb

from .rings import Element, LocalRingSpec, NoExceptionalUnitsError, RingSpec

# Fault-injection hook used by the verification harness's mutation smoke
# test; must be 0 in normal operation.
_MU_OFFSET = 0


class IntegralityError(ArithmeticError):
    """An internal invariant failed: a count came out fractional or negative."""


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError("counting formulas require k >= 2")


def _exact_div(num: int, den: int, what: str) -> int:
    quo, rem = divmod(num, den)
    if rem:
        raise IntegralityError(f"{what} is not divisible by {den} (got {num})")
    if quo < 0:
        raise IntegralityError(f"{what} produced a negative count {quo}")
    return quo


def mu_local(spec: LocalRingSpec, k: int, in_max_ideal: bool) -> int:
    """Local term for unit sums: (q-1)^k + (-1)^k (q-1) on the maximal
    ideal, (q-1)^k + (-1)^(k+1) off it."""
    _check_k(k)
    q = spec.residue_size
    sign = -1 if k % 2 else 1
    val = (q - 1) ** k + (sign * (q - 1) if in_max_ideal else -sign)
    return val + _MU_OFFSET


def psi(ring: RingSpec, k: int, c: Element) -> int:
    """Number of k-tuples of units of the ring summing to c."""
    _check_k(k)
    ring.validate(c)
    total = 1
    for comp, c_i in zip(ring.components, c):
        mu = mu_local(comp, k, not comp.is_unit(c_i))
        num = comp.max_ideal_size ** (k - 1) * mu
        total *= _exact_div(num, comp.residue_size, f"unit-sum term of {comp}")
    return total


def exceptional_count(ring: RingSpec) -> int:
    """|R**| = prod of m_i (q_i - 2); zero iff some residue field is F_2."""
    total = 1
    for comp in ring.components:
        total *= comp.max_ideal_size * (comp.residue_size - 2)
    return total


def rho_local(spec: LocalRingSpec, k: int, c_residue: tuple[int, ...]) -> int:
    """Local term for exceptional-unit sums.

    The binomial sum runs over integers j in [0, k] whose image in the
    residue field equals c_residue; it is empty whenever c_residue lies
    outside the prime subfield.
    """
    _check_k(k)
    q = spec.residue_size
    binom = sum(comb(k, j) for j in range(k + 1) if spec.int_residue(j) == c_residue)
    return q * binom + (2 - q) ** k - 2**k


def phi(ring: RingSpec, k: int, c: Element) -> int:
    """Number of k-tuples of exceptional units summing to c."""
    _check_k(k)
    ring.validate(c)
    sign = -1 if k % 2 else 1
    total = 1
    for comp, c_i in zip(ring.components, c):
        rho = rho_local(comp, k, comp.residue(c_i))
        num = sign * comp.max_ideal_size ** (k - 1) * rho
        total *= _exact_div(num, comp.residue_size, f"exceptional-sum term of {comp}")
    return total


def sigma_local(spec: LocalRingSpec, k: int, in_one_plus_max_ideal: bool) -> int:
    """Local term for exceptional-unit products: (q-2)^k + (-1)^k (q-2) on
    the coset 1+M, (q-2)^k + (-1)^(k+1) off it.  Needs q > 2."""
    _check_k(k)
    q = spec.residue_size
    if q <= 2:
        raise NoExceptionalUnitsError(f"{spec} has residue field of size {q}")
    sign = -1 if k % 2 else 1
    return (q - 2) ** k + (sign * (q - 2) if in_one_plus_max_ideal else -sign)


def theta(ring: RingSpec, k: int, u: Element) -> int:
    """Number of k-tuples of exceptional units of the ring with product u."""
    _check_k(k)
    if any(comp.residue_size == 2 for comp in ring.components):
        raise NoExceptionalUnitsError(
            f"{ring} has a residue field of size 2, so it has no exceptional units"
        )
    if not ring.is_unit(u):
        raise ValueError(f"{u!r} is not a unit of {ring}")
    total = 1
    for comp, u_i in zip(ring.components, u):
        in_1pm = comp.residue(u_i) == comp.int_residue(1)
        num = comp.max_ideal_size ** (k - 1) * sigma_local(comp, k, in_1pm)
        total *= _exact_div(num, comp.residue_size - 1, f"product term of {comp}")
    return total
