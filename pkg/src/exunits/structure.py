"""Symbolic descriptions of k-fold sumsets and product sets.

Each k-fold sumset of the units, sumset of the exceptional units, or
product set of the exceptional units is a direct sum of per-component
subsets that depend only on the residue-field size q_i and the residue of
k.  A SetDescriptor records one such subset per component; membership,
cardinality, and enumeration all follow componentwise.

The per-component subsets are all unions of cosets of the maximal ideal,
so membership reduces to a residue test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .rings import Element, LocalElement, LocalRingSpec, RingSpec

_PRIME_COSETS = (1, 2)  # shifts used by coset parts


@dataclass(frozen=True)
class ComponentSet:
    """A symbolic subset of one local component.

    ``shift`` is only used by the coset tag and names the coset a + M.
    """

    tag: str
    shift: int = 0

    def __post_init__(self):
        if self.tag not in _SIZES:
            raise ValueError(f"unknown component-set tag {self.tag!r}")
        if self.tag == "coset" and self.shift not in _PRIME_COSETS:
            raise ValueError(f"coset shift must be one of {_PRIME_COSETS}")

    def contains(self, comp: LocalRingSpec, a: LocalElement) -> bool:
        res = comp.residue(a)
        tag = self.tag
        if tag == "whole":
            return True
        if tag == "empty":
            return False
        if tag == "max_ideal":
            return res == comp.int_residue(0)
        if tag in ("unit_part", "units"):
            return res != comp.int_residue(0)
        if tag == "coset":
            return res == comp.int_residue(self.shift)
        in_m_or_1pm = res in (comp.int_residue(0), comp.int_residue(1))
        if tag == "m_union_1pm":
            return in_m_or_1pm
        # units_minus_1pm and complement_m_union_1pm name the same residues
        return not in_m_or_1pm

    def size(self, comp: LocalRingSpec) -> int:
        """Cardinality from (m, q) alone; cross-checked against enumeration."""
        return _SIZES[self.tag](comp.size, comp.max_ideal_size, comp.residue_size)

    def members(self, comp: LocalRingSpec) -> Iterator[LocalElement]:
        return (a for a in comp.elements() if self.contains(comp, a))

    def describe(self) -> str:
        if self.tag == "coset":
            return f"{self.shift}+M"
        return _NAMES[self.tag]


_SIZES = {
    "whole": lambda size, m, q: size,
    "empty": lambda size, m, q: 0,
    "max_ideal": lambda size, m, q: m,
    "unit_part": lambda size, m, q: size - m,
    "units": lambda size, m, q: m * (q - 1),
    "coset": lambda size, m, q: m,
    "m_union_1pm": lambda size, m, q: 2 * m,
    "complement_m_union_1pm": lambda size, m, q: size - 2 * m,
    "units_minus_1pm": lambda size, m, q: m * (q - 2),
}

_NAMES = {
    "whole": "R",
    "empty": "∅",
    "max_ideal": "M",
    "unit_part": "R∖M",
    "units": "R*",
    "m_union_1pm": "M∪1+M",
    "complement_m_union_1pm": "R∖(M∪1+M)",
    "units_minus_1pm": "R*∖(1+M)",
}

_ATOMIC = {"R", "∅", "M", "R*"}

WHOLE = ComponentSet("whole")
EMPTY = ComponentSet("empty")
MAX_IDEAL = ComponentSet("max_ideal")
UNIT_PART = ComponentSet("unit_part")
UNITS = ComponentSet("units")
M_UNION_ONEPM = ComponentSet("m_union_1pm")
COMPL_M_UNION_ONEPM = ComponentSet("complement_m_union_1pm")
UNITS_MINUS_ONE_COSET = ComponentSet("units_minus_1pm")


def coset(shift: int) -> ComponentSet:
    """The coset shift + M of the maximal ideal."""
    return ComponentSet("coset", shift)


@dataclass(frozen=True)
class SetDescriptor:
    """A direct sum of per-component symbolic subsets of a ring."""

    ring: RingSpec
    parts: tuple[ComponentSet, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.ring.components):
            raise ValueError("one component set per ring component required")

    def contains(self, x: Element) -> bool:
        self.ring.validate(x)
        return all(
            part.contains(comp, c)
            for part, comp, c in zip(self.parts, self.ring.components, x)
        )

    def cardinality(self) -> int:
        total = 1
        for part, comp in zip(self.parts, self.ring.components):
            total *= part.size(comp)
        return total

    def elements(self) -> Iterator[Element]:
        """All members, in element-index order."""
        pools = [
            tuple(part.members(comp))
            for part, comp in zip(self.parts, self.ring.components)
        ]
        return itertools.product(*pools)

    def as_set(self) -> frozenset:
        return frozenset(self.elements())

    def describe(self) -> str:
        names = [part.describe() for part in self.parts]
        if len(names) > 1:
            names = [n if n in _ATOMIC else f"({n})" for n in names]
        return " ⊕ ".join(names)

    def part_tags(self) -> list[str]:
        return [
            f"coset+{p.shift}" if p.tag == "coset" else p.tag for p in self.parts
        ]


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError("structure rules require k >= 2")


def unit_sumset(ring: RingSpec, k: int) -> SetDescriptor:
    """The k-fold sumset of the units of the ring."""
    _check_k(k)
    parts = []
    for comp in ring.components:
        if comp.residue_size > 2:
            parts.append(WHOLE)
        else:
            parts.append(MAX_IDEAL if k % 2 == 0 else UNIT_PART)
    return SetDescriptor(ring, tuple(parts))


def exunit_sumset(ring: RingSpec, k: int) -> SetDescriptor:
    """The k-fold sumset of the exceptional units of the ring."""
    _check_k(k)
    if any(comp.residue_size == 2 for comp in ring.components):
        return SetDescriptor(ring, (EMPTY,) * len(ring.components))
    parts = []
    for comp in ring.components:
        q = comp.residue_size
        if q == 3:
            parts.append((MAX_IDEAL, coset(2), coset(1))[k % 3])
        elif q == 4:
            parts.append(M_UNION_ONEPM if k % 2 == 0 else COMPL_M_UNION_ONEPM)
        else:
            parts.append(WHOLE)
    return SetDescriptor(ring, tuple(parts))


def exunit_prodset(ring: RingSpec, k: int) -> SetDescriptor:
    """The k-fold product set of the exceptional units of the ring."""
    _check_k(k)
    if any(comp.residue_size == 2 for comp in ring.components):
        return SetDescriptor(ring, (EMPTY,) * len(ring.components))
    parts = []
    for comp in ring.components:
        if comp.residue_size == 3:
            parts.append(coset(1) if k % 2 == 0 else UNITS_MINUS_ONE_COSET)
        else:
            parts.append(UNITS)
    return SetDescriptor(ring, tuple(parts))


def has_exceptional_units(ring: RingSpec) -> bool:
    """True iff every residue field has more than two elements."""
    return all(comp.residue_size > 2 for comp in ring.components)


def generated_by_units(ring: RingSpec) -> bool:
    """True iff every element is a finite sum of units: at most one
    residue field of size 2."""
    return sum(1 for comp in ring.components if comp.residue_size == 2) <= 1


def generated_by_exceptional_units(ring: RingSpec) -> bool:
    """True iff every element is a finite sum of exceptional units.

    The k-fold sumsets only rotate through cosets on residue fields of
    size 3 and 4, and they rotate in lockstep across components, so the
    union over k covers the ring exactly when every residue field has
    size >= 3 with at most one of size 3 and at most one of size 4.
    """
    qs = [comp.residue_size for comp in ring.components]
    return (
        all(q >= 3 for q in qs)
        and sum(1 for q in qs if q == 3) <= 1
        and sum(1 for q in qs if q == 4) <= 1
    )
