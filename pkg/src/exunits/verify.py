"""Cross-checking sweeps: every closed form against its brute-force oracle.

Runs, for each ring of a corpus: the exceptional-unit count identity, the
three counting formulas against convolution/DP oracles for every element,
the three structure descriptors against oracle reachable sets over two
full periods of k, the generation predicates against iterated closures,
and the character-sum reproduction for every residue-field size seen.

Stops at the first mismatch and reports it; formula-side internal errors
(failed exactness assertions) are treated as mismatches too, so a corrupt
formula cannot crash its way past the sweep.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import charsum, counting, oracle, structure
from .parsing import parse_ring, render_element
from .rings import EnumerationCapError, RingSpec

STRUCTURE_KMAX = 13  # two full periods of the mod-6 rules
GENERATION_SIZE_LIMIT = 500
CHARSUM_MAX_Q = 64

DEFAULT_CORPUS: tuple[str, ...] = (
    tuple(f"Z/{n}" for n in range(3, 101))
    + tuple(f"GF({q})" for q in (3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27))
    + ("N(3,2)", "N(4,2)", "N(5,2)", "N(3,3)")
    + (
        "GF(3)+GF(4)+GF(7)",
        "GF(3)+GF(3)",
        "GF(3)+GF(5)",
        "GF(4)+GF(4)",
        "Z/4+GF(3)",
        "Z/9+GF(4)",
        "N(3,2)+GF(5)",
        "GF(2)+GF(2)",
        "N(4,2)+GF(3)",
        "Z/8+GF(9)",
    )
)


@dataclass
class VerifyReport:
    rings_checked: int = 0
    checks: dict = field(default_factory=dict)
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    @property
    def total_checks(self) -> int:
        return sum(self.checks.values())

    def _count(self, section: str, n: int = 1) -> None:
        self.checks[section] = self.checks.get(section, 0) + n


def run_verify(
    corpus=None,
    kmax: int = 4,
    cap: int = oracle.DEFAULT_SWEEP_CAP,
    structure_kmax: int = STRUCTURE_KMAX,
    generation_size_limit: int = GENERATION_SIZE_LIMIT,
) -> VerifyReport:
    """Run the full sweep; returns at the first failed check."""
    if kmax < 2:
        raise ValueError("kmax must be >= 2")
    specs = list(DEFAULT_CORPUS if corpus is None else corpus)
    report = VerifyReport()
    residue_sizes_checked: set[int] = set()
    for spec_text in specs:
        ring = parse_ring(spec_text) if isinstance(spec_text, str) else spec_text
        name = str(ring)
        if ring.size > cap:
            raise EnumerationCapError(ring.size, cap)
        _check_ring(report, name, ring, kmax, structure_kmax, generation_size_limit, cap)
        if report.failure is not None:
            return report
        _check_charsums(report, ring, kmax, residue_sizes_checked, cap)
        if report.failure is not None:
            return report
        report.rings_checked += 1
    return report


def _fail(report: VerifyReport, name: str, message: str) -> None:
    report.failure = f"{name}: {message}"


def _formula(report, name, what, fn):
    """Evaluate a closed form, converting internal errors into failures."""
    try:
        return fn()
    except ArithmeticError as exc:  # includes IntegralityError
        _fail(report, name, f"{what}: formula raised {exc!r}")
        return None


def _check_ring(report, name, ring: RingSpec, kmax, structure_kmax, gen_limit, cap):
    elems = list(ring.elements(cap=cap))
    all_q_big = structure.has_exceptional_units(ring)

    # exceptional-unit count identity
    enumerated = sum(1 for a in elems if ring.is_exceptional_unit(a))
    formula = counting.exceptional_count(ring)
    report._count("exceptional_count")
    if formula != enumerated:
        return _fail(
            report, name, f"|R**| formula {formula} != enumerated {enumerated}"
        )

    # counting formulas vs convolution/DP oracles
    for k in range(2, kmax + 1):
        for source, fn, label in (
            (oracle.UNITS, counting.psi, "psi"),
            (oracle.EXUNITS, counting.phi, "phi"),
        ):
            table = oracle.sum_count_table(ring, k, source, cap=cap)
            for idx, c in enumerate(elems):
                got = _formula(report, name, f"{label}(k={k})", lambda: fn(ring, k, c))
                if got is None:
                    return
                report._count(label)
                if got != table[idx]:
                    return _fail(
                        report,
                        name,
                        f"{label}(k={k}, c={render_element(ring, c)}): "
                        f"formula {got} != oracle {table[idx]}",
                    )
        if all_q_big:
            units, table = oracle.prod_count_table(ring, k, cap=cap)
            for u, expected in zip(units, table):
                got = _formula(
                    report, name, f"theta(k={k})", lambda: counting.theta(ring, k, u)
                )
                if got is None:
                    return
                report._count("theta")
                if got != expected:
                    return _fail(
                        report,
                        name,
                        f"theta(k={k}, u={render_element(ring, u)}): "
                        f"formula {got} != oracle {expected}",
                    )

    # structure descriptors vs reachable sets
    for k in range(2, structure_kmax + 1):
        cases = [
            (structure.unit_sumset, oracle.SUM, oracle.UNITS, "unit sumset"),
            (structure.exunit_sumset, oracle.SUM, oracle.EXUNITS, "exceptional sumset"),
        ]
        if all_q_big:
            cases.append(
                (structure.exunit_prodset, oracle.PROD, oracle.EXUNITS, "exceptional prodset")
            )
        for build, op, source, label in cases:
            descriptor = build(ring, k)
            described = descriptor.as_set()
            reached = oracle.reachable_set(ring, k, op, source, cap=cap)
            report._count("structure")
            if described != reached:
                return _fail(
                    report,
                    name,
                    f"{label} (k={k}): descriptor {descriptor.describe()} "
                    f"has {len(described)} elements, oracle set has {len(reached)}",
                )
            if descriptor.cardinality() != len(reached):
                return _fail(
                    report, name, f"{label} (k={k}): cardinality formula mismatch"
                )
        if not all_q_big:
            report._count("structure")
            if structure.exunit_prodset(ring, k).cardinality() != 0:
                return _fail(report, name, "empty product set expected when some q_i = 2")

    # generation predicates vs closures
    if ring.size <= gen_limit:
        for source, predicate, label in (
            (oracle.UNITS, structure.generated_by_units, "generated by units"),
            (
                oracle.EXUNITS,
                structure.generated_by_exceptional_units,
                "generated by exceptional units",
            ),
        ):
            closure = oracle.generation_closure(ring, source, cap=cap)
            report._count("generation")
            if predicate(ring) != (len(closure) == ring.size):
                return _fail(
                    report,
                    name,
                    f"{label}: predicate {predicate(ring)} but closure covers "
                    f"{len(closure)}/{ring.size} elements",
                )


def _check_charsums(report, ring: RingSpec, kmax, done: set[int], cap):
    name = str(ring)
    for comp in ring.components:
        q = comp.residue_size
        if q < 3 or q > CHARSUM_MAX_Q or q in done:
            continue
        done.add(q)
        ortho = charsum.orthogonality_check(q)
        report._count("charsum")
        if ortho.max_deviation >= charsum.ORTHOGONALITY_TOL:
            return _fail(
                report, name, f"orthogonality deviation {ortho.max_deviation:g} for q={q}"
            )
        report._count("charsum")
        if not charsum.nontrivial_char_sum_identity(q):
            return _fail(report, name, f"character-sum identities failed for q={q}")
        field_ring = parse_ring(f"GF({q})")
        for k in range(2, kmax + 1):
            units, table = oracle.prod_count_table(field_ring, k, cap=cap)
            for u, expected in zip(units, table):
                got = _formula(
                    report,
                    name,
                    f"chars(q={q}, k={k})",
                    lambda: charsum.theta_via_chars(q, k, u[0]),
                )
                if got is None:
                    return
                report._count("charsum")
                if got != expected:
                    return _fail(
                        report,
                        name,
                        f"theta via characters (q={q}, k={k}, "
                        f"c={render_element(field_ring, u)}): {got} != oracle {expected}",
                    )
