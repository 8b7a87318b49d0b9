"""Command-line interface.

Subcommands: ``info`` (ring invariants), ``count`` (representation counts
by formula and/or oracle), ``set`` (symbolic sumsets/product sets),
``verify`` (the full formula-vs-oracle sweep), and ``chars`` (character
tables and character-sum counting over small fields).

Exit codes: 0 success / all checks matched, 1 usage or parse error,
2 verification mismatch, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import charsum, counting, oracle, structure
from ._backend import BACKEND
from .parsing import RingParseError, parse_element, parse_ring, render_element
from .rings import EnumerationCapError, NoExceptionalUnitsError, gf, mk_ring
from .verify import DEFAULT_CORPUS, run_verify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_CAP = 3

_KIND_LABELS = {"zpe": "Z/p^e", "gf": "GF(p^d)", "nilext": "GF(p^d)[x]/(x^e)"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract reserves 2
    # for verification mismatches, so route usage errors through exit 1
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="exunits", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    parser.add_argument("--cap", type=int, default=None, help="override the enumeration cap")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="sizes, unit structure, and generation predicates")
    p.add_argument("spec", help="ring spec, e.g. 'Z/12' or 'GF(9)+N(4,2)'")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("count", help="representation counts")
    p.add_argument("spec")
    p.add_argument("--op", choices=("sum", "prod"), required=True)
    p.add_argument("--source", choices=("units", "exunits"), default=None,
                   help="sum source (default units); products always use exunits")
    p.add_argument("-k", type=int, required=True, help="tuple length (k >= 2)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("-c", dest="element", help="target element literal")
    group.add_argument("--all", action="store_true", help="every element (units for prod)")
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("set", help="symbolic k-fold sumsets / product sets")
    p.add_argument("spec")
    p.add_argument("--op", choices=("sum", "prod"), required=True)
    p.add_argument("--source", choices=("units", "exunits"), default=None)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="formula")
    p.set_defaults(func=cmd_set)

    p = sub.add_parser("verify", help="formula-vs-oracle sweep over a corpus")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--default", dest="use_default", action="store_true",
                       help="use the built-in corpus")
    group.add_argument("--corpus", nargs="+", metavar="SPEC")
    p.add_argument("--kmax", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chars", help="multiplicative character tables over F_q")
    p.add_argument("q", type=int)
    p.add_argument("-k", type=int, default=None, help="also count k-fold products via characters")
    p.add_argument("-c", dest="element", default=None, help="restrict counting to one element")
    p.set_defaults(func=cmd_chars)

    return parser


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        for line in lines:
            print(line)


def _payload(command: str, ring, parameters: dict) -> dict:
    return {
        "ring": str(ring) if ring is not None else None,
        "command": command,
        "parameters": parameters,
        "results": None,
        "checks": None,
    }


def cmd_info(args) -> int:
    ring = parse_ring(args.spec)
    components = [
        {
            "kind": _KIND_LABELS[c.kind],
            "p": c.p,
            "d": c.d,
            "e": c.e,
            "size": str(c.size),
            "max_ideal_size": str(c.max_ideal_size),
            "residue_size": str(c.residue_size),
        }
        for c in ring.components
    ]
    results = {
        "components": components,
        "size": str(ring.size),
        "unit_count": str(ring.unit_count),
        "exceptional_unit_count": str(counting.exceptional_count(ring)),
        "has_exceptional_units": structure.has_exceptional_units(ring),
        "generated_by_units": structure.generated_by_units(ring),
        "generated_by_exceptional_units": structure.generated_by_exceptional_units(ring),
    }
    payload = _payload("info", ring, {})
    payload["results"] = results

    lines = [f"ring {ring}  ({len(ring.components)} local component(s))", ""]
    lines.append(f"  {'#':>2}  {'kind':<16} {'p':>4} {'d':>2} {'e':>2} {'|R_i|':>8} {'m_i':>6} {'q_i':>6}")
    for i, c in enumerate(ring.components):
        lines.append(
            f"  {i:>2}  {_KIND_LABELS[c.kind]:<16} {c.p:>4} {c.d:>2} {c.e:>2}"
            f" {c.size:>8} {c.max_ideal_size:>6} {c.residue_size:>6}"
        )
    lines += [
        "",
        f"  |R|   = {ring.size}",
        f"  |R*|  = {ring.unit_count}",
        f"  |R**| = {counting.exceptional_count(ring)}",
        f"  has exceptional units:            {results['has_exceptional_units']}",
        f"  generated by units:               {results['generated_by_units']}",
        f"  generated by exceptional units:   {results['generated_by_exceptional_units']}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _count_pair(ring, op: str, source: str, k: int, c, method: str, cap: int):
    formula_count = oracle_count = None
    if method in ("formula", "both"):
        if op == "prod":
            formula_count = counting.theta(ring, k, c)
        elif source == "units":
            formula_count = counting.psi(ring, k, c)
        else:
            formula_count = counting.phi(ring, k, c)
    if method in ("oracle", "both"):
        if op == "prod":
            oracle_count = oracle.count_prod_tuples(ring, k, c, cap=cap)
        else:
            oracle_count = oracle.count_sum_tuples(ring, k, c, source, cap=cap)
    return formula_count, oracle_count


def cmd_count(args) -> int:
    ring = parse_ring(args.spec)
    cap = args.cap or oracle.DEFAULT_QUERY_CAP
    op, k, method = args.op, args.k, args.method
    if k < 2:
        raise _UsageError("counting formulas require -k >= 2")
    if op == "prod" and args.source == "units":
        raise _UsageError("products are counted over exceptional units only")
    source = args.source or ("exunits" if op == "prod" else "units")
    if op == "prod" and not structure.has_exceptional_units(ring):
        raise NoExceptionalUnitsError(
            f"{ring} has no exceptional units (a residue field has size 2)"
        )

    if args.element is not None:
        targets = [parse_element(ring, args.element)]
    elif op == "prod":
        targets = list(ring.units(cap=cap))
    else:
        targets = list(ring.elements(cap=cap))

    rows = []
    mismatches = 0
    for c in targets:
        formula_count, oracle_count = _count_pair(ring, op, source, k, c, method, cap)
        row = {"element": render_element(ring, c)}
        if formula_count is not None:
            row["formula"] = str(formula_count)
        if oracle_count is not None:
            row["oracle"] = str(oracle_count)
        if method == "both":
            row["match"] = formula_count == oracle_count
            mismatches += row["match"] is False
        rows.append(row)

    payload = _payload("count", ring, {"op": op, "source": source, "k": k, "method": method})
    payload["results"] = rows
    payload["checks"] = (
        {"compared": len(rows), "mismatched": mismatches} if method == "both" else None
    )

    width = max(len(r["element"]) for r in rows)
    lines = [f"{op} of {k} {source} in {ring} [{method}]"]
    for r in rows:
        cells = [f"  {r['element']:<{width}}"]
        if "formula" in r:
            cells.append(f"formula {r['formula']:>12}")
        if "oracle" in r:
            cells.append(f"oracle {r['oracle']:>12}")
        if method == "both":
            cells.append("ok" if r["match"] else "MISMATCH")
        lines.append("  ".join(cells))
    if method == "both":
        lines.append(f"{len(rows)} compared, {mismatches} mismatched")
    _emit(args, payload, lines)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_set(args) -> int:
    ring = parse_ring(args.spec)
    cap = args.cap or oracle.DEFAULT_QUERY_CAP
    op, k, method = args.op, args.k, args.method
    if k < 2:
        raise _UsageError("structure rules require -k >= 2")
    if op == "prod" and args.source == "units":
        raise _UsageError("product sets are taken over exceptional units only")
    source = args.source or ("exunits" if op == "prod" else "units")

    descriptor = None
    if method in ("formula", "both"):
        if op == "prod":
            descriptor = structure.exunit_prodset(ring, k)
        elif source == "units":
            descriptor = structure.unit_sumset(ring, k)
        else:
            descriptor = structure.exunit_sumset(ring, k)
    reached = None
    if method in ("oracle", "both"):
        reached = oracle.reachable_set(ring, k, op, source, cap=cap)

    match = None
    if method == "both":
        match = descriptor.as_set() == reached

    payload = _payload("set", ring, {"op": op, "source": source, "k": k, "method": method})
    results = {}
    lines = [f"{k}-fold {op} set of {source} in {ring} [{method}]"]
    if descriptor is not None:
        results["descriptor"] = descriptor.describe()
        results["component_tags"] = descriptor.part_tags()
        results["cardinality"] = str(descriptor.cardinality())
        lines.append(f"  descriptor : {descriptor.describe()}")
        lines.append(f"  cardinality: {descriptor.cardinality()}")
        if descriptor.cardinality() <= 24:
            members = [render_element(ring, x) for x in descriptor.elements()]
            results["elements"] = members
            lines.append(f"  elements   : {{{', '.join(members)}}}")
    if reached is not None:
        results["oracle_cardinality"] = str(len(reached))
        lines.append(f"  oracle size: {len(reached)}")
        if len(reached) <= 24:
            members = sorted(render_element(ring, x) for x in reached)
            results["oracle_elements"] = members
            lines.append(f"  oracle set : {{{', '.join(members)}}}")
    payload["results"] = results
    if match is not None:
        payload["checks"] = {"match": match}
        lines.append("  oracle agreement: " + ("ok" if match else "MISMATCH"))
    _emit(args, payload, lines)
    return EXIT_MISMATCH if match is False else EXIT_OK


def cmd_verify(args) -> int:
    corpus = None if args.use_default else args.corpus
    if args.kmax < 2:
        raise _UsageError("--kmax must be >= 2")
    cap = args.cap or oracle.DEFAULT_SWEEP_CAP
    report = run_verify(corpus=corpus, kmax=args.kmax, cap=cap)

    payload = _payload(
        "verify",
        None,
        {
            "corpus_size": len(DEFAULT_CORPUS if corpus is None else corpus),
            "kmax": args.kmax,
            "cap": cap,
        },
    )
    payload["results"] = {k: v for k, v in sorted(report.checks.items())}
    payload["checks"] = {
        "rings_checked": report.rings_checked,
        "total": report.total_checks,
        "passed": report.passed,
        "failure": report.failure,
    }

    lines = []
    for section, n in sorted(report.checks.items()):
        lines.append(f"  {section:<20} {n:>8} checks")
    if report.passed:
        lines.append(
            f"all {report.total_checks} checks passed ({report.rings_checked} rings, backend={BACKEND})"
        )
    else:
        lines.append(f"FAILED: {report.failure}")
    _emit(args, payload, lines)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_chars(args) -> int:
    q = args.q
    table = charsum.build_table(q)  # validates q
    field_ring = mk_ring([gf(q)])
    sums = charsum.source_char_sums(q)
    ortho = charsum.orthogonality_check(q)

    payload = _payload("chars", field_ring, {"q": q, "k": args.k, "c": args.element})
    results = {
        "generator": render_element(field_ring, (table.generator,)),
        "char_sums": [
            {"t": t, "re": round(s.real, 12), "im": round(s.imag, 12)}
            for t, s in enumerate(sums)
        ],
        "orthogonality_deviation": ortho.max_deviation,
        "identities_hold": charsum.nontrivial_char_sum_identity(q) if q > 2 else None,
    }
    lines = [f"character table of F_{q}*  (generator g = "
             f"{render_element(field_ring, (table.generator,))})"]
    lines.append(f"  orthogonality deviation: {ortho.max_deviation:.3g}")
    for t, s in enumerate(sums):
        tag = "trivial" if t == 0 else f"chi_{t}"
        lines.append(f"  S[{tag:>7}] = {s.real:+.9f} {s.imag:+.9f}i")

    mismatches = 0
    if q == 2:
        lines.append("warning: F_2 has no exceptional units; product counts are empty")
    elif args.k is not None:
        if args.k < 2:
            raise _UsageError("-k must be >= 2")
        if args.element is not None:
            targets = [parse_element(field_ring, args.element)]
        else:
            targets = [(x,) for x in table.nonzero_elements()]
        rows = []
        for c in targets:
            via_chars = charsum.theta_via_chars(q, args.k, c[0])
            exact = counting.theta(field_ring, args.k, c)
            rows.append(
                {
                    "element": render_element(field_ring, c),
                    "chars": str(via_chars),
                    "formula": str(exact),
                    "match": via_chars == exact,
                }
            )
            mismatches += via_chars != exact
        results["theta"] = rows
        lines.append(f"  k = {args.k} product counts (characters vs closed form):")
        for r in rows:
            lines.append(
                f"    c={r['element']:<10} chars {r['chars']:>8}  formula {r['formula']:>8}  "
                + ("ok" if r["match"] else "MISMATCH")
            )
    payload["results"] = results
    payload["checks"] = {"mismatched": mismatches} if args.k is not None and q > 2 else None
    _emit(args, payload, lines)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RingParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NoExceptionalUnitsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
