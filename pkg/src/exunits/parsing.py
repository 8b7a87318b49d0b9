"""Ring-spec DSL and element literals.

Ring grammar (whitespace allowed between tokens):

    spec := term ("+" term)*
    term := "Z/" INT          composite n is factored into Z/p^e components,
                              increasing prime order
          | "GF(" INT ")"     the argument must be a prime power
          | "N(" INT "," INT ")"   N(q,e) is GF(q)[x]/(x^e)

Element literals: one field per component, separated by ";".  A Z/p^e
coordinate is a decimal integer; a GF(p^d) coordinate is d comma-separated
digits (little-endian); an N(q,e) coordinate is e bracketed GF literals,
e.g. "[1,2],[0,1]".  Rendering inverts parsing exactly.
"""

from __future__ import annotations

from .rings import (
    Element,
    RingSpec,
    factorize,
    gf,
    mk_ring,
    nilext,
    prime_power_decomposition,
    zpe,
)

_MAX_ZN = 10**12  # trial-division factoring only


class RingParseError(ValueError):
    """A ring-spec or element literal failed to parse; carries the position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise RingParseError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise RingParseError("expected an integer", start)
        return int(self.text[start : self.pos])

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def parse_ring(text: str) -> RingSpec:
    """Parse a ring-spec string into a RingSpec."""
    sc = _Scanner(text)
    components = []
    while True:
        components.extend(_parse_term(sc))
        if sc.done():
            break
        sc.expect("+")
    return mk_ring(components)


def _parse_term(sc: _Scanner):
    sc.skip_ws()
    start = sc.pos
    if sc.peek() == "Z":
        sc.expect("Z")
        sc.expect("/")
        n = sc.integer()
        if n < 2:
            raise RingParseError(f"Z/{n} is not a ring with 1 != 0", start)
        if n > _MAX_ZN:
            raise RingParseError(f"Z/n supports n <= {_MAX_ZN}", start)
        return [zpe(p, e) for p, e in factorize(n)]
    if sc.peek() == "G":
        sc.expect("GF")
        sc.expect("(")
        at = sc.pos
        q = sc.integer()
        sc.expect(")")
        if prime_power_decomposition(q) is None:
            raise RingParseError(f"GF({q}): {q} is not a prime power", at)
        return [gf(q)]
    if sc.peek() == "N":
        sc.expect("N")
        sc.expect("(")
        at = sc.pos
        q = sc.integer()
        sc.expect(",")
        e = sc.integer()
        sc.expect(")")
        if prime_power_decomposition(q) is None:
            raise RingParseError(f"N({q},{e}): {q} is not a prime power", at)
        if e < 1:
            raise RingParseError(f"N({q},{e}): exponent must be >= 1", at)
        return [nilext(q, e)]
    raise RingParseError("expected a term: Z/n, GF(q), or N(q,e)", sc.pos)


def render_ring(ring: RingSpec) -> str:
    """Canonical spec string; parse_ring(render_ring(r)) == r."""
    return str(ring)


# ---------------------------------------------------------------------------
# element literals

def parse_element(ring: RingSpec, text: str) -> Element:
    """Parse an element literal with respect to a parsed ring."""
    fields = text.split(";")
    if len(fields) != len(ring.components):
        raise RingParseError(
            f"expected {len(ring.components)} coordinate(s) separated by ';', "
            f"got {len(fields)}",
            0,
        )
    coords = []
    for comp, field in zip(ring.components, fields):
        coords.append(_parse_local(comp, field.strip()))
    elem = tuple(coords)
    ring.validate(elem)
    return elem


def _parse_local(comp, text: str):
    if comp.kind == "zpe":
        try:
            value = int(text)
        except ValueError:
            raise RingParseError(f"{text!r} is not an integer", 0) from None
        if not 0 <= value < comp.size:
            _range_error(comp, text)
        return value
    if comp.kind == "gf":
        return _parse_gf(comp, text)
    # nilext: e bracketed gf literals, comma separated
    sc = _Scanner(text)
    groups = []
    while True:
        sc.expect("[")
        start = sc.pos
        depth_end = text.find("]", sc.pos)
        if depth_end < 0:
            raise RingParseError("unterminated '['", start)
        groups.append(_parse_gf(comp, text[sc.pos : depth_end]))
        sc.pos = depth_end + 1
        if sc.done():
            break
        sc.expect(",")
    if len(groups) != comp.e:
        raise RingParseError(
            f"{comp} coordinates need {comp.e} bracketed group(s), got {len(groups)}", 0
        )
    return tuple(groups)


def _parse_gf(comp, text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != comp.d:
        raise RingParseError(
            f"{comp} coordinates need {comp.d} comma-separated digit(s), got {len(parts)}", 0
        )
    digits = []
    for part in parts:
        try:
            v = int(part)
        except ValueError:
            raise RingParseError(f"{part!r} is not an integer", 0) from None
        if not 0 <= v < comp.p:
            _range_error(comp, part)
        digits.append(v)
    return tuple(digits)


def _range_error(comp, text):
    raise RingParseError(f"{text!r} out of range for {comp}", 0)


def render_element(ring: RingSpec, elem: Element) -> str:
    """Canonical element literal; inverse of parse_element."""
    ring.validate(elem)
    fields = []
    for comp, c in zip(ring.components, elem):
        if comp.kind == "zpe":
            fields.append(str(c))
        elif comp.kind == "gf":
            fields.append(",".join(str(d) for d in c))
        else:
            fields.append(",".join("[" + ",".join(str(d) for d in g) + "]" for g in c))
    return ";".join(fields)
