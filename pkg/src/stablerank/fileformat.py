"""Line-oriented input files for supports, ideals, and change-of-variable matrices.

Grammar, shared by every kind: '#' starts a comment, blank lines are ignored,
tokens are whitespace-separated, and the first significant line is a header
naming the kind. Rationals are written p/q or as bare integers; decimal
notation is rejected so every value stays exact.

    tensor <order> <dims>   then one line of <order> indices in 1..dims per entry
    symm <degree> <nvars>   then one line of <nvars> exponents summing to degree
    mideal <nvars>          then one generator line of <nvars> exponents each
    pideal <nvars>          generators separated by '--' lines, terms written
                            '<coeff> : e1 ... e<nvars>' with a nonzero coeff
    matrix <nvars>          then exactly <nvars> rows of <nvars> rationals

`parse_input` reports every problem as a ParseError carrying the 1-based line
number. `serialize` writes a canonical form (sorted entry lines, bare
integers where possible) and `parse_input(serialize(doc)) == doc` holds for
every representable document.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, ParseError
from .ideals import LinearChange, MonomialIdeal, PolyIdeal, SparsePolynomial
from .tensors import SymmetricSupport, TensorSupport

__all__ = ["InputDocument", "parse_input", "serialize"]

_KIND_TYPES = {
    "tensor": TensorSupport,
    "symm": SymmetricSupport,
    "mideal": MonomialIdeal,
    "pideal": PolyIdeal,
    "matrix": LinearChange,
}

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")


@dataclass(frozen=True)
class InputDocument:
    """A parsed input file: the header kind plus the domain object it encodes."""

    kind: str
    payload: object

    def __post_init__(self):
        expected = _KIND_TYPES.get(self.kind)
        if expected is None:
            raise InputError(f"unknown input kind {self.kind!r}")
        if not isinstance(self.payload, expected):
            raise InputError(
                f"kind {self.kind!r} expects a {expected.__name__} payload, "
                f"got {type(self.payload).__name__}"
            )


def _parse_int(token: str, line: int, what: str) -> int:
    if not _INT_RE.match(token):
        raise ParseError(f"{what} must be an integer, got {token!r}", line)
    return int(token)


def _parse_rational(token: str, line: int) -> Fraction:
    if not _RATIONAL_RE.match(token):
        raise ParseError(f"not a rational (write p/q or an integer): {token!r}", line)
    num, _, den = token.partition("/")
    if den:
        d = int(den)
        if d == 0:
            raise ParseError(f"zero denominator: {token!r}", line)
        return Fraction(int(num), d)
    return Fraction(int(num))


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for idx, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((idx, body))
    return out


def _header_count(tokens, header_line, usage, count):
    if len(tokens) != count + 1:
        raise ParseError(f"usage: {usage}", header_line)
    values = []
    for tok in tokens[1:]:
        v = _parse_int(tok, header_line, "header field")
        if v < 1:
            raise ParseError(f"header field must be >= 1, got {v}", header_line)
        values.append(v)
    return values


def _parse_index_rows(rest, width, what, check, header_line, kind):
    seen = set()
    rows = []
    for ln, body in rest:
        parts = body.split()
        if len(parts) != width:
            raise ParseError(f"expected {width} {what}s, got {len(parts)}", ln)
        row = tuple(_parse_int(p, ln, what) for p in parts)
        check(row, ln)
        if row in seen:
            raise ParseError(f"duplicate line: {' '.join(parts)}", ln)
        seen.add(row)
        rows.append(row)
    if not rows:
        raise ParseError(f"{kind} needs at least one entry line", header_line)
    return rows


def _parse_pideal(rest, nvars, header_line) -> PolyIdeal:
    groups: list[dict] = []
    current: dict = {}
    last_sep = header_line
    for ln, body in rest:
        if body == "--":
            if not current:
                raise ParseError("generator has no terms", ln)
            groups.append(current)
            current = {}
            last_sep = ln
            continue
        coeff_part, sep, exps_part = body.partition(":")
        if not sep:
            raise ParseError("term line must look like '<coeff> : e1 ... en'", ln)
        ctoks = coeff_part.split()
        if len(ctoks) != 1:
            raise ParseError("exactly one coefficient is allowed before ':'", ln)
        coeff = _parse_rational(ctoks[0], ln)
        if coeff == 0:
            raise ParseError("zero coefficient is not allowed", ln)
        etoks = exps_part.split()
        if len(etoks) != nvars:
            raise ParseError(f"expected {nvars} exponents, got {len(etoks)}", ln)
        exps = []
        for tok in etoks:
            e = _parse_int(tok, ln, "exponent")
            if e < 0:
                raise ParseError(f"exponents must be nonnegative, got {e}", ln)
            exps.append(e)
        key = tuple(exps)
        if key in current:
            raise ParseError(f"duplicate exponent vector in generator: {exps_part.strip()}", ln)
        current[key] = coeff
    if current:
        groups.append(current)
    elif groups:
        raise ParseError("generator has no terms", last_sep)
    if not groups:
        raise ParseError("polynomial ideal needs at least one generator", header_line)
    return PolyIdeal(nvars, [SparsePolynomial(nvars, g) for g in groups])


def parse_input(text: str) -> InputDocument:
    """Parse one input file into an InputDocument.

    Raises ParseError, with the offending 1-based line number, for anything
    malformed: unknown kinds, wrong arities, out-of-range indices, duplicate
    lines, zero coefficients, non-rational tokens, or a singular matrix
    (reported at the header line).
    """
    lines = _significant_lines(text)
    if not lines:
        raise ParseError("empty input: expected a header line", 1)
    header_line, header = lines[0]
    tokens = header.split()
    kind = tokens[0]
    rest = lines[1:]

    if kind == "tensor":
        order, dims = _header_count(tokens, header_line, "tensor <order> <dims>", 2)

        def check(row, ln):
            for v in row:
                if not 1 <= v <= dims:
                    raise ParseError(f"index {v} out of range 1..{dims}", ln)

        rows = _parse_index_rows(rest, order, "index", check, header_line, "tensor")
        return InputDocument(kind, TensorSupport(order, dims, rows))

    if kind == "symm":
        degree, nvars = _header_count(tokens, header_line, "symm <degree> <nvars>", 2)

        def check(row, ln):
            if any(v < 0 for v in row):
                raise ParseError("exponents must be nonnegative", ln)
            if sum(row) != degree:
                raise ParseError(f"exponents must sum to {degree}, got {sum(row)}", ln)

        rows = _parse_index_rows(rest, nvars, "exponent", check, header_line, "symm")
        return InputDocument(kind, SymmetricSupport(degree, nvars, rows))

    if kind == "mideal":
        (nvars,) = _header_count(tokens, header_line, "mideal <nvars>", 1)

        def check(row, ln):
            if any(v < 0 for v in row):
                raise ParseError("exponents must be nonnegative", ln)

        rows = _parse_index_rows(rest, nvars, "exponent", check, header_line, "mideal")
        return InputDocument(kind, MonomialIdeal(nvars, rows))

    if kind == "pideal":
        (nvars,) = _header_count(tokens, header_line, "pideal <nvars>", 1)
        return InputDocument(kind, _parse_pideal(rest, nvars, header_line))

    if kind == "matrix":
        (nvars,) = _header_count(tokens, header_line, "matrix <nvars>", 1)
        if len(rest) > nvars:
            raise ParseError("unexpected line after matrix rows", rest[nvars][0])
        if len(rest) < nvars:
            raise ParseError(f"matrix needs {nvars} rows, found {len(rest)}", header_line)
        entries = []
        for ln, body in rest:
            toks = body.split()
            if len(toks) != nvars:
                raise ParseError(f"expected {nvars} entries, got {len(toks)}", ln)
            entries.append([_parse_rational(t, ln) for t in toks])
        try:
            payload = LinearChange(entries)
        except InputError as exc:
            raise ParseError(str(exc), header_line) from exc
        return InputDocument(kind, payload)

    raise ParseError(f"unknown input kind {kind!r}", header_line)


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def serialize(doc: InputDocument) -> str:
    """Canonical text for a document; parse_input inverts it exactly."""
    p = doc.payload
    if doc.kind == "tensor":
        lines = [f"tensor {p.order} {p.dims}"]
        lines += [" ".join(map(str, t)) for t in p.sorted_tuples]
    elif doc.kind == "symm":
        lines = [f"symm {p.degree} {p.nvars}"]
        lines += [" ".join(map(str, e)) for e in p.sorted_exponents]
    elif doc.kind == "mideal":
        lines = [f"mideal {p.nvars}"]
        lines += [" ".join(map(str, g)) for g in p.generators]
    elif doc.kind == "pideal":
        lines = [f"pideal {p.nvars}"]
        for pos, gen in enumerate(p.generators):
            if gen.is_zero:
                raise InputError("a zero generator has no file representation")
            if pos:
                lines.append("--")
            lines += [
                f"{_format_rational(c)} : " + " ".join(map(str, e))
                for e, c in gen.sorted_terms()
            ]
    elif doc.kind == "matrix":
        lines = [f"matrix {p.nvars}"]
        lines += [" ".join(_format_rational(v) for v in row) for row in p.matrix]
    else:
        raise InputError(f"unknown input kind {doc.kind!r}")
    return "\n".join(lines) + "\n"
