"""Reader and printer for the ideal file format.

::

    ring x, y, z;
    I = x^2*y, x*z^2;
    J = 0;

One ``ring`` line, then one or two ideal assignments: the first names the
numerator, the optional second the denominator.  On the right-hand side
``0`` denotes the zero ideal and ``1`` the unit monomial; monomials are
``*``-separated variable powers.  Whitespace and line breaks are free.
Printing is deterministic (generators in deglex order) and parsing a
printed ideal gives back the same ideal.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass

from .ideals import MAX_EXPONENT, Factor, Monomial, MonomialIdeal


class ParseError(ValueError):
    """Syntax or validation error in an ideal file, with source position."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)


_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[0-9]+|\S")
_GOOD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[0-9]+|[,;=^*-]")


def _tokenize(text):
    line_starts = [0] + [m.end() for m in re.finditer(r"\n", text)]

    def pos(offset):
        i = bisect.bisect_right(line_starts, offset) - 1
        return i + 1, offset - line_starts[i] + 1

    toks = []
    for m in _TOKEN.finditer(text):
        s = m.group()
        ln, col = pos(m.start())
        if not _GOOD.fullmatch(s):
            raise ParseError(f"unexpected character {s!r}", ln, col)
        toks.append((s, ln, col))
    end_ln, end_col = pos(len(text))
    return toks, (end_ln, end_col)


class _Stream:
    def __init__(self, toks, end_pos):
        self.toks = toks
        self.i = 0
        self.end_pos = end_pos

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def next(self, expect=None):
        if self.i >= len(self.toks):
            ln, col = self.end_pos
            what = f"expected {expect!r}" if expect else "unexpected end of input"
            raise ParseError(what, ln, col)
        tok = self.toks[self.i]
        self.i += 1
        if expect is not None and tok[0] != expect:
            raise ParseError(f"expected {expect!r}, found {tok[0]!r}", tok[1], tok[2])
        return tok


def _is_ident(s):
    return bool(re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", s or ""))


def _parse_monomial(st: _Stream, index_of: dict, n: int) -> Monomial:
    exps = [0] * n
    while True:
        tok, ln, col = st.next(None)
        if tok == "1":
            pass  # unit factor, contributes nothing
        elif tok.isdigit():
            raise ParseError(f"unexpected number {tok!r} in monomial", ln, col)
        elif _is_ident(tok):
            if tok not in index_of:
                raise ParseError(f"unknown variable {tok!r}", ln, col)
            e = 1
            if st.peek() == "^":
                st.next("^")
                etok, eln, ecol = st.next(None)
                if etok == "-":
                    raise ParseError("negative exponent", eln, ecol)
                if not etok.isdigit():
                    raise ParseError(f"expected exponent, found {etok!r}", eln, ecol)
                e = int(etok)
                if e > MAX_EXPONENT:
                    raise ParseError(f"exponent {e} exceeds the 2^31 - 1 cap", eln, ecol)
            exps[index_of[tok]] += e
        else:
            raise ParseError(f"expected a variable, found {tok!r}", ln, col)
        if st.peek() == "*":
            st.next("*")
            continue
        break
    return tuple(exps)


def _parse_gens(st: _Stream, index_of: dict, n: int) -> MonomialIdeal:
    if st.peek() == "0":
        st.next("0")
        return MonomialIdeal(n)
    gens = [_parse_monomial(st, index_of, n)]
    while st.peek() == ",":
        st.next(",")
        gens.append(_parse_monomial(st, index_of, n))
    return MonomialIdeal(n, gens)


def parse_ideal(text: str, names) -> MonomialIdeal:
    """Parse a comma-separated generator list (or ``0``) over the given variables."""
    names = tuple(names)
    index_of = {name: j for j, name in enumerate(names)}
    toks, end = _tokenize(text)
    st = _Stream(toks, end)
    ideal = _parse_gens(st, index_of, len(names))
    if st.peek() is not None:
        tok, ln, col = st.next(None)
        raise ParseError(f"trailing input {tok!r}", ln, col)
    return ideal


@dataclass(frozen=True)
class ParsedProblem:
    """A ring declaration plus one or two named ideal assignments."""

    names: tuple[str, ...]
    assignments: tuple[tuple[str, MonomialIdeal], ...]

    def factor(self) -> Factor:
        I = self.assignments[0][1]
        J = self.assignments[1][1] if len(self.assignments) > 1 else None
        return Factor(I, J)

    @property
    def has_denominator(self) -> bool:
        return len(self.assignments) > 1


def parse_problem(text: str) -> ParsedProblem:
    """Parse a full ideal file: ring line, then assignments for I and optionally J."""
    toks, end = _tokenize(text)
    st = _Stream(toks, end)
    kw, ln, col = st.next(None)
    if kw != "ring":
        raise ParseError(f"expected 'ring', found {kw!r}", ln, col)
    names = []
    while True:
        tok, ln, col = st.next(None)
        if not _is_ident(tok):
            raise ParseError(f"expected a variable name, found {tok!r}", ln, col)
        if tok in names:
            raise ParseError(f"duplicate variable name {tok!r}", ln, col)
        names.append(tok)
        if st.peek() == ",":
            st.next(",")
            continue
        break
    st.next(";")
    index_of = {name: j for j, name in enumerate(names)}
    assignments = []
    while st.peek() is not None:
        name, ln, col = st.next(None)
        if not _is_ident(name):
            raise ParseError(f"expected an ideal name, found {name!r}", ln, col)
        st.next("=")
        ideal = _parse_gens(st, index_of, len(names))
        st.next(";")
        assignments.append((name, ideal))
    if not assignments:
        ln, col = end
        raise ParseError("no ideal assignment found", ln, col)
    if len(assignments) > 2:
        raise ParseError("at most two ideal assignments are allowed (I and J)")
    return ParsedProblem(tuple(names), tuple(assignments))


def format_monomial(m: Monomial, names) -> str:
    """x^(2,1,0) -> 'x^2*y'; the unit monomial prints as '1'."""
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal_body(I: MonomialIdeal, names) -> str:
    """Generator list as it appears on an assignment's right-hand side."""
    if I.is_zero():
        return "0"
    return ", ".join(format_monomial(m, names) for m in I.gens)


def format_ideal(I: MonomialIdeal, names) -> str:
    if I.is_zero():
        return "0"
    return f"({format_ideal_body(I, names)})"


def format_factor(F: Factor, names, force_quotient=False) -> str:
    if F.J.is_zero() and not force_quotient:
        return format_ideal(F.I, names)
    return f"{format_ideal(F.I, names)} / {format_ideal(F.J, names)}"


def format_problem(names, I: MonomialIdeal, J: MonomialIdeal | None = None) -> str:
    """Serialize back to the file grammar; parse_problem inverts this."""
    lines = [f"ring {', '.join(names)};", f"I = {format_ideal_body(I, names)};"]
    if J is not None:
        lines.append(f"J = {format_ideal_body(J, names)};")
    return "\n".join(lines) + "\n"


def default_names(n: int) -> tuple[str, ...]:
    """x, y, z for up to three variables, else x1..xn."""
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))
