"""Parsing and rendering of monomial ideals.

Text grammar: generators separated by commas, a generator is ``1`` or
``var('^'posint)?('*'var('^'posint)?)*``; whitespace is ignored;
variables match ``[A-Za-z][A-Za-z0-9_]*`` with an optional ``[slot]``
suffix reserved for grid rings.  The single token ``0`` denotes the zero
ideal.  Structured documents are JSON objects with fields ``vars``,
``grid`` (optional slot counts), ``gens`` (strings or arrays; arrays are
authoritative), and an optional determining vector ``a``; their canonical
rendering round-trips byte for byte.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .core import (
    MonomialIdeal,
    Ring,
    UnitIdealError,
    Vec,
    grid_ring,
    make_ring,
    minimalize,
    monomial_str,
)

_TOKEN_RE = re.compile(
    r"(?P<name>[A-Za-z][A-Za-z0-9_]*(?:\[\d+\])?)"
    r"|(?P<int>\d+)"
    r"|(?P<caret>\^)"
    r"|(?P<star>\*)"
    r"|(?P<comma>,)"
    r"|(?P<ws>\s+)"
)


class ParseError(ValueError):
    """Syntax or lookup error with 1-based line/column position."""

    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind != "ws":
            tokens.append(_Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(_Token("end", "", line, col))
    return tokens


def parse_ideal(text: str, ring: Ring) -> MonomialIdeal:
    """Parse generator text into a canonical (minimalized) ideal."""
    stripped = text.strip()
    if stripped == "" or stripped == "0":
        return MonomialIdeal(ring, ())
    tokens = _tokenize(text)
    position = {name: k for k, name in enumerate(ring.names)}
    idx = 0

    def peek() -> _Token:
        return tokens[idx]

    def advance() -> _Token:
        nonlocal idx
        t = tokens[idx]
        idx += 1
        return t

    gens: list[Vec] = []
    while True:
        vec = [0] * ring.n
        t = peek()
        if t.kind == "int" and t.text == "1":
            advance()
            raise UnitIdealError(
                f"generator 1 denotes the unit ideal (line {t.line}, column {t.col})"
            )
        saw_factor = False
        while True:
            t = peek()
            if t.kind != "name":
                break
            advance()
            if t.text not in position:
                raise ParseError(f"unknown variable {t.text!r}", t.line, t.col)
            exp = 1
            if peek().kind == "caret":
                advance()
                e = peek()
                if e.kind != "int":
                    raise ParseError("expected an exponent after '^'", e.line, e.col)
                advance()
                exp = int(e.text)
                if exp < 1:
                    raise ParseError("exponents must be positive", e.line, e.col)
            vec[position[t.text]] += exp
            saw_factor = True
            if peek().kind == "star":
                advance()
                continue
            break
        if not saw_factor:
            t = peek()
            raise ParseError("expected a generator", t.line, t.col)
        gens.append(tuple(vec))
        t = peek()
        if t.kind == "comma":
            advance()
            continue
        if t.kind == "end":
            break
        raise ParseError(f"unexpected token {t.text!r}", t.line, t.col)
    return minimalize(ring, gens)


def render_ideal(ideal: MonomialIdeal) -> str:
    """Canonical text form; inverse of :func:`parse_ideal` on canonical input."""
    if ideal.is_zero:
        return "0"
    return ", ".join(monomial_str(ideal.ring, g) for g in ideal.gens)


# ---------------------------------------------------------------------------
# JSON documents


def ring_from_document(doc: dict) -> Ring:
    names = doc.get("vars")
    if not names:
        raise ValueError("document needs a non-empty 'vars' list")
    grid = doc.get("grid")
    if grid:
        return grid_ring(tuple(names), tuple(int(s) for s in grid))
    return make_ring(tuple(names))


def document_to_ideal(doc: dict) -> tuple[MonomialIdeal, Vec | None]:
    """Decode a document; returns the ideal and the optional vector a."""
    ring = ring_from_document(doc)
    raw = doc.get("gens", [])
    vectors: list[Vec] = []
    strings: list[str] = []
    for item in raw:
        if isinstance(item, str):
            strings.append(item)
        else:
            vectors.append(tuple(int(x) for x in item))
    if vectors:
        ideal = minimalize(ring, vectors)
    elif strings:
        ideal = parse_ideal(", ".join(strings), ring)
    else:
        ideal = MonomialIdeal(ring, ())
    a = doc.get("a")
    avec = tuple(int(x) for x in a) if a is not None else None
    return ideal, avec


def ideal_to_document(ideal: MonomialIdeal, a: Vec | None = None) -> dict:
    """Canonical document: base vars, slot counts for grid rings, array gens."""
    if ideal.ring.is_grid:
        grid = ideal.ring.grid
        doc: dict = {"vars": list(grid.base_names), "grid": list(grid.slots)}
    else:
        doc = {"vars": list(ideal.ring.names), "grid": None}
    doc["gens"] = [list(g) for g in ideal.gens]
    doc["gens_text"] = render_ideal(ideal)
    doc["a"] = list(a) if a is not None else None
    return doc


def dumps_document(doc: dict) -> str:
    """Deterministic JSON bytes for byte-identical round trips."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads_document(text: str) -> dict:
    return json.loads(text)
