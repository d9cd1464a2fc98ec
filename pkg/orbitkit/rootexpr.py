"""Parsing and printing of root expressions.

Two notations are accepted:

- Euclidean: ``e1+e3``, ``e2``, ``(e1-e2-e3+e4)/2``, ``1/2e1-1/2e2``
- fundamental: ``a1``, ``3a1+2a2``

Whitespace is ignored and ``ε``, ``α`` and the unicode minus sign are read
as ``e``, ``a`` and ``-``. In table notation ``±`` expands to both signs.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .exceptions import RootParseError
from .models import Root
from .rootsys import RootSystem

_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?([ea])(\d+)")
_HALVED = re.compile(r"\((.*)\)/2")
_NORMALIZE = str.maketrans({"ε": "e", "α": "a", "−": "-"})


def _terms(body: str, text: str) -> list[tuple[Fraction, str, int]]:
    terms = []
    pos = 0
    while pos < len(body):
        match = _TERM.match(body, pos)
        if match is None or (pos > 0 and not match.group(1)):
            raise RootParseError(f"cannot read {text!r} at {body[pos:]!r}")
        sign, coeff, letter, index = match.groups()
        value = Fraction(coeff) if coeff else Fraction(1)
        terms.append((-value if sign == "-" else value, letter, int(index)))
        pos = match.end()
    if not terms:
        raise RootParseError(f"empty root expression {text!r}")
    if len({letter for _, letter, _ in terms}) > 1:
        raise RootParseError(f"{text!r} mixes e and a terms")
    return terms


def parse_root(rs: RootSystem, text: str) -> Root:
    """The positive root of rs written as ``text``.

    Raises:
        RootParseError: On malformed input or when the expression is not a
            positive root of rs
    """
    body = "".join(text.translate(_NORMALIZE).split())
    scale = Fraction(1)
    halved = _HALVED.fullmatch(body)
    if halved:
        body, scale = halved.group(1), Fraction(1, 2)
    terms = _terms(body, text)

    if terms[0][1] == "a":
        coeffs = [Fraction(0)] * rs.rank
        for value, _, index in terms:
            if not 1 <= index <= rs.rank:
                raise RootParseError(f"{rs.id} has no fundamental root a{index}")
            coeffs[index - 1] += value * scale
        if any(c.denominator != 1 for c in coeffs):
            raise RootParseError(f"{text!r} has fractional fundamental coefficients")
        root = rs.by_fcoords([int(c) for c in coeffs])
    else:
        doubled = [Fraction(0)] * rs.ambient_dim
        for value, _, index in terms:
            if not 1 <= index <= rs.ambient_dim:
                raise RootParseError(f"{rs.id} has no coordinate e{index}")
            doubled[index - 1] += 2 * value * scale
        if any(c.denominator != 1 for c in doubled):
            raise RootParseError(f"{text!r} has coefficients finer than 1/2")
        root = rs.is_root([int(c) for c in doubled])

    if root is None or root.negative:
        raise RootParseError(f"{text!r} is not a positive root of {rs.id}")
    return root


def parse_roots(rs: RootSystem, text: str) -> list[Root]:
    """Comma-separated list of root expressions."""
    parts = [part for part in text.split(",") if part.strip()]
    return [parse_root(rs, part) for part in parts]


def expand_pm(text: str) -> list[str]:
    """Expand every ``±`` into ``+`` and ``-`` (table notation)."""
    pieces = text.split("±")
    expanded = []
    for signs in itertools.product("+-", repeat=len(pieces) - 1):
        out = pieces[0]
        for sign, piece in zip(signs, pieces[1:]):
            out += sign + piece
        expanded.append(out)
    return expanded


def parse_table_entry(rs: RootSystem, text: str) -> list[Root]:
    """All roots denoted by a table entry such as ``e1±e4``."""
    return [parse_root(rs, variant) for variant in expand_pm(text)]


def format_root(rs: RootSystem, root: Root, style: str = "euclidean") -> str:
    """Print a root as ``euclidean`` (``e1+e2``) or ``fundamental`` (``a1+a2``)."""
    rs.check(root)
    if style == "euclidean":
        return root.euclidean()
    if style == "fundamental":
        return root.fundamental()
    raise ValueError(f"unknown root style {style!r}")
