"""Tests for root expression parsing and printing."""

import pytest

from orbitkit.exceptions import RootParseError
from orbitkit.rootexpr import expand_pm, format_root, parse_root, parse_roots, parse_table_entry


@pytest.mark.parametrize(
    "text, expected",
    [
        ("e1", "e1"),
        ("e1 + e3", "e1+e3"),
        ("ε2−ε4", "e2-e4"),
        ("(e1-e2-e3+e4)/2", "(e1-e2-e3+e4)/2"),
        ("1/2e1-1/2e2-1/2e3+1/2e4", "(e1-e2-e3+e4)/2"),
        ("a1+2a2+3a3+2a4", "e1"),
        ("α4", "(e1-e2-e3-e4)/2"),
    ],
)
def test_parse_f4(f4, text, expected):
    assert parse_root(f4, text).euclidean() == expected


def test_parse_fundamental_notation(g2):
    assert parse_root(g2, "3a1+2a2").fcoords == (3, 2)
    assert parse_root(g2, "a2").fcoords == (0, 1)


@pytest.mark.parametrize(
    "text",
    ["", "e1+", "e1 e2", "x1", "e5", "e1+a2", "(e1+e2)/3", "e1+e2+e3", "-e1", "e1/3", "a1+a3"],
)
def test_rejects_malformed_or_non_roots(b3, text):
    with pytest.raises(RootParseError):
        parse_root(b3, text)


def test_parse_roots(b3):
    roots = parse_roots(b3, "e1, e2+e3")
    assert [r.euclidean() for r in roots] == ["e1", "e2+e3"]


def test_expand_pm():
    assert expand_pm("e1±e4") == ["e1+e4", "e1-e4"]
    assert len(expand_pm("(e1-e2±e3±e4)/2")) == 4
    assert expand_pm("e2") == ["e2"]


def test_parse_table_entry(f4):
    roots = parse_table_entry(f4, "(e1+e2±e3-e4)/2")
    assert {r.euclidean() for r in roots} == {"(e1+e2+e3-e4)/2", "(e1+e2-e3-e4)/2"}


def test_format_root(g2, b3):
    top = g2.by_fcoords((3, 2))
    assert format_root(g2, top, "fundamental") == "3a1+2a2"
    e1 = parse_root(b3, "e1")
    assert format_root(b3, e1) == "e1"
    assert format_root(b3, e1, "fundamental") == "a1+a2+a3"
    with pytest.raises(ValueError):
        format_root(b3, e1, "polar")
