"""Chevalley structure constants N_{alpha,gamma}.

Signs follow the extraspecial-pair convention: positive roots are ordered by
(height, lex dcoords), and for every non-fundamental positive root delta the
pair (r1, s1) with r1 minimal and r1 + s1 = delta gets N = +(p+1). All other
constants follow from the standard identities, with |r|^2 read off the
diagonal of the inner4 Gram matrix:

    N_{s,r} = -N_{r,s}
    N_{-r,-s} = -N_{r,s}
    r + s + t = 0  =>  N_{r,s}/|t|^2 = N_{s,t}/|r|^2 = N_{t,r}/|s|^2
    r + s + t + u = 0 (no opposite pair)  =>
        N_{r,s}N_{t,u}/|r+s|^2 + N_{s,t}N_{r,u}/|s+t|^2 + N_{t,r}N_{s,u}/|t+r|^2 = 0
"""

from __future__ import annotations

import csv
import logging
from fractions import Fraction
from functools import lru_cache
from typing import TextIO

import numpy as np

from .models import Root
from .rootsys import RootSystem

_LOGGER = logging.getLogger(__name__)


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise AssertionError(f"non-integral structure constant {value} for {what}")
    return int(value)


class ChevalleyTable:
    """Structure constants of a root system, stored for positive pairs.

    ``pos[i, j]`` is N for the i-th and j-th positive roots (0 when their sum
    is not a root). Pairs involving negative roots are derived on demand.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._norm = rs.gram.diagonal()
        n = rs.size
        self.pos = np.zeros((n, n), dtype=np.int64)
        for delta in rs.positives:
            pairs = rs.singular_set(delta)
            if not pairs:
                continue
            first = pairs[0]
            r1, s1 = first.alpha, first.gamma
            extra = self.string_p(r1, s1) + 1
            self.pos[r1.index, s1.index] = extra
            self.pos[s1.index, r1.index] = -extra
            for pair in pairs[1:]:
                value = self._propagate(pair.alpha, pair.gamma, r1, s1, delta)
                self.pos[pair.alpha.index, pair.gamma.index] = value
                self.pos[pair.gamma.index, pair.alpha.index] = -value
        self.pos.setflags(write=False)

        rows, cols = np.nonzero(rs.sum_table >= 0)
        # ordered positive triples (i, j, k) with alpha_i + alpha_j = alpha_k
        self.triple_i = rows
        self.triple_j = cols
        self.triple_k = rs.sum_table[rows, cols]
        self.triple_n = self.pos[rows, cols]
        _LOGGER.debug(f"Structure constants for {rs.id}: {len(rows)} ordered positive pairs")

    def string_p(self, alpha: Root, gamma: Root) -> int:
        """Largest p with gamma - p*alpha a root."""
        p = 0
        cursor = gamma.dcoords
        while True:
            cursor = tuple(g - a for g, a in zip(cursor, alpha.dcoords))
            if self.rs.is_root(cursor) is None:
                return p
            p += 1

    def _propagate(self, r: Root, s: Root, r1: Root, s1: Root, delta: Root) -> int:
        rs = self.rs
        neg = rs.negate
        total = Fraction(0)
        u = rs.add(s1, neg(r))
        if u is not None:
            total += Fraction(self.value(s1, neg(r)) * self.value(r1, neg(s)), int(self._norm[u.index]))
        v = rs.add(r1, neg(r))
        if v is not None:
            total += Fraction(self.value(neg(r), r1) * self.value(s1, neg(s)), int(self._norm[v.index]))
        result = Fraction(int(self._norm[delta.index])) / self.value(r1, s1) * total
        return _as_int(result, f"({r}, {s})")

    def value(self, alpha: Root, gamma: Root) -> int:
        """N_{alpha,gamma} without membership checks."""
        if alpha.negative == gamma.negative:
            # both negative: N_{-r,-s} = -N_{r,s}
            sign = -1 if alpha.negative else 1
            return sign * int(self.pos[alpha.index, gamma.index])
        if alpha.negative:
            return -self.value(gamma, alpha)
        total = self.rs.add(alpha, gamma)
        if total is None:
            return 0
        if total.positive:
            # gamma negative, alpha = total + (-gamma)
            ratio = Fraction(int(self._norm[total.index]), int(self._norm[alpha.index]))
            return _as_int(ratio * int(self.pos[total.index, gamma.index]), f"({alpha}, {gamma})")
        # -gamma = -total + alpha
        ratio = Fraction(int(self._norm[total.index]), int(self._norm[gamma.index]))
        return _as_int(ratio * int(self.pos[total.index, alpha.index]), f"({alpha}, {gamma})")

    def __repr__(self) -> str:
        return f"ChevalleyTable({self.rs.id})"


@lru_cache(maxsize=None)
def structure_constants(rs: RootSystem) -> ChevalleyTable:
    """Build (once per root system) the Chevalley table of rs."""
    return ChevalleyTable(rs)


def n_const(tbl: ChevalleyTable, alpha: Root, gamma: Root) -> int:
    """N_{alpha,gamma}, or 0 when alpha + gamma is not a root.

    Raises:
        ForeignRoot: If either root is not from tbl's system
    """
    tbl.rs.check(alpha)
    tbl.rs.check(gamma)
    if alpha.index == gamma.index:
        return 0
    return tbl.value(alpha, gamma)


def dump_constants_csv(tbl: ChevalleyTable, stream: TextIO) -> int:
    """Write every nonzero positive-pair constant as CSV; returns the row count."""
    writer = csv.writer(stream)
    writer.writerow(["alpha", "gamma", "sum", "N"])
    rs = tbl.rs
    count = 0
    for i, j, k, value in zip(tbl.triple_i, tbl.triple_j, tbl.triple_k, tbl.triple_n):
        writer.writerow([rs.root(int(i)), rs.root(int(j)), rs.root(int(k)), int(value)])
        count += 1
    return count
