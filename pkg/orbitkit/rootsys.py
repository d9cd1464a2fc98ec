"""Reduced root systems in doubled Bourbaki coordinates.

Every system is generated from its fundamental roots: the positive roots are
grown height by height with the root-string rule, so only the fundamental
roots of each family are written down. E6 and E7 are spanned by the first six
and seven fundamental roots of the E8 lattice realization.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .constants import coxeter_number, positive_root_count
from .exceptions import DomainError, ForeignRoot
from .models import Root, RootSystemId, SingularPair

_LOGGER = logging.getLogger(__name__)


def _unit(dim: int, k: int, scale: int = 2) -> list[int]:
    vec = [0] * dim
    vec[k] = scale
    return vec


def _chain(dim: int, count: int) -> list[list[int]]:
    """2(e_i - e_{i+1}) for i = 1..count."""
    roots = []
    for i in range(count):
        vec = [0] * dim
        vec[i], vec[i + 1] = 2, -2
        roots.append(vec)
    return roots


def _e8_fundamentals() -> list[list[int]]:
    roots = [[1, -1, -1, -1, -1, -1, -1, 1], [2, 2, 0, 0, 0, 0, 0, 0]]
    for i in range(6):
        vec = [0] * 8
        vec[i], vec[i + 1] = -2, 2
        roots.append(vec)
    return roots


def fundamental_dcoords(system_id: RootSystemId) -> tuple[int, list[list[int]]]:
    """Ambient dimension and doubled fundamental roots (Bourbaki numbering)."""
    family, n = system_id.family, system_id.rank
    if family == "A":
        return n + 1, _chain(n + 1, n)
    if family == "B":
        return n, _chain(n, n - 1) + [_unit(n, n - 1)]
    if family == "C":
        return n, _chain(n, n - 1) + [_unit(n, n - 1, scale=4)]
    if family == "D":
        last = [0] * n
        last[n - 2], last[n - 1] = 2, 2
        return n, _chain(n, n - 1) + [last]
    if family == "E":
        return 8, _e8_fundamentals()[:n]
    if family == "F":
        return 4, [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]]
    if family == "G":
        return 3, [[2, -2, 0], [-4, 2, 2]]
    raise DomainError(f"no realization for {system_id}")


def _cartan(fundamentals: Sequence[Sequence[int]]) -> list[list[int]]:
    """cartan[j][i] = <alpha_j, alpha_i^vee>."""
    dots = [[sum(a * b for a, b in zip(x, y)) for y in fundamentals] for x in fundamentals]
    rank = len(fundamentals)
    return [[2 * dots[j][i] // dots[i][i] for i in range(rank)] for j in range(rank)]


def _positive_fcoords(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """Grow the positive roots height by height.

    The alpha_i-string through beta runs from beta - p*alpha_i to
    beta + q*alpha_i with p - q = <beta, alpha_i^vee>.
    """
    rank = len(cartan)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    known = set(simple)
    result = list(simple)
    layer = list(simple)
    while layer:
        upper = []
        for beta in layer:
            for i in range(rank):
                p = 0
                cursor = list(beta)
                cursor[i] -= 1
                while tuple(cursor) in known:
                    p += 1
                    cursor[i] -= 1
                pairing = sum(beta[j] * cartan[j][i] for j in range(rank))
                if p - pairing > 0:
                    cand = list(beta)
                    cand[i] += 1
                    cand = tuple(cand)
                    if cand not in known:
                        known.add(cand)
                        upper.append(cand)
        result.extend(upper)
        layer = upper
    return result


class RootSystem:
    """Immutable catalog of the roots of a reduced root system."""

    def __init__(
        self,
        system_id: RootSystemId,
        ambient_dim: int,
        fundamental_vectors: Sequence[Sequence[int]],
        fcoords: Iterable[tuple[int, ...]],
    ):
        """Assemble the catalog from fundamental roots and positive fcoords.

        Args:
            system_id: Family and rank
            ambient_dim: Length of the dcoords vectors
            fundamental_vectors: Doubled fundamental roots
            fcoords: Coefficient vectors of all positive roots
        """
        self.id = system_id
        self.ambient_dim = ambient_dim
        self.coxeter_number = coxeter_number(system_id.family, system_id.rank)

        def to_dcoords(coeffs):
            vec = [0] * ambient_dim
            for c, fund in zip(coeffs, fundamental_vectors):
                if c:
                    for k in range(ambient_dim):
                        vec[k] += c * fund[k]
            return tuple(vec)

        entries = sorted(((to_dcoords(c), tuple(c)) for c in fcoords), key=lambda e: (sum(e[1]), e[0]))
        self.positives: tuple[Root, ...] = tuple(
            Root(system_id, i, False, d, f) for i, (d, f) in enumerate(entries)
        )
        self.negatives: tuple[Root, ...] = tuple(
            Root(system_id, r.index, True, tuple(-c for c in r.dcoords), tuple(-c for c in r.fcoords))
            for r in self.positives
        )
        self._by_dcoords = {r.dcoords: r for r in self.positives + self.negatives}
        self._by_fcoords = {r.fcoords: r for r in self.positives + self.negatives}
        # Bourbaki order: fundamentals[k] has fcoords e_k
        rank = system_id.rank
        self.fundamentals: tuple[Root, ...] = tuple(
            self._by_fcoords[tuple(int(i == k) for i in range(rank))] for k in range(rank)
        )

        dmat = np.array([r.dcoords for r in self.positives], dtype=np.int64)
        raw = dmat @ dmat.T
        # inner4 is 4x the inner product with the short roots of squared length 1
        self._divisor = int(raw.diagonal().min()) // 4
        self.gram: np.ndarray = raw // self._divisor
        self.gram.setflags(write=False)

        n = len(self.positives)
        table = np.full((n, n), -1, dtype=np.int64)
        singular: dict[int, list[SingularPair]] = {i: [] for i in range(n)}
        for i, alpha in enumerate(self.positives):
            for j in range(i + 1, n):
                gamma = self.positives[j]
                total = self._by_dcoords.get(tuple(a + g for a, g in zip(alpha.dcoords, gamma.dcoords)))
                if total is not None:
                    table[i, j] = table[j, i] = total.index
                    singular[total.index].append(SingularPair(alpha, gamma, total))
        self.sum_table: np.ndarray = table
        self.sum_table.setflags(write=False)
        self._singular = {k: tuple(v) for k, v in singular.items()}

    @property
    def rank(self) -> int:
        return self.id.rank

    @property
    def size(self) -> int:
        """Number of positive roots."""
        return len(self.positives)

    @property
    def all_roots(self) -> tuple[Root, ...]:
        return self.positives + self.negatives

    def check(self, root: Root) -> Root:
        """Return the root if it is catalogued here, else raise ForeignRoot."""
        if root.system != self.id or self._by_dcoords.get(root.dcoords) != root:
            raise ForeignRoot(f"{root} is not a root of {self.id}")
        return root

    def root(self, index: int, negative: bool = False) -> Root:
        return (self.negatives if negative else self.positives)[index]

    def negate(self, root: Root) -> Root:
        self.check(root)
        return self.root(root.index, not root.negative)

    def by_fcoords(self, fcoords: Sequence[int]) -> Optional[Root]:
        return self._by_fcoords.get(tuple(fcoords))

    def is_root(self, dcoords: Sequence[int]) -> Optional[Root]:
        """Catalogued root with these doubled coordinates, or None.

        Raises:
            DomainError: If the vector has the wrong length
        """
        if len(dcoords) != self.ambient_dim:
            raise DomainError(f"expected {self.ambient_dim} coordinates, got {len(dcoords)}")
        return self._by_dcoords.get(tuple(int(c) for c in dcoords))

    def add(self, first: Root, second: Root) -> Optional[Root]:
        """first + second if that is a root."""
        self.check(first)
        self.check(second)
        return self._by_dcoords.get(tuple(a + b for a, b in zip(first.dcoords, second.dcoords)))

    def sub(self, first: Root, second: Root) -> Optional[Root]:
        """first - second if that is a root."""
        self.check(first)
        self.check(second)
        return self._by_dcoords.get(tuple(a - b for a, b in zip(first.dcoords, second.dcoords)))

    def inner4(self, first: Root, second: Root) -> int:
        """Four times the inner product (short roots have squared length 1).

        Raises:
            ForeignRoot: If a root is not from this system
        """
        self.check(first)
        self.check(second)
        value = self.gram[first.index, second.index]
        if first.negative != second.negative:
            value = -value
        return int(value)

    def singular_set(self, beta: Root) -> tuple[SingularPair, ...]:
        """All decompositions beta = alpha + gamma into positive roots.

        Each unordered decomposition appears once, alpha before gamma in the
        positive-root order. As a set of roots, S(beta) has twice as many
        elements as there are pairs.
        """
        self.check(beta)
        if beta.negative:
            raise DomainError(f"{beta} is not positive")
        return self._singular[beta.index]

    def singular_roots(self, beta: Root) -> frozenset[Root]:
        """S(beta) as a set of roots."""
        return frozenset(r for pair in self.singular_set(beta) for r in (pair.alpha, pair.gamma))

    def precedes(self, beta: Root, alpha: Root) -> bool:
        """True iff beta < alpha, i.e. alpha - beta is a nonzero sum of positive roots.

        Tested as "all fundamental coefficients of alpha - beta are >= 0";
        such a vector is a sum of fundamental roots, so both readings agree.
        """
        self.check(beta)
        self.check(alpha)
        diff = [a - b for a, b in zip(alpha.fcoords, beta.fcoords)]
        return any(diff) and all(c >= 0 for c in diff)

    def maximal_elements(self, roots: Iterable[Root]) -> frozenset[Root]:
        """Elements not preceded by any other element of the input."""
        pool = [self.check(r) for r in roots]
        return frozenset(
            r for r in pool if not any(self.precedes(r, other) for other in pool if other != r)
        )

    def height(self, root: Root) -> int:
        return self.check(root).height

    def __repr__(self) -> str:
        return f"RootSystem({self.id.label}, {self.size} positive roots)"


@lru_cache(maxsize=None)
def build_root_system(system_id: RootSystemId) -> RootSystem:
    """Construct the full root system for a family and rank.

    Positive roots are sorted by (height, lexicographic dcoords), which fixes
    the index of every root. Systems are cached per identifier.

    Raises:
        UnsupportedRank: Raised by RootSystemId for out-of-bounds ranks
    """
    if not isinstance(system_id, RootSystemId):
        system_id = RootSystemId.parse(str(system_id))
    ambient_dim, fundamentals = fundamental_dcoords(system_id)
    fcoords = _positive_fcoords(_cartan(fundamentals))
    rs = RootSystem(system_id, ambient_dim, fundamentals, fcoords)
    expected = positive_root_count(system_id.family, system_id.rank)
    if rs.size != expected:
        raise AssertionError(f"{system_id} generated {rs.size} positive roots, expected {expected}")
    _LOGGER.info(f"Built {system_id} with {rs.size} positive roots")
    return rs
