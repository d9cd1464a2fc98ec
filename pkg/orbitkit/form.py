"""Prime-field linear algebra for the canonical form f_{D,xi}.

The skew form B[a, g] = f([e_a, e_g]) on the positive nilpotent subalgebra is
assembled from the ordered positive triples of the Chevalley table; the orbit
dimension is its rank.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
from sympy import isprime, nextprime

from .chevalley import ChevalleyTable
from .constants import MAX_PRIME
from .exceptions import DomainError, FieldTooSmall, NotIsotropic, NotReduced
from .models import Functional, OrthoSubset, Root
from .rootsys import RootSystem
from .weyl import involution_stats

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimeField:
    """F_p with elements kept in [0, p)."""

    p: int

    def __post_init__(self):
        """Reject non-primes and primes too large for int64 arithmetic."""
        if not isprime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if self.p > MAX_PRIME:
            raise DomainError(f"p = {self.p} exceeds the supported maximum {MAX_PRIME}")

    def require_coxeter(self, rs: RootSystem) -> None:
        """Raise FieldTooSmall when p is below the Coxeter number of rs."""
        if self.p < rs.coxeter_number:
            raise FieldTooSmall(
                f"p = {self.p} is below the Coxeter number {rs.coxeter_number} of {rs.id}"
            )

    def inverse(self, value: int) -> int:
        return pow(int(value) % self.p, -1, self.p)


@dataclass(frozen=True)
class FormMatrix:
    """Skew matrix over F_p indexed by the positive roots."""

    entries: np.ndarray
    p: int

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def is_skew(self) -> bool:
        m = self.entries
        return bool(not np.any(np.diagonal(m)) and not np.any((m + m.T) % self.p))


@dataclass(frozen=True)
class RadicalSplit:
    """Dimensions in the decomposition rad f = b (+) rad f~ for a maximal beta."""

    beta: Root
    dim_radical: int
    dim_tilde: int
    dim_b: int
    a_size: int
    a_fixed: int

    @property
    def additive(self) -> bool:
        return self.dim_radical == self.dim_tilde + self.dim_b


def default_prime(rs: RootSystem) -> int:
    """Smallest prime >= the Coxeter number of rs."""
    return int(nextprime(rs.coxeter_number - 1))


def canonical_form(D: OrthoSubset) -> Functional:
    """f = sum of xi_beta e_beta^* over beta in D."""
    coeffs = [0] * D.rs.size
    for root, value in zip(D.roots, D.xi):
        coeffs[root.index] = value % D.p
    return Functional(tuple(coeffs), D.p)


def form_matrix(tbl: ChevalleyTable, f: Functional, field: Optional[PrimeField] = None) -> FormMatrix:
    """B[a, g] = f(N_{a,g} e_{a+g}) mod p.

    Raises:
        FieldTooSmall: If p is below the Coxeter number
    """
    field = field or PrimeField(f.p)
    field.require_coxeter(tbl.rs)
    p = field.p
    coeffs = np.array(f.coeffs, dtype=np.int64) % p
    n = tbl.rs.size
    entries = np.zeros((n, n), dtype=np.int64)
    entries[tbl.triple_i, tbl.triple_j] = (coeffs[tbl.triple_k] * (tbl.triple_n % p)) % p
    return FormMatrix(entries, p)


def _rref(matrix: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p and the pivot columns."""
    m = np.array(matrix, dtype=np.int64) % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(m[r:, c])[0]
        if candidates.size == 0:
            continue
        pivot = r + int(candidates[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    if matrix.size == 0:
        return 0
    return len(_rref(matrix, p)[1])


def rank_and_radical(B: FormMatrix) -> tuple[int, list[tuple[int, ...]]]:
    """Rank of B and a basis of its kernel in the e_alpha coordinates.

    B is skew, so the left and right kernels agree.
    """
    n = B.size
    if n == 0:
        return 0, []
    reduced, pivots = _rref(B.entries, B.p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for col in free:
        vec = [0] * n
        vec[col] = 1
        for row, pivot in enumerate(pivots):
            vec[pivot] = int(-reduced[row, col]) % B.p
        basis.append(tuple(vec))
    return len(pivots), basis


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination on Python integers."""
    m = [[int(x) for x in row] for row in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        head = m[r][c]
        for i in range(r + 1, rows):
            lead = m[i][c]
            for j in range(c + 1, cols):
                m[i][j] = (m[i][j] * head - lead * m[r][j]) // prev
            m[i][c] = 0
        prev = head
        r += 1
    return r


def integer_form_matrix(tbl: ChevalleyTable, D: OrthoSubset) -> np.ndarray:
    """The form matrix over Z, before reduction mod p (object dtype)."""
    coeffs = np.zeros(tbl.rs.size, dtype=object)
    for root, value in zip(D.roots, D.xi):
        coeffs[root.index] = int(value)
    entries = np.zeros((tbl.rs.size, tbl.rs.size), dtype=object)
    entries[tbl.triple_i, tbl.triple_j] = coeffs[tbl.triple_k] * tbl.triple_n.astype(object)
    return entries


def rational_rank(tbl: ChevalleyTable, D: OrthoSubset) -> int:
    """Rank of the integer form matrix over Q."""
    return bareiss_rank(integer_form_matrix(tbl, D).tolist())


def orbit_dimension(D: OrthoSubset, tbl: ChevalleyTable) -> int:
    """dim of the coadjoint orbit of f_{D,xi}, i.e. the rank of its form matrix.

    An unreduced D is reduced first (the orbit does not change) and a
    NotReduced warning is issued.
    """
    if not D.reduced:
        from .enumeration import reduce_singular

        reduced = reduce_singular(D)
        warnings.warn(
            NotReduced(f"{D} is not reduced; computing with {reduced}"), stacklevel=2
        )
        D = reduced
    B = form_matrix(tbl, canonical_form(D))
    rank = rank_mod_p(B.entries, B.p)
    _LOGGER.debug(f"{tbl.rs.id} {D}: rank {rank}")
    return rank


def coadjoint_act(tbl: ChevalleyTable, y: Sequence[int], f: Functional) -> Functional:
    """exp(y).f, i.e. x -> f(exp(ad(-y)) x) for y in u.

    Raises:
        FieldTooSmall: If p is below the Coxeter number, or a power of
            ad(-y) of order >= p survives
    """
    field = PrimeField(f.p)
    field.require_coxeter(tbl.rs)
    p = field.p
    n = tbl.rs.size
    if len(y) != n:
        raise DomainError(f"y has {len(y)} coordinates, expected {n}")
    neg_y = (-np.array(y, dtype=np.int64)) % p
    # ad(-y)[k, j] = sum_i (-y_i) N_{ij} [i + j = k]
    ad = np.zeros((n, n), dtype=np.int64)
    np.add.at(ad, (tbl.triple_k, tbl.triple_j), neg_y[tbl.triple_i] * (tbl.triple_n % p))
    ad %= p

    total = np.eye(n, dtype=np.int64)
    term = np.eye(n, dtype=np.int64)
    order = 0
    while True:
        order += 1
        term = (term @ ad) % p
        if not term.any():
            break
        if order >= p:
            raise FieldTooSmall(f"ad(-y)^{order} does not vanish over F_{p}")
        term = (term * field.inverse(order)) % p
        total = (total + term) % p
    coeffs = (total.T @ np.array(f.coeffs, dtype=np.int64)) % p
    return Functional(tuple(int(c) for c in coeffs), p)


def check_isotropic(tbl: ChevalleyTable, f: Functional, P: Iterable[Root]) -> bool:
    """True iff f([x, y]) = 0 for all x, y in the span of the e_alpha, alpha in P."""
    idx = [tbl.rs.check(r).index for r in P]
    if not idx:
        return True
    B = form_matrix(tbl, f)
    return not B.entries[np.ix_(idx, idx)].any()


def check_maximal_isotropic(tbl: ChevalleyTable, f: Functional, P: Iterable[Root]) -> bool:
    """True iff the coordinate span of P is isotropic with rank(B) = 2 * codim.

    Raises:
        NotIsotropic: If P does not span an isotropic subspace
    """
    P = list(P)
    if not check_isotropic(tbl, f, P):
        raise NotIsotropic(f"span of {[str(r) for r in P]} is not isotropic")
    B = form_matrix(tbl, f)
    return rank_mod_p(B.entries, B.p) == 2 * (tbl.rs.size - len(set(r.index for r in P)))


def principal_rank(B: FormMatrix, roots: Iterable[Root]) -> int:
    """Rank of the principal submatrix on the given positive roots."""
    idx = sorted({r.index for r in roots})
    if not idx:
        return 0
    return rank_mod_p(B.entries[np.ix_(idx, idx)], B.p)


def radical_split(tbl: ChevalleyTable, D: OrthoSubset, beta: Optional[Root] = None) -> RadicalSplit:
    """Split rad f along A = {a > 0 : (a, beta) != 0} for beta maximal in D.

    dim rad f~ is computed on the roots orthogonal to beta, and
    dim b = |A| - rank(B[:, A]) is the radical inside the span of A.
    """
    rs = tbl.rs
    if beta is None:
        beta = max(rs.maximal_elements(D.roots), key=lambda r: r.index)
    elif beta not in D.roots:
        raise DomainError(f"{beta} is not in D")
    B = form_matrix(tbl, canonical_form(D))
    n = rs.size
    a_roots = [r for r in rs.positives if rs.inner4(r, beta) != 0]
    tilde = [r for r in rs.positives if rs.inner4(r, beta) == 0]
    a_idx = [r.index for r in a_roots]

    dim_radical = n - rank_mod_p(B.entries, B.p)
    dim_tilde = len(tilde) - principal_rank(B, tilde)
    dim_b = len(a_idx) - rank_mod_p(B.entries[:, a_idx], B.p)
    sigma = involution_stats(rs, D.roots).sigma
    a_fixed = sum(1 for r in a_roots if sigma.apply(r).positive)
    return RadicalSplit(beta, dim_radical, dim_tilde, dim_b, len(a_roots), a_fixed)


def b4_part(rs: RootSystem) -> list[Root]:
    """Positive roots of F4 with integer ambient coordinates (a B4 subsystem)."""
    return [r for r in rs.positives if all(c % 2 == 0 for c in r.dcoords)]


def b4_defect(tbl: ChevalleyTable, D: OrthoSubset) -> tuple[int, int, int]:
    """(dim orbit, dim of the orbit restricted to the B4 part, #{a outside B4 : sigma a < 0}).

    For D inside the B4 part the first equals the second plus the third.
    """
    rs = tbl.rs
    if rs.id.label != "F4":
        raise DomainError(f"the B4 part is defined for F4, not {rs.id}")
    inner = b4_part(rs)
    inner_idx = {r.index for r in inner}
    for root in D.roots:
        if root.index not in inner_idx:
            raise DomainError(f"{root} is outside the B4 part")
    B = form_matrix(tbl, canonical_form(D))
    sigma = involution_stats(rs, D.roots).sigma
    flipped = sum(
        1 for r in rs.positives if r.index not in inner_idx and sigma.apply(r).negative
    )
    return rank_mod_p(B.entries, B.p), principal_rank(B, inner), flipped
