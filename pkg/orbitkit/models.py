"""Data models for orbitkit."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

from .constants import RANK_BOUNDS, SIMPLY_LACED
from .exceptions import DomainError, NotOrthogonal, UnsupportedRank

if TYPE_CHECKING:
    from .rootsys import RootSystem
    from .weyl import WeylElement


@dataclass(frozen=True, order=True)
class RootSystemId:
    """Family letter and rank of a root system, e.g. ``RootSystemId("F", 4)``."""

    family: str
    rank: int

    def __post_init__(self):
        """Validate the family/rank combination."""
        if self.family not in RANK_BOUNDS:
            raise UnsupportedRank(f"unknown family {self.family!r}")
        low, high = RANK_BOUNDS[self.family]
        if not isinstance(self.rank, int) or not low <= self.rank <= high:
            raise UnsupportedRank(
                f"{self.family}{self.rank} is outside the supported ranks {low}..{high}"
            )

    @classmethod
    def parse(cls, text: str) -> "RootSystemId":
        """Parse labels like ``"B3"`` or ``"e8"``."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise UnsupportedRank(f"cannot read root system type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in SIMPLY_LACED

    def __str__(self) -> str:
        return self.label


def _format_terms(coeffs, letter: str) -> str:
    parts = []
    for k, c in enumerate(coeffs, 1):
        if c == 0:
            continue
        if c == 1:
            term = f"{letter}{k}"
        elif c == -1:
            term = f"-{letter}{k}"
        else:
            term = f"{c}{letter}{k}"
        if parts and c > 0:
            term = "+" + term
        parts.append(term)
    return "".join(parts) or "0"


@dataclass(frozen=True)
class Root:
    """A catalogued root.

    ``dcoords`` are twice the Bourbaki ambient coordinates, so every root of
    every supported type is an integer vector. ``fcoords`` are the
    coefficients over the fundamental roots. ``index`` is the position of the
    root (or of its negative) in the positive-root order.
    """

    system: RootSystemId
    index: int
    negative: bool
    dcoords: tuple[int, ...]
    fcoords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.fcoords)

    @property
    def positive(self) -> bool:
        return not self.negative

    def euclidean(self) -> str:
        """Ambient form, e.g. ``e1+e3`` or ``(e1-e2-e3+e4)/2``."""
        if all(c % 2 == 0 for c in self.dcoords):
            return _format_terms([c // 2 for c in self.dcoords], "e")
        return f"({_format_terms(self.dcoords, 'e')})/2"

    def fundamental(self) -> str:
        """Form over the fundamental roots, e.g. ``3a1+2a2``."""
        return _format_terms(self.fcoords, "a")

    def __str__(self) -> str:
        return self.euclidean()


@dataclass(frozen=True)
class SingularPair:
    """Positive roots alpha, gamma with alpha + gamma = beta."""

    alpha: Root
    gamma: Root
    beta: Root

    def __post_init__(self):
        """Check the defining sum coordinate-wise."""
        summed = tuple(a + g for a, g in zip(self.alpha.dcoords, self.gamma.dcoords))
        if summed != self.beta.dcoords:
            raise ValueError(f"{self.alpha} + {self.gamma} != {self.beta}")
        if self.alpha.negative or self.gamma.negative or self.beta.negative:
            raise ValueError("singular pairs consist of positive roots")


@dataclass(frozen=True)
class OrthoSubset:
    """Orthogonal subset D of positive roots with scalars xi over F_p."""

    rs: "RootSystem" = field(compare=False, repr=False)
    roots: tuple[Root, ...]
    xi: tuple[int, ...]
    p: int

    def __post_init__(self):
        """Validate orthogonality, positivity and the scalars."""
        if len(self.xi) != len(self.roots):
            raise DomainError(f"{len(self.xi)} scalars for {len(self.roots)} roots")
        for root in self.roots:
            self.rs.check(root)
            if root.negative:
                raise NotOrthogonal(f"{root} is not a positive root")
        if len({r.index for r in self.roots}) != len(self.roots):
            raise NotOrthogonal("orthogonal subsets have distinct roots")
        for i, first in enumerate(self.roots):
            for second in self.roots[i + 1 :]:
                if self.rs.inner4(first, second) != 0:
                    raise NotOrthogonal(f"{first} and {second} are not orthogonal")
        for root, value in zip(self.roots, self.xi):
            if value % self.p == 0:
                raise DomainError(f"xi for {root} is zero mod {self.p}")

    @classmethod
    def ones(cls, rs: "RootSystem", roots, p: int) -> "OrthoSubset":
        """Subset with every scalar equal to 1."""
        roots = tuple(roots)
        return cls(rs, roots, (1,) * len(roots), p)

    @property
    def reduced(self) -> bool:
        """True iff S(beta) and D are disjoint for every beta in D."""
        members = {r.index for r in self.roots}
        for beta in self.roots:
            for pair in self.rs.singular_set(beta):
                if pair.alpha.index in members or pair.gamma.index in members:
                    return False
        return True

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(r.index for r in self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __str__(self) -> str:
        body = ", ".join(f"{r}:{x}" for r, x in zip(self.roots, self.xi))
        return f"D{{{body}}} mod {self.p}"


@dataclass(frozen=True)
class Functional:
    """Element of u* in the dual basis {e_alpha*}, coefficients in [0, p)."""

    coeffs: tuple[int, ...]
    p: int

    def __post_init__(self):
        """Validate the coefficient range."""
        for value in self.coeffs:
            if not 0 <= value < self.p:
                raise ValueError(f"coefficient {value} is not reduced mod {self.p}")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __getitem__(self, root: Root) -> int:
        return self.coeffs[root.index]

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True)
class InvolutionStats:
    """Length statistics of sigma_D."""

    sigma: "WeylElement"
    l: int
    s: int
    bound: int
    phi_sigma: frozenset[Root]

    def __str__(self) -> str:
        return f"l={self.l} s={self.s} bound={self.bound}"


@dataclass
class VerifyReport:
    """Per-subset outcome of the dim <= l - s check."""

    system: RootSystemId
    D: tuple[int, ...]
    primes: tuple[int, ...]
    xi_samples: int
    dim: int
    bound: int
    l: int
    s: int
    dims: tuple[int, ...] = ()
    reduced_D: tuple[int, ...] = ()
    xi_independent: bool = True
    prime_independent: bool = True
    bound_ok: bool = True
    even_ok: bool = True
    reduced_applied: bool = False
    seed: int = 0

    @property
    def passed(self) -> bool:
        return (
            self.xi_independent and self.prime_independent and self.bound_ok and self.even_ok
        )

    def to_dict(self) -> dict:
        """Stable JSON shape."""
        return {
            "system": self.system.label,
            "D": list(self.D),
            "dim": self.dim,
            "bound": self.bound,
            "l": self.l,
            "s": self.s,
            "flags": {
                "xi_independent": self.xi_independent,
                "prime_independent": self.prime_independent,
                "bound_ok": self.bound_ok,
                "even_ok": self.even_ok,
                "reduced_applied": self.reduced_applied,
            },
            "prime": list(self.primes),
            "seed": self.seed,
        }

    def __str__(self) -> str:
        status = "ok" if self.passed else "FAIL"
        note = " (reduced)" if self.reduced_applied else ""
        return (
            f"{self.system} D={list(self.D)} dim={self.dim} bound={self.bound} "
            f"l={self.l} s={self.s} {status}{note}"
        )


@dataclass(frozen=True)
class NonAdmissibleHit:
    """Assignment of named positive roots matching a non-admissible pattern."""

    pattern_type: int
    roots: tuple[tuple[str, Root], ...]

    def __post_init__(self):
        """Validate the pattern number and distinctness of the named roots."""
        if self.pattern_type not in (1, 2, 3, 4):
            raise ValueError(f"pattern type must be 1-4, got {self.pattern_type}")
        indices = [root.index for _, root in self.roots]
        if len(set(indices)) != len(indices):
            raise ValueError("named roots must be distinct")

    def as_dict(self) -> dict[str, Root]:
        return dict(self.roots)

    def __str__(self) -> str:
        body = ", ".join(f"{name}={root}" for name, root in self.roots)
        return f"type {self.pattern_type}: {body}"


@dataclass(frozen=True)
class TableRow:
    """One row of the G2/F4 orbit tables with computed columns."""

    row_no: int
    D: tuple[str, ...]
    M: tuple[str, ...]
    m_size: int
    F: int
    dim_computed: int
    bound_computed: Optional[int]
    m_conditions_ok: bool
    maximal_isotropic_ok: bool
    orthogonal: bool = True

    @property
    def mismatch(self) -> bool:
        """True when a computed column disagrees with the printed one.

        The bound is only checked for orthogonal D; otherwise sigma_D is undefined.
        """
        return (
            self.dim_computed != 2 * self.m_size
            or (self.orthogonal and self.bound_computed != self.F)
            or self.dim_computed > self.F
            or not self.m_conditions_ok
            or not self.maximal_isotropic_ok
        )

    def to_dict(self) -> dict:
        return {
            "row": self.row_no,
            "D": list(self.D),
            "M": list(self.M),
            "m_size": self.m_size,
            "F": self.F,
            "dim_computed": self.dim_computed,
            "bound_computed": self.bound_computed,
            "m_conditions_ok": self.m_conditions_ok,
            "maximal_isotropic_ok": self.maximal_isotropic_ok,
            "orthogonal": self.orthogonal,
            "mismatch": self.mismatch,
        }
