"""Reflections, the involutions sigma_D and their length statistics."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .exceptions import DomainError, NotARoot, NotOrthogonal
from .models import InvolutionStats, Root
from .rootsys import RootSystem

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation of the positive roots.

    ``image[i]`` is ``j + 1`` when w(alpha_i) = alpha_j and ``-(j + 1)`` when
    w(alpha_i) = -alpha_j. Negative roots follow from w(-a) = -w(a).
    """

    rs: RootSystem = field(compare=False, repr=False)
    image: tuple[int, ...]

    @classmethod
    def identity(cls, rs: RootSystem) -> "WeylElement":
        return cls(rs, tuple(range(1, rs.size + 1)))

    def apply(self, root: Root) -> Root:
        self.rs.check(root)
        signed = self.image[root.index]
        negative = (signed < 0) != root.negative
        return self.rs.root(abs(signed) - 1, negative)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """(self * other)(a) = self(other(a))."""
        composed = []
        for signed in other.image:
            inner = self.image[abs(signed) - 1]
            composed.append(inner if signed > 0 else -inner)
        return WeylElement(self.rs, tuple(composed))

    @property
    def is_identity(self) -> bool:
        return all(signed == i + 1 for i, signed in enumerate(self.image))

    def inversions(self) -> frozenset[Root]:
        """{a > 0 : w(a) < 0}."""
        return frozenset(self.rs.root(i) for i, signed in enumerate(self.image) if signed < 0)

    def __len__(self) -> int:
        return sum(1 for signed in self.image if signed < 0)


def reflect(rs: RootSystem, alpha: Root, v: Root) -> Root:
    """r_alpha(v) = v - <v, alpha^vee> alpha.

    Raises:
        ForeignRoot: If a root is not from rs
        NotARoot: If the image is missing from the catalog
    """
    pairing, rest = divmod(2 * rs.inner4(v, alpha), rs.inner4(alpha, alpha))
    if rest:
        raise NotARoot(f"non-integral Cartan number for {v}, {alpha}")
    image = tuple(a - pairing * b for a, b in zip(v.dcoords, alpha.dcoords))
    found = rs.is_root(image)
    if found is None:
        raise NotARoot(f"r_{alpha}({v}) = {image} is not catalogued")
    return found


def reflection(rs: RootSystem, alpha: Root) -> WeylElement:
    """r_alpha as a WeylElement."""
    image = []
    for root in rs.positives:
        target = reflect(rs, alpha, root)
        image.append(-(target.index + 1) if target.negative else target.index + 1)
    return WeylElement(rs, tuple(image))


def _check_orthogonal(rs: RootSystem, D: Iterable[Root]) -> tuple[Root, ...]:
    roots = tuple(D)
    for root in roots:
        rs.check(root)
        if root.negative:
            raise NotOrthogonal(f"{root} is not a positive root")
    for i, first in enumerate(roots):
        for second in roots[i + 1 :]:
            if rs.inner4(first, second) != 0:
                raise NotOrthogonal(f"{first} and {second} are not orthogonal")
    return roots


def involution_of(rs: RootSystem, D: Iterable[Root]) -> WeylElement:
    """sigma_D, the product of the reflections in the roots of D.

    Raises:
        NotOrthogonal: If D is not a set of pairwise orthogonal positive roots
    """
    roots = _check_orthogonal(rs, D)
    forward = WeylElement.identity(rs)
    backward = WeylElement.identity(rs)
    for root in roots:
        forward = forward * reflection(rs, root)
    for root in reversed(roots):
        backward = backward * reflection(rs, root)
    if forward != backward:
        raise AssertionError(f"reflections of {[str(r) for r in roots]} do not commute")
    return forward


def involution_stats(rs: RootSystem, D: Iterable[Root]) -> InvolutionStats:
    """l(sigma_D), s(sigma_D) = |D| and the bound l - s."""
    roots = _check_orthogonal(rs, D)
    sigma = involution_of(rs, roots)
    phi = sigma.inversions()
    stats = InvolutionStats(sigma=sigma, l=len(phi), s=len(roots), bound=len(phi) - len(roots), phi_sigma=phi)
    _LOGGER.debug(f"{rs.id} D={[str(r) for r in roots]}: {stats}")
    return stats


def mu(n: int) -> int:
    """(n-2) + (n-4) + ... over the positive terms."""
    if n < 2:
        raise DomainError(f"mu is defined for n >= 2, got {n}")
    return sum(range(n - 2, 0, -2))


def reduced_length(w: WeylElement) -> int:
    """Length by greedy descent: strip fundamental reflections off the right."""
    rs = w.rs
    simple = {root.index: reflection(rs, root) for root in rs.fundamentals}
    steps = 0
    while True:
        descent = next((i for i in simple if w.image[i] < 0), None)
        if descent is None:
            break
        w = w * simple[descent]
        steps += 1
    if not w.is_identity:
        raise AssertionError("descent stopped before reaching the identity")
    return steps


def reflection_length(rs: RootSystem, w: WeylElement, limit: int) -> Optional[int]:
    """Fewest reflections whose product is w, searched up to ``limit`` factors.

    Returns None when w needs more than ``limit`` reflections.
    """
    reflections = [reflection(rs, root) for root in rs.positives]
    seen = {WeylElement.identity(rs).image}
    layer = [WeylElement.identity(rs)]
    for depth in range(limit + 1):
        if any(element == w for element in layer):
            return depth
        upper = []
        for element in layer:
            for r in reflections:
                product = element * r
                if product.image not in seen:
                    seen.add(product.image)
                    upper.append(product)
        layer = upper
    return None
