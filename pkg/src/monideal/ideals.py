"""Monomial ideals as canonical minimal generating sets.

An ideal is stored as the unique antichain of minimal monomial generators in
canonical (descending lexicographic) order, so structural equality of two
:class:`MonomialIdeal` values coincides with equality of the ideals they
represent. The empty generator tuple is the zero ideal; the single
zero-exponent generator is the unit ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .ring import Monomial, RingMismatch, WeightSystem, mono_mul


@dataclass(frozen=True)
class MonomialIdeal:
    ring: WeightSystem
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        gens = tuple(tuple(g) for g in self.gens)
        object.__setattr__(self, "gens", gens)
        for g in gens:
            self.ring.check_monomial(g)
        if any(a <= b for a, b in zip(gens, gens[1:])):
            raise ValueError("generators must be in canonical order; use minimalize()")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def contains(self, mono: Monomial) -> bool:
        """True iff some generator divides the monomial."""
        self.ring.check_monomial(mono)
        return any(all(a <= b for a, b in zip(g, mono)) for g in self.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        if self.ring != other.ring:
            raise RingMismatch("cannot multiply ideals over different weight systems")
        products = {mono_mul(g, h) for g in self.gens for h in other.gens}
        return minimalize(self.ring, products)

    def __pow__(self, p: int) -> "MonomialIdeal":
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"ideal powers require an integer exponent >= 1, got {p!r}")
        result = self
        for _ in range(p - 1):
            result = result * self
        return result


def minimalize(ring: WeightSystem, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Drop divisibility-redundant generators and sort canonically.

    Candidates are screened in ascending weighted-degree order, so each one
    only needs to be tested against already-accepted generators of strictly
    smaller degree (a proper divisor always has degree smaller by at least
    the least weight). The surviving antichain is then put in canonical
    order.
    """
    uniq = {tuple(g) for g in gens}
    for g in uniq:
        ring.check_monomial(g)
    if not uniq:
        return MonomialIdeal(ring, ())
    by_degree = sorted(uniq, key=lambda g: (ring.degree(g), g))
    wmin = min(ring.weights)
    kept: list[Monomial] = []
    kept_degs: list[int] = []
    for g in by_degree:
        d = ring.degree(g)
        cutoff = d - wmin
        redundant = False
        for h, dh in zip(kept, kept_degs):
            if dh > cutoff:
                break
            if all(a <= b for a, b in zip(h, g)):
                redundant = True
                break
        if not redundant:
            kept.append(g)
            kept_degs.append(d)
    return MonomialIdeal(ring, tuple(sorted(kept, reverse=True)))


def truncation_ideal(ring: WeightSystem, alpha: int) -> MonomialIdeal:
    """Minimal generators of the ideal of all elements of weighted degree >= alpha.

    A minimal generator g satisfies degree(g) >= alpha while dividing out any
    single variable that occurs in g drops the degree below alpha. Candidates
    are enumerated over the finite box of exponent vectors with degree below
    alpha + max(weights), which contains every minimal generator.
    """
    if not isinstance(alpha, int) or isinstance(alpha, bool) or alpha < 0:
        raise ValueError(f"truncation degree must be a non-negative integer, got {alpha!r}")
    return _truncation_cached(ring, alpha)


@lru_cache(maxsize=4096)
def _truncation_cached(ring: WeightSystem, alpha: int) -> MonomialIdeal:
    weights = ring.weights
    n = ring.nvars
    wmax = max(weights)
    found: list[Monomial] = []
    exps = [0] * n

    def descend(i: int, deg: int) -> None:
        if i == n:
            if deg >= alpha and all(
                e == 0 or deg - w < alpha for e, w in zip(exps, weights)
            ):
                found.append(tuple(exps))
            return
        w = weights[i]
        c = 0
        while deg + c * w < alpha + wmax:
            exps[i] = c
            descend(i + 1, deg + c * w)
            c += 1
        exps[i] = 0

    descend(0, 0)
    return minimalize(ring, found)
