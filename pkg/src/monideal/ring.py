"""Weighted polynomial ring vocabulary: weight systems, monomials, degrees.

A monomial is a plain tuple of non-negative integer exponents; it carries no
reference to the ring it lives in. Every operation that needs weights takes
the :class:`WeightSystem` explicitly, which keeps monomial equality and
hashing structural. All values here are immutable and all functions pure, so
everything is safe to share across threads.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

Monomial = tuple[int, ...]


class DimensionMismatch(ValueError):
    """A monomial's length does not match the ambient number of variables."""


class RingMismatch(ValueError):
    """Ideals over different weight systems were combined."""


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights, one per variable.

    Derived data: ``lcm_weight`` is the least common multiple of the weights
    and ``cofactors[i] * weights[i] == lcm_weight`` holds exactly for every
    variable index i.
    """

    weights: tuple[int, ...]
    lcm_weight: int = field(init=False, compare=False)
    cofactors: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        weights = tuple(self.weights)
        if not weights:
            raise ValueError("a weight system needs at least one variable")
        for w in weights:
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise ValueError(f"weights must be positive integers, got {weights!r}")
        object.__setattr__(self, "weights", weights)
        lcm = math.lcm(*weights)
        object.__setattr__(self, "lcm_weight", lcm)
        object.__setattr__(self, "cofactors", tuple(lcm // w for w in weights))

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def m(self) -> int:
        """Number of variables minus one."""
        return self.nvars - 1

    def check_monomial(self, mono: Monomial) -> None:
        if len(mono) != self.nvars:
            raise DimensionMismatch(
                f"monomial {mono!r} has {len(mono)} exponents, ring has {self.nvars} variables"
            )
        for e in mono:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {mono!r}")

    def degree(self, mono: Monomial) -> int:
        """Weighted degree: the sum of exponent * weight over all variables."""
        self.check_monomial(mono)
        return sum(c * w for c, w in zip(mono, self.weights))

    def unit(self) -> Monomial:
        return (0,) * self.nvars


def canonical_key(mono: Monomial) -> tuple[int, ...]:
    """Sorting by this key yields the canonical generator order.

    Canonical order is descending lexicographic on exponent tuples (the
    x-heaviest generator first), the conventional way staircase generator
    sets are written out.
    """
    return tuple(-e for e in mono)


def divides(d: Monomial, m: Monomial) -> bool:
    """True iff d divides m, i.e. every exponent of d is at most m's."""
    if len(d) != len(m):
        raise DimensionMismatch(f"cannot compare {d!r} with {m!r}")
    return all(a <= b for a, b in zip(d, m))


def try_divide(d: Monomial, m: Monomial) -> Monomial | None:
    """The quotient m / d as a monomial, or None when d does not divide m."""
    if len(d) != len(m):
        raise DimensionMismatch(f"cannot divide {m!r} by {d!r}")
    if all(a <= b for a, b in zip(d, m)):
        return tuple(b - a for a, b in zip(d, m))
    return None


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) != len(b):
        raise DimensionMismatch(f"cannot multiply {a!r} by {b!r}")
    return tuple(x + y for x, y in zip(a, b))


def mono_pow(a: Monomial, k: int) -> Monomial:
    if k < 0:
        raise ValueError("monomial powers must be non-negative")
    return tuple(x * k for x in a)


def default_variables(nvars: int) -> tuple[str, ...]:
    """x, y, z, w for up to four variables; x0, x1, ... beyond that."""
    if nvars <= 4:
        return tuple("xyzw"[:nvars])
    return tuple(f"x{i}" for i in range(nvars))


_FACTOR_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def parse_monomial(text: str, variables: tuple[str, ...]) -> Monomial:
    """Parse monomial syntax like ``x^3*y*z^2``; ``1`` is the unit monomial."""
    text = text.strip()
    if text == "1":
        return (0,) * len(variables)
    exps = [0] * len(variables)
    for factor in text.split("*"):
        match = _FACTOR_RE.match(factor.strip())
        if match is None:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        name, power = match.group(1), match.group(2)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}; ring has {', '.join(variables)}")
        exps[variables.index(name)] += int(power) if power is not None else 1
    return tuple(exps)


def format_monomial(mono: Monomial, variables: tuple[str, ...]) -> str:
    if len(mono) != len(variables):
        raise DimensionMismatch(f"monomial {mono!r} does not fit variables {variables!r}")
    parts = []
    for name, e in zip(variables, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
