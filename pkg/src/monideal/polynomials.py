"""Sparse integer polynomials and division by a single monic relation.

Just enough polynomial arithmetic to verify integral-dependence equations in
a hypersurface quotient: addition, multiplication, and remainder modulo one
relation whose leading coefficient is +-1 (so division stays over the
integers). The term order is graded by the ring's weighted degree with
lexicographic tie-breaking in variable declaration order; the remainder is
unique for that order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ideals import MonomialIdeal
from .ring import DimensionMismatch, Monomial, WeightSystem, format_monomial, parse_monomial


class Poly:
    """Immutable sparse polynomial: a map from exponent tuples to nonzero ints."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Monomial, int] | None = None):
        self.nvars = nvars
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != nvars:
                    raise DimensionMismatch(f"term {mono!r} does not have {nvars} exponents")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in term {mono!r}")
                if coeff:
                    clean[tuple(mono)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: int = 1) -> "Poly":
        return cls(len(mono), {tuple(mono): coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatch(
                f"polynomials over {self.nvars} and {other.nvars} variables"
            )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                out[key] = out.get(key, 0) + c1 * c2
        return Poly(self.nvars, out)

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"polynomial powers must be integers >= 0, got {k!r}")
        result = Poly.constant(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.terms!r})"

    def leading_term(self, ring: WeightSystem) -> tuple[Monomial, int]:
        if self.is_zero:
            raise ValueError("the zero polynomial has no leading term")
        mono = max(self.terms, key=lambda m: (ring.degree(m), m))
        return mono, self.terms[mono]


def divmod_single(p: Poly, f: Poly, ring: WeightSystem) -> tuple[Poly, Poly]:
    """Quotient and remainder of p by the single divisor f.

    Requires a leading coefficient of +-1 on f. The remainder contains no
    term divisible by f's leading monomial and p == q*f + r exactly.
    """
    if f.is_zero:
        raise ValueError("cannot divide by the zero polynomial")
    if p.nvars != f.nvars or p.nvars != ring.nvars:
        raise DimensionMismatch("polynomial division needs matching variable counts")
    lt, lc = f.leading_term(ring)
    if lc not in (1, -1):
        raise ValueError(f"leading coefficient must be +-1 to divide over the integers, got {lc}")
    work = dict(p.terms)
    quotient: dict[Monomial, int] = {}
    remainder: dict[Monomial, int] = {}
    while work:
        mono = max(work, key=lambda m: (ring.degree(m), m))
        coeff = work.pop(mono)
        if all(a <= b for a, b in zip(lt, mono)):
            shift = tuple(b - a for a, b in zip(lt, mono))
            q = coeff * lc  # lc is +-1, so this is exact division by lc
            quotient[shift] = quotient.get(shift, 0) + q
            for fm, fc in f.terms.items():
                if fm == lt:
                    continue
                key = tuple(a + b for a, b in zip(shift, fm))
                val = work.get(key, 0) - q * fc
                if val:
                    work[key] = val
                elif key in work:
                    del work[key]
        else:
            remainder[mono] = coeff
    return Poly(p.nvars, quotient), Poly(p.nvars, remainder)


def reduce_mod(p: Poly, f: Poly, ring: WeightSystem) -> Poly:
    """Remainder of p modulo the single relation f."""
    return divmod_single(p, f, ring)[1]


@dataclass(frozen=True)
class DependenceReport:
    """Outcome of checking a monic dependence equation modulo a relation."""

    equation_holds: bool
    coefficient_in_power: tuple[bool, ...] | None

    @property
    def ok(self) -> bool:
        if not self.equation_holds:
            return False
        if self.coefficient_in_power is None:
            return True
        return all(self.coefficient_in_power)


def check_dependence(
    f: Poly,
    g: Poly,
    coeffs: list[Poly],
    ring: WeightSystem,
    witness: MonomialIdeal | None = None,
) -> DependenceReport:
    """Verify g**n + a_1*g**(n-1) + ... + a_n == 0 modulo the relation f.

    `coeffs` lists a_1 through a_n. When a witness ideal is supplied, each
    a_i is additionally required to be a sum of monomials lying in the i-th
    power of that ideal (checked term by term).
    """
    n = len(coeffs)
    if n < 1:
        raise ValueError("a dependence equation needs at least one coefficient")
    total = g**n
    for i, a in enumerate(coeffs, start=1):
        total = total + a * g ** (n - i)
    holds = reduce_mod(total, f, ring).is_zero
    memberships: tuple[bool, ...] | None = None
    if witness is not None:
        checks = []
        for i, a in enumerate(coeffs, start=1):
            powered = witness**i
            checks.append(all(powered.contains(mono) for mono in a.terms))
        memberships = tuple(checks)
    return DependenceReport(holds, memberships)


_TERM_SPLIT_RE = re.compile(r"(?=[+-])")


def parse_poly(text: str, variables: tuple[str, ...]) -> Poly:
    """Parse integer-coefficient polynomial text like ``x^2 + y^3*z - 2*z^4``."""
    nvars = len(variables)
    squeezed = text.replace(" ", "")
    if not squeezed or squeezed == "0":
        return Poly.zero(nvars)
    out = Poly.zero(nvars)
    for chunk in _TERM_SPLIT_RE.split(squeezed):
        if not chunk:
            continue
        sign = 1
        body = chunk
        if body[0] == "+":
            body = body[1:]
        elif body[0] == "-":
            sign = -1
            body = body[1:]
        if not body:
            raise ValueError(f"dangling sign in polynomial {text!r}")
        coeff = sign
        match = re.match(r"^(\d+)(?:\*(.*))?$", body)
        if match:
            coeff = sign * int(match.group(1))
            body = match.group(2) or "1"
        out = out + Poly.monomial(parse_monomial(body, variables), coeff)
    return out


def format_poly(p: Poly, variables: tuple[str, ...], ring: WeightSystem) -> str:
    if p.is_zero:
        return "0"
    ordered = sorted(p.terms, key=lambda m: (ring.degree(m), m), reverse=True)
    parts: list[str] = []
    for mono in ordered:
        coeff = p.terms[mono]
        mono_text = format_monomial(mono, variables)
        if mono_text == "1":
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = mono_text
        else:
            body = f"{abs(coeff)}*{mono_text}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)
