"""Normality threshold and constructive power-factorization certificates.

For a weight system with m + 1 variables and least common weight multiple A,
the truncation ideal at degree m*A has the property that its p-th power
equals the truncation ideal at degree p*m*A for every p >= 1. The
factorization algorithm below makes that constructive: any monomial of
degree at least p*m*A splits into p monomial factors, each of degree at
least m*A. Certificates built from those splits can be replayed with nothing
but degree arithmetic and divisibility checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import MonomialIdeal, truncation_ideal
from .ring import Monomial, WeightSystem


class CertificateError(ValueError):
    """A certificate failed validation or replay."""


class NormalityCertificationError(RuntimeError):
    """A truncation-power equality that must hold came back unequal.

    This cannot happen for a correct implementation; it signals a bug, not a
    property of the input.
    """


@dataclass(frozen=True)
class NormalityThreshold:
    ring: WeightSystem
    threshold: int

    def target(self, p: int) -> int:
        return p * self.threshold


@dataclass(frozen=True)
class FactorizationCertificate:
    """p monomial factors of degree >= the threshold whose product is `input`."""

    ring: WeightSystem
    input: Monomial
    p: int
    factors: tuple[Monomial, ...]

    def validate(self, threshold: int) -> None:
        if len(self.factors) != self.p:
            raise CertificateError(
                f"expected {self.p} factors for {self.input!r}, found {len(self.factors)}"
            )
        total = [0] * self.ring.nvars
        for f in self.factors:
            self.ring.check_monomial(f)
            if self.ring.degree(f) < threshold:
                raise CertificateError(
                    f"factor {f!r} has degree {self.ring.degree(f)} below threshold {threshold}"
                )
            for j, e in enumerate(f):
                total[j] += e
        if tuple(total) != tuple(self.input):
            raise CertificateError(
                f"factors of {self.input!r} multiply to {tuple(total)!r} instead"
            )


@dataclass(frozen=True)
class PowerCheck:
    """Result of comparing power(R_>=alpha, p) against R_>=p*alpha."""

    alpha: int
    p: int
    counterexample: Monomial | None

    @property
    def equal(self) -> bool:
        return self.counterexample is None


@dataclass(frozen=True)
class PowerCertificate:
    p: int
    factorizations: tuple[FactorizationCertificate, ...]


@dataclass(frozen=True)
class NormalityCertificate:
    ring: WeightSystem
    threshold: int
    powers: tuple[PowerCertificate, ...]


def normal_threshold(ring: WeightSystem) -> NormalityThreshold:
    """The degree m*A at which truncation becomes a normal ideal (m = nvars - 1)."""
    if ring.nvars < 2:
        raise ValueError(
            "normality threshold needs at least two variables; "
            "one variable gives threshold 0 and the unit ideal"
        )
    return NormalityThreshold(ring, ring.m * ring.lcm_weight)


def verify_truncation_power(ring: WeightSystem, alpha: int, p: int) -> PowerCheck:
    """Check power(R_>=alpha, p) == R_>=p*alpha, reporting a missing generator if not.

    The power is always contained in the truncation (generator degrees add),
    so inequality always exhibits a minimal generator of R_>=p*alpha outside
    the power; the canonically first one is returned.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha!r}")
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p!r}")
    base = truncation_ideal(ring, alpha)
    powered = base**p
    target = truncation_ideal(ring, p * alpha)
    if powered == target:
        return PowerCheck(alpha, p, None)
    for g in target.gens:
        if not powered.contains(g):
            return PowerCheck(alpha, p, g)
    raise NormalityCertificationError(
        f"power of R_>={alpha} differs from R_>={p * alpha} but contains all its generators"
    )


def decompose(ring: WeightSystem, mono: Monomial, p: int) -> FactorizationCertificate:
    """Split a monomial of degree >= p*m*A into p factors of degree >= m*A.

    Each of the first p - 1 factors is carved out with degree exactly m*A:
    either one variable alone already covers it (exponent c_i >= m *
    cofactor_i, so X_i^(m*cofactor_i) has degree exactly m*A), or the
    per-variable multiples k_i = c_i // cofactor_i are accumulated greedily
    until they sum to m. The degree count guarantees sum(k_i) >= m whenever
    the remaining degree is at least 2*m*A, so the greedy pick never runs
    short. The final factor is whatever remains, with degree >= m*A by
    construction.
    """
    thr = normal_threshold(ring)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p!r}")
    deg = ring.degree(mono)
    if deg < p * thr.threshold:
        raise ValueError(
            f"monomial degree {deg} is below {p} * {thr.threshold}; no factorization exists"
        )
    m = ring.m
    cof = ring.cofactors
    factors: list[Monomial] = []
    rest = tuple(mono)
    for _ in range(p - 1):
        big = next((i for i, c in enumerate(rest) if c >= m * cof[i]), None)
        if big is not None:
            piece = tuple(m * cof[i] if i == big else 0 for i in range(ring.nvars))
        else:
            k = [c // a for c, a in zip(rest, cof)]
            if sum(k) < m:
                raise NormalityCertificationError(
                    f"degree bound violated while splitting {mono!r}: {rest!r} at p={p}"
                )
            s = [0] * ring.nvars
            need = m
            for i, ki in enumerate(k):
                s[i] = min(ki, need)
                need -= s[i]
                if need == 0:
                    break
            piece = tuple(si * a for si, a in zip(s, cof))
        factors.append(piece)
        rest = tuple(c - e for c, e in zip(rest, piece))
    factors.append(rest)
    cert = FactorizationCertificate(ring, tuple(mono), p, tuple(factors))
    cert.validate(thr.threshold)
    return cert


def certify_normal(ring: WeightSystem, p_max: int) -> NormalityCertificate:
    """Certify truncation-power equality at the m*A threshold for all p <= p_max.

    For each power p the certificate carries one factorization per minimal
    generator of R_>=p*m*A, which is exactly the content a replay needs.
    """
    if p_max < 1:
        raise ValueError(f"p_max must be >= 1, got {p_max!r}")
    thr = normal_threshold(ring)
    base = truncation_ideal(ring, thr.threshold)
    powered = base
    powers = []
    for p in range(1, p_max + 1):
        if p > 1:
            powered = powered * base
        target = truncation_ideal(ring, p * thr.threshold)
        if powered != target:
            missing = next(g for g in target.gens if not powered.contains(g))
            raise NormalityCertificationError(
                f"power {p} of the threshold truncation missed generator {missing!r}"
            )
        facts = tuple(decompose(ring, g, p) for g in target.gens)
        powers.append(PowerCertificate(p, facts))
    return NormalityCertificate(ring, thr.threshold, tuple(powers))


def replay_certificate(cert: NormalityCertificate) -> list[str]:
    """Re-derive everything a normality certificate claims; return problems found.

    Checks, using only degree arithmetic and truncation-generator
    enumeration: the threshold matches the ring, every power level covers
    exactly the minimal generators of its target truncation, and every
    factorization multiplies back to its input with all factors at or above
    the threshold.
    """
    problems: list[str] = []
    ring = cert.ring
    if ring.nvars < 2:
        return [f"certificate ring has {ring.nvars} variable(s); need at least 2"]
    expected_thr = ring.m * ring.lcm_weight
    if cert.threshold != expected_thr:
        problems.append(f"threshold {cert.threshold} != {expected_thr} for weights {ring.weights}")
        return problems
    for pc in cert.powers:
        if pc.p < 1:
            problems.append(f"invalid power level {pc.p}")
            continue
        target = truncation_ideal(ring, pc.p * cert.threshold)
        inputs = [f.input for f in pc.factorizations]
        if sorted(inputs) != sorted(target.gens):
            problems.append(
                f"power {pc.p}: factorization inputs do not match the "
                f"{len(target.gens)} minimal generators of the degree-{pc.p * cert.threshold} truncation"
            )
        for fact in pc.factorizations:
            if fact.p != pc.p:
                problems.append(f"power {pc.p}: factorization of {fact.input!r} claims p={fact.p}")
                continue
            try:
                fact.validate(cert.threshold)
            except CertificateError as exc:
                problems.append(f"power {pc.p}: {exc}")
    return problems
