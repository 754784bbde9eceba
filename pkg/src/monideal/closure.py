"""Integral closure of monomial ideals via Newton-polyhedron membership.

A monomial with exponent vector v lies in the integral closure of a monomial
ideal exactly when v is in the convex hull of the generator exponents plus
the non-negative orthant. Membership is decided by exact rational
feasibility: search for coefficients lambda >= 0 with sum lambda = 1 and
sum(lambda_i * gen_i) <= v componentwise. The search enumerates basic
solutions (linearly independent subsets of at most nvars + 1 lifted
generator/axis vectors), so it is exact and needs no floating point.

The independent cross-check is pure ideal arithmetic: v is integrally
dependent iff the monomial with exponents N*v lies in the N-th power of the
ideal for suitable N, which for the feasibility witness above holds at N =
the least common denominator of lambda.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import lcm

from .ideals import MonomialIdeal, minimalize
from .ring import Monomial


class ClosureError(ValueError):
    """The zero ideal has no Newton polyhedron; closure operations reject it."""


@dataclass(frozen=True)
class ClosureCertificate:
    """Replayable evidence that `monomial` lies in the closure.

    `lam` lists one rational weight per ideal generator (canonical order);
    `oracle_n` is the least common denominator, at which the power-membership
    oracle confirms the claim.
    """

    monomial: Monomial
    lam: tuple[Fraction, ...]
    oracle_n: int


@dataclass(frozen=True)
class ClosureReport:
    ideal: MonomialIdeal
    closure: MonomialIdeal
    added: tuple[Monomial, ...]
    certificates: tuple[ClosureCertificate, ...]

    @property
    def integrally_closed(self) -> bool:
        return not self.added


def _solve_nonneg(columns: list[tuple[int, ...]], target: tuple[int, ...]) -> list[Fraction] | None:
    """Solve sum(x_k * columns[k]) == target exactly; require all x_k >= 0.

    Returns None when the columns are linearly dependent (a feasible point on
    them is also feasible on an independent subset, which is enumerated
    separately) or when the system is inconsistent or has a negative entry.
    """
    d = len(target)
    r = len(columns)
    rows = [[Fraction(columns[k][i]) for k in range(r)] + [Fraction(target[i])] for i in range(d)]
    pivot_rows: list[int] = []
    row = 0
    for col in range(r):
        pivot = next((i for i in range(row, d) if rows[i][col] != 0), None)
        if pivot is None:
            return None
        rows[row], rows[pivot] = rows[pivot], rows[row]
        pivot_rows.append(row)
        lead = rows[row][col]
        for i in range(row + 1, d):
            if rows[i][col] != 0:
                factor = rows[i][col] / lead
                for j in range(col, r + 1):
                    rows[i][j] -= factor * rows[row][j]
        row += 1
    for i in range(row, d):
        if rows[i][r] != 0:
            return None
    xs = [Fraction(0)] * r
    for col in reversed(range(r)):
        i = pivot_rows[col]
        acc = rows[i][r] - sum(rows[i][j] * xs[j] for j in range(col + 1, r))
        xs[col] = acc / rows[i][col]
        if xs[col] < 0:
            return None
    return xs


@lru_cache(maxsize=1024)
def _reject_functionals(ideal: MonomialIdeal) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Non-negative linear functionals c with min(c . gen) as a lower bound.

    Any monomial v with c . v below that bound is outside the Newton
    polyhedron (the bound is valid on the hull and on the recession orthant).
    Candidates: coordinate axes, the all-ones vector, the ring weights, and
    in two variables the edge normals of all generator pairs, which together
    describe the full polyhedron there.
    """
    gens = ideal.gens
    n = ideal.ring.nvars
    cands: set[tuple[int, ...]] = set()
    for j in range(n):
        cands.add(tuple(1 if k == j else 0 for k in range(n)))
    cands.add((1,) * n)
    cands.add(ideal.ring.weights)
    if n == 2:
        for (ax, ay), (bx, by) in combinations(gens, 2):
            c = (ay - by, bx - ax)
            if c[0] > 0 and c[1] > 0:
                cands.add(c)
            elif c[0] < 0 and c[1] < 0:
                cands.add((-c[0], -c[1]))
    out = []
    for c in sorted(cands):
        bound = min(sum(ci * gi for ci, gi in zip(c, g)) for g in gens)
        if bound > 0:
            out.append((c, bound))
    return tuple(out)


def _np_core(
    gens: tuple[Monomial, ...],
    n: int,
    v: Monomial,
    functionals: tuple[tuple[tuple[int, ...], int], ...],
    witness: bool,
) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Exact membership in the Newton polyhedron, optionally with a lambda witness.

    Sound shortcuts run first: a functional bound certifies non-membership,
    a dominating generator certifies membership. Everything else goes to the
    basic-solution enumeration. With `witness` set, all feasible basic
    solutions are enumerated and the one with the smallest least common
    denominator is kept, so certificates stay small and reproducible.
    """
    for c, bound in functionals:
        if sum(ci * vi for ci, vi in zip(c, v)) < bound:
            return False, None
    for idx, g in enumerate(gens):
        if all(a <= b for a, b in zip(g, v)):
            if not witness:
                return True, None
            lam = tuple(Fraction(1 if k == idx else 0) for k in range(len(gens)))
            return True, lam
    lifted = [g + (1,) for g in gens]
    for j in range(n):
        lifted.append(tuple(1 if k == j else 0 for k in range(n)) + (0,))
    target = tuple(v) + (1,)
    best: tuple[int, tuple[Fraction, ...]] | None = None
    for size in range(1, n + 2):
        for subset in combinations(range(len(lifted)), size):
            sol = _solve_nonneg([lifted[i] for i in subset], target)
            if sol is None:
                continue
            lam = [Fraction(0)] * len(gens)
            for pos, idx in enumerate(subset):
                if idx < len(gens):
                    lam[idx] = sol[pos]
            if not witness:
                return True, None
            denom = lcm(*(f.denominator for f in lam)) if lam else 1
            if best is None or denom < best[0]:
                best = (denom, tuple(lam))
    if best is not None:
        return True, best[1]
    return False, None


def np_member(ideal: MonomialIdeal, v: Monomial) -> bool:
    """True iff v lies in the Newton polyhedron of the ideal's generators."""
    if ideal.is_zero:
        raise ClosureError("the zero ideal has no Newton polyhedron")
    ideal.ring.check_monomial(v)
    funcs = _reject_functionals(ideal)
    return _np_core(ideal.gens, ideal.ring.nvars, v, funcs, witness=False)[0]


def power_membership_oracle(ideal: MonomialIdeal, v: Monomial, n: int) -> bool:
    """True iff the monomial with exponents n*v lies in the n-th ideal power.

    Decided by searching for n generators (with repetition) whose exponent
    sum stays below n*v componentwise; for monomial ideals that is exactly
    membership of the scaled monomial in the power. Independent of the
    rational-feasibility route: only integer exponent arithmetic is used.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"oracle exponent must be an integer >= 1, got {n!r}")
    ideal.ring.check_monomial(v)
    gens = ideal.gens
    if not gens:
        return False
    budget = tuple(e * n for e in v)
    dead: set[tuple[int, int, tuple[int, ...]]] = set()

    def search(i: int, count: int, room: tuple[int, ...]) -> bool:
        if count == 0:
            return True
        if i == len(gens):
            return False
        state = (i, count, room)
        if state in dead:
            return False
        g = gens[i]
        cap = count
        for gj, rj in zip(g, room):
            if gj:
                cap = min(cap, rj // gj)
                if cap == 0:
                    break
        for take in range(cap, -1, -1):
            left = tuple(rj - take * gj for gj, rj in zip(g, room))
            if search(i + 1, count - take, left):
                return True
        dead.add(state)
        return False

    return search(0, n, budget)


def integral_closure(ideal: MonomialIdeal) -> ClosureReport:
    """Closure generators, the ones the ideal was missing, and their certificates.

    Every minimal generator of the closure lies in the box bounded by the
    per-coordinate generator maxima (above the box, dropping a coordinate by
    one stays feasible). The box is swept in ascending total order so each
    point can first consult its lower neighbours: the polyhedron is upward
    closed, which turns the bulk of the sweep into dictionary lookups and
    leaves the exact feasibility search for boundary points only.
    """
    if ideal.is_zero:
        raise ClosureError("the zero ideal has no integral closure at the monomial level")
    ring = ideal.ring
    n = ring.nvars
    funcs = _reject_functionals(ideal)
    box = tuple(max(g[j] for g in ideal.gens) for j in range(n))
    points = sorted(product(*(range(b + 1) for b in box)), key=lambda p: (sum(p), p))
    inside: dict[Monomial, bool] = {}
    minimal: list[Monomial] = []
    for v in points:
        if any(
            e and inside[tuple(x - 1 if j == k else x for k, x in enumerate(v))]
            for j, e in enumerate(v)
        ):
            inside[v] = True
            continue
        member = _np_core(ideal.gens, n, v, funcs, witness=False)[0]
        inside[v] = member
        if member:
            minimal.append(v)
    closure = minimalize(ring, minimal)
    added = tuple(g for g in closure.gens if not ideal.contains(g))
    certs = []
    for v in added:
        member, lam = _np_core(ideal.gens, n, v, funcs, witness=True)
        if not member or lam is None:
            raise RuntimeError(f"closure point {v!r} lost its feasibility witness")
        oracle_n = lcm(*(f.denominator for f in lam))
        if not power_membership_oracle(ideal, v, oracle_n):
            raise RuntimeError(f"oracle refused certificate for {v!r} at N={oracle_n}")
        certs.append(ClosureCertificate(v, lam, oracle_n))
    return ClosureReport(ideal, closure, added, tuple(certs))


def is_integrally_closed(ideal: MonomialIdeal) -> bool:
    """True iff the ideal already contains every monomial of its Newton polyhedron."""
    return integral_closure(ideal).integrally_closed


def replay_report(report: ClosureReport) -> list[str]:
    """Re-check a closure report through ideal arithmetic alone; return problems.

    Verifies that the stored generators are a canonical antichain, that the
    closure is the minimalization of generators plus added monomials, that
    every added monomial is genuinely outside the ideal, and that each
    certificate's rational weights are feasible with the stated oracle
    exponent confirmed by the power-membership oracle.
    """
    problems: list[str] = []
    ideal = report.ideal
    ring = ideal.ring
    if ideal.is_zero:
        return ["closure reports cannot involve the zero ideal"]
    if minimalize(ring, ideal.gens) != ideal:
        problems.append("ideal generators are not a minimal canonical set")
    expected = minimalize(ring, ideal.gens + report.added)
    if expected != report.closure:
        problems.append("closure generators do not match minimalize(generators + added)")
    for v in report.added:
        if ideal.contains(v):
            problems.append(f"added monomial {v!r} already lies in the ideal")
    cert_monos = [c.monomial for c in report.certificates]
    if sorted(cert_monos) != sorted(report.added):
        problems.append("certificates do not match the added monomials one-to-one")
        return problems
    for cert in report.certificates:
        lam = cert.lam
        if len(lam) != len(ideal.gens):
            problems.append(f"certificate for {cert.monomial!r} has {len(lam)} weights")
            continue
        if any(f < 0 for f in lam):
            problems.append(f"certificate for {cert.monomial!r} has negative weights")
            continue
        if sum(lam) != 1:
            problems.append(f"certificate weights for {cert.monomial!r} sum to {sum(lam)}")
            continue
        for j in range(ring.nvars):
            combo = sum(f * Fraction(g[j]) for f, g in zip(lam, ideal.gens))
            if combo > cert.monomial[j]:
                problems.append(
                    f"certificate for {cert.monomial!r} exceeds coordinate {j}: {combo}"
                )
                break
        else:
            expected_n = lcm(*(f.denominator for f in lam))
            if cert.oracle_n != expected_n:
                problems.append(
                    f"certificate for {cert.monomial!r} states N={cert.oracle_n}, "
                    f"weights give N={expected_n}"
                )
            elif not power_membership_oracle(ideal, cert.monomial, cert.oracle_n):
                problems.append(
                    f"oracle rejects {cert.monomial!r} at N={cert.oracle_n}"
                )
    return problems
