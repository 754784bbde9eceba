"""Stable JSON forms for ideals, normality certificates, and closure reports.

All emitted dictionaries use a fixed key order and integers or decimal
strings only, never floats, so identical inputs serialize to identical
bytes. Rationals travel as ["numerator", "denominator"] string pairs.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .closure import ClosureCertificate, ClosureReport, minimalize
from .ideals import MonomialIdeal
from .normality import (
    FactorizationCertificate,
    NormalityCertificate,
    PowerCertificate,
)
from .ring import WeightSystem, default_variables


class FormatError(ValueError):
    """A JSON document does not match the expected schema."""


def dumps(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _int_list(value: Any, what: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise FormatError(f"{what} must be a list of integers, got {value!r}")
    return tuple(value)


def _variables(doc: dict[str, Any], nvars: int) -> tuple[str, ...]:
    variables = doc.get("variables")
    if variables is None:
        return default_variables(nvars)
    if (
        not isinstance(variables, list)
        or len(variables) != nvars
        or len(set(variables)) != nvars
        or not all(isinstance(v, str) and v for v in variables)
    ):
        raise FormatError(f"variables must be {nvars} distinct non-empty names")
    return tuple(variables)


def ideal_to_dict(ideal: MonomialIdeal, variables: tuple[str, ...] | None = None) -> dict[str, Any]:
    names = variables or default_variables(ideal.ring.nvars)
    return {
        "weights": list(ideal.ring.weights),
        "variables": list(names),
        "generators": [list(g) for g in ideal.gens],
    }


def ideal_from_dict(doc: dict[str, Any]) -> tuple[MonomialIdeal, tuple[str, ...]]:
    if not isinstance(doc, dict):
        raise FormatError("ideal document must be a JSON object")
    ring = WeightSystem(_int_list(doc.get("weights"), "weights"))
    names = _variables(doc, ring.nvars)
    gens_field = doc.get("generators")
    if not isinstance(gens_field, list):
        raise FormatError("generators must be a list of exponent vectors")
    gens = tuple(_int_list(g, "generator") for g in gens_field)
    try:
        ideal = MonomialIdeal(ring, gens)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return ideal, names


def certificate_to_dict(cert: NormalityCertificate) -> dict[str, Any]:
    return {
        "weights": list(cert.ring.weights),
        "threshold": cert.threshold,
        "powers": [
            {
                "p": pc.p,
                "verdict": "equal",
                "factorizations": [
                    {"input": list(f.input), "factors": [list(x) for x in f.factors]}
                    for f in pc.factorizations
                ],
            }
            for pc in cert.powers
        ],
    }


def certificate_from_dict(doc: dict[str, Any]) -> NormalityCertificate:
    if not isinstance(doc, dict):
        raise FormatError("certificate document must be a JSON object")
    ring = WeightSystem(_int_list(doc.get("weights"), "weights"))
    threshold = doc.get("threshold")
    if not isinstance(threshold, int) or isinstance(threshold, bool):
        raise FormatError("threshold must be an integer")
    powers_field = doc.get("powers")
    if not isinstance(powers_field, list):
        raise FormatError("powers must be a list")
    powers = []
    for entry in powers_field:
        if not isinstance(entry, dict):
            raise FormatError("each power entry must be an object")
        p = entry.get("p")
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise FormatError(f"power level must be a positive integer, got {p!r}")
        if entry.get("verdict") != "equal":
            raise FormatError(f"unsupported verdict {entry.get('verdict')!r}")
        facts_field = entry.get("factorizations")
        if not isinstance(facts_field, list):
            raise FormatError("factorizations must be a list")
        facts = []
        for fd in facts_field:
            if not isinstance(fd, dict):
                raise FormatError("each factorization must be an object")
            mono = _int_list(fd.get("input"), "factorization input")
            factors_field = fd.get("factors")
            if not isinstance(factors_field, list):
                raise FormatError("factors must be a list of exponent vectors")
            factors = tuple(_int_list(x, "factor") for x in factors_field)
            facts.append(FactorizationCertificate(ring, mono, p, factors))
        powers.append(PowerCertificate(p, tuple(facts)))
    return NormalityCertificate(ring, threshold, tuple(powers))


def _fraction_pair(value: Fraction) -> list[str]:
    return [str(value.numerator), str(value.denominator)]


def _fraction_from_pair(value: Any) -> Fraction:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(x, str) for x in value)
    ):
        raise FormatError(f"rationals must be [numerator, denominator] string pairs, got {value!r}")
    try:
        num, den = int(value[0]), int(value[1])
    except ValueError as exc:
        raise FormatError(f"bad rational {value!r}") from exc
    if den <= 0:
        raise FormatError(f"rational denominator must be positive, got {value!r}")
    return Fraction(num, den)


def closure_report_to_dict(
    report: ClosureReport, variables: tuple[str, ...] | None = None
) -> dict[str, Any]:
    doc = ideal_to_dict(report.ideal, variables)
    doc["added"] = [list(v) for v in report.added]
    doc["certificates"] = [
        {
            "monomial": list(c.monomial),
            "lambda": [_fraction_pair(f) for f in c.lam],
            "oracle_N": c.oracle_n,
        }
        for c in report.certificates
    ]
    return doc


def closure_report_from_dict(doc: dict[str, Any]) -> tuple[ClosureReport, tuple[str, ...]]:
    ideal, names = ideal_from_dict(doc)
    added_field = doc.get("added")
    if not isinstance(added_field, list):
        raise FormatError("added must be a list of exponent vectors")
    added = tuple(_int_list(v, "added monomial") for v in added_field)
    certs_field = doc.get("certificates")
    if not isinstance(certs_field, list):
        raise FormatError("certificates must be a list")
    certs = []
    for cd in certs_field:
        if not isinstance(cd, dict):
            raise FormatError("each certificate must be an object")
        mono = _int_list(cd.get("monomial"), "certificate monomial")
        lam_field = cd.get("lambda")
        if not isinstance(lam_field, list):
            raise FormatError("lambda must be a list of rational pairs")
        lam = tuple(_fraction_from_pair(x) for x in lam_field)
        oracle_n = cd.get("oracle_N")
        if not isinstance(oracle_n, int) or isinstance(oracle_n, bool) or oracle_n < 1:
            raise FormatError(f"oracle_N must be a positive integer, got {oracle_n!r}")
        certs.append(ClosureCertificate(mono, lam, oracle_n))
    try:
        closure = minimalize(ideal.ring, ideal.gens + added)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    report = ClosureReport(ideal, closure, added, tuple(certs))
    return report, names
