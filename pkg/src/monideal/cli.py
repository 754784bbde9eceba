"""Command-line front end.

Subcommands: gens, power, power-check, normal-check, decompose, closure,
witness, verify. Output is a human-readable table by default; --json emits
the canonical JSON forms. Exit codes: 0 success or verified, 1 a property
failure (inequality, failed dependence, failed replay), 2 usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import closure as closure_mod
from . import normality, serialize
from .ideals import MonomialIdeal, minimalize, truncation_ideal
from .polynomials import check_dependence, parse_poly
from .ring import WeightSystem, default_variables, format_monomial, parse_monomial

USAGE_ERROR = 2
PROPERTY_FAILURE = 1


class InputError(Exception):
    """Bad user input: malformed flags, files, or JSON documents."""


def _parse_weights(text: str) -> WeightSystem:
    try:
        weights = tuple(int(part) for part in text.split(","))
        return WeightSystem(weights)
    except ValueError as exc:
        raise InputError(f"bad --weights {text!r}: {exc}") from exc


def _resolve_variables(args: argparse.Namespace, nvars: int) -> tuple[str, ...]:
    if getattr(args, "variables", None):
        names = tuple(part.strip() for part in args.variables.split(","))
        if len(names) != nvars or len(set(names)) != nvars or not all(names):
            raise InputError(f"--variables must list {nvars} distinct names")
        return names
    return default_variables(nvars)


def _load_json(path: str) -> dict[str, Any]:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _emit(args: argparse.Namespace, payload: dict[str, Any], human: str) -> None:
    if args.json:
        sys.stdout.write(serialize.dumps(payload))
    else:
        print(human)


def _ideal_table(ideal: MonomialIdeal, names: tuple[str, ...]) -> str:
    if ideal.is_zero:
        return "zero ideal (no generators)"
    lines = [f"{len(ideal.gens)} minimal generator(s), weights {ideal.ring.weights}:"]
    for g in ideal.gens:
        lines.append(f"  {format_monomial(g, names):<24} degree {ideal.ring.degree(g)}")
    return "\n".join(lines)


def _input_ideal(args: argparse.Namespace) -> tuple[MonomialIdeal, tuple[str, ...]]:
    """An ideal from --ideal JSON, or from --weights with --alpha / --gens."""
    if getattr(args, "ideal", None):
        try:
            ideal, names = serialize.ideal_from_dict(_load_json(args.ideal))
        except serialize.FormatError as exc:
            raise InputError(str(exc)) from exc
        return ideal, names
    if not getattr(args, "weights", None):
        raise InputError("need --ideal FILE or --weights")
    ring = _parse_weights(args.weights)
    names = _resolve_variables(args, ring.nvars)
    if getattr(args, "alpha", None) is not None:
        return truncation_ideal(ring, args.alpha), names
    if getattr(args, "gens", None):
        monos = [parse_monomial(part, names) for part in args.gens.split(",")]
        return minimalize(ring, monos), names
    raise InputError("need --alpha or --gens alongside --weights")


def cmd_gens(args: argparse.Namespace) -> int:
    ring = _parse_weights(args.weights)
    names = _resolve_variables(args, ring.nvars)
    ideal = truncation_ideal(ring, args.alpha)
    _emit(
        args,
        serialize.ideal_to_dict(ideal, names),
        f"truncation at degree {args.alpha}\n" + _ideal_table(ideal, names),
    )
    return 0


def cmd_power(args: argparse.Namespace) -> int:
    ideal, names = _input_ideal(args)
    powered = ideal**args.p
    _emit(
        args,
        serialize.ideal_to_dict(powered, names),
        f"power {args.p}\n" + _ideal_table(powered, names),
    )
    return 0


def cmd_power_check(args: argparse.Namespace) -> int:
    ring = _parse_weights(args.weights)
    names = _resolve_variables(args, ring.nvars)
    check = normality.verify_truncation_power(ring, args.alpha, args.p)
    payload: dict[str, Any] = {
        "weights": list(ring.weights),
        "alpha": args.alpha,
        "p": args.p,
        "equal": check.equal,
        "counterexample": None if check.equal else list(check.counterexample),
    }
    if check.equal:
        human = f"equal: power {args.p} of the degree-{args.alpha} truncation matches degree {args.p * args.alpha}"
    else:
        human = (
            f"unequal: {format_monomial(check.counterexample, names)} has degree >= "
            f"{args.p * args.alpha} but is not in power {args.p}"
        )
    _emit(args, payload, human)
    return 0 if check.equal else PROPERTY_FAILURE


def cmd_normal_check(args: argparse.Namespace) -> int:
    ring = _parse_weights(args.weights)
    if ring.nvars < 2:
        raise InputError("normal-check needs at least two variables")
    cert = normality.certify_normal(ring, args.pmax)
    counts = ", ".join(f"p={pc.p}: {len(pc.factorizations)} generators" for pc in cert.powers)
    human = (
        f"threshold {cert.threshold} (m={ring.m} x lcm={ring.lcm_weight}); "
        f"all powers up to {args.pmax} equal their truncations\n{counts}"
    )
    _emit(args, serialize.certificate_to_dict(cert), human)
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    ring = _parse_weights(args.weights)
    names = _resolve_variables(args, ring.nvars)
    mono = parse_monomial(args.monomial, names)
    try:
        cert = normality.decompose(ring, mono, args.p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    payload = {
        "weights": list(ring.weights),
        "threshold": normality.normal_threshold(ring).threshold,
        "input": list(cert.input),
        "p": cert.p,
        "factors": [list(f) for f in cert.factors],
    }
    factors = " * ".join(format_monomial(f, names) for f in cert.factors)
    _emit(args, payload, f"{format_monomial(mono, names)} = {factors}")
    return 0


def cmd_closure(args: argparse.Namespace) -> int:
    ideal, names = _input_ideal(args)
    if getattr(args, "power", None):
        ideal = ideal**args.power
    if ideal.is_zero:
        raise InputError("the zero ideal has no integral closure report")
    report = closure_mod.integral_closure(ideal)
    if report.integrally_closed:
        human = "integrally closed\n" + _ideal_table(report.ideal, names)
    else:
        added = ", ".join(format_monomial(v, names) for v in report.added)
        human = f"not integrally closed; closure adds: {added}\n" + _ideal_table(
            report.closure, names
        )
    _emit(args, serialize.closure_report_to_dict(report, names), human)
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    ring = _parse_weights(args.weights)
    names = _resolve_variables(args, ring.nvars)
    try:
        relation = parse_poly(args.relation, names)
        element = parse_poly(args.element, names)
        coeffs = [parse_poly(text, names) for text in args.coeff]
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    witness_ideal = None
    if args.ideal_gens:
        monos = [parse_monomial(part, names) for part in args.ideal_gens.split(",")]
        witness_ideal = minimalize(ring, monos)
    report = check_dependence(relation, element, coeffs, ring, witness_ideal)
    payload: dict[str, Any] = {
        "weights": list(ring.weights),
        "equation_holds": report.equation_holds,
        "coefficient_in_power": (
            None
            if report.coefficient_in_power is None
            else list(report.coefficient_in_power)
        ),
        "ok": report.ok,
    }
    bits = [f"dependence equation {'holds' if report.equation_holds else 'fails'} modulo the relation"]
    if report.coefficient_in_power is not None:
        for i, good in enumerate(report.coefficient_in_power, start=1):
            bits.append(f"  coefficient a_{i} terms in ideal power {i}: {'yes' if good else 'no'}")
    _emit(args, payload, "\n".join(bits))
    return 0 if report.ok else PROPERTY_FAILURE


def cmd_verify(args: argparse.Namespace) -> int:
    doc = _load_json(args.certificate)
    if not isinstance(doc, dict):
        raise InputError("certificate must be a JSON object")
    try:
        if "powers" in doc:
            problems = normality.replay_certificate(serialize.certificate_from_dict(doc))
        elif "added" in doc:
            report, _ = serialize.closure_report_from_dict(doc)
            problems = closure_mod.replay_report(report)
        else:
            raise InputError("unrecognized certificate: expected 'powers' or 'added'")
    except serialize.FormatError as exc:
        problems = [str(exc)]
    if problems:
        for problem in problems:
            print(f"FAIL: {problem}")
        return PROPERTY_FAILURE
    print("certificate verified")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monideal",
        description="Exact arithmetic for weighted monomial ideals: truncations, "
        "normality certificates, integral closure, dependence witnesses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, variables: bool = True) -> None:
        p.add_argument("--json", action="store_true", help="emit canonical JSON")
        if variables:
            p.add_argument("--variables", help="comma-separated variable names")

    p = sub.add_parser("gens", help="minimal generators of a degree truncation")
    p.add_argument("--weights", required=True, help="comma-separated positive weights")
    p.add_argument("--alpha", type=int, required=True, help="degree cutoff")
    common(p)
    p.set_defaults(func=cmd_gens)

    p = sub.add_parser("power", help="raise an ideal to a power")
    p.add_argument("--ideal", help="ideal JSON file (- for stdin)")
    p.add_argument("--weights", help="comma-separated positive weights")
    p.add_argument("--alpha", type=int, help="build the ideal as a degree truncation")
    p.add_argument("--gens", help="comma-separated monomials, e.g. x^2,y^3")
    p.add_argument("--p", type=int, required=True, help="exponent, at least 1")
    common(p)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("power-check", help="compare a truncation power with the scaled truncation")
    p.add_argument("--weights", required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_power_check)

    p = sub.add_parser("normal-check", help="certify truncation-power equality at the m*A threshold")
    p.add_argument("--weights", required=True)
    p.add_argument("--pmax", type=int, default=4, help="largest power to certify (default 4)")
    common(p, variables=False)
    p.set_defaults(func=cmd_normal_check)

    p = sub.add_parser("decompose", help="split a monomial into threshold-degree factors")
    p.add_argument("--weights", required=True)
    p.add_argument("--monomial", required=True, help="monomial text, e.g. x^4*y^6*z^10")
    p.add_argument("--p", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("closure", help="integral closure of a monomial ideal")
    p.add_argument("--ideal", help="ideal JSON file (- for stdin)")
    p.add_argument("--weights")
    p.add_argument("--alpha", type=int, help="build the ideal as a degree truncation")
    p.add_argument("--gens", help="comma-separated monomials")
    p.add_argument("--power", type=int, help="raise the input ideal to this power first")
    common(p)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("witness", help="check an integral-dependence equation modulo a relation")
    p.add_argument("--weights", required=True)
    p.add_argument("--relation", required=True, help="hypersurface relation, e.g. x^2+y^3*z+z^4")
    p.add_argument("--element", required=True, help="the element being tested")
    p.add_argument(
        "--coeff",
        action="append",
        default=[],
        required=True,
        help="equation coefficients a_1..a_n in order; repeat the flag",
    )
    p.add_argument("--ideal-gens", help="witness ideal generators, comma-separated monomials")
    common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="replay a certificate or closure report")
    p.add_argument("certificate", help="certificate JSON file (- for stdin)")
    p.set_defaults(func=cmd_verify, json=False)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
