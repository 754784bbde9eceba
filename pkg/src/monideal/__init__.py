"""Exact arithmetic for weighted monomial ideals.

Degree-truncation ideals in weighted polynomial rings, their products and
powers, constructive normality certificates at the m*A threshold, integral
closure via Newton-polyhedron membership with an ideal-power oracle, and a
sparse-polynomial checker for integral-dependence equations.
"""

from .closure import (
    ClosureCertificate,
    ClosureError,
    ClosureReport,
    integral_closure,
    is_integrally_closed,
    np_member,
    power_membership_oracle,
)
from .ideals import MonomialIdeal, minimalize, truncation_ideal
from .normality import (
    CertificateError,
    FactorizationCertificate,
    NormalityCertificate,
    NormalityThreshold,
    PowerCheck,
    certify_normal,
    decompose,
    normal_threshold,
    verify_truncation_power,
)
from .polynomials import DependenceReport, Poly, check_dependence, divmod_single, reduce_mod
from .ring import (
    DimensionMismatch,
    Monomial,
    RingMismatch,
    WeightSystem,
    default_variables,
    divides,
    format_monomial,
    mono_mul,
    mono_pow,
    parse_monomial,
    try_divide,
)

__all__ = [
    "CertificateError",
    "ClosureCertificate",
    "ClosureError",
    "ClosureReport",
    "DependenceReport",
    "DimensionMismatch",
    "FactorizationCertificate",
    "Monomial",
    "MonomialIdeal",
    "NormalityCertificate",
    "NormalityThreshold",
    "Poly",
    "PowerCheck",
    "RingMismatch",
    "WeightSystem",
    "certify_normal",
    "check_dependence",
    "decompose",
    "default_variables",
    "divides",
    "divmod_single",
    "format_monomial",
    "integral_closure",
    "is_integrally_closed",
    "minimalize",
    "mono_mul",
    "mono_pow",
    "normal_threshold",
    "np_member",
    "parse_monomial",
    "power_membership_oracle",
    "reduce_mod",
    "truncation_ideal",
    "try_divide",
    "verify_truncation_power",
]

__version__ = "0.1.0"
