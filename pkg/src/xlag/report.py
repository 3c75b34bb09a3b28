"""Machine-readable report documents.

Exact rationals serialize as strings like "105/8" so nothing is lost in
transit; floats are confined to the "numeric" section.  Documents are
plain JSON-compatible dicts, so serialization round-trips field-exact.
"""
from __future__ import annotations

from fractions import Fraction

from .exactmath import Poly
from .regularity import RegularityCertificate
from .wronskian import ExtensionSpec, GReport

SCHEMA_VERSION = 1


def rat(x) -> str:
    return str(Fraction(x))


def poly_coeffs(p: Poly):
    return [rat(c) for c in p.coeffs]


def spec_section(spec: ExtensionSpec) -> dict:
    return {
        "alpha": rat(spec.alpha),
        "l": rat(spec.l),
        "omega": rat(spec.omega),
        "m_type_i": list(spec.m_type_i),
        "m_type_ii": list(spec.m_type_ii),
        "k": spec.k,
        "q": spec.q,
        "alpha_prime": rat(spec.alpha_prime),
        "l_prime": rat(spec.l_prime),
        "admissible": spec.admissible,
    }


def g_section(report: GReport) -> dict:
    return {
        "coefficients": poly_coeffs(report.g),
        "degree": report.mu_computed,
        "sigma": report.sigma,
        "divisible": report.divisible,
        "mu": {"predicted": report.mu_predicted, "computed": report.mu_computed},
        "leading": {"predicted": rat(report.lead_predicted), "computed": rat(report.lead_computed)},
        "constant": {"predicted": rat(report.const_predicted), "computed": rat(report.const_computed)},
        "predictions_hold": report.predictions_hold,
    }


def certificate_section(cert: RegularityCertificate) -> dict:
    return {
        "root_count_positive_axis": cert.root_count_positive_axis,
        "sign_at_zero": cert.sign_at_zero,
        "sign_at_infinity": cert.sign_at_infinity,
        "regular": cert.regular,
        "admissible": cert.admissible,
        "sturm_sequence_length": cert.sturm_sequence_length,
        "signs_match": cert.signs_match,
        "repeated_root_defect": cert.repeated_root_defect,
    }


def build_document(
    spec: ExtensionSpec,
    report: GReport,
    cert: RegularityCertificate,
    recurrence=None,
    potential=None,
    family=None,
    numeric=None,
) -> dict:
    doc = {
        "schema": SCHEMA_VERSION,
        "spec": spec_section(spec),
        "g": g_section(report),
        "certificate": certificate_section(cert),
        "origin_recurrence": recurrence,
    }
    if potential is not None:
        doc["potential"] = {
            "shift": rat(potential.shift),
            "rational_numerator": poly_coeffs(potential.rat_num),
            "rational_denominator": poly_coeffs(potential.rat_den),
            "certified_regular": potential.certified_regular,
        }
    if family is not None:
        doc["eop"] = {
            "mu": family.mu,
            "levels": [
                {"nu": nu, "degree": family[nu].degree, "coefficients": poly_coeffs(family[nu])}
                for nu in range(len(family))
            ],
        }
    doc["numeric"] = numeric
    return doc
