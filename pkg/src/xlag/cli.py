"""Command-line front end: extend | verify | sample | eop.

Exit codes: 0 ok (including regular=false reports for inadmissible but
computable specs), 1 verification failure, 2 bad input, 3 internal
inconsistency (an exact oracle disagreed).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import NotDivisible, NullSpaceDimension, OracleMismatch, SpecInvalid, XlagError
from .regularity import certify
from .report import build_document, rat, spec_section
from .spectral import (
    auto_grid,
    build_potential,
    expected_spectrum,
    numeric_spectrum,
    orthogonality_check,
    solve_eop,
    wavefunction,
)
from .verify import CHECK_NAMES, run_lattice, summarize, worker_cap
from .wronskian import ExtensionSpec, check_origin_recurrence, compute_g, wronskian_direct


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecInvalid(f"not a rational number: {text!r}") from exc


def parse_seeds(text: str):
    """Seed list like "I:1,I:3,II:2" -> sorted index tuples per type."""
    m_i, m_ii = [], []
    for token in filter(None, (t.strip() for t in text.split(","))):
        try:
            kind, m = token.split(":")
            m = int(m)
        except ValueError as exc:
            raise SpecInvalid(f"bad seed token {token!r}, expected I:<m> or II:<m>") from exc
        if kind.strip().upper() == "I":
            m_i.append(m)
        elif kind.strip().upper() == "II":
            m_ii.append(m)
        else:
            raise SpecInvalid(f"unknown seed type in {token!r}")
    return tuple(sorted(m_i)), tuple(sorted(m_ii))


def spec_from_args(args) -> ExtensionSpec:
    if (args.alpha is None) == (args.l is None):
        raise SpecInvalid("exactly one of --alpha or --l is required")
    if args.alpha is not None:
        alpha = parse_rational(args.alpha)
    else:
        alpha = parse_rational(args.l) + Fraction(1, 2)
    m_i, m_ii = parse_seeds(args.seeds)
    return ExtensionSpec(alpha, parse_rational(args.omega), m_i, m_ii)


def _add_spec_flags(p):
    p.add_argument("--alpha", help="final alpha as a rational, e.g. 5/2")
    p.add_argument("--l", help="final angular momentum as a rational (alternative to --alpha)")
    p.add_argument("--omega", default="1", help="oscillator frequency (default 1)")
    p.add_argument("--seeds", default="", help='seed list like "I:1,II:2" (empty for k=0)')


def _emit(text: str, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def run_pipeline(spec: ExtensionSpec, nu_max: int, with_numeric: bool = True) -> dict:
    """compute_g -> certify -> potential -> polynomial family -> numeric
    checks, collected into one report document."""
    report = compute_g(spec)
    if not report.predictions_hold:
        raise OracleMismatch("computed g disagrees with its closed-form predictions")
    if spec.k <= 5:
        wronskian_direct(spec)
    cert = certify(report)
    recurrence = check_origin_recurrence(spec) if spec.k - spec.q >= 2 else None
    potential = family = numeric = None
    if spec.l >= 0:
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            potential = build_potential(spec, report)
    if cert.regular and potential is not None:
        family = solve_eop(spec, report, nu_max)
        numeric = {}
        if with_numeric:
            off = [
                orthogonality_check(family, i, j)
                for i in range(len(family))
                for j in range(i + 1, len(family))
            ]
            numeric["orthogonality_max_offdiag"] = max(off) if off else None
            n_levels = min(nu_max, 3) + 1
            levels = numeric_spectrum(potential, n_levels, auto_grid(potential, n_levels))
            expected = expected_spectrum(spec, n_levels)
            numeric["spectrum_computed"] = levels
            numeric["spectrum_expected"] = [rat(e) for e in expected]
            numeric["spectrum_max_rel_dev"] = max(
                abs(lv - float(e)) / abs(float(e)) for lv, e in zip(levels, expected)
            )
    return build_document(
        spec, report, cert, recurrence=recurrence, potential=potential, family=family, numeric=numeric
    )


def cmd_extend(args) -> int:
    spec = spec_from_args(args)
    doc = run_pipeline(spec, nu_max=args.nu_max, with_numeric=not args.skip_numeric)
    _emit(json.dumps(doc, indent=2), args.out)
    return 0


def cmd_eop(args) -> int:
    spec = spec_from_args(args)
    report = compute_g(spec)
    cert = certify(report)
    if not cert.regular:
        print("spec is not regular; no orthogonal polynomial family exists", file=sys.stderr)
        return 2
    family = solve_eop(spec, report, args.nu_max)
    doc = {
        "schema": 1,
        "spec": spec_section(spec),
        "eop": {
            "mu": family.mu,
            "levels": [
                {"nu": nu, "degree": family[nu].degree, "coefficients": [rat(c) for c in family[nu].coeffs]}
                for nu in range(len(family))
            ],
        },
    }
    _emit(json.dumps(doc, indent=2), args.out)
    return 0


def cmd_sample(args) -> int:
    spec = spec_from_args(args)
    report = compute_g(spec)
    cert = certify(report)
    if not cert.regular and not args.force:
        print("spec is not regular; pass --force to sample anyway", file=sys.stderr)
        return 2
    import warnings

    import numpy as np

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        potential = build_potential(spec, report)
    nus = [int(t) for t in filter(None, (s.strip() for s in args.wavefunctions.split(",")))]
    psis = []
    if nus:
        family = solve_eop(spec, report, max(nus))
        psis = [(nu, wavefunction(spec, family, nu)) for nu in nus]
    xs = np.linspace(args.x_min, args.x_max, args.points)
    v2 = potential(xs)
    cols = [v2] + [psi(xs) for _, psi in psis]
    lines = [",".join(["x", "V2"] + [f"psi_{nu}" for nu, _ in psis])]
    for i, x in enumerate(xs):
        lines.append(",".join(f"{val:.17g}" for val in [x] + [c[i] for c in cols]))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    workers = worker_cap(None) if args.parallel else 1
    results = run_lattice(
        max_k=args.max_k,
        max_m=args.max_m,
        alpha_steps=args.alpha_grid,
        negate_const_sign=args.self_test_negate_sign,
        workers=workers,
    )
    summary = summarize(results)
    print(f"lattice: {summary['total']} admissible specs "
          f"(k <= {args.max_k}, m <= {args.max_m}, {args.alpha_grid} alpha steps)")
    print(f"{'invariant':<18} {'checked':>8} {'passed':>8} {'failed':>8}")
    for name in CHECK_NAMES:
        c = summary["counts"][name]
        print(f"{name:<18} {c['checked']:>8} {c['passed']:>8} {c['checked'] - c['passed']:>8}")
    if summary["failures"]:
        first = summary["failures"][0]
        print(f"FAIL: first failing spec: {first.spec} -> {first.failures}", file=sys.stderr)
        return 1
    print("all invariants hold")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xlag",
        description="Exact construction and certification of rationally-extended "
        "radial oscillators and their exceptional Laguerre polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extend", help="build one extension and report everything about it")
    _add_spec_flags(p)
    p.add_argument("--nu-max", type=int, default=3, help="levels of the polynomial family (default 3)")
    p.add_argument("--out", help="write the report to this path instead of stdout")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--skip-numeric", action="store_true", help="omit quadrature/eigensolve checks")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("verify", help="run the exact invariant lattice")
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--max-m", type=int, default=6)
    p.add_argument("--alpha-grid", type=int, default=7, help="half-integer alpha' steps per index set")
    p.add_argument("--parallel", action="store_true", help="fan out across processes (XLAG_THREADS caps)")
    p.add_argument("--self-test-negate-sign", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="emit CSV of the potential and wavefunctions")
    _add_spec_flags(p)
    p.add_argument("--x-min", type=float, default=0.05)
    p.add_argument("--x-max", type=float, default=8.0)
    p.add_argument("--points", type=int, default=1000)
    p.add_argument("--wavefunctions", default="", help='comma list of nu values, e.g. "0,1,2"')
    p.add_argument("--force", action="store_true", help="sample even when not regular")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("eop", help="polynomial family coefficients only")
    _add_spec_flags(p)
    p.add_argument("--nu-max", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_eop)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotDivisible, OracleMismatch, NullSpaceDimension) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except XlagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
