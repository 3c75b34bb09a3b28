"""Generalized Laguerre polynomials, the radial-oscillator spectrum, and
the type-I/II seed functions with their gauge factors and energies.

Seeds are kept in factored gauge-times-polynomial form (`QuasiPoly`),
which is closed under differentiation, so every Wronskian entry stays an
exact rational object.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import SpecInvalid, Unclassifiable
from .exactmath import Poly, Rational, pochhammer

HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def laguerre(n: int, a: Rational) -> Poly:
    """Exact L_n^{(a)}(z) from the series; degree exactly n.

    Coefficient of z^i is (-1)^i (a+i+1)_{n-i} / ((n-i)! i!), which gives
    L_n^{(a)}(0) = (a+1)_n / n!.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a = Fraction(a)
    coeffs = []
    for i in range(n + 1):
        c = pochhammer(a + i + 1, n - i) / (math.factorial(n - i) * math.factorial(i))
        coeffs.append(-c if i % 2 else c)
    return Poly(coeffs)


def laguerre_negated_arg(n: int, a: Rational) -> Poly:
    """L_n^{(a)}(-z) as an exact polynomial in z."""
    return laguerre(n, a).compose_neg()


@dataclass(frozen=True)
class IsotonicParams:
    """Radial oscillator parameters: angular momentum l >= 0 and omega > 0."""

    l: Rational
    omega: Rational

    def __post_init__(self):
        object.__setattr__(self, "l", Fraction(self.l))
        object.__setattr__(self, "omega", Fraction(self.omega))
        if self.l < 0:
            raise SpecInvalid(f"angular momentum must be nonnegative, got {self.l}")
        if self.omega <= 0:
            raise SpecInvalid(f"omega must be positive, got {self.omega}")

    @property
    def alpha(self) -> Rational:
        return self.l + HALF

    def potential(self, x):
        """V(x) = omega^2 x^2 / 4 + l(l+1)/x^2, numpy-friendly."""
        w = float(self.omega)
        cf = float(self.l * (self.l + 1))
        return 0.25 * w * w * x * x + cf / (x * x)


def isotonic_spectrum(params: IsotonicParams, nu: int) -> Rational:
    """Bound-state energy omega*(2 nu + alpha + 1) of the unextended oscillator."""
    if nu < 0:
        raise ValueError("level index must be nonnegative")
    return params.omega * (2 * nu + params.alpha + 1)


class SeedKind(Enum):
    TYPE_I = "I"
    TYPE_II = "II"


@dataclass(frozen=True)
class SeedSpec:
    kind: SeedKind
    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise SpecInvalid(f"seed index must be a positive integer, got {self.m}")


@dataclass(frozen=True)
class SeedEnergy:
    """Factorization energy in units of omega."""

    value: Rational


@dataclass(frozen=True)
class QuasiPoly:
    """A value z^zpower * e^(expsign*z/2) * poly(z), exact and closed
    under d/dz."""

    zpower: Rational
    expsign: int
    poly: Poly

    def __post_init__(self):
        object.__setattr__(self, "zpower", Fraction(self.zpower))
        if self.expsign not in (-1, 1):
            raise ValueError("expsign must be -1 or +1")

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def diff(self) -> "QuasiPoly":
        """d/dz [z^a e^{sz/2} P] = z^{a-1} e^{sz/2} (aP + (s/2) zP + zP')."""
        a, s, p = self.zpower, self.expsign, self.poly
        zp = p.shift_up(1)
        new = a * p + zp * Fraction(s, 2) + p.diff().shift_up(1)
        return QuasiPoly(a - 1, s, new)

    def eval_float(self, z):
        """Floating-point value at z > 0 (scalar or numpy array)."""
        import numpy as np

        z = np.asarray(z, dtype=float)
        val = np.power(z, float(self.zpower)) * np.exp(self.expsign * z / 2.0)
        val = val * _polyval(self.poly, z)
        return val if val.ndim else float(val)


def _polyval(p: Poly, z):
    import numpy as np

    acc = np.zeros_like(z, dtype=float)
    for c in reversed(p.coeffs):
        acc = acc * z + float(c)
    return acc


def quasipoly_diff(q: QuasiPoly) -> QuasiPoly:
    return q.diff()


def make_seed(spec: SeedSpec, alpha_prime: Rational):
    """Seed function and its energy (in units of omega) for the starting
    potential with parameter alpha_prime.

    Type I comes from the omega -> -omega symmetry and lies below the
    ground state for every m; type II (alpha -> -alpha) requires
    alpha_prime > m to be nodeless.
    """
    alpha_prime = Fraction(alpha_prime)
    if alpha_prime < HALF:
        raise SpecInvalid(f"alpha' must be >= 1/2, got {alpha_prime}")
    m = spec.m
    if spec.kind is SeedKind.TYPE_I:
        qp = QuasiPoly((alpha_prime + HALF) / 2, +1, laguerre_negated_arg(m, alpha_prime))
        energy = SeedEnergy(-(alpha_prime + 2 * m + 1))
    else:
        qp = QuasiPoly(-(alpha_prime - HALF) / 2, -1, laguerre(m, -alpha_prime))
        energy = SeedEnergy(-(alpha_prime - 2 * m - 1))
    return qp, energy


def bound_gauge(alpha: Rational) -> QuasiPoly:
    """Ground-state gauge factor z^{(alpha+1/2)/2} e^{-z/2}."""
    return QuasiPoly((Fraction(alpha) + HALF) / 2, -1, Poly.one())


class EndpointClass(Enum):
    """Boundary behaviour on (0, inf), up to overall sign: I vanishes at 0
    and blows up at infinity, II the reverse, III blows up at both ends."""

    I = "I"
    II = "II"
    III = "III"


def endpoint_class(q: QuasiPoly) -> EndpointClass:
    """Classify endpoint behaviour from the gauge exponents alone.

    The z-power is adjusted by the order of the polynomial factor at the
    origin, so a vanishing constant term does not misclassify.  A value
    bounded at either end (zpower 0, or decay at both ends) is not one of
    the three seed classes and raises Unclassifiable.
    """
    if q.is_zero:
        raise Unclassifiable("zero function has no endpoint class")
    order = next(i for i, c in enumerate(q.poly.coeffs) if c)
    a_eff = q.zpower + order
    if a_eff == 0:
        raise Unclassifiable("value tends to a finite nonzero limit at 0+")
    if a_eff > 0 and q.expsign == +1:
        return EndpointClass.I
    if a_eff < 0 and q.expsign == -1:
        return EndpointClass.II
    if a_eff < 0 and q.expsign == +1:
        return EndpointClass.III
    raise Unclassifiable("value decays at both ends (bound-state-like)")
