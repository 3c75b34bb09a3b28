"""Extended potential assembly, exceptional-polynomial construction by
exact linear algebra on their differential equation, bound-state
wavefunctions, and the numeric verification layer (quadrature
orthogonality and a finite-difference eigensolve).

The polynomial layer stays exact; floats appear only in evaluation,
integration, and the eigensolver.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from .errors import (
    GridTooCoarse,
    NullSpaceDimension,
    OracleMismatch,
    QuadratureNonconvergence,
    SpecInvalid,
)
from .exactmath import Poly, Rational, rational_nullspace
from .seeds import IsotonicParams, _polyval, bound_gauge
from .wronskian import ExtensionSpec, GReport


@dataclass(frozen=True)
class ExtendedPotential:
    """V(x) = V_l(x) + V_rat(z) + C with z = omega x^2/2, cached as the
    exact rational pair (rat_num, g^2) for the rational part."""

    base: IsotonicParams
    g: Poly
    shift: Rational
    rat_num: Poly
    rat_den: Poly
    certified_regular: bool

    def v_rat_exact(self, z0) -> Rational:
        """Exact value of the rational part at rational z0."""
        return self.rat_num.eval(z0) / self.rat_den.eval(z0)

    def __call__(self, x):
        """Float evaluation at x > 0 (scalar or array)."""
        x = np.asarray(x, dtype=float)
        w = float(self.base.omega)
        z = 0.5 * w * x * x
        val = self.base.potential(x) + float(self.shift)
        val = val + _polyval(self.rat_num, z) / _polyval(self.rat_den, z)
        return val if val.ndim else float(val)


def build_potential(spec: ExtensionSpec, report: GReport) -> ExtendedPotential:
    """Assemble the extended potential from a computed g.

    The rational part is -2*omega*[g'g + 2z(g''g - g'^2)] / g^2.  If the
    report has not been certified regular the potential is still built
    (poles and all, useful for demonstrations) but flagged and warned.
    """
    if spec.l < 0:
        raise SpecInvalid(f"final angular momentum l = {spec.l} is negative")
    g = report.g
    gd = g.diff()
    gdd = gd.diff()
    num = (gd * g + (gdd * g - gd * gd).shift_up(1) * 2) * (-2 * spec.omega)
    regular = report.regular is True
    if not regular:
        warnings.warn("potential built from a g not certified nodeless; it may have poles")
    return ExtendedPotential(
        base=IsotonicParams(spec.l, spec.omega),
        g=g,
        shift=(spec.k - 2 * spec.q) * spec.omega,
        rat_num=num,
        rat_den=g * g,
        certified_regular=regular,
    )


@dataclass(frozen=True)
class EOPFamily:
    """Monic exceptional polynomials indexed by the level nu; the one of
    level nu has degree mu + nu."""

    alpha: Rational
    g: Poly
    mu: int
    polys: tuple

    def __getitem__(self, nu: int) -> Poly:
        return self.polys[nu]

    def __len__(self) -> int:
        return len(self.polys)


def _ode_operator_columns(g: Poly, alpha, nu: int, degree: int):
    """Columns of the cleared-denominator eigenvalue equation applied to
    the monomial basis 1, z, ..., z^degree."""
    gd = g.diff()
    gdd = gd.diff()
    q1 = g * Poly((alpha + 1, -1)) - gd.shift_up(1) * 2
    q0 = gd * Poly((-alpha, 1)) + gdd.shift_up(1) + g * nu
    cols = []
    for d in range(degree + 1):
        col = q0.shift_up(d)
        if d >= 1:
            col = col + (q1 * d).shift_up(d - 1)
        if d >= 2:
            col = col + (g * (d * (d - 1))).shift_up(d - 1)
        cols.append(col)
    return cols


def eop_nullspace(g: Poly, alpha, nu: int, degree: int):
    """Basis of polynomial solutions of degree <= degree with eigenvalue
    -nu, as coefficient vectors."""
    cols = _ode_operator_columns(g, alpha, Fraction(nu), degree)
    nrows = max((c.degree + 1 for c in cols if not c.is_zero), default=1)
    rows = [[cols[d][p] for d in range(degree + 1)] for p in range(nrows)]
    return rational_nullspace(rows)


def solve_eop(spec: ExtensionSpec, report: GReport, nu_max: int) -> EOPFamily:
    """Exceptional polynomials for levels 0..nu_max by exact null-space
    solve of the cleared-denominator differential equation.

    Each solve must give a one-dimensional space (NullSpaceDimension
    otherwise) whose element has degree exactly mu+nu (OracleMismatch
    otherwise); the result is normalized monic.
    """
    if nu_max < 0:
        raise ValueError("nu_max must be nonnegative")
    if report.regular is not True:
        warnings.warn("solving the polynomial family for a g not certified nodeless")
    g = report.g
    mu = report.mu_computed
    polys = []
    for nu in range(nu_max + 1):
        basis = eop_nullspace(g, spec.alpha, nu, mu + nu)
        if len(basis) != 1:
            raise NullSpaceDimension(len(basis))
        y = Poly(basis[0])
        if y.degree != mu + nu:
            raise OracleMismatch(
                f"polynomial for nu={nu} has degree {y.degree}, expected {mu + nu}"
            )
        polys.append(y.monic())
    return EOPFamily(alpha=spec.alpha, g=g, mu=mu, polys=tuple(polys))


def wavefunction(spec: ExtensionSpec, family: EOPFamily, nu: int):
    """Bound-state wavefunction x -> eta(z) y(z) / g(z), unnormalized."""
    y = family[nu]
    g = family.g
    gauge = bound_gauge(family.alpha)
    w = float(spec.omega)

    def psi(x):
        x = np.asarray(x, dtype=float)
        z = 0.5 * w * x * x
        val = gauge.eval_float(z) * _polyval(y, z) / _polyval(g, z)
        return val if val.ndim else float(val)

    return psi


@lru_cache(maxsize=8)
def _gauss_legendre(n: int):
    return np.polynomial.legendre.leggauss(n)


def _inner_product(family: EOPFamily, i: int, j: int, nodes: int) -> float:
    """integral of y_i y_j z^alpha e^-z / g^2 over (0, inf) by mapped
    Gauss-Legendre with the z = u^2 substitution (removes the sqrt
    endpoint behaviour of half-integer alpha)."""
    zmax = 60.0 + 4.0 * (family.polys[i].degree + family.polys[j].degree + 2)
    umax = np.sqrt(zmax)
    x, wts = _gauss_legendre(nodes)
    u = 0.5 * umax * (x + 1.0)
    wts = 0.5 * umax * wts
    z = u * u
    a = float(family.alpha)
    val = (
        2.0
        * u
        * np.power(z, a)
        * np.exp(-z)
        * _polyval(family.polys[i], z)
        * _polyval(family.polys[j], z)
        / _polyval(family.g, z) ** 2
    )
    return float(np.dot(wts, val))


def orthogonality_check(family: EOPFamily, i: int, j: int) -> float:
    """Normalized inner product |<i,j>| / sqrt(<i,i><j,j>) under the
    family's weight; 1.0 on the diagonal by construction.

    Two node counts (200 and 301) must agree to 1e-10 on the normalized
    value or QuadratureNonconvergence is raised.
    """
    if i == j:
        return 1.0
    vals = []
    for nodes in (200, 301):
        nii = _inner_product(family, i, i, nodes)
        njj = _inner_product(family, j, j, nodes)
        nij = _inner_product(family, i, j, nodes)
        vals.append(abs(nij) / np.sqrt(nii * njj))
    if abs(vals[0] - vals[1]) > 1e-10:
        raise QuadratureNonconvergence(
            f"normalized inner product <{i},{j}> moved from {vals[0]} to {vals[1]}"
        )
    return vals[1]


@dataclass(frozen=True, eq=False)
class NumericGrid:
    """Uniform abscissae for the finite-difference eigensolve."""

    x_min: float
    x_max: float
    n_points: int
    values: np.ndarray = None

    def __post_init__(self):
        if not (0 < self.x_min < self.x_max):
            raise ValueError("need 0 < x_min < x_max")
        if self.n_points < 16:
            raise ValueError("grid too small")
        if self.values is None:
            object.__setattr__(self, "values", np.linspace(self.x_min, self.x_max, self.n_points))

    def refined(self) -> "NumericGrid":
        return NumericGrid(self.x_min, self.x_max, 2 * self.n_points - 1)


def auto_grid(potential: ExtendedPotential, n_levels: int, n_points: int = 2000) -> NumericGrid:
    """Grid sized from the classical turning point of the highest level."""
    w = float(potential.base.omega)
    alpha = float(potential.base.alpha)
    e_top = w * (2 * (n_levels - 1) + alpha + 1) + abs(float(potential.shift))
    x_turn = 2.0 * np.sqrt(e_top) / w
    x_max = float(np.sqrt(x_turn**2 + 120.0 / w))
    x_min = 0.01 / np.sqrt(w)
    return NumericGrid(x_min, x_max, n_points)


def _fd_levels(potential: ExtendedPotential, n_levels: int, grid: NumericGrid):
    x = grid.values
    h = x[1] - x[0]
    diag = 2.0 / h**2 + potential(x)
    off = np.full(len(x) - 1, -1.0 / h**2)
    return eigvalsh_tridiagonal(diag, off, select="i", select_range=(0, n_levels - 1))


def numeric_spectrum(potential: ExtendedPotential, n_levels: int, grid: NumericGrid):
    """Lowest n_levels eigenvalues of -d^2/dx^2 + V(x) with Dirichlet ends.

    Symmetric second-order differences; the step-halving check rejects a
    grid whose ground level moves by more than 1e-3 relative, and the
    halved-step values are the ones returned.
    """
    coarse = _fd_levels(potential, n_levels, grid)
    fine = _fd_levels(potential, n_levels, grid.refined())
    if abs(fine[0] - coarse[0]) > 1e-3 * abs(fine[0]):
        raise GridTooCoarse(
            f"ground level moved {coarse[0]} -> {fine[0]} under step halving"
        )
    return [float(e) for e in fine]


def expected_spectrum(spec: ExtensionSpec, n_levels: int):
    """Levels omega*(2 nu + alpha + 1) + C implied by the isospectral
    construction (exact rationals)."""
    c = (spec.k - 2 * spec.q) * spec.omega
    return [spec.omega * (2 * nu + spec.alpha + 1) + c for nu in range(n_levels)]
