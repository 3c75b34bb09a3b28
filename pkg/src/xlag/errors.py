"""Exception types shared across the package."""


class XlagError(Exception):
    """Base class for all package errors."""


class SpecInvalid(XlagError):
    """Extension specification violates a structural constraint."""


class NotDivisible(XlagError):
    """Exact division by a power of z failed; indicates an implementation bug."""


class OracleMismatch(XlagError):
    """Two independent computation routes disagree; hard failure."""


class Inapplicable(XlagError):
    """Requested check does not apply to this specification."""


class ZeroPolynomial(XlagError):
    """Operation undefined for the zero polynomial."""


class BoundaryRoot(XlagError):
    """Root counting endpoint coincides with a root."""


class Unclassifiable(XlagError):
    """Endpoint behaviour does not fall into one of the three seed classes."""


class NullSpaceDimension(XlagError):
    """ODE null space has unexpected dimension."""

    def __init__(self, dim, expected=1):
        self.dim = dim
        self.expected = expected
        super().__init__(f"null space dimension {dim}, expected {expected}")


class QuadratureNonconvergence(XlagError):
    """Two quadrature node counts disagree beyond tolerance."""


class GridTooCoarse(XlagError):
    """Finite-difference grid fails the step-halving convergence check."""
