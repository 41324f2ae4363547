"""
Real-coordinate oracle: rewrite a z-polynomial in x0..x3 through
z1 = x0 + i x1, z2 = x2 + i x3, differentiate there, and convert back.
"""

from fractions import Fraction
from typing import Tuple

from formwell.core.poly.poly import Poly, Var
from formwell.core.scalar import GaussianRational


class XPoly(Poly):
    __slots__ = ()
    VAR_NAMES = ("x0", "x1", "x2", "x3")


def _x(k: int) -> XPoly:
    return XPoly.var(k)


_I = GaussianRational(0, 1)
_HALF = GaussianRational(Fraction(1, 2))
_HALF_I = GaussianRational(0, Fraction(1, 2))

# slot order z1, zb1, z2, zb2
Z_IN_X: Tuple[XPoly, ...] = (
    _x(0) + _x(1).scale(_I),
    _x(0) - _x(1).scale(_I),
    _x(2) + _x(3).scale(_I),
    _x(2) - _x(3).scale(_I),
)

X_IN_Z: Tuple[Poly, ...] = (
    (Poly.var(Var.Z1) + Poly.var(Var.ZB1)).scale(_HALF),
    (Poly.var(Var.ZB1) - Poly.var(Var.Z1)).scale(_HALF_I),
    (Poly.var(Var.Z2) + Poly.var(Var.ZB2)).scale(_HALF),
    (Poly.var(Var.ZB2) - Poly.var(Var.Z2)).scale(_HALF_I),
)


def to_real_coordinates(p: Poly) -> XPoly:
    return p.substitute(Z_IN_X)  # type: ignore[return-value]


def from_real_coordinates(q: XPoly) -> Poly:
    return q.substitute(X_IN_Z)


def real_laplacian(p: Poly) -> Poly:
    q = to_real_coordinates(p)
    total = XPoly.zero()
    for k in range(4):
        total = total + q.partial(k).partial(k)
    return from_real_coordinates(total)


def real_dalembert(p: Poly) -> Poly:
    """d0^2 - d1^2 - d2^2 - d3^2 for signature (+ - - -)."""
    q = to_real_coordinates(p)
    total = q.partial(0).partial(0)
    for k in (1, 2, 3):
        total = total - q.partial(k).partial(k)
    return from_real_coordinates(total)
