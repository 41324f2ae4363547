"""
Finite-difference oracle for the symbolic Wirtinger calculus.

The sample points are floats, but each difference quotient is formed from
exact evaluations at the (exactly representable) shifted points, so the
only error left is truncation.
"""

from fractions import Fraction
from typing import Callable, NamedTuple, Sequence, Tuple

import numpy as np

from formwell.config.config import FD_ATOL, FD_RTOL, FD_STEP, LAPLACE_ATOL, LAPLACE_RTOL, LAPLACE_STEP
from formwell.core.errors import NonFiniteResult
from formwell.core.poly.operators import ComplexPoint, dalembert, laplace4
from formwell.core.poly.poly import Poly, Var
from formwell.core.scalar import GaussianRational


class RealPoint(NamedTuple):
    x0: float
    x1: float
    x2: float
    x3: float

    def to_complex_point(self) -> ComplexPoint:
        return ComplexPoint.from_real(*self)

    def exact(self) -> Tuple[Fraction, ...]:
        if not np.all(np.isfinite(self)):
            raise NonFiniteResult(f"point {tuple(self)} is not finite")
        return tuple(Fraction(x) for x in self)


def _slot_values(x: Sequence[Fraction]) -> Tuple[GaussianRational, ...]:
    z1, z2 = GaussianRational(x[0], x[1]), GaussianRational(x[2], x[3])
    return (z1, z1.conjugate(), z2, z2.conjugate())


def _shifted(x: Sequence[Fraction], k: int, delta: Fraction) -> Tuple[Fraction, ...]:
    out = list(x)
    out[k] += delta
    return tuple(out)


def _finite(value: GaussianRational) -> complex:
    try:
        result = value.to_complex()
    except OverflowError as exc:
        raise NonFiniteResult("value does not fit a float") from exc
    if not np.isfinite(result):
        raise NonFiniteResult("value is not finite")
    return result


def _step(h: float) -> Fraction:
    if not (np.isfinite(h) and h > 0):
        raise ValueError(f"step must be a positive finite number, got {h}")
    return Fraction(h)


def fd_partial(p: Poly, k: int, at: RealPoint, h: float = FD_STEP) -> complex:
    """Central difference of p along x_k."""
    if not 0 <= k <= 3:
        raise ValueError(f"coordinate index {k} outside 0..3")
    step, x = _step(h), at.exact()
    forward = p.evaluate_exact(_slot_values(_shifted(x, k, step)))
    backward = p.evaluate_exact(_slot_values(_shifted(x, k, -step)))
    return _finite((forward - backward) / (2 * step))


def _second_difference(p: Poly, at: RealPoint, h: float, signs: Sequence[int]) -> complex:
    step, x = _step(h), at.exact()
    center = p.evaluate_exact(_slot_values(x))
    total = GaussianRational(0)
    for k, sign in enumerate(signs):
        forward = p.evaluate_exact(_slot_values(_shifted(x, k, step)))
        backward = p.evaluate_exact(_slot_values(_shifted(x, k, -step)))
        total = total + (forward - 2 * center + backward) * sign
    return _finite(total / (step * step))


def fd_laplacian(p: Poly, at: RealPoint, h: float = LAPLACE_STEP) -> complex:
    return _second_difference(p, at, h, (1, 1, 1, 1))


def fd_dalembert(p: Poly, at: RealPoint, h: float = LAPLACE_STEP) -> complex:
    return _second_difference(p, at, h, (1, -1, -1, -1))


def check_wirtinger(
    p: Poly, at: RealPoint, h: float = FD_STEP, rtol: float = FD_RTOL, atol: float = FD_ATOL
) -> bool:
    """Compare the four symbolic Wirtinger derivatives with central differences."""
    d = [fd_partial(p, k, at, h) for k in range(4)]
    numeric = {
        Var.Z1: 0.5 * (d[0] - 1j * d[1]),
        Var.ZB1: 0.5 * (d[0] + 1j * d[1]),
        Var.Z2: 0.5 * (d[2] - 1j * d[3]),
        Var.ZB2: 0.5 * (d[2] + 1j * d[3]),
    }
    point = at.to_complex_point()
    for var, approx in numeric.items():
        exact = p.partial(var).evaluate(point.slot_values())
        if not np.isclose(approx, exact, rtol=rtol, atol=atol):
            return False
    return True


def _check_second_order(
    p: Poly, at: RealPoint, symbolic: Callable[[Poly], Poly], numeric: Callable[..., complex], h, rtol, atol
) -> bool:
    exact = symbolic(p).evaluate(at.to_complex_point().slot_values())
    return bool(np.isclose(numeric(p, at, h), exact, rtol=rtol, atol=atol))


def check_laplacian(
    p: Poly, at: RealPoint, h: float = LAPLACE_STEP, rtol: float = LAPLACE_RTOL, atol: float = LAPLACE_ATOL
) -> bool:
    return _check_second_order(p, at, laplace4, fd_laplacian, h, rtol, atol)


def check_dalembert(
    p: Poly, at: RealPoint, h: float = LAPLACE_STEP, rtol: float = LAPLACE_RTOL, atol: float = LAPLACE_ATOL
) -> bool:
    return _check_second_order(p, at, dalembert, fd_dalembert, h, rtol, atol)
