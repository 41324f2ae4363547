from enum import Enum
from typing import NamedTuple, Optional

from formwell.core.poly.poly import Poly, Var
from formwell.core.scalar import GaussianRational


class PolyOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


class ComplexPoint(NamedTuple):
    """A point of C^2; the barred symbols evaluate to the conjugates."""

    z1: complex
    z2: complex

    @classmethod
    def from_real(cls, x0: float, x1: float, x2: float, x3: float) -> "ComplexPoint":
        return cls(complex(x0, x1), complex(x2, x3))

    def slot_values(self):
        return (self.z1, self.z1.conjugate(), self.z2, self.z2.conjugate())


def poly_arith(p: Poly, q: Poly, op: PolyOp) -> Poly:
    op = PolyOp(op)
    if op is PolyOp.ADD:
        return p + q
    if op is PolyOp.SUB:
        return p - q
    return p * q


def wirtinger(p: Poly, v: Var) -> Poly:
    return p.partial(Var(v))


def conjugate(p: Poly) -> Poly:
    return p.conjugate()


def is_constant(p: Poly) -> Optional[GaussianRational]:
    return p.constant_value()


def laplace4(p: Poly) -> Poly:
    """4(d1 db1 + d2 db2)."""
    return (p.partial(Var.Z1).partial(Var.ZB1) + p.partial(Var.Z2).partial(Var.ZB2)).scale(4)


def dalembert(p: Poly) -> Poly:
    """2(d1^2 + db1^2 - 2 d2 db2)."""
    d11 = p.partial(Var.Z1).partial(Var.Z1)
    db11 = p.partial(Var.ZB1).partial(Var.ZB1)
    d22b = p.partial(Var.Z2).partial(Var.ZB2)
    return (d11 + db11 - d22b.scale(2)).scale(2)


def poly_eval(p: Poly, at: ComplexPoint) -> complex:
    return p.evaluate(at.slot_values())
