"""
The Faraday 2-form of a potential and the field quantities read from it.

E and B come from the real-basis expansion

    F = -dx0/\\(E1 dx1 + E2 dx2 + E3 dx3) - B1 dx2/\\dx3 + B2 dx1/\\dx3 - B3 dx1/\\dx2

and are cross-checked against the closed form in the complex components.
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict

from formwell.core.errors import InvariantViolation
from formwell.core.forms.calculus import ext_d, to_real
from formwell.core.forms.form import Form, Gen, RealGen
from formwell.core.hodge.operators import require_two_form
from formwell.core.maxwell.potential import Potential
from formwell.core.poly.operators import dalembert
from formwell.core.poly.poly import Poly, poly_sum
from formwell.core.scalar import GaussianRational

_I = GaussianRational(0, 1)
_FROZEN = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def _norm2(p: Poly) -> Poly:
    return p * p.conjugate()


class FaradayComponents(BaseModel):
    """Coefficients of F on the six complex basis 2-forms."""

    model_config = _FROZEN

    F12: Poly
    F1b2b: Poly
    F11b: Poly
    F22b: Poly
    F12b: Poly
    F21b: Poly

    def as_tuple(self) -> Tuple[Poly, ...]:
        return (self.F12, self.F1b2b, self.F11b, self.F22b, self.F12b, self.F21b)

    def to_form(self) -> Form:
        DZ1, DZ2, DZB1, DZB2 = Gen.DZ1, Gen.DZ2, Gen.DZB1, Gen.DZB2
        return Form(
            {
                (DZ1, DZ2): self.F12,
                (DZB1, DZB2): self.F1b2b,
                (DZ1, DZB1): self.F11b,
                (DZ2, DZB2): self.F22b,
                (DZ1, DZB2): self.F12b,
                (DZ2, DZB1): self.F21b,
            }
        )

    @classmethod
    def from_potential(cls, w: Potential) -> "FaradayComponents":
        """Component formulas in terms of the Wirtinger derivatives of w."""
        d = Poly.partial
        Z1, ZB1, Z2, ZB2 = 0, 1, 2, 3
        return cls(
            F12=d(w.f2, Z1) - d(w.f1, Z2),
            F1b2b=d(w.fb2, ZB1) - d(w.fb1, ZB2),
            F11b=d(w.fb1, Z1) - d(w.f1, ZB1),
            F22b=d(w.fb2, Z2) - d(w.f2, ZB2),
            F12b=d(w.fb2, Z1) - d(w.f1, ZB2),
            F21b=d(w.fb1, Z2) - d(w.f2, ZB1),
        )


class EBFields(BaseModel):
    model_config = _FROZEN

    E1: Poly
    E2: Poly
    E3: Poly
    B1: Poly
    B2: Poly
    B3: Poly

    @property
    def E(self) -> Tuple[Poly, Poly, Poly]:
        return (self.E1, self.E2, self.E3)

    @property
    def B(self) -> Tuple[Poly, Poly, Poly]:
        return (self.B1, self.B2, self.B3)


def curvature(w: Potential) -> Form:
    return ext_d(w.to_form())


def faraday_components(F: Form) -> FaradayComponents:
    require_two_form(F)
    c = F.coefficient
    DZ1, DZ2, DZB1, DZB2 = Gen.DZ1, Gen.DZ2, Gen.DZB1, Gen.DZB2
    return FaradayComponents(
        F12=c(DZ1, DZ2),
        F1b2b=c(DZB1, DZB2),
        F11b=c(DZ1, DZB1),
        F22b=c(DZ2, DZB2),
        F12b=c(DZ1, DZB2),
        F21b=c(DZ2, DZB1),
    )


def eb_closed_form(c: FaradayComponents) -> EBFields:
    return EBFields(
        E1=c.F11b.scale(2 * _I),
        E2=-(c.F12 + c.F1b2b + c.F12b - c.F21b),
        E3=(c.F12 - c.F1b2b - c.F12b - c.F21b).scale(-_I),
        B1=c.F22b.scale(2 * _I),
        B2=-c.F12 - c.F1b2b + c.F12b - c.F21b,
        B3=(c.F12 - c.F1b2b + c.F12b + c.F21b).scale(-_I),
    )


def eb_fields(F: Form) -> EBFields:
    require_two_form(F)
    real = to_real(F).coefficient
    X0, X1, X2, X3 = RealGen.DX0, RealGen.DX1, RealGen.DX2, RealGen.DX3
    fields = EBFields(
        E1=-real(X0, X1),
        E2=-real(X0, X2),
        E3=-real(X0, X3),
        B1=-real(X2, X3),
        B2=real(X1, X3),
        B3=-real(X1, X2),
    )
    expected = eb_closed_form(faraday_components(F))
    if fields != expected:
        raise InvariantViolation(f"real-basis fields {fields} disagree with the component formulas {expected}")
    return fields


def eb_inner(F: Form) -> Poly:
    """<E, B> = sum E_k conj(B_k), written in the complex components."""
    c = faraday_components(F)
    first = c.F11b * c.F22b.conjugate()
    second = (c.F12 - c.F21b) * (c.F12 + c.F21b).conjugate()
    third = (c.F1b2b + c.F12b) * (c.F1b2b - c.F12b).conjugate()
    return first.scale(4) + (second + third).scale(2)


def energy(F: Form) -> Poly:
    """(|E|^2 + |B|^2) / 2 = 2 sum |F_IJ|^2."""
    return poly_sum(_norm2(p) for p in faraday_components(F).as_tuple()).scale(2)


def wavelike_field(F: Form) -> bool:
    return all(not dalembert(p) for p in faraday_components(F).as_tuple())
