from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from formwell.core.errors import InvariantViolation
from formwell.core.forms.calculus import ext_d
from formwell.core.forms.form import ExteriorForm, Form, Gen
from formwell.core.hodge.metric import Metric
from formwell.core.hodge.operators import star
from formwell.core.maxwell.conditions import condition_for, harmonic_potential, lorenz, wavelike_potential
from formwell.core.maxwell.duality import duality_class
from formwell.core.maxwell.fields import EBFields, curvature, eb_fields, eb_inner, energy, wavelike_field
from formwell.core.maxwell.potential import Potential
from formwell.core.models.models import (
    DualityClass,
    FormTerm,
    MetricKind,
    TableDiscrepancy,
    VerificationReportOutput,
)
from formwell.core.poly.poly import Poly
from formwell.core.scalar import GaussianRational
from formwell.utils.logger import logger

_I = GaussianRational(0, 1)


class CurrentForm(BaseModel):
    """J = star d star F, as complex coefficients and as real components."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    P1: Poly
    Pb1: Poly
    P2: Poly
    Pb2: Poly
    rho: Poly
    J1: Poly
    J2: Poly
    J3: Poly

    @property
    def is_zero(self) -> bool:
        return not (self.P1 or self.Pb1 or self.P2 or self.Pb2)


def current(w: Potential, m: Metric) -> CurrentForm:
    j = star(ext_d(star(curvature(w), m)), m)
    P1, P2 = j.coefficient(Gen.DZ1), j.coefficient(Gen.DZ2)
    Pb1, Pb2 = j.coefficient(Gen.DZB1), j.coefficient(Gen.DZB2)
    return CurrentForm(
        P1=P1,
        Pb1=Pb1,
        P2=P2,
        Pb2=Pb2,
        rho=P1 + Pb1,
        J1=(P1 - Pb1).scale(_I),
        J2=P2 + Pb2,
        J3=(P2 - Pb2).scale(_I),
    )


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    metric: MetricKind
    F: Form
    dF: Form
    dstarF: Form
    is_vacuum_solution: bool
    duality: DualityClass
    condition_sum: Poly
    condition_constant: Optional[GaussianRational]
    lorenz_value: Poly
    wavelike_potential: bool
    harmonic_potential: bool
    wavelike_field: bool
    eb: EBFields
    eb_inner: Poly
    energy: Poly
    table_discrepancies: List[TableDiscrepancy]


def form_terms(f: ExteriorForm) -> List[FormTerm]:
    return [FormTerm(basis=f.index_label(index), coeff=poly.render()) for index, poly in f.items()]


def verify_vacuum(w: Potential, m: Metric) -> VerificationReport:
    """
    Evaluate every vacuum criterion for the potential under metric `m`.

    Raises:
        InvariantViolation: if dF does not vanish, which would mean d^2 != 0.
    """
    F = curvature(w)
    dF = ext_d(F)
    if dF:
        raise InvariantViolation(f"dF = {dF} is not zero")
    dstarF = ext_d(star(F, m))
    condition = condition_for(w, m)
    lorenz_value, _ = lorenz(w, m)
    report = VerificationReport(
        metric=m.kind,
        F=F,
        dF=dF,
        dstarF=dstarF,
        is_vacuum_solution=dstarF.is_zero,
        duality=duality_class(F, m),
        condition_sum=condition.sum,
        condition_constant=condition.constant,
        lorenz_value=lorenz_value,
        wavelike_potential=wavelike_potential(w),
        harmonic_potential=harmonic_potential(w),
        wavelike_field=wavelike_field(F),
        eb=eb_fields(F),
        eb_inner=eb_inner(F),
        energy=energy(F),
        table_discrepancies=list(m.discrepancies),
    )
    logger.debug(
        "verify %s: vacuum=%s duality=%s condition=%s",
        m.kind.value,
        report.is_vacuum_solution,
        report.duality.value,
        condition.sum,
    )
    return report


def to_output(report: VerificationReport) -> VerificationReportOutput:
    constant = report.condition_constant
    return VerificationReportOutput(
        metric=report.metric,
        is_vacuum_solution=report.is_vacuum_solution,
        duality=report.duality,
        condition_sum=report.condition_sum.render(),
        condition_constant=None if constant is None else Poly.constant(constant).render(),
        lorenz=report.lorenz_value.render(),
        wavelike_potential=report.wavelike_potential,
        harmonic_potential=report.harmonic_potential,
        wavelike_field=report.wavelike_field,
        E=[p.render() for p in report.eb.E],
        B=[p.render() for p in report.eb.B],
        eb_inner=report.eb_inner.render(),
        energy=report.energy.render(),
        d_star_F=form_terms(report.dstarF),
        table_discrepancies=report.table_discrepancies,
    )
