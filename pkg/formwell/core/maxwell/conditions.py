"""
Scalar criteria on a potential: the vacuum conditions for each metric, the
Lorenz gauge value d*omega, and the harmonic / wavelike predicates.
"""

from enum import Enum
from typing import NamedTuple, Optional

from formwell.core.errors import InvariantViolation, NotConstantLorenz, NotHolomorphicCase
from formwell.core.hodge.metric import Metric
from formwell.core.hodge.operators import codiff, hodge_laplacian
from formwell.core.maxwell.potential import Potential, gauge_transform
from formwell.core.models.models import MetricKind
from formwell.core.poly.operators import dalembert, is_constant, laplace4
from formwell.core.poly.poly import Poly, Var
from formwell.core.scalar import GaussianRational
from formwell.utils.logger import logger


class ConditionResult(NamedTuple):
    sum: Poly
    constant: Optional[GaussianRational]


class MinkowskiCondition(NamedTuple):
    sum: Poly
    constant: Optional[GaussianRational]
    wavelike: bool


class HoloCondition(NamedTuple):
    q: Poly
    z1_independent: bool


def condition_euclid(w: Potential) -> ConditionResult:
    """S_E = db1 f1 + db2 f2 + d1 fb1 + d2 fb2."""
    s = w.f1.partial(Var.ZB1) + w.f2.partial(Var.ZB2) + w.fb1.partial(Var.Z1) + w.fb2.partial(Var.Z2)
    return ConditionResult(s, is_constant(s))


def condition_mink(w: Potential) -> MinkowskiCondition:
    """S_M = d1 f1 - db2 f2 + db1 fb1 - d2 fb2."""
    s = w.f1.partial(Var.Z1) - w.f2.partial(Var.ZB2) + w.fb1.partial(Var.ZB1) - w.fb2.partial(Var.Z2)
    return MinkowskiCondition(s, is_constant(s), wavelike_potential(w))


def condition_for(w: Potential, m: Metric) -> ConditionResult:
    if m.kind is MetricKind.EUCLIDEAN:
        return condition_euclid(w)
    s, constant, _ = condition_mink(w)
    return ConditionResult(s, constant)


def harmonic_potential(w: Potential) -> bool:
    return all(not laplace4(p) for p in w.functions)


def wavelike_potential(w: Potential) -> bool:
    return all(not dalembert(p) for p in w.functions)


def is_real_potential(w: Potential) -> bool:
    return w.fb1 == w.f1.conjugate() and w.fb2 == w.f2.conjugate()


def holo_condition(w: Potential) -> HoloCondition:
    """
    Minkowski criterion for holomorphic f1, f2 with fb_j = conj(f_j).

    Returns:
        HoloCondition: q = d2 f1 - d1 f2 and whether q is free of z1 and zb1.

    Raises:
        NotHolomorphicCase: if the potential is outside this class.
    """
    for name, p in (("f1", w.f1), ("f2", w.f2)):
        if p.uses(Var.ZB1) or p.uses(Var.ZB2):
            raise NotHolomorphicCase(f"{name} = {p} is not holomorphic")
    if not is_real_potential(w):
        raise NotHolomorphicCase("fb1, fb2 must be the conjugates of f1, f2")
    q = w.f1.partial(Var.Z2) - w.f2.partial(Var.Z1)
    return HoloCondition(q, not q.partial(Var.Z1) and not q.partial(Var.ZB1))


def lorenz(w: Potential, m: Metric) -> ConditionResult:
    """d*omega and its value when constant."""
    value = codiff(w.to_form(), m).coefficient()
    return ConditionResult(value, is_constant(value))


def is_hl_harmonic(w: Potential, m: Metric) -> bool:
    return hodge_laplacian(w.to_form(), m).is_zero


class LorenzShift(str, Enum):
    GAUGE = "gauge"
    F1 = "f1"


# quadratic u with constant d*(du); adding du leaves the curvature alone
_GAUGE_FUNCTION = {
    MetricKind.EUCLIDEAN: Poly.var(Var.Z1) * Poly.var(Var.ZB1),
    MetricKind.MINKOWSKI: Poly.var(Var.Z1) ** 2,
}

# adding c * t to f1 shifts d*omega by c * lorenz(t dz1)
_ADJUSTING_TERM = {
    MetricKind.EUCLIDEAN: Poly.var(Var.ZB1),
    MetricKind.MINKOWSKI: Poly.var(Var.Z1),
}


def lorenz_normalize(w: Potential, m: Metric, shift: LorenzShift = LorenzShift.GAUGE) -> Potential:
    """
    Make a constant d*omega zero.

    LorenzShift.GAUGE adds du for u a multiple of z1*zb1 (Euclidean) or z1^2
    (Minkowski), so the curvature is unchanged. LorenzShift.F1 only touches
    f1, adding a multiple of zb1 or z1; on Minkowski this is the same du, on
    Euclidean F11b moves by the constant -k/2.

    Raises:
        NotConstantLorenz: if d*omega is not constant.
    """
    value, k = lorenz(w, m)
    if k is None:
        raise NotConstantLorenz(f"d*omega = {value} is not constant")
    if not k:
        return w
    if LorenzShift(shift) is LorenzShift.GAUGE:
        u = _GAUGE_FUNCTION[m.kind]
        unit = lorenz(gauge_transform(Potential(), u), m).constant
        normalized = gauge_transform(w, u.scale(-k / unit))
        logger.debug("Lorenz normalization on %s: u = %s", m.kind.value, u.scale(-k / unit))
    else:
        term = _ADJUSTING_TERM[m.kind]
        unit = lorenz(Potential(f1=term), m).constant
        normalized = w.model_copy(update={"f1": w.f1 + term.scale(-k / unit)})
        logger.debug("Lorenz normalization on %s: f1 += %s", m.kind.value, term.scale(-k / unit))
    after = lorenz(normalized, m).sum
    if after:
        raise InvariantViolation(f"normalized potential still has d*omega = {after}")
    return normalized
