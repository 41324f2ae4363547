from formwell.core.maxwell.conditions import (
    ConditionResult,
    HoloCondition,
    LorenzShift,
    MinkowskiCondition,
    condition_euclid,
    condition_for,
    condition_mink,
    harmonic_potential,
    holo_condition,
    is_hl_harmonic,
    is_real_potential,
    lorenz,
    lorenz_normalize,
    wavelike_potential,
)
from formwell.core.maxwell.duality import duality_class
from formwell.core.maxwell.fields import (
    EBFields,
    FaradayComponents,
    curvature,
    eb_closed_form,
    eb_fields,
    eb_inner,
    energy,
    faraday_components,
    wavelike_field,
)
from formwell.core.maxwell.potential import Potential, gauge_transform
from formwell.core.maxwell.verify import CurrentForm, VerificationReport, current, form_terms, to_output, verify_vacuum

__all__ = [
    "ConditionResult",
    "CurrentForm",
    "EBFields",
    "FaradayComponents",
    "HoloCondition",
    "LorenzShift",
    "MinkowskiCondition",
    "Potential",
    "VerificationReport",
    "condition_euclid",
    "condition_for",
    "condition_mink",
    "curvature",
    "current",
    "duality_class",
    "eb_closed_form",
    "eb_fields",
    "eb_inner",
    "energy",
    "faraday_components",
    "form_terms",
    "gauge_transform",
    "harmonic_potential",
    "holo_condition",
    "is_hl_harmonic",
    "is_real_potential",
    "lorenz",
    "lorenz_normalize",
    "to_output",
    "verify_vacuum",
    "wavelike_field",
    "wavelike_potential",
]
