from formwell.core.forms.form import Form
from formwell.core.hodge.metric import Metric
from formwell.core.hodge.operators import eigenvalue, require_two_form, star
from formwell.core.models.models import DualityClass


def duality_class(F: Form, m: Metric) -> DualityClass:
    """star F = lam F (SelfDual) or -lam F (AntiSelfDual), lam = 1 or i by metric."""
    require_two_form(F)
    if F.is_zero:
        return DualityClass.BOTH
    starred = star(F, m)
    scaled = F.scale(eigenvalue(m))
    if starred == scaled:
        return DualityClass.SELF_DUAL
    if starred == -scaled:
        return DualityClass.ANTI_SELF_DUAL
    return DualityClass.NEITHER
