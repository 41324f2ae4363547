from formwell.core.forms.calculus import (
    Dolbeault,
    dolbeault,
    ext_d,
    ext_d_real,
    grade,
    real_partial,
    to_complex,
    to_real,
    wedge,
)
from formwell.core.forms.form import (
    DZ_FULL,
    GEN_NAMES,
    BasisIndex,
    ExteriorForm,
    Form,
    Gen,
    RealForm,
    RealGen,
    all_basis_indices,
    sort_with_sign,
)

__all__ = [
    "BasisIndex",
    "DZ_FULL",
    "Dolbeault",
    "ExteriorForm",
    "Form",
    "GEN_NAMES",
    "Gen",
    "RealForm",
    "RealGen",
    "all_basis_indices",
    "dolbeault",
    "ext_d",
    "ext_d_real",
    "grade",
    "real_partial",
    "sort_with_sign",
    "to_complex",
    "to_real",
    "wedge",
]
