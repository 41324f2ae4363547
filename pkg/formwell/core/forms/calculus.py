from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from formwell.core.forms.form import ExteriorForm, Form, Gen, RealForm, RealGen
from formwell.core.poly.poly import Poly, Var
from formwell.core.scalar import GaussianRational

_I = GaussianRational(0, 1)
_HALF = GaussianRational(Fraction(1, 2))
_HALF_I = GaussianRational(0, Fraction(1, 2))


class Dolbeault(str, Enum):
    HOLO = "holo"
    ANTI = "anti"


def wedge(a: ExteriorForm, b: ExteriorForm) -> ExteriorForm:
    return a.wedge(b)


def grade(f: ExteriorForm, k: int) -> ExteriorForm:
    if not 0 <= k <= 4:
        raise ValueError(f"degree {k} outside 0..4")
    return f.grade(k)


def _differentiate(f: Form, variables: Iterable[Var]) -> Form:
    variables = tuple(variables)
    terms: List[Tuple[tuple, Poly]] = []
    for index, poly in f.items():
        for v in variables:
            dp = poly.partial(v)
            if dp:
                terms.append(((Gen.of(v),) + index, dp))
    return Form.from_terms(terms)


def ext_d(f: Form) -> Form:
    return _differentiate(f, (Var.Z1, Var.Z2, Var.ZB1, Var.ZB2))


def dolbeault(f: Form, which: Dolbeault) -> Form:
    if Dolbeault(which) is Dolbeault.HOLO:
        return _differentiate(f, (Var.Z1, Var.Z2))
    return _differentiate(f, (Var.ZB1, Var.ZB2))


def _substitute_generators(f: ExteriorForm, images: Dict[int, ExteriorForm], target: type) -> ExteriorForm:
    result = target.zero()
    for index, poly in f.items():
        term = target.scalar(poly)
        for g in index:
            term = term.wedge(images[int(g)])
        result = result + term
    return result


# dz1 = dx0 + i dx1, dz2 = dx2 + i dx3, dzb1 = dx0 - i dx1, dzb2 = dx2 - i dx3
_DZ_IN_DX: Dict[int, RealForm] = {
    Gen.DZ1: RealForm({(RealGen.DX0,): 1, (RealGen.DX1,): _I}),
    Gen.DZ2: RealForm({(RealGen.DX2,): 1, (RealGen.DX3,): _I}),
    Gen.DZB1: RealForm({(RealGen.DX0,): 1, (RealGen.DX1,): -_I}),
    Gen.DZB2: RealForm({(RealGen.DX2,): 1, (RealGen.DX3,): -_I}),
}

_DX_IN_DZ: Dict[int, Form] = {
    RealGen.DX0: Form({(Gen.DZ1,): _HALF, (Gen.DZB1,): _HALF}),
    RealGen.DX1: Form({(Gen.DZ1,): -_HALF_I, (Gen.DZB1,): _HALF_I}),
    RealGen.DX2: Form({(Gen.DZ2,): _HALF, (Gen.DZB2,): _HALF}),
    RealGen.DX3: Form({(Gen.DZ2,): -_HALF_I, (Gen.DZB2,): _HALF_I}),
}


def to_real(f: Form) -> RealForm:
    return _substitute_generators(f, _DZ_IN_DX, RealForm)  # type: ignore[return-value]


def to_complex(f: RealForm) -> Form:
    return _substitute_generators(f, _DX_IN_DZ, Form)  # type: ignore[return-value]


def real_partial(p: Poly, k: int) -> Poly:
    """d/dx_k of a z-polynomial by the chain rule."""
    holo, anti = ((Var.Z1, Var.ZB1), (Var.Z1, Var.ZB1), (Var.Z2, Var.ZB2), (Var.Z2, Var.ZB2))[k]
    dh, da = p.partial(holo), p.partial(anti)
    if k % 2 == 0:
        return dh + da
    return (dh - da).scale(_I)


def ext_d_real(f: RealForm) -> RealForm:
    terms: List[Tuple[tuple, Poly]] = []
    for index, poly in f.items():
        for k in range(4):
            dp = real_partial(poly, k)
            if dp:
                terms.append(((RealGen(k),) + index, dp))
    return RealForm.from_terms(terms)
