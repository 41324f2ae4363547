from formwell.core.poly.operators import (
    ComplexPoint,
    PolyOp,
    conjugate,
    dalembert,
    is_constant,
    laplace4,
    poly_arith,
    poly_eval,
    wirtinger,
)
from formwell.core.poly.poly import Monomial, Poly, PolyLike, Var, as_poly, poly_sum, z1, z2, zb1, zb2
from formwell.core.poly.real_coords import (
    XPoly,
    from_real_coordinates,
    real_dalembert,
    real_laplacian,
    to_real_coordinates,
)

__all__ = [
    "ComplexPoint",
    "Monomial",
    "Poly",
    "PolyLike",
    "PolyOp",
    "Var",
    "XPoly",
    "as_poly",
    "conjugate",
    "dalembert",
    "from_real_coordinates",
    "is_constant",
    "laplace4",
    "poly_arith",
    "poly_eval",
    "poly_sum",
    "real_dalembert",
    "real_laplacian",
    "to_real_coordinates",
    "wirtinger",
    "z1",
    "z2",
    "zb1",
    "zb2",
]
