"""
Seeded random forms and potentials.

The harmonic and wavelike potential families come in two modes: with
`constant=True` the metric's condition sum is constant by construction,
otherwise a term is added that makes it nonconstant.
"""

import numpy as np

from formwell.core.errors import InvariantViolation
from formwell.core.forms.form import Form, all_basis_indices
from formwell.core.maxwell.conditions import (
    condition_euclid,
    condition_mink,
    harmonic_potential,
    wavelike_potential,
)
from formwell.core.maxwell.potential import Potential
from formwell.core.poly.generators import (
    ANTIHOLOMORPHIC_SLOTS,
    HOLOMORPHIC_SLOTS,
    random_harmonic,
    random_poly,
    random_scalar,
    random_wavelike,
)
from formwell.core.poly.poly import Poly, Var


def _mono(e1: int = 0, eb1: int = 0, e2: int = 0, eb2: int = 0) -> Poly:
    return Poly({(e1, eb1, e2, eb2): 1})


def random_form(rng: np.random.Generator, max_degree: int = 3, max_terms: int = 4, degree: int = -1) -> Form:
    """Random form; `degree` >= 0 restricts to homogeneous forms of that degree."""
    pool = [i for i in all_basis_indices() if degree < 0 or len(i) == degree]
    terms = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        index = pool[int(rng.integers(len(pool)))]
        terms.append((index, random_poly(rng, max_degree)))
    return Form.from_terms(terms)


def random_potential(rng: np.random.Generator, max_degree: int = 3, max_terms: int = 4) -> Potential:
    return Potential(
        f1=random_poly(rng, max_degree, max_terms),
        f2=random_poly(rng, max_degree, max_terms),
        fb1=random_poly(rng, max_degree, max_terms),
        fb2=random_poly(rng, max_degree, max_terms),
    )


def random_real_potential(rng: np.random.Generator, max_degree: int = 3, max_terms: int = 4) -> Potential:
    f1, f2 = random_poly(rng, max_degree, max_terms), random_poly(rng, max_degree, max_terms)
    return Potential(f1=f1, f2=f2, fb1=f1.conjugate(), fb2=f2.conjugate())


def random_holomorphic_potential(rng: np.random.Generator, max_degree: int = 3) -> Potential:
    """f1, f2 holomorphic and fb1, fb2 antiholomorphic, drawn independently."""
    return Potential(
        f1=random_poly(rng, max_degree, slots=HOLOMORPHIC_SLOTS),
        f2=random_poly(rng, max_degree, slots=HOLOMORPHIC_SLOTS),
        fb1=random_poly(rng, max_degree, slots=ANTIHOLOMORPHIC_SLOTS),
        fb2=random_poly(rng, max_degree, slots=ANTIHOLOMORPHIC_SLOTS),
    )


def random_harmonic_potential(rng: np.random.Generator, constant: bool, max_degree: int = 3) -> Potential:
    if constant:
        def holo() -> Poly:
            return random_poly(rng, max_degree, slots=HOLOMORPHIC_SLOTS)

        def anti() -> Poly:
            return random_poly(rng, max_degree, slots=ANTIHOLOMORPHIC_SLOTS)

        c = [random_scalar(rng) for _ in range(6)]
        w = Potential(
            f1=holo() + _mono(eb1=1).scale(c[0]) + _mono(e1=1, eb2=1).scale(c[4]),
            f2=holo() + _mono(eb2=1).scale(c[1]) + _mono(eb1=1, e2=1).scale(c[5]),
            fb1=anti() + _mono(e1=1).scale(c[2]),
            fb2=anti() + _mono(e2=1).scale(c[3]),
        )
    else:
        w = Potential(
            f1=random_harmonic(rng, max_degree),
            f2=random_harmonic(rng, max_degree),
            fb1=random_harmonic(rng, max_degree) + _mono(e1=4),
            fb2=random_harmonic(rng, max_degree),
        )
    if not harmonic_potential(w) or (condition_euclid(w).constant is not None) != constant:
        raise InvariantViolation(f"harmonic generator produced an off-family potential {w}")
    return w


def random_wavelike_potential(rng: np.random.Generator, constant: bool, max_degree: int = 3) -> Potential:
    if constant:
        lower = max(max_degree - 1, 0)

        def uni(var: Var, degree: int = max_degree) -> Poly:
            return random_poly(rng, degree, max_terms=2, slots=(var,))

        z1, zb1 = _mono(e1=1), _mono(eb1=1)
        c = [random_scalar(rng) for _ in range(5)]
        w = Potential(
            f1=uni(Var.Z2) + uni(Var.ZB2) + zb1 * uni(Var.ZB2, lower) + z1.scale(c[0]),
            f2=uni(Var.Z2) + z1 * uni(Var.Z2, lower) + _mono(eb2=1).scale(c[1]) + zb1.scale(c[4]),
            fb1=uni(Var.Z2) + uni(Var.ZB2) + z1 * uni(Var.Z2, lower) + zb1.scale(c[2]),
            fb2=uni(Var.ZB2) + zb1 * uni(Var.ZB2, lower) + _mono(e2=1).scale(c[3]) + z1.scale(c[4]),
        )
    else:
        w = Potential(
            f1=random_wavelike(rng, max_degree) + _mono(e1=1, eb1=1, e2=3),
            f2=random_wavelike(rng, max_degree),
            fb1=random_wavelike(rng, max_degree),
            fb2=random_wavelike(rng, max_degree),
        )
    if not wavelike_potential(w) or (condition_mink(w).constant is not None) != constant:
        raise InvariantViolation(f"wavelike generator produced an off-family potential {w}")
    return w
