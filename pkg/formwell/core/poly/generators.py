"""
Seeded random builders for property tests.

Coefficients are drawn from {-3..3} and +-1/2 (real or Gaussian). The
harmonic and wavelike families are checked against their operator at
generation time.
"""

from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from formwell.core.errors import InvariantViolation
from formwell.core.poly.operators import dalembert, laplace4
from formwell.core.poly.poly import Monomial, Poly, Var
from formwell.core.scalar import GaussianRational

COEFF_POOL: List[Fraction] = [Fraction(k) for k in range(-3, 4)] + [Fraction(1, 2), Fraction(-1, 2)]
NONZERO_POOL: List[Fraction] = [c for c in COEFF_POOL if c]

ALL_SLOTS = (Var.Z1, Var.ZB1, Var.Z2, Var.ZB2)
HOLOMORPHIC_SLOTS = (Var.Z1, Var.Z2)
ANTIHOLOMORPHIC_SLOTS = (Var.ZB1, Var.ZB2)


def random_scalar(rng: np.random.Generator, gaussian: bool = True, nonzero: bool = False) -> GaussianRational:
    pool = NONZERO_POOL if nonzero else COEFF_POOL
    re = pool[int(rng.integers(len(pool)))]
    im = Fraction(0)
    if gaussian and rng.random() < 0.5:
        im = COEFF_POOL[int(rng.integers(len(COEFF_POOL)))]
    return GaussianRational(re, im)


def random_monomial(rng: np.random.Generator, max_degree: int, slots: Sequence[Var] = ALL_SLOTS) -> Monomial:
    exps = [0, 0, 0, 0]
    for _ in range(int(rng.integers(0, max_degree + 1))):
        exps[int(slots[int(rng.integers(len(slots)))])] += 1
    return Monomial(*exps)


def random_poly(
    rng: np.random.Generator,
    max_degree: int = 3,
    max_terms: int = 4,
    slots: Sequence[Var] = ALL_SLOTS,
    gaussian: bool = True,
) -> Poly:
    terms = {}
    for _ in range(int(rng.integers(0, max_terms + 1))):
        mono = random_monomial(rng, max_degree, slots)
        terms[mono] = terms.get(mono, GaussianRational(0)) + random_scalar(rng, gaussian, nonzero=True)
    return Poly(terms)


def _checked(p: Poly, operator, family: str) -> Poly:
    if operator(p):
        raise InvariantViolation(f"generated {family} polynomial {p} is not annihilated")
    return p


def _univariate(rng: np.random.Generator, slot: Var, max_degree: int) -> Poly:
    return random_poly(rng, max_degree, max_terms=2, slots=(slot,))


def random_harmonic(rng: np.random.Generator, max_degree: int = 3) -> Poly:
    """Holomorphic + antiholomorphic + multiples of z1 zb2, z2 zb1, z1 zb1 - z2 zb2."""
    p = random_poly(rng, max_degree, slots=HOLOMORPHIC_SLOTS) + random_poly(
        rng, max_degree, slots=ANTIHOLOMORPHIC_SLOTS
    )
    mixed = (
        Poly({(1, 0, 0, 1): 1}),
        Poly({(0, 1, 1, 0): 1}),
        Poly({(1, 1, 0, 0): 1, (0, 0, 1, 1): -1}),
    )
    for q in mixed:
        if rng.random() < 0.5:
            p = p + q.scale(random_scalar(rng))
    return _checked(p, laplace4, "harmonic")


def random_wavelike(rng: np.random.Generator, max_degree: int = 3) -> Poly:
    """a(z2) + z1 b(z2), the conjugate family, and z1 zb1 (alpha(z2) + beta(zb2))."""
    z1, zb1 = Poly.var(Var.Z1), Poly.var(Var.ZB1)
    lower = max(max_degree - 1, 0)
    p = _univariate(rng, Var.Z2, max_degree) + z1 * _univariate(rng, Var.Z2, lower)
    p = p + _univariate(rng, Var.ZB2, max_degree) + zb1 * _univariate(rng, Var.ZB2, lower)
    if rng.random() < 0.5:
        p = p + z1 * zb1 * (_univariate(rng, Var.Z2, 1) + _univariate(rng, Var.ZB2, 1))
    return _checked(p, dalembert, "wavelike")
