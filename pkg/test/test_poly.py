from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from formwell.core.forms import Dolbeault, Form, dolbeault
from formwell.core.poly import (
    ComplexPoint,
    Poly,
    PolyOp,
    Var,
    dalembert,
    from_real_coordinates,
    is_constant,
    laplace4,
    poly_arith,
    poly_eval,
    real_dalembert,
    real_laplacian,
    to_real_coordinates,
    wirtinger,
    z1,
    z2,
    zb1,
    zb2,
)
from formwell.core.poly.generators import random_harmonic, random_poly, random_wavelike
from formwell.core.scalar import GaussianRational
from test.test_utils import rng_for

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)
scalars = st.builds(GaussianRational, rationals, rationals)
monomials = st.tuples(*[st.integers(0, 2)] * 4)
polys = st.dictionaries(monomials, scalars, max_size=4).map(Poly)
slots = st.sampled_from(list(Var))

I = GaussianRational(0, 1)  # noqa: E741


class TestRingLaws:
    @given(polys, polys)
    def test_product_commutes(self, p, q):
        assert p * q == q * p

    @given(polys, polys, polys)
    def test_distributive(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(polys)
    def test_subtraction_cancels(self, p):
        assert (p - p).is_zero

    @given(polys, polys, slots)
    def test_leibniz_rule(self, p, q, v):
        assert (p * q).partial(v) == p.partial(v) * q + p * q.partial(v)

    @given(polys, slots, slots)
    def test_partials_commute(self, p, a, b):
        assert p.partial(a).partial(b) == p.partial(b).partial(a)

    @given(polys, polys)
    def test_conjugate_is_a_ring_morphism(self, p, q):
        assert (p * q).conjugate() == p.conjugate() * q.conjugate()
        assert p.conjugate().conjugate() == p

    @given(polys, slots)
    def test_conjugate_swaps_wirtinger_derivatives(self, p, v):
        assert p.conjugate().partial(v.conjugate) == p.partial(v).conjugate()

    @given(polys)
    def test_dolbeault_operators_anticommute_on_functions(self, p):
        f = Form.scalar(p)
        holo_anti = dolbeault(dolbeault(f, Dolbeault.HOLO), Dolbeault.ANTI)
        anti_holo = dolbeault(dolbeault(f, Dolbeault.ANTI), Dolbeault.HOLO)
        assert (holo_anti + anti_holo).is_zero
        assert holo_anti.is_homogeneous(2)


def test_z_and_zb_are_independent():
    assert zb1().partial(Var.Z1).is_zero
    assert z1().partial(Var.Z1) == 1
    assert wirtinger(z1() * zb1(), Var.ZB1) == z1()


def test_partial_example():
    p = z1() ** 2 * zb1()
    assert p.partial(Var.Z1) == (z1() * zb1()).scale(2)


def test_conjugate_example():
    p = (z1() * zb2()).scale(I)
    assert p.conjugate() == (zb1() * z2()).scale(-I)


@pytest.mark.parametrize(
    "poly, text",
    [
        (Poly.zero(), "0"),
        (z1() ** 2 * z2() + z2() ** 2, "z1^2*z2 + z2^2"),
        (zb1().scale(Fraction(1, 2)), "(1/2)*zb1"),
        (-(z1() ** 2), "-z1^2"),
        (z2().scale(2 * I) - zb2().scale(2 * I), "2*i*z2 - 2*i*zb2"),
        (z1().scale(GaussianRational(1, -1)) + 3, "(1 - i)*z1 + 3"),
        (Poly.constant(GaussianRational(0, Fraction(-1, 2))), "-(1/2)*i"),
    ],
)
def test_render(poly, text):
    assert poly.render() == text


def test_canonical_order_is_degree_then_lex():
    p = zb2() + z1() + z1() * zb1() + 1
    assert [m for m, _ in p.terms] == [(1, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, 0)]


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Poly({(-1, 0, 0, 0): 1})


def test_constant_detection():
    assert is_constant(Poly.zero()) == 0
    assert is_constant(Poly.constant(I)) == I
    assert is_constant(z1()) is None


def test_poly_arith():
    p, q = z1() + 1, z1() - 1
    assert poly_arith(p, q, PolyOp.ADD) == z1().scale(2)
    assert poly_arith(p, q, PolyOp.SUB) == 2
    assert poly_arith(p, q, "mul") == z1() ** 2 - 1


def test_evaluate_matches_exact():
    p = (z1() ** 2 * zb2()).scale(GaussianRational(Fraction(1, 3), 2)) + zb1()
    point = ComplexPoint.from_real(0.5, -1.0, 2.0, 0.25)
    exact = p.evaluate_exact([GaussianRational(*map(Fraction, (v.real, v.imag))) for v in point.slot_values()])
    assert poly_eval(p, point) == pytest.approx(exact.to_complex())


class TestSecondOrderOperators:
    def test_laplacian_matches_real_coordinates(self):
        rng = rng_for(11)
        for _ in range(100):
            p = random_poly(rng, max_degree=4)
            assert laplace4(p) == real_laplacian(p)

    def test_dalembertian_matches_real_coordinates(self):
        rng = rng_for(12)
        for _ in range(100):
            p = random_poly(rng, max_degree=4)
            assert dalembert(p) == real_dalembert(p)

    def test_non_wavelike_example(self):
        p = z1() ** 2 * z2() + z2() ** 2
        assert dalembert(p) == z2().scale(4)
        assert real_dalembert(p) == z2().scale(4)
        assert laplace4(p).is_zero

    def test_modulus_squared(self):
        assert laplace4(z1() * zb1()) == 4
        assert dalembert(z1() * zb1()) == 0
        assert dalembert(z2() * zb2()) == -4

    def test_real_coordinates_round_trip(self):
        rng = rng_for(13)
        for _ in range(50):
            p = random_poly(rng)
            assert from_real_coordinates(to_real_coordinates(p)) == p

    def test_real_coordinates_render_in_x(self):
        assert to_real_coordinates(z1() * zb1()).render() == "x0^2 + x1^2"


class TestFamilies:
    def test_random_harmonic_is_harmonic(self):
        rng = rng_for(21)
        for _ in range(50):
            assert laplace4(random_harmonic(rng)).is_zero

    def test_random_wavelike_is_wavelike(self):
        rng = rng_for(22)
        for _ in range(50):
            assert dalembert(random_wavelike(rng)).is_zero

    def test_seeded_generation_is_reproducible(self):
        assert random_poly(rng_for(5)) == random_poly(rng_for(5))
