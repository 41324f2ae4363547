import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formwell.core.errors import DegreeMismatch, NotConstantLorenz, NotHolomorphicCase
from formwell.core.forms import Form, Gen
from formwell.core.forms.calculus import ext_d
from formwell.core.hodge import EUCLIDEAN, MINKOWSKI, duality_split, get_metric, pair_forms, star
from formwell.core.lang.parser import parse_expr
from formwell.core.maxwell import (
    FaradayComponents,
    LorenzShift,
    Potential,
    condition_euclid,
    condition_for,
    condition_mink,
    current,
    curvature,
    duality_class,
    eb_fields,
    eb_inner,
    energy,
    faraday_components,
    gauge_transform,
    harmonic_potential,
    holo_condition,
    is_hl_harmonic,
    is_real_potential,
    lorenz,
    lorenz_normalize,
    verify_vacuum,
    wavelike_field,
    wavelike_potential,
)
from formwell.core.maxwell.generators import (
    random_harmonic_potential,
    random_holomorphic_potential,
    random_potential,
    random_real_potential,
    random_wavelike_potential,
)
from formwell.core.models.models import DualityClass
from formwell.core.poly import Poly, Var, dalembert, laplace4, poly_sum, real_dalembert, z1, z2, zb1
from formwell.core.poly.generators import random_poly, random_scalar
from formwell.core.scalar import GaussianRational
from test.test_utils import PROBLEM_NAMES, load_expected, load_problem, rng_for

DZ1, DZ2, DZB1, DZB2 = Gen.DZ1, Gen.DZ2, Gen.DZB1, Gen.DZB2
I = GaussianRational(0, 1)  # noqa: E741


def potential(f1="0", f2="0", fb1="0", fb2="0") -> Potential:
    return Potential(f1=parse_expr(f1), f2=parse_expr(f2), fb1=parse_expr(fb1), fb2=parse_expr(fb2))


def norm2(p: Poly) -> Poly:
    return p * p.conjugate()


seeds = st.integers(0, 2**32 - 1)


def random_self_dual_potential(rng) -> Potential:
    """Holomorphic potential plus a constant multiple of the monopole."""
    w = random_holomorphic_potential(rng)
    c = random_scalar(rng)
    return Potential(f1=w.f1, f2=w.f2, fb1=w.fb1 + z1().scale(c), fb2=w.fb2 + z2().scale(c))


def random_anti_self_dual_potential(rng) -> Potential:
    """Curvature in span(dz1/\\dzb2, dz2/\\dzb1) plus c*(dz1/\\dzb1 - dz2/\\dzb2)."""
    c = random_scalar(rng)
    a, b = (random_poly(rng, 3, slots=(Var.Z1, Var.ZB2)) for _ in range(2))
    p, q = (random_poly(rng, 3, slots=(Var.ZB1, Var.Z2)) for _ in range(2))
    form = (
        Form.gen(DZ1, a)
        + Form.gen(DZB2, b - z2().scale(c))
        + Form.gen(DZB1, p + z1().scale(c))
        + Form.gen(DZ2, q)
    )
    return Potential.from_form(form)


def light_cone_potential(rng, sign: int) -> Potential:
    """f2 = phi(zb1 + sign*i*z1) for a random cubic phi; only f2 is nonzero."""
    s = zb1() + z1().scale(I * sign)
    f2 = poly_sum((s**k).scale(random_scalar(rng)) for k in range(4))
    return Potential(f2=f2)


@pytest.fixture(scope="module")
def euclid():
    return get_metric(EUCLIDEAN)


@pytest.fixture(scope="module")
def mink():
    return get_metric(MINKOWSKI)


class TestShippedProblems:
    @pytest.mark.parametrize("name", PROBLEM_NAMES)
    def test_report_matches_golden_values(self, name):
        spec = load_problem(name)
        expected = load_expected(name)
        report = verify_vacuum(spec.potential, get_metric(spec.metric))
        assert report.is_vacuum_solution is expected["is_vacuum_solution"]
        assert report.duality.value == expected["duality"]
        assert report.condition_sum.render() == expected["condition_sum"]
        assert [p.render() for p in report.eb.E] == expected["E"]
        assert [p.render() for p in report.eb.B] == expected["B"]
        assert report.eb_inner.render() == expected["eb_inner"]
        assert report.energy.render() == expected["energy"]

    def test_monopole(self, euclid):
        w = load_problem("monopole").potential
        F = curvature(w)
        assert F == -(Form.basis(DZ1, DZB1) + Form.basis(DZ2, DZB2))
        assert duality_class(F, euclid) is DualityClass.SELF_DUAL
        assert pair_forms(F, F, euclid) == 8
        assert condition_euclid(w).sum.is_zero
        assert lorenz(w, euclid).sum.is_zero
        assert current(w, euclid).is_zero

    def test_tau_instance(self, euclid):
        w = load_problem("tau").potential
        F = curvature(w)
        assert F == (Form.basis(DZ1, DZB1) + Form.basis(DZ2, DZB2)).scale(3)
        fields = eb_fields(F)
        assert fields.E1 == fields.B1 == Poly.constant(6 * I)
        assert all(p.is_zero for p in (fields.E2, fields.E3, fields.B2, fields.B3))

    def test_non_wavelike_solution(self, mink):
        w = load_problem("f1f2").potential
        assert verify_vacuum(w, mink).is_vacuum_solution
        q, independent = holo_condition(w)
        assert q == z2().scale(2)
        assert independent
        assert not wavelike_potential(w)
        assert dalembert(w.f1) == real_dalembert(w.f1) == z2().scale(4)
        F = curvature(w)
        assert wavelike_field(F)
        fields = eb_fields(F)
        assert fields.E1.is_zero and fields.B1.is_zero
        assert fields.E == fields.B

    def test_holo_condition_rejects_other_classes(self):
        with pytest.raises(NotHolomorphicCase):
            holo_condition(load_problem("monopole").potential)
        with pytest.raises(NotHolomorphicCase):
            holo_condition(potential(f1="z1", fb1="z1"))

    def test_working_example_is_self_dual(self, euclid):
        F = curvature(load_problem("working_example").potential)
        c = faraday_components(F)
        assert c.F11b == c.F22b == -1
        assert c.F12b.is_zero and c.F21b.is_zero
        assert duality_class(F, euclid) is DualityClass.SELF_DUAL

    def test_neither_dual_solution(self, euclid):
        w = load_problem("neither").potential
        report = verify_vacuum(w, euclid)
        assert report.is_vacuum_solution
        assert report.duality is DualityClass.NEITHER
        assert report.condition_constant == 6

    def test_anti_self_dual_example(self, euclid):
        w = potential(f1="z1 - zb2", f2="z2 - zb1", fb1="zb1 - z1", fb2="z2 - zb2")
        F = curvature(w)
        assert duality_class(F, euclid) is DualityClass.ANTI_SELF_DUAL
        fields = eb_fields(F)
        assert fields.E == tuple(-b for b in fields.B)

    def test_non_solution(self, euclid):
        w = potential(f1="z1^2*zb1")
        report = verify_vacuum(w, euclid)
        assert not report.is_vacuum_solution
        assert not current(w, euclid).is_zero
        assert report.condition_constant is None

    def test_zero_field_is_both(self, euclid, mink):
        assert duality_class(Form.zero(), euclid) is DualityClass.BOTH
        assert duality_class(Form.zero(), mink) is DualityClass.BOTH
        with pytest.raises(DegreeMismatch):
            duality_class(Form.gen(DZ1), euclid)


class TestComponents:
    def test_components_from_potential(self):
        rng = rng_for(51)
        for _ in range(50):
            w = random_potential(rng)
            assert FaradayComponents.from_potential(w) == faraday_components(curvature(w))
            assert FaradayComponents.from_potential(w).to_form() == curvature(w)

    def test_curvature_is_closed(self):
        rng = rng_for(52)
        for _ in range(50):
            assert ext_d(curvature(random_potential(rng))).is_zero

    def test_holomorphic_potential_has_no_mixed_components(self):
        rng = rng_for(50)
        for _ in range(30):
            w = random_holomorphic_potential(rng)
            c = faraday_components(curvature(w))
            assert c.F11b.is_zero and c.F22b.is_zero and c.F12b.is_zero and c.F21b.is_zero
            assert condition_euclid(w).sum.is_zero
            assert harmonic_potential(w)

    def test_fields_need_a_two_form(self):
        with pytest.raises(DegreeMismatch):
            eb_fields(Form.gen(DZ1))


class TestGauge:
    def test_curvature_invariance_and_condition_shift(self, euclid, mink):
        rng = rng_for(53)
        for _ in range(100):
            w = random_potential(rng)
            u = random_poly(rng, max_degree=4)
            shifted = gauge_transform(w, u)
            assert curvature(shifted) == curvature(w)
            half = GaussianRational(1) / 2
            assert condition_euclid(shifted).sum - condition_euclid(w).sum == laplace4(u).scale(half)
            assert condition_mink(shifted).sum - condition_mink(w).sum == dalembert(u).scale(half)

    def test_harmonic_gauge_keeps_condition(self, euclid):
        spec = load_problem("tau")
        shifted = gauge_transform(spec.potential, spec.gauge)
        assert condition_for(shifted, euclid).sum == condition_for(spec.potential, euclid).sum


class TestCodifferential:
    def test_condition_is_minus_half_codifferential(self, euclid, mink):
        rng = rng_for(54)
        for _ in range(100):
            w = random_potential(rng)
            assert lorenz(w, euclid).sum == condition_euclid(w).sum.scale(-2)
            assert lorenz(w, mink).sum == condition_mink(w).sum.scale(-2)

    def test_normalize_minkowski(self, mink):
        w = potential(f1="z1")
        assert lorenz(w, mink).constant == -2
        normalized = lorenz_normalize(w, mink)
        assert normalized.f1.is_zero
        assert lorenz(normalized, mink).sum.is_zero

    def test_normalize_euclidean(self, euclid):
        w = potential(f1="zb1")
        assert lorenz(w, euclid).constant == -2
        normalized = lorenz_normalize(w, euclid)
        assert normalized == potential(f1="(1/2)*zb1", fb1="(-1/2)*z1")
        assert curvature(normalized) == curvature(w)
        assert lorenz_normalize(w, euclid, LorenzShift.F1).f1.is_zero

    def test_f1_shift_moves_only_f11b(self, euclid):
        w = load_problem("tau").potential
        normalized = lorenz_normalize(w, euclid, LorenzShift.F1)
        assert lorenz(normalized, euclid).sum.is_zero
        difference = curvature(normalized) - curvature(w)
        assert difference == Form.basis(DZ1, DZB1, coeff=6)

    def test_normalize_rejects_nonconstant(self, mink):
        with pytest.raises(NotConstantLorenz):
            lorenz_normalize(load_problem("f1f2").potential, mink)

    def test_normalize_already_zero(self, euclid):
        w = load_problem("monopole").potential
        assert lorenz_normalize(w, euclid) is w

    @pytest.mark.parametrize("name", ["monopole", "tau", "working_example", "neither", "f1f2"])
    def test_gauge_corollary_on_solutions(self, name):
        spec = load_problem(name)
        m = get_metric(spec.metric)
        w = spec.potential
        assert verify_vacuum(w, m).is_vacuum_solution
        constant = lorenz(w, m).constant is not None
        family = harmonic_potential(w) if spec.metric is EUCLIDEAN else wavelike_potential(w)
        assert constant == family == is_hl_harmonic(w, m)
        if not constant:
            return
        normalized = lorenz_normalize(w, m)
        assert lorenz(normalized, m).sum.is_zero
        assert verify_vacuum(normalized, m).is_vacuum_solution
        assert curvature(normalized) == curvature(w)

    def test_minkowski_normalization_keeps_curvature(self, mink):
        rng = rng_for(55)
        for _ in range(20):
            w = random_wavelike_potential(rng, constant=True)
            assert curvature(lorenz_normalize(w, mink)) == curvature(w)


class TestVacuumCriteria:
    def test_euclidean_harmonic_family(self, euclid):
        rng = rng_for(56)
        witnessed = {True: 0, False: 0}
        for k in range(60):
            w = random_harmonic_potential(rng, constant=k % 2 == 0)
            vacuum = verify_vacuum(w, euclid).is_vacuum_solution
            constant = condition_euclid(w).constant is not None
            assert vacuum == constant
            witnessed[vacuum] += 1
        assert witnessed[True] >= 10 and witnessed[False] >= 10

    def test_minkowski_wavelike_family(self, mink):
        rng = rng_for(57)
        witnessed = {True: 0, False: 0}
        for k in range(60):
            w = random_wavelike_potential(rng, constant=k % 2 == 0)
            vacuum = verify_vacuum(w, mink).is_vacuum_solution
            constant = condition_mink(w).constant is not None
            assert vacuum == constant
            witnessed[vacuum] += 1
        assert witnessed[True] >= 10 and witnessed[False] >= 10

    @settings(max_examples=40, deadline=None)
    @given(seeds)
    def test_dual_curvatures_are_euclidean_solutions(self, euclid, seed):
        rng = rng_for(seed)
        for w, duality in (
            (random_self_dual_potential(rng), DualityClass.SELF_DUAL),
            (random_anti_self_dual_potential(rng), DualityClass.ANTI_SELF_DUAL),
        ):
            assert duality_class(curvature(w), euclid) in (duality, DualityClass.BOTH)
            assert verify_vacuum(w, euclid).is_vacuum_solution

    @settings(max_examples=40, deadline=None)
    @given(seeds)
    def test_dual_curvatures_are_minkowski_solutions(self, mink, seed):
        rng = rng_for(seed)
        for sign, duality in ((1, DualityClass.SELF_DUAL), (-1, DualityClass.ANTI_SELF_DUAL)):
            w = light_cone_potential(rng, sign)
            assert duality_class(curvature(w), mink) in (duality, DualityClass.BOTH)
            assert verify_vacuum(w, mink).is_vacuum_solution

    @settings(max_examples=40, deadline=None)
    @given(seeds)
    def test_holomorphic_euclidean_solutions(self, euclid, seed):
        w = random_holomorphic_potential(rng_for(seed))
        F = curvature(w)
        assert duality_class(F, euclid) in (DualityClass.SELF_DUAL, DualityClass.BOTH)
        assert verify_vacuum(w, euclid).is_vacuum_solution
        fields = eb_fields(F)
        assert fields.E1.is_zero and fields.B1.is_zero
        assert fields.E == fields.B


class TestFieldIdentities:
    def test_inner_product_and_energy(self, euclid):
        rng = rng_for(58)
        for _ in range(100):
            F = curvature(random_potential(rng))
            fields = eb_fields(F)
            componentwise = poly_sum(e * b.conjugate() for e, b in zip(fields.E, fields.B))
            assert eb_inner(F) == componentwise
            squares = poly_sum(norm2(p) for p in fields.E + fields.B)
            assert energy(F) == squares.scale(GaussianRational(1) / 2)
            assert pair_forms(F, F, euclid) == squares

    def test_real_potentials_give_real_fields(self):
        rng = rng_for(59)
        for _ in range(50):
            w = random_real_potential(rng)
            assert is_real_potential(w)
            for p in eb_fields(curvature(w)).E + eb_fields(curvature(w)).B:
                assert p.conjugate() == p

    @settings(max_examples=40, deadline=None)
    @given(seeds)
    def test_euclidean_self_dual_inner_product(self, seed):
        F = curvature(random_self_dual_potential(rng_for(seed)))
        c = faraday_components(F)
        expected = (norm2(c.F11b).scale(2) + norm2(c.F12) + norm2(c.F1b2b)).scale(2)
        assert eb_inner(F) == expected

    @settings(max_examples=40, deadline=None)
    @given(seeds)
    def test_real_potential_inner_product(self, mink, seed):
        F = curvature(random_real_potential(rng_for(seed)))
        c = faraday_components(F)
        expected = (c.F11b * c.F22b.conjugate() + norm2(c.F12) - norm2(c.F21b)).scale(4)
        assert eb_inner(F) == expected
        assert eb_inner(F).conjugate() == eb_inner(F)
        # a real curvature is never an eigenform of the Minkowski star, so its
        # self-dual case, where <E,B> would be imaginary, is the zero field
        assert duality_class(F, mink) in (DualityClass.NEITHER, DualityClass.BOTH)
        assert (duality_class(F, mink) is DualityClass.BOTH) == F.is_zero

    def test_euclidean_duality_and_fields(self, euclid):
        rng = rng_for(60)
        for _ in range(50):
            plus, minus = duality_split(curvature(random_potential(rng)), euclid)
            sd, asd = eb_fields(plus), eb_fields(minus)
            assert sd.E == sd.B
            assert asd.E == tuple(-b for b in asd.B)

    def test_minkowski_self_dual_inner_product_is_imaginary(self, mink):
        rng = rng_for(61)
        minus_four_i = GaussianRational(0, -4)
        for _ in range(50):
            plus, minus = duality_split(curvature(random_potential(rng)), mink)
            for part, sign in ((plus, 1), (minus, -1)):
                c = faraday_components(part)
                expected = (norm2(c.F11b) + norm2(c.F12) + norm2(c.F12b)).scale(minus_four_i * sign)
                assert eb_inner(part) == expected

    @pytest.mark.parametrize(
        "f2, duality, value",
        [
            ("zb1 + i*z1", DualityClass.SELF_DUAL, GaussianRational(0, -4)),
            ("zb1 - i*z1", DualityClass.ANTI_SELF_DUAL, GaussianRational(0, 4)),
        ],
    )
    def test_minkowski_instances(self, mink, f2, duality, value):
        F = curvature(potential(f2=f2))
        assert duality_class(F, mink) is duality
        assert eb_inner(F) == value
        c = faraday_components(F)
        assert c.F21b == c.F12.scale(I if duality is DualityClass.SELF_DUAL else -I)

    def test_current_matches_star_d_star(self, euclid):
        w = potential(f1="z1^2*zb1")
        j = current(w, euclid)
        expected = star(ext_d(star(curvature(w), euclid)), euclid)
        assert j.P1 == expected.coefficient(DZ1)
        assert j.rho == j.P1 + j.Pb1
        assert j.J1 == (j.P1 - j.Pb1).scale(I)


class TestGenerators:
    def test_families(self):
        rng = rng_for(62)
        for constant in (True, False):
            w = random_harmonic_potential(rng, constant=constant)
            assert harmonic_potential(w)
            assert (condition_euclid(w).constant is not None) == constant
            w = random_wavelike_potential(rng, constant=constant)
            assert wavelike_potential(w)
            assert (condition_mink(w).constant is not None) == constant

    def test_helpers_build_expected_potential(self):
        assert potential(f1="zb1").f1 == zb1()
        assert Potential().to_form().is_zero
        assert Potential.from_form(potential(f1="z1", fb2="z2").to_form()) == Potential(f1=z1(), fb2=z2())
