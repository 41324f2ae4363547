from fractions import Fraction

import pytest

from formwell.core.errors import DegreeMismatch, IrrationalVolume, SingularMetric
from formwell.core.forms import DZ_FULL, Form, Gen, RealForm, RealGen, all_basis_indices
from formwell.core.hodge import (
    EUCLIDEAN,
    EUCLIDEAN_MATRIX,
    MINKOWSKI,
    MINKOWSKI_MATRIX,
    Metric,
    duality_split,
    eigenbasis,
    eigenvalue,
    get_metric,
    hodge_laplacian,
    pair_1forms,
    pair_forms,
    real_oracle_table,
    star,
    star_oracle,
    star_real,
    table_report,
)
from formwell.core.hodge.metric import ListedEntry
from formwell.core.maxwell.generators import random_form
from formwell.core.models.models import DiscrepancyKind, StarSource
from formwell.core.poly import z1, zb2
from formwell.core.scalar import GaussianRational
from test.test_utils import rng_for

DZ1, DZ2, DZB1, DZB2 = Gen.DZ1, Gen.DZ2, Gen.DZB1, Gen.DZB2
I = GaussianRational(0, 1)  # noqa: E741
TWO_FORMS = [i for i in all_basis_indices() if len(i) == 2]


@pytest.fixture(scope="module")
def euclid():
    return get_metric(EUCLIDEAN)


@pytest.fixture(scope="module")
def mink():
    return get_metric(MINKOWSKI)


class TestPairing:
    def test_euclidean_generators(self, euclid):
        assert pair_1forms(DZ1, DZ1, euclid) == 2
        assert pair_1forms(DZ1, DZB1, euclid) == 0
        assert pair_1forms(DZ2, DZ2, euclid) == 2

    def test_minkowski_generators(self, mink):
        assert pair_1forms(DZ1, DZ1, mink) == 0
        assert pair_1forms(DZ1, DZB1, mink) == 2
        assert pair_1forms(DZ2, DZ2, mink) == -2
        assert pair_1forms(DZ1, DZB2, mink) == 0

    def test_form_pairing_is_sesquilinear(self, euclid):
        a = Form.gen(DZ1, z1())
        assert pair_forms(a, a, euclid) == (z1() * z1().conjugate()).scale(2)
        assert pair_forms(a.scale(I), a, euclid) == pair_forms(a, a, euclid).scale(I)
        assert pair_forms(a, a.scale(I), euclid) == pair_forms(a, a, euclid).scale(-I)

    def test_monopole_norm(self, euclid):
        F = -(Form.basis(DZ1, DZB1) + Form.basis(DZ2, DZB2))
        assert pair_forms(F, F, euclid) == 8

    def test_degree_mismatch(self, euclid):
        with pytest.raises(DegreeMismatch):
            pair_forms(Form.gen(DZ1), Form.basis(DZ1, DZ2), euclid)
        with pytest.raises(DegreeMismatch):
            pair_forms(Form.gen(DZ1) + Form.scalar(1), Form.gen(DZ1), euclid)


class TestStarTables:
    def test_euclidean_star_matches_oracle(self, euclid):
        assert euclid.discrepancies == []
        for index in all_basis_indices():
            assert star(Form.basis(*index), euclid) == euclid.oracle[index]

    def test_euclidean_listed_example(self, euclid):
        assert star(Form.gen(DZ1), euclid) == Form.basis(DZ1, DZ2, DZB2, coeff=Fraction(1, 2))
        assert star(Form.basis(*DZ_FULL), euclid) == Form.scalar(4)
        assert euclid.vol == Form.basis(*DZ_FULL, coeff=Fraction(1, 4))

    def test_minkowski_listed_entries_agree(self, mink):
        listed = [e for e in mink.star_table.values() if e.source is StarSource.LISTED]
        assert {e.index for e in listed if len(e.index) == 2} == set(TWO_FORMS)
        assert len([e for e in listed if len(e.index) == 3]) == 4
        for entry in listed:
            assert entry.image == mink.oracle[entry.index]

    def test_minkowski_pairing_discrepancy(self, mink):
        assert len(mink.discrepancies) == 1
        d = mink.discrepancies[0]
        assert d.kind is DiscrepancyKind.PAIRING
        assert (d.entry, d.listed, d.derived) == ("<dz2,dz2>", "2", "-2")

    def test_star_oracle_on_matrices(self, euclid, mink):
        rng = rng_for(41)
        for _ in range(20):
            f = random_form(rng)
            assert star_oracle(f, EUCLIDEAN_MATRIX) == star(f, euclid)
            assert star_oracle(f, MINKOWSKI_MATRIX) == star(f, mink)

    def test_oracle_rejects_bad_metrics(self):
        with pytest.raises(SingularMetric):
            star_oracle(Form.scalar(1), [[0] * 4] * 4)
        with pytest.raises(IrrationalVolume):
            star_oracle(Form.scalar(1), [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        with pytest.raises(ValueError):
            star_oracle(Form.scalar(1), [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])

    def test_table_report(self, euclid, mink):
        report = table_report(euclid)
        assert len(report.entries) == 16
        assert all(e.agrees for e in report.entries)
        mink_report = table_report(mink)
        assert [d.entry for d in mink_report.discrepancies] == ["<dz2,dz2>"]
        notes = [e.note for e in mink_report.entries if e.note]
        assert len(notes) == 2

    def test_real_table(self, euclid):
        report = table_report(euclid, real=True)
        assert len(report.entries) == 16
        assert {e.source for e in report.entries} == {StarSource.DERIVED}
        assert report.entries[0].input == "1"

    def test_real_table_agrees_with_real_oracle(self, euclid, mink):
        for m in (euclid, mink):
            report = table_report(m, real=True)
            assert all(e.agrees for e in report.entries)
            assert all(e.output == e.oracle for e in report.entries)
        oracle = real_oracle_table(MINKOWSKI_MATRIX)
        assert oracle[(RealGen.DX0, RealGen.DX1)] == RealForm.basis(RealGen.DX2, RealGen.DX3, coeff=-1)
        assert oracle[tuple(RealGen)] == RealForm.scalar(-1)
        assert real_oracle_table(EUCLIDEAN_MATRIX)[(RealGen.DX0,)] == RealForm.basis(
            RealGen.DX1, RealGen.DX2, RealGen.DX3
        )

    def test_real_oracle_matches_real_star(self, euclid, mink):
        for m, matrix in ((euclid, EUCLIDEAN_MATRIX), (mink, MINKOWSKI_MATRIX)):
            for index, image in real_oracle_table(matrix).items():
                assert star_real(RealForm.basis(*index), m) == image

    def test_real_table_reports_a_wrong_listed_entry(self):
        listed = {(DZ1,): ListedEntry(Form.basis(DZ1, DZ2, DZB2))}
        broken = Metric(EUCLIDEAN, EUCLIDEAN_MATRIX, listed)
        assert [d.entry for d in broken.discrepancies] == ["dz1"]
        report = table_report(broken, real=True)
        assert {e.input for e in report.entries if not e.agrees} == {"dx0", "dx1"}


class TestInvolution:
    def test_euclidean_star_squared(self, euclid):
        for index in all_basis_indices():
            p = len(index)
            f = Form.basis(*index)
            assert star(star(f, euclid), euclid) == f.scale((-1) ** (p * (4 - p)))

    def test_minkowski_star_squared(self, mink):
        for index in all_basis_indices():
            p = len(index)
            f = Form.basis(*index)
            assert star(star(f, mink), mink) == f.scale(-((-1) ** (p * (4 - p))))

    def test_minkowski_two_forms_square_to_minus_one(self, mink):
        for index in TWO_FORMS:
            f = Form.basis(*index)
            assert star(star(f, mink), mink) == -f


class TestRealStar:
    def test_euclidean_volume(self, euclid):
        assert star_real(RealForm.basis(0, 1, 2, 3), euclid) == RealForm.scalar(1)

    def test_minkowski_volume(self, mink):
        assert star_real(RealForm.basis(0, 1, 2, 3), mink) == RealForm.scalar(-1)
        assert star_real(RealForm.basis(0, 1), mink) == -RealForm.basis(2, 3)


class TestDuality:
    @pytest.mark.parametrize("kind", [EUCLIDEAN, MINKOWSKI])
    def test_eigenbasis(self, kind):
        m = get_metric(kind)
        basis = eigenbasis(m)
        assert len(basis) == 6
        assert sum(1 for _, lam in basis if lam == eigenvalue(m)) == 3
        for v, lam in basis:
            assert star(v, m) == v.scale(lam)

    @pytest.mark.parametrize("kind", [EUCLIDEAN, MINKOWSKI])
    def test_split(self, kind):
        m = get_metric(kind)
        lam = eigenvalue(m)
        rng = rng_for(42)
        for _ in range(30):
            F = random_form(rng, degree=2)
            plus, minus = duality_split(F, m)
            assert plus + minus == F
            assert star(plus, m) == plus.scale(lam)
            assert star(minus, m) == minus.scale(-lam)

    def test_split_requires_two_form(self, euclid):
        with pytest.raises(DegreeMismatch):
            duality_split(Form.gen(DZ1), euclid)


class TestLaplacian:
    def test_constant_coefficients_are_harmonic(self, euclid, mink):
        w = Form.gen(DZ1, 3) + Form.gen(DZB2, I)
        assert hodge_laplacian(w, euclid).is_zero
        assert hodge_laplacian(w, mink).is_zero

    def test_non_harmonic(self, euclid):
        w = Form.gen(DZ1, z1() * z1().conjugate() + zb2())
        assert not hodge_laplacian(w, euclid).is_zero
