from functools import lru_cache
from typing import List, Tuple

from formwell.core.errors import DegreeMismatch
from formwell.core.forms.calculus import ext_d, to_complex, to_real
from formwell.core.forms.form import BasisIndex, Form, Gen, RealForm, RealGen, all_basis_indices
from formwell.core.hodge.metric import Metric, get_metric
from formwell.core.hodge.oracle import pair_basis, pair_generators, real_oracle_table
from formwell.core.models.models import MetricKind, StarEntryOutput, StarSource, StarTableOutput
from formwell.core.poly.poly import Poly
from formwell.core.scalar import GaussianRational

_I = GaussianRational(0, 1)


def pair_1forms(a: Gen, b: Gen, m: Metric) -> GaussianRational:
    return pair_generators(Gen(a), Gen(b), m.gram_real)


@lru_cache(maxsize=1024)
def _basis_pairing(a: BasisIndex, b: BasisIndex, kind: MetricKind) -> GaussianRational:
    return pair_basis(a, b, get_metric(kind).gram_real)


def _require_degree(f: Form) -> int:
    if f.is_zero:
        return -1
    degree = f.degree
    if degree is None:
        raise DegreeMismatch(f"form {f} is not homogeneous")
    return degree


def pair_forms(a: Form, b: Form, m: Metric) -> Poly:
    """Pointwise sesquilinear pairing of homogeneous forms of equal degree."""
    da, db = _require_degree(a), _require_degree(b)
    if da >= 0 and db >= 0 and da != db:
        raise DegreeMismatch(f"cannot pair a {da}-form with a {db}-form")
    total = Poly.zero()
    for i, p in a.items():
        for j, q in b.items():
            c = _basis_pairing(i, j, m.kind)
            if c:
                total = total + (p * q.conjugate()).scale(c)
    return total


def star(f: Form, m: Metric) -> Form:
    result = Form.zero()
    for index, poly in f.items():
        result = result + m.image(index).scale(poly)
    return result


def star_real(f: RealForm, m: Metric) -> RealForm:
    return to_real(star(to_complex(f), m))


def codiff(f: Form, m: Metric) -> Form:
    """-star d star (Euclidean), +star d star (Minkowski)."""
    result = star(ext_d(star(f, m)), m)
    if m.kind is MetricKind.EUCLIDEAN:
        return -result
    return result


def hodge_laplacian(f: Form, m: Metric) -> Form:
    return ext_d(codiff(f, m)) + codiff(ext_d(f), m)


def eigenvalue(m: Metric) -> GaussianRational:
    """Eigenvalue of star on self-dual 2-forms."""
    return GaussianRational(1) if m.kind is MetricKind.EUCLIDEAN else _I


def require_two_form(F: Form) -> None:
    if not F.is_homogeneous(2):
        raise DegreeMismatch(f"expected a 2-form, got degrees {F.degrees()}")


def duality_split(F: Form, m: Metric) -> Tuple[Form, Form]:
    """F = F+ + F- with star(F+) = lam F+ and star(F-) = -lam F-."""
    require_two_form(F)
    lam_inverse = GaussianRational(1) / eigenvalue(m)
    rotated = star(F, m).scale(lam_inverse)
    half = GaussianRational(1) / 2
    return (F + rotated).scale(half), (F - rotated).scale(half)


def eigenbasis(m: Metric) -> List[Tuple[Form, GaussianRational]]:
    """The three self-dual and three anti-self-dual basis 2-forms."""
    DZ1, DZ2, DZB1, DZB2 = Gen.DZ1, Gen.DZ2, Gen.DZB1, Gen.DZB2
    if m.kind is MetricKind.EUCLIDEAN:
        plus = [
            Form({(DZ1, DZ2): 1}),
            Form({(DZB1, DZB2): 1}),
            Form({(DZ1, DZB1): 1, (DZ2, DZB2): 1}),
        ]
        minus = [
            Form({(DZ1, DZB2): 1}),
            Form({(DZ2, DZB1): 1}),
            Form({(DZ1, DZB1): 1, (DZ2, DZB2): -1}),
        ]
    else:
        pairs = [((DZ1, DZ2), (DZ2, DZB1)), ((DZ1, DZB1), (DZ2, DZB2)), ((DZ1, DZB2), (DZB1, DZB2))]
        plus = [Form({a: 1, b: _I}) for a, b in pairs]
        minus = [Form({a: 1, b: -_I}) for a, b in pairs]
    lam = eigenvalue(m)
    return [(v, lam) for v in plus] + [(v, -lam) for v in minus]


def table_report(m: Metric, real: bool = False) -> StarTableOutput:
    """Every star entry with its provenance and the oracle's verdict."""
    entries: List[StarEntryOutput] = []
    if real:
        oracle = real_oracle_table(m.matrix)
        for index in all_basis_indices():
            real_index = tuple(RealGen(int(g)) for g in index)
            image = star_real(RealForm.basis(*real_index), m)
            oracle_image = oracle[real_index]
            entries.append(
                StarEntryOutput(
                    input=RealForm.index_label(real_index),
                    output=image.render(),
                    source=StarSource.DERIVED,
                    oracle=oracle_image.render(),
                    agrees=image == oracle_image,
                )
            )
    else:
        for index, entry in m.star_table.items():
            oracle_image = m.oracle[index]
            entries.append(
                StarEntryOutput(
                    input=Form.index_label(index),
                    output=entry.image.render(),
                    source=entry.source,
                    oracle=oracle_image.render(),
                    agrees=entry.image == oracle_image,
                    note=entry.note,
                )
            )
    return StarTableOutput(metric=m.kind, entries=entries, discrepancies=list(m.discrepancies))
