"""
Definitional Hodge star: the unique linear map with

    eta /\\ star(conj xi) = <eta, xi>_g vol_g

for every pair of basis p-forms, computed from a constant real metric matrix
with exact arithmetic. Used to derive the tables the metrics do not list and
to cross-check the ones they do.
"""

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

from formwell.core.errors import IrrationalVolume, SingularMetric
from formwell.core.forms.form import BasisIndex, Form, Gen, RealForm, RealGen, all_basis_indices, sort_with_sign
from formwell.core.scalar import GaussianRational
from formwell.utils.logger import logger

Matrix = Tuple[Tuple[Fraction, ...], ...]

_I = GaussianRational(0, 1)

# real coordinates of the complex generators: dz1 = dx0 + i dx1, ...
GEN_VECTORS: Dict[Gen, Tuple[GaussianRational, ...]] = {
    Gen.DZ1: (GaussianRational(1), _I, GaussianRational(0), GaussianRational(0)),
    Gen.DZB1: (GaussianRational(1), -_I, GaussianRational(0), GaussianRational(0)),
    Gen.DZ2: (GaussianRational(0), GaussianRational(0), GaussianRational(1), _I),
    Gen.DZB2: (GaussianRational(0), GaussianRational(0), GaussianRational(1), -_I),
}


def as_matrix(g: Sequence[Sequence[object]]) -> Matrix:
    rows = tuple(tuple(Fraction(x) for x in row) for row in g)  # type: ignore[arg-type]
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise ValueError("metric matrix must be 4x4")
    if any(rows[s][t] != rows[t][s] for s in range(4) for t in range(4)):
        raise ValueError("metric matrix must be symmetric")
    return rows


def determinant(m: Sequence[Sequence[GaussianRational]]) -> GaussianRational:
    """Leibniz expansion; only used on matrices of size <= 4."""
    n = len(m)
    total = GaussianRational(0)
    for perm in permutations(range(n)):
        sign, _ = sort_with_sign(perm)
        term = GaussianRational(sign)
        for row, col in enumerate(perm):
            term = term * m[row][col]
            if not term:
                break
        total = total + term
    return total


def invert(g: Matrix) -> Matrix:
    """Gauss-Jordan over the rationals."""
    n = len(g)
    work = [list(row) + [Fraction(int(r == c)) for c in range(n)] for r, row in enumerate(g)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise SingularMetric("metric matrix is not invertible")
        work[col], work[pivot] = work[pivot], work[col]
        lead = work[col][col]
        work[col] = [x / lead for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def _rational_sqrt(q: Fraction) -> Fraction:
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise IrrationalVolume(f"sqrt({q}) is irrational")
    return Fraction(num, den)


def _volume_root(g: Matrix) -> Fraction:
    """sqrt|det g|, the coefficient of dx0/\\dx1/\\dx2/\\dx3 in vol_g."""
    det_g = determinant([[GaussianRational(x) for x in row] for row in g])
    return _rational_sqrt(abs(det_g.re))


def pair_generators(a: Gen, b: Gen, gram: Matrix) -> GaussianRational:
    """<a, b> = sum alpha_s conj(beta_t) g^{st}."""
    va, vb = GEN_VECTORS[Gen(a)], GEN_VECTORS[Gen(b)]
    total = GaussianRational(0)
    for s in range(4):
        if not va[s]:
            continue
        for t in range(4):
            if vb[t] and gram[s][t]:
                total = total + va[s] * vb[t].conjugate() * gram[s][t]
    return total


def pair_basis(a: BasisIndex, b: BasisIndex, gram: Matrix) -> GaussianRational:
    """Determinant extension of the 1-form pairing to basis p-forms."""
    if len(a) != len(b):
        return GaussianRational(0)
    if not a:
        return GaussianRational(1)
    return determinant([[pair_generators(x, y, gram) for y in b] for x in a])


def conjugate_index(index: BasisIndex) -> Tuple[int, BasisIndex]:
    """conj(dz_M) = sign * dz_{M-bar} with M-bar canonical."""
    sign, key = sort_with_sign(tuple(int(Gen(g).conjugate) for g in index))
    return sign, tuple(Gen(g) for g in key)


def complement(index: BasisIndex) -> Tuple[int, BasisIndex]:
    """Returns (sign, Ic) with dz_I /\\ dz_Ic = sign * dz_full."""
    rest = tuple(g for g in Gen if g not in index)
    sign, _ = sort_with_sign(tuple(int(g) for g in index + rest))
    return sign, rest


@lru_cache(maxsize=8)
def oracle_table(g: Matrix) -> Dict[BasisIndex, Form]:
    """star of every canonical basis form under the metric matrix `g`."""
    gram = invert(g)
    # vol_g = (i/2)^2 sqrt|det g| dz1/\dzb1/\dz2/\dzb2 = (1/4) sqrt|det g| dz_full
    vol_coeff = GaussianRational(_volume_root(g) / 4)
    table: Dict[BasisIndex, Form] = {}
    indices = all_basis_indices()
    for index in indices:
        s, conj_index = conjugate_index(index)
        terms: List[Tuple[BasisIndex, GaussianRational]] = []
        for other in indices:
            if len(other) != len(index):
                continue
            pairing = pair_basis(other, conj_index, gram)
            if not pairing:
                continue
            sign, rest = complement(other)
            terms.append((rest, pairing * vol_coeff * (s * sign)))
        table[index] = Form({rest: coeff for rest, coeff in terms})
    logger.debug("Built oracle star table for metric %s", [[str(x) for x in row] for row in g])
    return table


RealIndex = Tuple[RealGen, ...]


def _pair_real_basis(a: RealIndex, b: RealIndex, gram: Matrix) -> GaussianRational:
    if not a:
        return GaussianRational(1)
    return determinant([[GaussianRational(gram[s][t]) for t in b] for s in a])


@lru_cache(maxsize=8)
def real_oracle_table(g: Matrix) -> Dict[RealIndex, RealForm]:
    """
    star of every real basis form, straight from g without the complex tables:

        star(dx_I) = sqrt|det g| * sum_K <dx_K, dx_I> sign(K, Kc) dx_Kc
    """
    gram = invert(g)
    root = GaussianRational(_volume_root(g))
    indices = [tuple(RealGen(int(x)) for x in index) for index in all_basis_indices()]
    table: Dict[RealIndex, RealForm] = {}
    for index in indices:
        coeffs: Dict[RealIndex, GaussianRational] = {}
        for other in indices:
            if len(other) != len(index):
                continue
            pairing = _pair_real_basis(other, index, gram)
            if not pairing:
                continue
            rest = tuple(x for x in RealGen if x not in other)
            sign, _ = sort_with_sign(tuple(int(x) for x in other + rest))
            coeffs[rest] = pairing * root * sign
        table[index] = RealForm(coeffs)
    logger.debug("Built real oracle star table for metric %s", [[str(x) for x in row] for row in g])
    return table


def star_oracle(f: Form, g: Sequence[Sequence[object]]) -> Form:
    """Apply the definitional star for the metric matrix `g` to `f`."""
    table = oracle_table(as_matrix(g))
    result = Form.zero()
    for index, poly in f.items():
        result = result + table[index].scale(poly)
    return result


EUCLIDEAN_MATRIX: Matrix = as_matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
MINKOWSKI_MATRIX: Matrix = as_matrix([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
