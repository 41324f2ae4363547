"""
The two metrics on C^2 = R^4 and their Hodge star tables.

Listed entries are transcribed from the published tables and used as-is;
every other entry comes from the definitional oracle. Both are compared
against the oracle when the metric is built, and any disagreement is kept
on the metric as a TableDiscrepancy.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Tuple

from formwell.core.forms.form import DZ_FULL, BasisIndex, Form, Gen, all_basis_indices
from formwell.core.hodge.oracle import (
    EUCLIDEAN_MATRIX,
    MINKOWSKI_MATRIX,
    Matrix,
    invert,
    oracle_table,
    pair_generators,
)
from formwell.core.models.models import DiscrepancyKind, MetricKind, StarSource, TableDiscrepancy
from formwell.core.scalar import GaussianRational
from formwell.utils.logger import logger

DZ1, DZ2, DZB1, DZB2 = Gen.DZ1, Gen.DZ2, Gen.DZB1, Gen.DZB2
_HALF = Fraction(1, 2)


class StarEntry(NamedTuple):
    index: BasisIndex
    image: Form
    source: StarSource
    note: Optional[str] = None


class ListedEntry(NamedTuple):
    image: Form
    note: Optional[str] = None


def _f(coeff, *gens: Gen) -> Form:
    return Form.basis(*gens, coeff=GaussianRational.coerce(coeff))


EUCLIDEAN_LISTED: Dict[BasisIndex, ListedEntry] = {
    (DZ1,): ListedEntry(_f(_HALF, DZ1, DZ2, DZB2)),
    (DZ2,): ListedEntry(_f(-_HALF, DZ1, DZ2, DZB1)),
    (DZB1,): ListedEntry(_f(_HALF, DZ2, DZB1, DZB2)),
    (DZB2,): ListedEntry(_f(-_HALF, DZ1, DZB1, DZB2)),
    (DZ1, DZB1): ListedEntry(_f(1, DZ2, DZB2)),
    (DZ2, DZB2): ListedEntry(_f(1, DZ1, DZB1)),
    (DZ1, DZB2): ListedEntry(_f(-1, DZ1, DZB2)),
    (DZ2, DZB1): ListedEntry(_f(-1, DZ2, DZB1)),
    (DZ1, DZ2): ListedEntry(_f(1, DZ1, DZ2)),
    (DZB1, DZB2): ListedEntry(_f(1, DZB1, DZB2)),
    (DZ1, DZ2, DZB1): ListedEntry(_f(2, DZ2)),
    (DZ1, DZ2, DZB2): ListedEntry(_f(-2, DZ1)),
    (DZ1, DZB1, DZB2): ListedEntry(_f(2, DZB2)),
    (DZ2, DZB1, DZB2): ListedEntry(_f(-2, DZB1)),
    DZ_FULL: ListedEntry(Form.scalar(4)),
}

MINKOWSKI_LISTED: Dict[BasisIndex, ListedEntry] = {
    (DZ1, DZ2): ListedEntry(_f(-1, DZ2, DZB1)),
    (DZ1, DZB2): ListedEntry(_f(-1, DZB1, DZB2)),
    (DZ2, DZB1): ListedEntry(_f(1, DZ1, DZ2)),
    (DZB1, DZB2): ListedEntry(_f(1, DZ1, DZB2)),
    (DZ1, DZB1): ListedEntry(_f(-1, DZ2, DZB2)),
    (DZ2, DZB2): ListedEntry(_f(1, DZ1, DZB1)),
    (DZ1, DZ2, DZB1): ListedEntry(_f(2, DZ2)),
    (DZ1, DZ2, DZB2): ListedEntry(_f(2, DZB1), "printed as 2 dz_{1-bar}; read as 2 dzb1"),
    (DZ1, DZB1, DZB2): ListedEntry(_f(2, DZB2)),
    (DZ2, DZB1, DZB2): ListedEntry(_f(2, DZ1)),
    DZ_FULL: ListedEntry(Form.scalar(-4), "pinned from star(dx0/\\dx1/\\dx2/\\dx3) = -1"),
}

# listed Minkowski facts about the 1-form pairing
MINKOWSKI_LISTED_PAIRINGS: Dict[Tuple[Gen, Gen], int] = {
    (DZ1, DZ1): 0,
    (DZ1, DZ2): 0,
    (DZ1, DZB2): 0,
    (DZ2, DZB2): 0,
    (DZ1, DZB1): 2,
    (DZ2, DZ2): 2,
}


class Metric:
    """
    An immutable metric with precomputed star table.

    Attributes:
        kind (MetricKind): Which of the two metrics this is.
        matrix (Matrix): The metric matrix g.
        gram_real (Matrix): <dx_s, dx_t>, the entries of g^-1.
        vol (Form): The volume form, star of 1.
        star_table (Dict[BasisIndex, StarEntry]): Image of every canonical basis form.
        discrepancies (List[TableDiscrepancy]): Listed facts the oracle does not reproduce.
    """

    __slots__ = ("kind", "matrix", "gram_real", "vol", "star_table", "oracle", "discrepancies")

    def __init__(
        self,
        kind: MetricKind,
        matrix: Matrix,
        listed: Dict[BasisIndex, ListedEntry],
        listed_pairings: Optional[Dict[Tuple[Gen, Gen], int]] = None,
    ):
        self.kind = MetricKind(kind)
        self.matrix = matrix
        self.gram_real = invert(matrix)
        self.oracle: Dict[BasisIndex, Form] = oracle_table(matrix)
        self.discrepancies: List[TableDiscrepancy] = []

        for (a, b), value in (listed_pairings or {}).items():
            derived = pair_generators(a, b, self.gram_real)
            if derived != value:
                self.discrepancies.append(
                    TableDiscrepancy(
                        kind=DiscrepancyKind.PAIRING,
                        entry=f"<{a.label},{b.label}>",
                        listed=str(value),
                        derived=str(derived),
                    )
                )

        table: Dict[BasisIndex, StarEntry] = {}
        for index in all_basis_indices():
            oracle_image = self.oracle[index]
            if index in listed:
                entry = listed[index]
                table[index] = StarEntry(index, entry.image, StarSource.LISTED, entry.note)
                if entry.image != oracle_image:
                    self.discrepancies.append(
                        TableDiscrepancy(
                            kind=DiscrepancyKind.STAR,
                            entry=Form.index_label(index),
                            listed=entry.image.render(),
                            derived=oracle_image.render(),
                        )
                    )
            else:
                table[index] = StarEntry(index, oracle_image, StarSource.DERIVED)
        self.star_table = table
        self.vol = table[()].image

        for d in self.discrepancies:
            logger.info("%s metric: listed %s = %s, derived %s", self.kind.value, d.entry, d.listed, d.derived)

    def image(self, index: BasisIndex) -> Form:
        return self.star_table[index].image

    def __repr__(self) -> str:
        return f"Metric({self.kind.value})"


@lru_cache(maxsize=None)
def get_metric(kind: MetricKind) -> Metric:
    kind = MetricKind(kind)
    if kind is MetricKind.EUCLIDEAN:
        return Metric(kind, EUCLIDEAN_MATRIX, EUCLIDEAN_LISTED)
    return Metric(kind, MINKOWSKI_MATRIX, MINKOWSKI_LISTED, MINKOWSKI_LISTED_PAIRINGS)


EUCLIDEAN = MetricKind.EUCLIDEAN
MINKOWSKI = MetricKind.MINKOWSKI
