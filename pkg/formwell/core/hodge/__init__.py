from formwell.core.hodge.metric import EUCLIDEAN, MINKOWSKI, Metric, StarEntry, get_metric
from formwell.core.hodge.operators import (
    codiff,
    duality_split,
    eigenbasis,
    eigenvalue,
    hodge_laplacian,
    pair_1forms,
    pair_forms,
    star,
    star_real,
    table_report,
)
from formwell.core.hodge.oracle import EUCLIDEAN_MATRIX, MINKOWSKI_MATRIX, real_oracle_table, star_oracle

__all__ = [
    "EUCLIDEAN",
    "EUCLIDEAN_MATRIX",
    "MINKOWSKI",
    "MINKOWSKI_MATRIX",
    "Metric",
    "StarEntry",
    "codiff",
    "duality_split",
    "eigenbasis",
    "eigenvalue",
    "get_metric",
    "hodge_laplacian",
    "pair_1forms",
    "pair_forms",
    "real_oracle_table",
    "star",
    "star_oracle",
    "star_real",
    "table_report",
]
