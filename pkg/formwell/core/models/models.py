from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict
from pydantic.fields import Field


# Global
class MetricKind(str, Enum):
    EUCLIDEAN = "euclidean"
    MINKOWSKI = "minkowski"


class DualityClass(str, Enum):
    SELF_DUAL = "SelfDual"
    ANTI_SELF_DUAL = "AntiSelfDual"
    BOTH = "Both"
    NEITHER = "Neither"


class StarSource(str, Enum):
    LISTED = "listed"
    DERIVED = "derived"


class DiscrepancyKind(str, Enum):
    PAIRING = "pairing"
    STAR = "star"


# JSON output models; field order is the serialised key order
class TableDiscrepancy(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: DiscrepancyKind = Field(description="Which listed fact disagrees with the definitional computation")
    entry: str = Field(description="The listed entry, e.g. '<dz2,dz2>' or 'dz1/\\dz2'")
    listed: str = Field(description="Value as listed")
    derived: str = Field(description="Value from the definitional computation")


class FormTerm(BaseModel):
    basis: str
    coeff: str


class VerificationReportOutput(BaseModel):
    metric: MetricKind
    is_vacuum_solution: bool
    duality: DualityClass
    condition_sum: str = Field(description="S_E for the Euclidean metric, S_M for Minkowski")
    condition_constant: Optional[str] = Field(description="Value of the condition sum when it is constant")
    lorenz: str = Field(description="The codifferential of the potential")
    wavelike_potential: bool
    harmonic_potential: bool
    wavelike_field: bool
    E: List[str]
    B: List[str]
    eb_inner: str
    energy: str
    d_star_F: List[FormTerm]
    table_discrepancies: List[TableDiscrepancy]


class StarEntryOutput(BaseModel):
    input: str
    output: str
    source: StarSource
    oracle: str = Field(description="Definitional star of the same basis form")
    agrees: bool
    note: Optional[str] = None


class StarTableOutput(BaseModel):
    metric: MetricKind
    entries: List[StarEntryOutput]
    discrepancies: List[TableDiscrepancy]


class StarOutput(BaseModel):
    metric: MetricKind
    input: str
    output: str


class FieldsOutput(BaseModel):
    metric: MetricKind
    F: List[FormTerm]
    components: Dict[str, str] = Field(description="F12, F1b2b, F11b, F22b, F12b, F21b")
    E: List[str]
    B: List[str]
    eb_inner: str
    energy: str
    current: Dict[str, str] = Field(description="Coefficients P1, Pb1, P2, Pb2 of star d star F")
    rho: str
    J: List[str]
    self_dual_part: List[FormTerm]
    anti_self_dual_part: List[FormTerm]


class GaugeOutput(BaseModel):
    metric: MetricKind
    u: str
    potential: List[str] = Field(description="f1, f2, fb1, fb2 after the transformation")
    curvature_invariant: bool
    condition_shift: str
    expected_shift: str = Field(description="Half the Laplacian (Euclidean) or d'Alembertian (Minkowski) of u")


class LorenzOutput(BaseModel):
    metric: MetricKind
    codifferential: str
    constant: Optional[str]
    hodge_harmonic: bool
    normalized_potential: Optional[List[str]] = None
    normalized_codifferential: Optional[str] = None


class EvalOutput(BaseModel):
    point: List[float]
    E: List[List[float]] = Field(description="Each component as [re, im]")
    B: List[List[float]]
    wirtinger: List[bool] = Field(description="check_wirtinger verdicts for f1, f2, fb1, fb2")
