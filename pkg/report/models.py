from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from utils.config import Config

TaskName = Literal["fan", "strata", "walls", "horn", "expected", "kmut"]
KmutCheck = Literal["311", "412", "braid", "shift"]
ALL_TASKS: List[str] = ["fan", "strata", "walls", "horn", "expected", "kmut"]


# Pydantic models
class AnalysisRequest(BaseModel):
    schema_version: int = Field(default=Config.INPUT_SCHEMA_VERSION, alias="schema")
    weights: Optional[List[List[int]]] = None
    labels: Optional[List[str]] = None
    chamber_labels: Optional[List[str]] = None
    wall_labels: Optional[List[str]] = None
    tasks: List[TaskName] = Field(default_factory=list)
    chamber: Optional[int] = None
    near_wall: Optional[int] = None
    wall: Optional[int] = None
    lambdas: List[List[int]] = Field(default_factory=lambda: [[1, 0], [0, 1]])
    window_weight: int = 0
    kmut_checks: List[KmutCheck] = Field(default_factory=lambda: ["311", "412", "braid", "shift"])
    corpus_size: Optional[int] = None
    seed: Optional[int] = None
    output_format: Literal["json", "text", "svg"] = "json"

    model_config = {"populate_by_name": True}


class InputEcho(BaseModel):
    weights: Optional[List[List[int]]] = None
    labels: Optional[List[str]] = None
    tasks: List[str]


class RayRecord(BaseModel):
    chi: List[int]
    multipliers: List[int]
    total: int
    members: List[str]


class WallSummary(BaseModel):
    index: int
    label: str
    ray: List[int]
    source_group: int
    opposite_group: Optional[int] = None


class ChamberRecord(BaseModel):
    index: int
    label: str
    generators: List[List[int]]


class FanRecord(BaseModel):
    rays: List[RayRecord]
    walls: List[WallSummary]
    chambers: List[ChamberRecord]


class StratumRecord(BaseModel):
    lam: List[int] = Field(alias="lambda")
    mu_squared: str
    z: str
    s: str
    eta_plus: int
    eta_minus: int

    model_config = {"populate_by_name": True}


class StratificationRecord(BaseModel):
    title: str
    chamber: int
    chamber_label: str
    linearization: List[int]
    lambda_max: List[int]
    s_max: str
    strata: List[StratumRecord]


class WindowRecord(BaseModel):
    weight: int
    g_window: List[int]
    c_window: List[int]
    next_g_window: List[int]
    dual_weight: int


class SubquotientRecord(BaseModel):
    positive_weights: List[int]
    negative_weights: List[int]
    collection_length: int
    weighted_projective: bool


class WallRecord(BaseModel):
    index: int
    label: str
    verdict: str
    k: int
    chi_plus: List[int]
    chi_minus: List[int]
    chamber_plus: str
    chamber_minus: str
    lambda_plus: List[int]
    lambda_minus: List[int]
    shared_z: Optional[str] = None
    eta: int
    window: WindowRecord
    residual_weights: List[int]
    fixed_subquotient: SubquotientRecord
    sides: List[StratificationRecord]


class HornFactor(BaseModel):
    form: str
    exponent: int


class HornRecord(BaseModel):
    lam: List[int] = Field(alias="lambda")
    coefficient: str
    factors: List[HornFactor]
    rendered: str

    model_config = {"populate_by_name": True}


class PointRecord(BaseModel):
    zero_of: str
    ray_groups: List[int]
    functional: List[int]
    lengths: Dict[str, int]
    length: int


class ExpectedRecord(BaseModel):
    wall: int
    label: str
    applicable: bool
    d_formula: Optional[int] = None
    points: List[PointRecord]
    discriminant_length: int
    collection_length: int
    agree: Optional[bool] = None
    note: str = ""


class KmutRecord(BaseModel):
    check: str
    seed: int
    instances: int
    passed: int
    failed: int
    skipped: int = 0
    notes: List[str] = Field(default_factory=list)


class Report(BaseModel):
    schema_version: int = Config.REPORT_SCHEMA_VERSION
    input: InputEcho
    fan: Optional[FanRecord] = None
    strata: Optional[List[StratificationRecord]] = None
    walls: Optional[List[WallRecord]] = None
    horn: Optional[List[HornRecord]] = None
    expected: Optional[List[ExpectedRecord]] = None
    kmut: Optional[List[KmutRecord]] = None
    warnings: List[str] = Field(default_factory=list)
