"""Pydantic request/response models for the HTTP service.

Complex numbers travel as two-element [re, im] arrays, matching the CLI
document schemas; the models mirror those schemas and delegate semantic
validation to the document codecs.
"""

from __future__ import annotations

import math
from typing import Annotated, Literal, Optional, Union

from pydantic import AfterValidator, BaseModel, ConfigDict, Field


def _finite_pair(value: tuple[float, float]) -> tuple[float, float]:
    if not all(math.isfinite(x) for x in value):
        raise ValueError(f"complex components must be finite, got {value!r}")
    return value


ComplexPair = Annotated[tuple[float, float], AfterValidator(_finite_pair)]


class InvariantsModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    g2: ComplexPair
    g3: ComplexPair


class EquationModel(BaseModel):
    """Either polynomial form (numerator/denominator) or canonical form (kind/...)."""

    model_config = ConfigDict(extra="forbid")
    p: Optional[int] = Field(default=None, ge=1)
    numerator: Optional[list[ComplexPair]] = None
    denominator: Optional[list[ComplexPair]] = None
    kind: Optional[Literal["I", "II", "III", "IV", "V", "VI"]] = None
    c: Optional[ComplexPair] = None
    sigma: Optional[list[ComplexPair]] = None
    tau: Optional[list[ComplexPair]] = None

    def document(self) -> dict:
        return self.model_dump(exclude_none=True)


class EllipticFractionalModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    family: Literal["elliptic-fractional"]
    a: ComplexPair
    b: ComplexPair
    d: ComplexPair
    z0: ComplexPair = (0.0, 0.0)
    invariants: InvariantsModel


class WpRationalModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    family: Literal["wp-rational-II", "wp-rational-III", "wp-rational-IV"]
    c: ComplexPair
    L: Optional[ComplexPair] = None
    z0: ComplexPair = (0.0, 0.0)
    invariants: InvariantsModel


_IDENTITY = ((1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0))


class TrigModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    family: Literal["trig"]
    alpha: ComplexPair
    beta: ComplexPair = (0.0, 0.0)
    outer: tuple[ComplexPair, ComplexPair, ComplexPair, ComplexPair] = _IDENTITY


class ExpModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    family: Literal["exp"]
    alpha: ComplexPair
    outer: tuple[ComplexPair, ComplexPair, ComplexPair, ComplexPair] = _IDENTITY


SolutionModel = Annotated[
    Union[EllipticFractionalModel, WpRationalModel, TrigModel, ExpModel],
    Field(discriminator="family"),
]


class VerifyOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")
    samples: int = Field(default=200, ge=1, le=100_000)
    tolerance: float = Field(default=1e-6, gt=0)
    seed: int = 42


class ClassifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    equation: EquationModel


class ClassifyResponse(BaseModel):
    canonical: bool
    kind: Optional[str] = None
    c: Optional[ComplexPair] = None
    sigma: Optional[list[ComplexPair]] = None
    tau: Optional[list[ComplexPair]] = None
    p: Optional[int] = None
    numerator_pattern: Optional[list[int]] = None
    denominator_pattern: Optional[list[int]] = None
    reason: Optional[str] = None


class SolveRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    equation: EquationModel
    z0: ComplexPair = (0.0, 0.0)
    beta: ComplexPair = (0.0, 0.0)
    branch: int = 0
    anchor: Optional[ComplexPair] = None


class ReportModel(BaseModel):
    sample_count: int
    max_abs_residual: float
    max_rel_residual: float
    worst_point: ComplexPair
    excluded_points: int
    passed: bool = Field(serialization_alias="pass")
    tolerance: float


class SolveResponse(BaseModel):
    status: Literal["solved", "no-solution", "unresolved"]
    classification: Optional[ClassifyResponse] = None
    solution: Optional[SolutionModel] = None
    reason: Optional[str] = None


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    equation: EquationModel
    solution: SolutionModel
    options: VerifyOptions = VerifyOptions()


class EvalRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    solution: SolutionModel
    points: list[ComplexPair] = Field(min_length=1)


class EvalRow(BaseModel):
    z: ComplexPair
    status: Literal["ok", "pole", "pole-proximity"]
    u: Optional[ComplexPair] = None
    u1: Optional[ComplexPair] = None
    u2: Optional[ComplexPair] = None
    u3: Optional[ComplexPair] = None


class EvalResponse(BaseModel):
    values: list[EvalRow]


class PeriodsResponse(BaseModel):
    omega1: ComplexPair
    omega3: ComplexPair
    stationary_values: list[ComplexPair]


class GenerateRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    tau: tuple[ComplexPair, ComplexPair, ComplexPair, ComplexPair]
    i: int = Field(ge=1, le=4)
    b: ComplexPair
    z0: ComplexPair = (0.0, 0.0)


class GenerateResponse(BaseModel):
    equation: EquationModel
    coefficients: dict
    solution: SolutionModel


class SelftestRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    samples: int = Field(default=200, ge=1, le=100_000)
    seed: int = 42


class CriterionModel(BaseModel):
    index: int
    name: str
    passed: bool
    detail: str


class SelftestResponse(BaseModel):
    all_passed: bool
    criteria: list[CriterionModel]
