"""JSON-facing records. Field order and serialization aliases are the output
schema of the command-line tool; half-integers render as ``"p/2"`` strings and
certificates as ``[u, v, half_units]`` rows over the edges of positive weight."""
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from families.membership import MembershipReport
from matching.deficiency import DeficiencyWitness
from spectral.power_iteration import SpectralEstimate


def half_units_str(half_units: int) -> str:
    return f"{half_units}/2"


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    n: int
    d: int
    lambda1: SpectralEstimate
    alpha_f_half_units: int = Field(serialization_alias="alpha_f")
    bound: float
    slack: float
    k_star: float
    equality_flag: bool = Field(serialization_alias="equality")
    membership: Optional[MembershipReport] = None
    regular_case: bool
    violation: bool = False
    certificate: List[Tuple[int, int, int]] = []

    @field_serializer("alpha_f_half_units")
    def _alpha_as_half(self, value: int) -> str:
        return half_units_str(value)

    @property
    def alpha_f(self) -> Fraction:
        return Fraction(self.alpha_f_half_units, 2)


class EqualityHit(BaseModel):
    model_config = ConfigDict(frozen=True)

    digest: str
    report: VerificationReport


class CampaignSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    trials: int
    violations: int
    bound_violations: int
    lemma_violations: int
    crosscheck_failures: int
    worst_slack: float
    worst_digest: str
    equality_hits: List[EqualityHit]
    violating_graphs: List[str]
    seed: int


class VerifyReport(BaseModel):
    """Outcome of every check run on one graph."""
    model_config = ConfigDict(frozen=True)

    report: VerificationReport
    bound_holds: bool
    lemma_contrapositive: bool
    lemma_sweep: bool
    equality_outcome: str
    berge_tutte: Optional[bool] = None
    anomalies: List[str] = []
    passed: bool


class OracleReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    alpha_f_half_units: int = Field(serialization_alias="alpha_f")
    witness: DeficiencyWitness
    isolated: int
    deficiency: int
    half_n_minus_def: int
    agree: bool
    certificate: List[Tuple[int, int, int]] = []

    @field_serializer("alpha_f_half_units", "half_n_minus_def")
    def _as_half(self, value: int) -> str:
        return half_units_str(value)
