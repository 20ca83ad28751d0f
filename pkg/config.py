"""Numeric defaults and the validated command-line configuration."""
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, FilePath, field_validator, model_validator

DEFAULT_TOL = 1e-10
MAX_ITERATIONS = 10 ** 6
EQUALITY_TOL = 1e-6
INTEGRALITY_TOL = 1e-6
BRUTE_FORCE_CAP = 20
MAX_VERTICES = 10 ** 7

FUZZ_N_MAX = 40
FUZZ_D_MIN = 1
FUZZ_D_MAX = 5
FUZZ_TRIALS = 1000
FUZZ_SEED = 42


class Subcommand(str, Enum):
    ANALYZE = "analyze"
    GEN = "gen"
    VERIFY = "verify"
    FUZZ = "fuzz"
    ORACLE = "oracle"


class CliConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    input: Optional[FilePath] = None
    output: Optional[Path] = None
    tol: float = Field(default=DEFAULT_TOL, gt=0)
    equality_tol: float = Field(default=EQUALITY_TOL, gt=0)
    seed: int = Field(default=FUZZ_SEED, ge=0, lt=2 ** 64)
    cap: int = Field(default=BRUTE_FORCE_CAP, ge=1)
    verbosity: int = 0

    @field_validator("output")
    @classmethod
    def _output_parent_exists(cls, value: Optional[Path]) -> Optional[Path]:
        if value is not None and not value.parent.is_dir():
            raise ValueError(f"Output directory does not exist: {value.parent}")
        return value

    @model_validator(mode="after")
    def _input_required(self) -> "CliConfig":
        needs_input = self.subcommand in (Subcommand.ANALYZE, Subcommand.VERIFY, Subcommand.ORACLE)
        if needs_input and self.input is None:
            raise ValueError(f"'{self.subcommand.value}' requires an input edge-list file")
        return self
