# Copyright 2025 The RIFT Workbench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Campaign configuration: one JSON document composing every sub-config.

Example:

    {
      "seed": 7,
      "arch": {"n_blocks": 2, "width": 64},
      "rho": 0.001,
      "rl": {"episodes": 50, "steps": 20},
      "baselines": ["rfi", "evolutionary"],
      "n_seeds": 15
    }
"""

import logging
import os
from pathlib import Path
from typing import Optional, Union

from pydantic import Field, ValidationError, field_validator

from rift_workbench.baselines.evolutionary import EvoConfig
from rift_workbench.baselines.random_injection import DEFAULT_MAX_K
from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import MethodName, ParamRole
from rift_workbench.common.errors import ConfigError
from rift_workbench.common.validators import validate_selection_rate
from rift_workbench.dse.report import DseConfig
from rift_workbench.dut.config import ArchConfig, DatasetConfig, TrainingConfig
from rift_workbench.search.config import RlConfig

logger = logging.getLogger(__name__)

SEED_ENV_VAR = "RIFT_SEED"

DEFAULT_BASELINES = (
    MethodName.RFI,
    MethodName.MAGNITUDE,
    MethodName.GRADIENT,
    MethodName.EVOLUTIONARY,
)


class CampaignConfig(RiftBaseModel):
    """Complete experiment protocol."""

    seed: int = Field(0, ge=0, description="Base seed; the DUT uses it, run s uses seed + s")
    arch: ArchConfig = Field(default_factory=ArchConfig)
    dataset: DatasetConfig = Field(default_factory=DatasetConfig)
    training: TrainingConfig = Field(default_factory=TrainingConfig)

    alpha: float = Field(0.5, ge=0, le=1, description="Gradient weight of the hybrid score")
    beta: float = Field(0.0, ge=0, description="Hotspot weighting strength")
    hotspot_traffic: dict[ParamRole, float] = Field(
        default_factory=dict, description="Raw access counts per role; used when beta > 0"
    )
    rho: float = Field(0.001, description="Candidate selection rate in (0, 1]")

    rl: RlConfig = Field(default_factory=RlConfig)
    evo: EvoConfig = Field(default_factory=EvoConfig)
    max_k: int = Field(DEFAULT_MAX_K, ge=1, description="Largest random-injection set")
    eval_budget: Optional[int] = Field(
        None, ge=1, description="Evaluations per method run; None means E_max * T_max"
    )
    baselines: list[MethodName] = Field(default_factory=lambda: list(DEFAULT_BASELINES))
    n_seeds: int = Field(15, ge=1)
    tau: Optional[float] = Field(
        None, ge=0, lt=1, description="Failure threshold; None means 1.5x chance accuracy"
    )

    build_oracle: bool = True
    degradation_cutoff: float = Field(0.90, ge=0, le=1)
    emit_uvm: bool = True
    dse: DseConfig = Field(default_factory=DseConfig)
    max_workers: int = Field(1, ge=1, description="Seed jobs run concurrently")

    @field_validator("rho")
    @classmethod
    def check_rho(cls, v: float) -> float:
        return validate_selection_rate(v)

    @field_validator("baselines")
    @classmethod
    def check_baselines(cls, v: list[MethodName]) -> list[MethodName]:
        if MethodName.RIFT in v:
            raise ValueError("Invalid baselines: 'rift' always runs and is not a baseline")
        return list(dict.fromkeys(v))

    @property
    def resolved_tau(self) -> float:
        if self.tau is not None:
            return self.tau
        return self.rl.resolve_tau(self.arch.n_classes)

    @property
    def resolved_budget(self) -> int:
        return self.eval_budget if self.eval_budget is not None else self.rl.max_evaluations

    def run_seeds(self) -> list[int]:
        return [self.seed + s for s in range(self.n_seeds)]

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "CampaignConfig":
        """
        Load a JSON config, then apply the RIFT_SEED override.

        Raises:
            ConfigError: If the file is missing, unreadable or invalid
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"Cannot read config {path}: {e.strerror or e}") from e
        try:
            config = cls.model_validate_json(text)
        except ValidationError as e:
            raise ConfigError(f"Invalid config {path}: {e}") from e
        return config.with_env_overrides()

    def with_env_overrides(self) -> "CampaignConfig":
        raw = os.environ.get(SEED_ENV_VAR)
        if raw is None:
            return self
        try:
            seed = int(raw)
        except ValueError as e:
            raise ConfigError(f"Invalid {SEED_ENV_VAR} '{raw}': expected an integer") from e
        if seed < 0:
            raise ConfigError(f"Invalid {SEED_ENV_VAR} '{raw}': must be >= 0")
        logger.info("Seed overridden by %s=%d", SEED_ENV_VAR, seed)
        return self.model_copy(update={"seed": seed})
