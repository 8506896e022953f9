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
Q-learning search configuration.
"""

from typing import Optional

from pydantic import Field, field_validator

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import ObjectiveSign
from rift_workbench.common.validators import validate_unit_interval

# tau defaults to this multiple of chance accuracy
TAU_CHANCE_MULTIPLE = 1.5


def default_tau(n_classes: int) -> float:
    """Failure threshold of 1.5x chance accuracy."""
    return TAU_CHANCE_MULTIPLE / n_classes


class RlConfig(RiftBaseModel):
    """
    Hyperparameters of the tabular Q-learning fault-set search.
    """

    episodes: int = Field(50, ge=0, description="E_max, episodes per search")
    steps: int = Field(20, ge=1, description="T_max, steps per episode")
    learning_rate: float = Field(0.1, description="alpha_rl in (0, 1]")
    discount: float = Field(0.9, description="gamma in [0, 1)")
    epsilon: float = Field(0.2, description="Exploration rate in [0, 1]")
    tau: Optional[float] = Field(
        None, description="Failure threshold in [0, 1); None means 1.5x chance accuracy"
    )
    objective_sign: ObjectiveSign = Field(
        ObjectiveSign.IMPACT_MAXIMIZING, description="Reward sign inside the Bellman update"
    )

    @field_validator("learning_rate")
    @classmethod
    def check_learning_rate(cls, v: float) -> float:
        return validate_unit_interval(v, "learning_rate", open_low=True)

    @field_validator("discount")
    @classmethod
    def check_discount(cls, v: float) -> float:
        return validate_unit_interval(v, "discount", open_high=True)

    @field_validator("epsilon")
    @classmethod
    def check_epsilon(cls, v: float) -> float:
        return validate_unit_interval(v, "epsilon")

    @field_validator("tau")
    @classmethod
    def check_tau(cls, v: Optional[float]) -> Optional[float]:
        if v is None:
            return v
        return validate_unit_interval(v, "tau", open_high=True)

    @property
    def max_evaluations(self) -> int:
        """E_max * T_max."""
        return self.episodes * self.steps

    def resolve_tau(self, n_classes: int) -> float:
        return self.tau if self.tau is not None else default_tau(n_classes)
