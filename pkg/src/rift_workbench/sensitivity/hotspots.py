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
Memory-hotspot weighting of sensitivity scores.

Traffic per parameter role is a configuration input. Scores of parameters
in high-traffic roles are scaled by (1 + beta * h(role)).
"""

from typing import Mapping

import numpy as np
from pydantic import Field, field_validator

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import ParamRole
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.sensitivity.scores import SensitivityProfile


class HotspotMap(RiftBaseModel):
    """Access weight per parameter role, normalized so the busiest role is 1."""

    access_weight: dict[ParamRole, float] = Field(
        default_factory=dict, description="Role -> weight in [0, 1]; missing roles are 0"
    )

    @field_validator("access_weight")
    @classmethod
    def normalize(cls, v: dict[ParamRole, float]) -> dict[ParamRole, float]:
        if any(w < 0 for w in v.values()):
            raise ValueError("Invalid hotspot map: access weights must be non-negative")
        peak = max(v.values(), default=0.0)
        if peak <= 0:
            raise ValueError("Invalid hotspot map: at least one role needs positive traffic")
        return {role: w / peak for role, w in v.items()}

    @classmethod
    def from_traffic(cls, counts: Mapping[str, float]) -> "HotspotMap":
        """Build from raw access counts per role (any positive scale)."""
        return cls(access_weight={ParamRole(role): float(c) for role, c in counts.items()})

    def weight(self, role: str) -> float:
        return float(self.access_weight.get(ParamRole(role), 0.0))

    def per_parameter(self, model: QuantizedModel) -> np.ndarray:
        """h(group(i)) for every flat index."""
        return np.repeat(
            np.array([self.weight(g.name) for g in model.groups], dtype=np.float64),
            [g.size for g in model.groups],
        )


def apply_hotspot_weighting(
    profile: SensitivityProfile,
    model: QuantizedModel,
    hotspots: HotspotMap,
    beta: float,
) -> SensitivityProfile:
    """
    Scale scores by (1 + beta * h(group(i))) and re-rank.

    Args:
        profile: Profile to weight
        model: Model whose groups define group(i)
        hotspots: Normalized traffic per role
        beta: Weighting strength; 0 leaves the profile unchanged

    Raises:
        ValueError: If beta is negative or the profile does not match the model
    """
    if beta < 0:
        raise ValueError(f"Invalid hotspot beta '{beta}': must be non-negative")
    if profile.n_params != model.n_params:
        raise ValueError(
            f"Invalid profile: {profile.n_params} scores for {model.n_params} parameters"
        )
    if beta == 0:
        return profile.model_copy(update={"hotspot_beta": 0.0})
    scores = profile.scores * (1.0 + beta * hotspots.per_parameter(model))
    return SensitivityProfile.from_scores(scores, profile.alpha, hotspot_beta=beta)
