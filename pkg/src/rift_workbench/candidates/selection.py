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
Candidate pruning: keep the top-rho fraction of the sensitivity ranking.
"""

import logging
import math

import numpy as np
from pydantic import Field, field_validator, model_validator

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import ParamRole, RoleFamily
from rift_workbench.common.validators import validate_selection_rate
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.faults.sites import MSB, FaultSite
from rift_workbench.sensitivity.scores import SensitivityProfile

logger = logging.getLogger(__name__)

# floor() tolerance for products such as 0.29 * 100
_FLOOR_EPS = 1e-9


class CandidateSet(RiftBaseModel):
    """
    Critical candidate parameters P_crit, most sensitive first.
    """

    indices: tuple[int, ...] = Field(..., description="Flat parameter indices")
    rho: float = Field(..., description="Selection rate in (0, 1]")
    n_params: int = Field(..., ge=1, description="Size of the ranked parameter space")

    @field_validator("rho")
    @classmethod
    def check_rho(cls, v: float) -> float:
        return validate_selection_rate(v)

    @model_validator(mode="after")
    def check_indices(self) -> "CandidateSet":
        if not self.indices:
            raise ValueError("Invalid candidate set: at least one index is required")
        if len(set(self.indices)) != len(self.indices):
            raise ValueError("Invalid candidate set: duplicate indices")
        if min(self.indices) < 0 or max(self.indices) >= self.n_params:
            raise ValueError(
                f"Invalid candidate set: indices must lie in [0, {self.n_params})"
            )
        return self

    @property
    def k(self) -> int:
        return len(self.indices)

    def msb_sites(self) -> list[FaultSite]:
        """MSB site of every candidate, in candidate order."""
        return [FaultSite(param_index=i, bit=MSB) for i in self.indices]

    def __contains__(self, index: object) -> bool:
        return index in set(self.indices)


def candidate_count(n_params: int, rho: float) -> int:
    """k = max(1, floor(rho * n))."""
    validate_selection_rate(rho)
    return max(1, math.floor(rho * n_params + _FLOOR_EPS))


def select_candidates(profile: SensitivityProfile, rho: float) -> CandidateSet:
    """
    Take the length-k prefix of the profile ranking.

    Args:
        profile: Sensitivity profile
        rho: Selection rate in (0, 1]

    Returns:
        CandidateSet with k = max(1, floor(rho * n)) indices

    Raises:
        ValueError: If rho is outside (0, 1]
    """
    k = candidate_count(profile.n_params, rho)
    indices = tuple(int(i) for i in profile.ranking[:k])
    logger.info("Selected %d candidates (rho=%g of %d)", k, rho, profile.n_params)
    return CandidateSet(indices=indices, rho=rho, n_params=profile.n_params)


def random_candidates(n_params: int, k: int, seed: int) -> CandidateSet:
    """
    Uniformly random candidate set of size k, for the RL-only ablation arm.
    """
    if not 1 <= k <= n_params:
        raise ValueError(f"Invalid candidate count '{k}': expected 1..{n_params}")
    rng = np.random.default_rng(seed)
    indices = tuple(int(i) for i in rng.choice(n_params, size=k, replace=False))
    return CandidateSet(indices=indices, rho=k / n_params, n_params=n_params)


def group_concentration(
    cands: CandidateSet, model: QuantizedModel
) -> dict[ParamRole, float]:
    """
    Fraction of candidates per parameter role.

    Every role present in the model appears; the fractions sum to 1.
    """
    roles = model.role_vector()
    counts = {role: 0 for role in dict.fromkeys(g.role for g in model.groups)}
    for index in cands.indices:
        counts[ParamRole(roles[index])] += 1
    return {role: count / cands.k for role, count in counts.items()}


def family_concentration(
    cands: CandidateSet, model: QuantizedModel
) -> dict[RoleFamily, float]:
    """group_concentration rolled up into attention / ffn / normalization / classifier."""
    families = {family: 0.0 for family in RoleFamily}
    for role, fraction in group_concentration(cands, model).items():
        families[role.family] += fraction
    return families
