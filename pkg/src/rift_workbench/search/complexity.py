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
Predicted cost of a Q-learning search.
"""

from pydantic import Field

from rift_workbench.candidates.selection import CandidateSet
from rift_workbench.common.base import FrozenModel
from rift_workbench.search.config import RlConfig

COMPLEXITY_BOUND = "O(|P_crit| · E_max · T_max · C_eval)"


class ComplexityEstimate(FrozenModel):
    """Evaluation count and asymptotic bound for one search."""

    evaluations: int = Field(..., ge=0, description="E_max * T_max model evaluations")
    candidate_count: int = Field(..., ge=0)
    action_scans: int = Field(
        ..., ge=0, description="Q-table reads over the action space, |P_crit| per step"
    )
    bound: str = COMPLEXITY_BOUND


def complexity_estimate(cands: CandidateSet, cfg: RlConfig) -> ComplexityEstimate:
    evaluations = cfg.max_evaluations
    return ComplexityEstimate(
        evaluations=evaluations,
        candidate_count=cands.k,
        action_scans=cands.k * evaluations,
    )
