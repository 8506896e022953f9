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
Tabular Q-learning search for minimal critical fault sets, plus the reward,
best-tracking and result records shared with the baseline methods.
"""

from rift_workbench.search.agent import (
    Action,
    QTable,
    RlState,
    action_space,
    run_search,
    select_action,
    transition,
)
from rift_workbench.search.complexity import (
    COMPLEXITY_BOUND,
    ComplexityEstimate,
    complexity_estimate,
)
from rift_workbench.search.config import TAU_CHANCE_MULTIPLE, RlConfig, default_tau
from rift_workbench.search.reward import bellman_update, fitness, q_reward, reward
from rift_workbench.search.tracking import (
    BestTracker,
    SearchResult,
    TraceStep,
    replay_accuracy,
)

__all__ = [
    # Configuration
    "RlConfig",
    "TAU_CHANCE_MULTIPLE",
    "default_tau",
    # Reward arithmetic
    "reward",
    "fitness",
    "q_reward",
    "bellman_update",
    # Agent
    "Action",
    "RlState",
    "QTable",
    "action_space",
    "transition",
    "select_action",
    "run_search",
    # Results
    "TraceStep",
    "SearchResult",
    "BestTracker",
    "replay_accuracy",
    # Cost model
    "ComplexityEstimate",
    "COMPLEXITY_BOUND",
    "complexity_estimate",
]
