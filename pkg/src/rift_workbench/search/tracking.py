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
Best-set tracking and the SearchResult record shared by every method.

The best set is chosen by one rule for all methods:

1. sets with accuracy <= tau beat sets without;
2. then the more negative reward wins;
3. then the smaller set;
4. then the lexicographically smaller canonical site list.
"""

import math
from pathlib import Path
from typing import Optional, Union

from pydantic import Field

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import MethodName
from rift_workbench.dut.dataset import RepDataset
from rift_workbench.dut.evaluation import EvalCounter
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.faults.injection import evaluate_faulted
from rift_workbench.faults.sites import FaultSet, SiteKey
from rift_workbench.search.reward import reward
from rift_workbench.utils.encoding import write_text_lf


class TraceStep(RiftBaseModel):
    """One evaluated fault set."""

    faults: FaultSet
    accuracy: float = Field(..., ge=0, le=1)
    reward: float = Field(..., ge=-1, le=0)


class SearchResult(RiftBaseModel):
    """
    Outcome of one budgeted search.

    evaluations_used counts evaluate() calls; distinct_sets counts distinct
    fault sets among them (the two ways of counting test vectors).
    """

    method: MethodName
    seed: Optional[int] = None
    tau: float = Field(..., ge=0, le=1)
    f_crit: FaultSet = Field(default_factory=FaultSet)
    best_reward: float = Field(0.0, ge=-1, le=0)
    final_accuracy: Optional[float] = Field(None, ge=0, le=1)
    constraint_satisfied: bool = False
    evaluations_used: int = Field(0, ge=0)
    first_hit_evaluation: Optional[int] = Field(
        None, ge=1, description="1-based evaluation at which acc <= tau first held"
    )
    distinct_sets: int = Field(0, ge=0)
    reward_trace: list[float] = Field(default_factory=list)
    trace: list[TraceStep] = Field(default_factory=list)
    episode_best_rewards: list[float] = Field(
        default_factory=list, description="Best reward after each episode (RL only)"
    )

    @property
    def f_crit_size(self) -> int:
        return len(self.f_crit)

    def save(self, path: Union[str, Path]) -> Path:
        return write_text_lf(Path(path), self.to_json() + "\n")

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "SearchResult":
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))


class BestTracker:
    """
    Accumulates the trace of a method and keeps the best set under the
    constrained rule.
    """

    def __init__(self, tau: float, keep_trace: bool = True) -> None:
        self.tau = tau
        self.keep_trace = keep_trace
        self.trace: list[TraceStep] = []
        self.rewards: list[float] = []
        self.evaluations = 0
        self.first_hit: Optional[int] = None
        self._seen: set[SiteKey] = set()
        self._best: Optional[tuple[bool, float, int, SiteKey]] = None
        self._best_step: Optional[TraceStep] = None

    @property
    def best_reward(self) -> float:
        return self._best[1] if self._best is not None else math.inf

    @property
    def best(self) -> Optional[TraceStep]:
        return self._best_step

    def observe(self, faults: FaultSet, accuracy: float) -> float:
        """Record one evaluated set; returns its reward."""
        r = reward(accuracy, len(faults))
        self.evaluations += 1
        satisfied = accuracy <= self.tau
        if satisfied and self.first_hit is None:
            self.first_hit = self.evaluations
        step = TraceStep(faults=faults, accuracy=accuracy, reward=r)
        if self.keep_trace:
            self.trace.append(step)
        self.rewards.append(r)
        self._seen.add(faults.key)

        rank = (not satisfied, r, len(faults), faults.key)
        if self._best is None or rank < self._best:
            self._best = rank
            self._best_step = step
        return r

    def result(
        self,
        method: MethodName,
        seed: Optional[int] = None,
        episode_best_rewards: Optional[list[float]] = None,
    ) -> SearchResult:
        best = self._best_step
        return SearchResult(
            method=method,
            seed=seed,
            tau=self.tau,
            f_crit=best.faults if best else FaultSet(),
            best_reward=best.reward if best else 0.0,
            final_accuracy=best.accuracy if best else None,
            constraint_satisfied=bool(best and best.accuracy <= self.tau),
            evaluations_used=self.evaluations,
            first_hit_evaluation=self.first_hit,
            distinct_sets=len(self._seen),
            reward_trace=list(self.rewards),
            trace=list(self.trace),
            episode_best_rewards=list(episode_best_rewards or []),
        )


def replay_accuracy(
    model: QuantizedModel,
    data: RepDataset,
    result: SearchResult,
    counter: Optional[EvalCounter] = None,
) -> float:
    """
    Re-evaluate f_crit of a result.

    Charges a private counter unless one is given, so verification does not
    disturb campaign accounting.
    """
    return evaluate_faulted(model, data, result.f_crit, counter or EvalCounter()).accuracy
