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
Tabular Q-learning over add/remove edits of an MSB fault set.

Each episode starts from the empty set. Every step picks an action
epsilon-greedily, moves to the edited set, evaluates it on the DUT (one
evaluation), reverts the flips, scores the set and applies the Bellman
update. Episodes always run the full T_max steps.
"""

import logging
import math
from typing import NamedTuple, Optional

import numpy as np
from pydantic import Field

from rift_workbench.candidates.selection import CandidateSet
from rift_workbench.common.base import FrozenModel
from rift_workbench.common.enums import ActionKind, MethodName
from rift_workbench.common.errors import BudgetError, SearchError
from rift_workbench.dut.dataset import RepDataset
from rift_workbench.dut.evaluation import EvalCounter
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.faults.injection import evaluate_faulted
from rift_workbench.faults.sites import MSB, FaultSet, FaultSite, SiteKey
from rift_workbench.search.config import RlConfig
from rift_workbench.search.reward import bellman_update, q_reward
from rift_workbench.search.tracking import BestTracker, SearchResult

logger = logging.getLogger(__name__)


class Action(NamedTuple):
    """Add or remove the MSB flip of one candidate parameter."""

    kind: ActionKind
    param_index: int


class RlState(FrozenModel):
    """Current fault list of the agent."""

    faults: FaultSet = Field(default_factory=FaultSet)

    @property
    def canonical_key(self) -> SiteKey:
        return self.faults.key


class QTable:
    """Sparse Q(s, a) table; absent entries read as 0."""

    def __init__(self) -> None:
        self._values: dict[tuple[SiteKey, Action], float] = {}
        self._states: set[SiteKey] = set()

    def get(self, key: SiteKey, action: Action) -> float:
        return self._values.get((key, action), 0.0)

    def set(self, key: SiteKey, action: Action, value: float) -> None:
        self._values[(key, action)] = value
        self._states.add(key)

    def seen(self, key: SiteKey) -> bool:
        """True once any action of the state has been updated."""
        return key in self._states

    def max_value(self, key: SiteKey, actions: list[Action]) -> float:
        if not actions:
            return 0.0
        return max(self.get(key, a) for a in actions)

    def __len__(self) -> int:
        return len(self._values)


def action_space(state: FaultSet, cands: CandidateSet) -> list[Action]:
    """
    One action per candidate, in candidate order: remove if its MSB site is
    in the state, add otherwise.
    """
    present = {s.param_index for s in state.sites if s.bit == MSB}
    return [
        Action(ActionKind.REMOVE if index in present else ActionKind.ADD, index)
        for index in cands.indices
    ]


def transition(state: FaultSet, action: Action) -> FaultSet:
    site = FaultSite(param_index=action.param_index, bit=MSB)
    if action.kind == ActionKind.ADD:
        return state.with_site(site)
    return state.without_site(site)


def select_action(
    table: QTable,
    key: SiteKey,
    actions: list[Action],
    epsilon: float,
    rng: np.random.Generator,
) -> Action:
    """
    Epsilon-greedy choice.

    One uniform draw decides exploration. Exploring, or an unseen state,
    picks uniformly among all actions; otherwise uniformly among the
    actions tied at the maximal Q value.
    """
    explore = rng.random() < epsilon
    if explore or not table.seen(key):
        return actions[int(rng.integers(len(actions)))]
    values = np.array([table.get(key, a) for a in actions])
    tied = np.flatnonzero(values == values.max())
    if tied.size == 1:
        return actions[int(tied[0])]
    return actions[int(tied[rng.integers(tied.size)])]


def run_search(
    model: QuantizedModel,
    data: RepDataset,
    cands: CandidateSet,
    cfg: RlConfig,
    seed: int,
    eval_budget: Optional[int] = None,
    counter: Optional[EvalCounter] = None,
    method: MethodName = MethodName.RIFT,
) -> SearchResult:
    """
    Search for a minimal fault set with accuracy <= tau.

    Args:
        model: DUT; every applied set is reverted before the next step
        data: Representative dataset
        cands: Candidate parameters (action vocabulary)
        cfg: Q-learning hyperparameters
        seed: RNG seed for action selection
        eval_budget: Exact evaluation count; when given it replaces E_max * T_max
            and the episode count becomes ceil(eval_budget / T_max)
        counter: Evaluation counter to charge
        method: Label recorded in the result

    Returns:
        SearchResult; f_crit satisfies tau when constraint_satisfied is set

    Raises:
        SearchError: If the candidate set is empty
        BudgetError: If eval_budget is not positive
    """
    if not cands.indices:
        raise SearchError("Cannot search an empty candidate set")
    if eval_budget is not None and eval_budget < 1:
        raise BudgetError(f"Invalid evaluation budget '{eval_budget}': must be >= 1")

    tau = cfg.resolve_tau(model.arch.n_classes)
    if eval_budget is None:
        episodes, limit = cfg.episodes, cfg.max_evaluations
    else:
        episodes, limit = math.ceil(eval_budget / cfg.steps), eval_budget
    rng = np.random.default_rng(seed)
    table = QTable()
    tracker = BestTracker(tau)
    episode_best: list[float] = []

    for episode in range(episodes):
        if tracker.evaluations >= limit:
            break
        state = FaultSet()
        for _ in range(cfg.steps):
            if tracker.evaluations >= limit:
                break
            actions = action_space(state, cands)
            action = select_action(table, state.key, actions, cfg.epsilon, rng)
            next_state = transition(state, action)

            accuracy = evaluate_faulted(model, data, next_state, counter).accuracy
            r = tracker.observe(next_state, accuracy)

            target = q_reward(r, cfg.objective_sign)
            max_next = table.max_value(next_state.key, action_space(next_state, cands))
            updated = bellman_update(
                table.get(state.key, action),
                target,
                cfg.discount,
                max_next,
                cfg.learning_rate,
            )
            table.set(state.key, action, updated)
            state = next_state

        episode_best.append(tracker.best_reward)
        logger.debug(
            "episode %d: best reward %.4f, |Q| = %d", episode + 1, tracker.best_reward, len(table)
        )

    result = tracker.result(method, seed=seed, episode_best_rewards=episode_best)
    logger.info(
        "%s search finished: |F_crit|=%d, accuracy=%s, %d evaluations",
        MethodName(method).value,
        result.f_crit_size,
        result.final_accuracy,
        result.evaluations_used,
    )
    return result
