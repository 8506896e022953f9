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

"""Tests for reward arithmetic, search configuration and best tracking."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from rift_workbench.candidates import CandidateSet
from rift_workbench.common.enums import MethodName, ObjectiveSign
from rift_workbench.faults import FaultSet
from rift_workbench.search import (
    COMPLEXITY_BOUND,
    BestTracker,
    RlConfig,
    SearchResult,
    bellman_update,
    complexity_estimate,
    default_tau,
    fitness,
    q_reward,
    reward,
)


class TestReward:
    """Tests for the impact-per-flip reward."""

    def test_hand_values(self):
        """Test the reference reward values."""
        assert reward(0.0, 5) == -0.2
        assert reward(0.0, 0) == -1.0
        assert reward(0.0, 1) == -1.0
        for size in (0, 1, 7, 1000):
            assert reward(1.0, size) == 0.0

    @given(st.floats(0, 1), st.integers(0, 10_000))
    def test_bounds(self, accuracy, size):
        """Test every reward lies in [-1, 0]."""
        assert -1.0 <= reward(accuracy, size) <= 0.0

    def test_fitness(self):
        """Test fitness is the negated reward."""
        assert fitness(0.0, 4) == 0.25
        assert fitness(1.0, 3) == 0.0

    def test_objective_sign(self):
        """Test the Bellman target sign per objective."""
        assert q_reward(-0.2, ObjectiveSign.IMPACT_MAXIMIZING) == 0.2
        assert q_reward(-0.2, ObjectiveSign.RAW_REWARD) == -0.2
        assert q_reward(-0.2, "impact_maximizing") == 0.2

    def test_bellman_hand_case(self):
        """Test Q' = 0 + 0.1 * (-0.2 + 0.9 * -0.1 - 0) = -0.029."""
        assert bellman_update(0.0, -0.2, 0.9, -0.1, 0.1) == pytest.approx(-0.029, abs=1e-12)

    def test_bellman_full_step(self):
        """Test a learning rate of 1 replaces Q with the target."""
        assert bellman_update(5.0, 1.0, 0.5, 2.0, 1.0) == pytest.approx(2.0)


class TestRlConfig:
    """Tests for Q-learning hyperparameter validation."""

    def test_defaults(self):
        """Test default hyperparameters and the derived budget."""
        cfg = RlConfig()
        assert cfg.episodes == 50
        assert cfg.max_evaluations == cfg.episodes * cfg.steps
        assert cfg.objective_sign == ObjectiveSign.IMPACT_MAXIMIZING.value

    def test_default_tau(self):
        """Test tau defaults to 1.5x chance accuracy."""
        assert default_tau(8) == pytest.approx(0.1875)
        assert RlConfig().resolve_tau(3) == pytest.approx(0.5)
        assert RlConfig(tau=0.2).resolve_tau(3) == 0.2

    def test_invalid_values(self):
        """Test each interval is enforced."""
        with pytest.raises(ValidationError, match="learning_rate"):
            RlConfig(learning_rate=0.0)
        with pytest.raises(ValidationError, match="discount"):
            RlConfig(discount=1.0)
        with pytest.raises(ValidationError, match="epsilon"):
            RlConfig(epsilon=1.5)
        with pytest.raises(ValidationError, match="tau"):
            RlConfig(tau=1.0)
        with pytest.raises(ValidationError):
            RlConfig(steps=0)


class TestComplexity:
    """Tests for the predicted search cost."""

    def test_evaluation_product(self):
        """Test E_max * T_max evaluations and the reported bound."""
        cands = CandidateSet(indices=tuple(range(10)), rho=0.1, n_params=100)
        estimate = complexity_estimate(cands, RlConfig(episodes=50, steps=20))
        assert estimate.evaluations == 1000
        assert estimate.action_scans == 10_000
        assert estimate.bound == COMPLEXITY_BOUND

    def test_zero_episodes(self):
        """Test no episodes means no evaluations."""
        cands = CandidateSet(indices=(0,), rho=0.1, n_params=10)
        assert complexity_estimate(cands, RlConfig(episodes=0)).evaluations == 0


class TestBestTracker:
    """Tests for the constrained best-set rule."""

    def test_constraint_first(self):
        """Test a satisfying set beats a higher-impact violating one."""
        tracker = BestTracker(tau=0.5)
        tracker.observe(FaultSet.msb([1]), 0.6)
        tracker.observe(FaultSet.msb([1, 2, 3, 4, 5]), 0.5)
        result = tracker.result(MethodName.RFI)
        assert result.f_crit == FaultSet.msb([1, 2, 3, 4, 5])
        assert result.constraint_satisfied is True
        assert result.best_reward == pytest.approx(-0.1)
        assert result.first_hit_evaluation == 2

    def test_smaller_set_breaks_reward_tie(self):
        """Test equal rewards prefer the smaller set."""
        tracker = BestTracker(tau=0.5)
        tracker.observe(FaultSet.msb([1, 2]), 0.0)
        tracker.observe(FaultSet.msb([7]), 0.5)
        assert tracker.result(MethodName.RFI).f_crit == FaultSet.msb([7])

    def test_lexicographic_tie(self):
        """Test identical reward and size prefer the smaller key."""
        tracker = BestTracker(tau=0.5)
        tracker.observe(FaultSet.msb([9]), 0.0)
        tracker.observe(FaultSet.msb([3]), 0.0)
        assert tracker.result(MethodName.RFI).f_crit == FaultSet.msb([3])

    def test_unsatisfied_result(self):
        """Test the best-reward set is flagged when tau is never met."""
        tracker = BestTracker(tau=0.1)
        tracker.observe(FaultSet.msb([1]), 0.9)
        tracker.observe(FaultSet.msb([2]), 0.5)
        result = tracker.result(MethodName.MAGNITUDE)
        assert result.constraint_satisfied is False
        assert result.f_crit == FaultSet.msb([2])
        assert result.first_hit_evaluation is None

    def test_counts(self):
        """Test evaluations and distinct sets are counted separately."""
        tracker = BestTracker(tau=0.5)
        for _ in range(3):
            tracker.observe(FaultSet.msb([1]), 1.0)
        tracker.observe(FaultSet.msb([2]), 1.0)
        result = tracker.result(MethodName.RFI, seed=4)
        assert result.evaluations_used == 4
        assert result.distinct_sets == 2
        assert result.reward_trace == [0.0] * 4
        assert len(result.trace) == 4
        assert result.seed == 4

    def test_empty_tracker(self):
        """Test a tracker that saw nothing reports an empty result."""
        tracker = BestTracker(tau=0.5)
        assert tracker.best_reward == math.inf
        result = tracker.result(MethodName.RIFT)
        assert result.f_crit == FaultSet()
        assert result.final_accuracy is None
        assert result.evaluations_used == 0

    def test_trace_can_be_dropped(self):
        """Test keep_trace=False keeps rewards but not steps."""
        tracker = BestTracker(tau=0.5, keep_trace=False)
        tracker.observe(FaultSet.msb([1]), 0.0)
        result = tracker.result(MethodName.RFI)
        assert result.trace == []
        assert result.reward_trace == [-1.0]


class TestSearchResult:
    """Tests for the result record."""

    def test_save_and_load(self, tmp_path):
        """Test the JSON file round-trips and uses the fault-set schema."""
        tracker = BestTracker(tau=0.5)
        tracker.observe(FaultSet.from_pairs([(3, 4), (12, 7)]), 0.25)
        result = tracker.result(MethodName.RIFT, seed=1, episode_best_rewards=[-0.375])
        path = result.save(tmp_path / "result.json")
        assert '"faults"' in path.read_text(encoding="utf-8")
        loaded = SearchResult.load(path)
        assert loaded == result
        assert loaded.f_crit_size == 2
