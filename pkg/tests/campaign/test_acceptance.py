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
Comparative claims on the default DUT with the default protocol.

Every test here trains the 66,560-parameter DUT and spends the full
15-seed budget, so the module is marked slow.
"""

import pytest

from rift_workbench.campaign import (
    CampaignConfig,
    ablation_alpha,
    ablation_rl_only,
    candidates_for,
    prepare_dut,
    run_seed,
    scalability_sweep,
    welch_t,
)
from rift_workbench.candidates import family_concentration
from rift_workbench.common.enums import MethodName, RoleFamily

pytestmark = pytest.mark.slow

DEFAULT_CAMPAIGN = CampaignConfig(seed=42)


@pytest.fixture(scope="module")
def default_runs():
    model, data = prepare_dut(DEFAULT_CAMPAIGN)
    _, cands = candidates_for(model, data, DEFAULT_CAMPAIGN)
    runs = {name: [] for name in MethodName}
    for seed in DEFAULT_CAMPAIGN.run_seeds():
        record, full = run_seed(model, data, cands, DEFAULT_CAMPAIGN, seed)
        assert not record.failures
        for name, result in full.items():
            runs[MethodName(name)].append(result)
    return model, cands, runs


def sizes(results) -> list[float]:
    return [float(r.f_crit_size) for r in results]


def mean(values) -> float:
    return sum(values) / len(values)


def mean_first_hit(results, budget: int) -> float:
    """Evaluations to the first tau hit; a run that never hits counts as budget + 1."""
    hits = [r.first_hit_evaluation for r in results]
    return mean([budget + 1 if hit is None else hit for hit in hits])


class TestDefaultProtocol:
    """Tests for the default protocol: rho 0.001, 50 x 20 evaluations, 15 seeds."""

    def test_defaults(self, default_runs):
        """Test k = 66 candidates and a 1000-evaluation budget."""
        model, cands, runs = default_runs
        assert model.n_params == 66_560
        assert cands.k == 66
        assert DEFAULT_CAMPAIGN.resolved_budget == 1000
        for results in runs.values():
            assert len(results) == 15
            assert all(r.evaluations_used == 1000 for r in results)

    def test_rift_meets_tau_with_small_sets(self, default_runs):
        """Test RIFT reaches tau on every seed with a mean |F_crit| of at most 10."""
        _, _, runs = default_runs
        rift = runs[MethodName.RIFT]
        assert all(r.constraint_satisfied for r in rift)
        assert mean(sizes(rift)) <= 10

    def test_rfi_fails_or_needs_larger_sets(self, default_runs):
        """Test RFI misses tau or needs at least twice RIFT's mean |F_crit|."""
        _, _, runs = default_runs
        rift, rfi = sizes(runs[MethodName.RIFT]), sizes(runs[MethodName.RFI])
        if all(r.constraint_satisfied for r in runs[MethodName.RFI]):
            assert mean(rfi) >= 2 * mean(rift)
            assert welch_t(rfi, rift) < 0.05

    def test_first_hit_ordering(self, default_runs):
        """Test RIFT hits tau sooner than the evolutionary search, which beats RFI."""
        _, _, runs = default_runs
        budget = DEFAULT_CAMPAIGN.resolved_budget
        rift = mean_first_hit(runs[MethodName.RIFT], budget)
        evolutionary = mean_first_hit(runs[MethodName.EVOLUTIONARY], budget)
        rfi = mean_first_hit(runs[MethodName.RFI], budget)
        assert rift < evolutionary < rfi

    def test_candidates_favor_attention_and_normalization(self, default_runs):
        """Test attention and normalization hold more candidates than the FFN."""
        model, cands, _ = default_runs
        shares = {RoleFamily(f): s for f, s in family_concentration(cands, model).items()}
        sensitive = shares[RoleFamily.ATTENTION] + shares[RoleFamily.NORMALIZATION]
        assert sensitive > shares[RoleFamily.FFN]


class TestDefaultAblations:
    """Tests for the ablation and scaling claims on the default DUT."""

    def test_hybrid_alpha_beats_pure_scores(self):
        """Test alpha 0.5 gives a smaller mean |F_crit| than alpha 0 or 1."""
        pure_weight, hybrid, pure_gradient = ablation_alpha(DEFAULT_CAMPAIGN, [0.0, 0.5, 1.0])
        assert hybrid.f_crit_size.mean < pure_weight.f_crit_size.mean
        assert hybrid.f_crit_size.mean < pure_gradient.f_crit_size.mean

    def test_rl_only_needs_larger_sets(self):
        """Test random candidates need at least 3x the complete pipeline's |F_crit|."""
        complete, rl_only = ablation_rl_only(DEFAULT_CAMPAIGN)
        assert rl_only.f_crit_size.mean >= 3 * complete.f_crit_size.mean

    def test_runtime_linear_in_k(self):
        """Test search runtime is linear in the candidate count."""
        report = scalability_sweep([100, 200, 400, 800], DEFAULT_CAMPAIGN)
        assert report.runtime_r2 > 0.95
