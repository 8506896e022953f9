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
Experiment orchestration: multi-seed campaigns, statistics, ablations and
the scalability sweep.
"""

from rift_workbench.campaign.ablation import (
    AblationRow,
    ablation_alpha,
    ablation_rl_only,
    ablation_rl_params,
    convergence_episode,
    write_ablation_csv,
)
from rift_workbench.campaign.config import DEFAULT_BASELINES, SEED_ENV_VAR, CampaignConfig
from rift_workbench.campaign.pipeline import (
    PreparedDut,
    candidates_for,
    prepare_dut,
    profile_model,
)
from rift_workbench.campaign.runner import (
    AGGREGATE_COLUMNS,
    CampaignReport,
    SeedRecord,
    replay_seed_record,
    run_campaign,
    run_seed,
)
from rift_workbench.campaign.scalability import (
    ScalabilityReport,
    ScalePoint,
    fit_scaling,
    scalability_sweep,
)
from rift_workbench.campaign.stats import (
    StatsSummary,
    WelchResult,
    ci95,
    cohens_d,
    summarize,
    welch_t,
    welch_test,
)

__all__ = [
    # Configuration
    "CampaignConfig",
    "DEFAULT_BASELINES",
    "SEED_ENV_VAR",
    # Pipeline
    "PreparedDut",
    "prepare_dut",
    "profile_model",
    "candidates_for",
    # Campaign
    "SeedRecord",
    "CampaignReport",
    "AGGREGATE_COLUMNS",
    "run_seed",
    "run_campaign",
    "replay_seed_record",
    # Statistics
    "WelchResult",
    "welch_test",
    "welch_t",
    "cohens_d",
    "ci95",
    "StatsSummary",
    "summarize",
    # Ablations
    "AblationRow",
    "convergence_episode",
    "ablation_alpha",
    "ablation_rl_only",
    "ablation_rl_params",
    "write_ablation_csv",
    # Scalability
    "ScalePoint",
    "ScalabilityReport",
    "fit_scaling",
    "scalability_sweep",
]
