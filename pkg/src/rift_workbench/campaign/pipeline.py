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
Shared front half of every experiment: build the DUT, profile it and pick
candidates.
"""

import logging
from typing import NamedTuple, Optional

from rift_workbench.campaign.config import CampaignConfig
from rift_workbench.candidates.selection import CandidateSet, select_candidates
from rift_workbench.dut.dataset import RepDataset, representative_dataset
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.dut.training import build_dut
from rift_workbench.sensitivity.hotspots import HotspotMap, apply_hotspot_weighting
from rift_workbench.sensitivity.scores import SensitivityProfile, hybrid_scores

logger = logging.getLogger(__name__)


class PreparedDut(NamedTuple):
    model: QuantizedModel
    data: RepDataset


def prepare_dut(config: CampaignConfig) -> PreparedDut:
    """Train the DUT and regenerate its representative dataset."""
    model = build_dut(config.arch, config.seed, config.training, config.dataset)
    data = representative_dataset(config.arch, config.seed, config.dataset)
    return PreparedDut(model, data)


def profile_model(
    model: QuantizedModel,
    data: RepDataset,
    config: CampaignConfig,
    alpha: Optional[float] = None,
) -> SensitivityProfile:
    """Hybrid scores at `alpha` (config.alpha by default), hotspot-weighted when beta > 0."""
    profile = hybrid_scores(model, data, config.alpha if alpha is None else alpha)
    if config.beta > 0 and config.hotspot_traffic:
        hotspots = HotspotMap.from_traffic(config.hotspot_traffic)
        profile = apply_hotspot_weighting(profile, model, hotspots, config.beta)
    elif config.beta > 0:
        logger.warning("beta=%g ignored: no hotspot_traffic configured", config.beta)
    return profile


def candidates_for(
    model: QuantizedModel,
    data: RepDataset,
    config: CampaignConfig,
    alpha: Optional[float] = None,
) -> tuple[SensitivityProfile, CandidateSet]:
    profile = profile_model(model, data, config, alpha)
    return profile, select_candidates(profile, config.rho)
