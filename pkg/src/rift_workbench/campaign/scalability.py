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
Search cost as the candidate count k grows.

Runtime is fitted with a straight line in k and peak traced memory with a
power law k^b (a line in log-log space). Evaluations stay at E_max * T_max
for every k.
"""

import logging
import math
import time
import tracemalloc
from typing import Optional, Sequence

from pydantic import Field
from scipy import stats

from rift_workbench.campaign.config import CampaignConfig
from rift_workbench.campaign.pipeline import prepare_dut, profile_model
from rift_workbench.candidates.selection import select_candidates
from rift_workbench.common.base import RiftBaseModel
from rift_workbench.search.agent import run_search

logger = logging.getLogger(__name__)


class ScalePoint(RiftBaseModel):
    k: int = Field(..., ge=1)
    runtime_seconds: float = Field(..., ge=0)
    peak_memory_bytes: int = Field(..., ge=0, description="tracemalloc peak during the search")
    evaluations: int = Field(..., ge=0)


class ScalabilityReport(RiftBaseModel):
    points: list[ScalePoint]
    runtime_slope: Optional[float] = Field(None, description="Seconds per candidate")
    runtime_r2: Optional[float] = None
    memory_exponent: Optional[float] = Field(None, description="b in memory ~ k^b")
    memory_r2: Optional[float] = None


def fit_scaling(points: Sequence[ScalePoint]) -> ScalabilityReport:
    """
    Fit runtime ~ k and memory ~ k^b.

    Fewer than two distinct k values leaves every fit None.
    """
    report = ScalabilityReport(points=list(points))
    if len({p.k for p in points}) < 2:
        logger.warning("Scalability fit skipped: need at least two distinct k values")
        return report
    ks = [float(p.k) for p in points]
    runtime = stats.linregress(ks, [p.runtime_seconds for p in points])
    report.runtime_slope = float(runtime.slope)
    report.runtime_r2 = float(runtime.rvalue**2)
    if all(p.peak_memory_bytes > 0 for p in points):
        memory = stats.linregress(
            [math.log(k) for k in ks], [math.log(p.peak_memory_bytes) for p in points]
        )
        report.memory_exponent = float(memory.slope)
        report.memory_r2 = float(memory.rvalue**2)
    return report


def scalability_sweep(
    k_grid: Sequence[int], config: CampaignConfig, seed: Optional[int] = None
) -> ScalabilityReport:
    """
    Run one search per k on the top-k candidates of the configured profile.

    Raises:
        ValueError: If a k exceeds the parameter count
    """
    model, data = prepare_dut(config)
    profile = profile_model(model, data, config)
    rl = config.rl.model_copy(update={"tau": config.resolved_tau})
    seed = config.seed if seed is None else seed

    points = []
    for k in k_grid:
        if not 1 <= k <= model.n_params:
            raise ValueError(f"Invalid candidate count '{k}': expected 1..{model.n_params}")
        cands = select_candidates(profile, k / model.n_params)
        tracemalloc.start()
        started = time.perf_counter()
        try:
            result = run_search(model, data, cands, rl, seed)
            elapsed = time.perf_counter() - started
            _, peak = tracemalloc.get_traced_memory()
        finally:
            tracemalloc.stop()
        points.append(
            ScalePoint(
                k=cands.k,
                runtime_seconds=elapsed,
                peak_memory_bytes=peak,
                evaluations=result.evaluations_used,
            )
        )
        logger.info("k=%d: %.2f s, peak %d bytes", cands.k, elapsed, peak)
    return fit_scaling(points)
