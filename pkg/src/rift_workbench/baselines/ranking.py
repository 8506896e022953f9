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
Static (magnitude) and dynamic (gradient) ranking baselines.

Both consume a parameter ranking greedily: evaluation j flips the MSBs of
the j top-ranked parameters, so prefix sizes grow by one per evaluation.
"""

import logging
from typing import Optional

import numpy as np

from rift_workbench.common.enums import MethodName
from rift_workbench.common.errors import BudgetError
from rift_workbench.dut.dataset import RepDataset
from rift_workbench.dut.evaluation import EvalCounter
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.faults.injection import evaluate_faulted
from rift_workbench.faults.sites import FaultSet
from rift_workbench.search.tracking import BestTracker, SearchResult
from rift_workbench.sensitivity.scores import hybrid_scores

logger = logging.getLogger(__name__)


def run_prefixes(
    model: QuantizedModel,
    data: RepDataset,
    ranking: np.ndarray,
    budget: int,
    tau: float,
    method: MethodName,
    counter: Optional[EvalCounter] = None,
) -> SearchResult:
    """
    Evaluate MSB flips of ranking[:1], ranking[:2], ... for `budget` steps.

    The prefix cannot outgrow the parameter count; a larger budget stops at
    n_params evaluations with a warning.
    """
    if budget < 1:
        raise BudgetError(f"Invalid evaluation budget '{budget}': must be >= 1")
    steps = min(budget, len(ranking))
    if steps < budget:
        logger.warning(
            "%s: budget %d exceeds %d parameters; stopping after %d prefixes",
            MethodName(method).value,
            budget,
            len(ranking),
            steps,
        )
    tracker = BestTracker(tau)
    for size in range(1, steps + 1):
        faults = FaultSet.msb(ranking[:size])
        accuracy = evaluate_faulted(model, data, faults, counter).accuracy
        tracker.observe(faults, accuracy)

    result = tracker.result(method)
    logger.info(
        "%s finished: |F_crit|=%d, satisfied=%s, %d evaluations",
        MethodName(method).value,
        result.f_crit_size,
        result.constraint_satisfied,
        result.evaluations_used,
    )
    return result


def run_magnitude(
    model: QuantizedModel,
    data: RepDataset,
    budget: int,
    tau: float,
    counter: Optional[EvalCounter] = None,
) -> SearchResult:
    """Greedy prefixes of the descending |w| ranking (hybrid score, alpha = 0)."""
    ranking = hybrid_scores(model, data, alpha=0.0).ranking
    return run_prefixes(model, data, ranking, budget, tau, MethodName.MAGNITUDE, counter)


def run_gradient(
    model: QuantizedModel,
    data: RepDataset,
    budget: int,
    tau: float,
    counter: Optional[EvalCounter] = None,
) -> SearchResult:
    """Greedy prefixes of the descending |grad| ranking (hybrid score, alpha = 1)."""
    ranking = hybrid_scores(model, data, alpha=1.0).ranking
    return run_prefixes(model, data, ranking, budget, tau, MethodName.GRADIENT, counter)
