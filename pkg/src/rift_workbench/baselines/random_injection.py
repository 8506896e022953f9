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
Random fault injection (RFI) over the full bit space.

Each draw picks a set size k uniformly in [1, max_k] and then k distinct
bits uniformly from all n_params * 8 bits, so any bit position may be hit.
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

logger = logging.getLogger(__name__)

DEFAULT_MAX_K = 10


def sample_fault_set(n_bits: int, max_k: int, rng: np.random.Generator) -> FaultSet:
    """One uniform RFI draw."""
    k = int(rng.integers(1, max_k + 1))
    flat_bits = rng.choice(n_bits, size=k, replace=False)
    return FaultSet.from_pairs((int(u) // 8, int(u) % 8) for u in flat_bits)


def rfi_hit_probability(max_k: int, space_size: int, budget: int) -> float:
    """
    Probability that at least one of `budget` RFI draws contains a given bit.

    A draw of size k contains a fixed bit with probability k / space_size;
    averaged over k ~ U[1, max_k] that is (max_k + 1) / (2 * space_size).
    """
    if max_k < 1 or space_size < max_k:
        raise ValueError(
            f"Invalid RFI parameters: max_k={max_k}, space_size={space_size}"
        )
    p = (max_k + 1) / (2 * space_size)
    return 1.0 - (1.0 - p) ** budget


def run_rfi(
    model: QuantizedModel,
    data: RepDataset,
    budget: int,
    seed: int,
    tau: float,
    max_k: int = DEFAULT_MAX_K,
    counter: Optional[EvalCounter] = None,
) -> SearchResult:
    """
    Evaluate `budget` uniformly random fault sets.

    Args:
        model: DUT (restored after every draw)
        data: Representative dataset
        budget: Number of evaluations, at least 1
        seed: RNG seed
        tau: Failure threshold
        max_k: Largest set size drawn (capped at the bit count)
        counter: Evaluation counter to charge

    Returns:
        SearchResult with the best set under the constrained rule

    Raises:
        BudgetError: If budget < 1
    """
    if budget < 1:
        raise BudgetError(f"Invalid evaluation budget '{budget}': must be >= 1")
    n_bits = model.n_bits
    max_k = min(max_k, n_bits)
    rng = np.random.default_rng(seed)
    tracker = BestTracker(tau)

    for _ in range(budget):
        faults = sample_fault_set(n_bits, max_k, rng)
        accuracy = evaluate_faulted(model, data, faults, counter).accuracy
        tracker.observe(faults, accuracy)

    result = tracker.result(MethodName.RFI, seed=seed)
    logger.info(
        "rfi finished: |F_crit|=%d, satisfied=%s, %d evaluations",
        result.f_crit_size,
        result.constraint_satisfied,
        result.evaluations_used,
    )
    return result
