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
Single entry point that runs any method under an evaluation budget.
"""

from typing import Optional

from pydantic import Field

from rift_workbench.baselines.evolutionary import EvoConfig, run_evolutionary
from rift_workbench.baselines.random_injection import DEFAULT_MAX_K, run_rfi
from rift_workbench.baselines.ranking import run_gradient, run_magnitude
from rift_workbench.candidates.selection import CandidateSet
from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import MethodName
from rift_workbench.common.errors import SearchError
from rift_workbench.dut.dataset import RepDataset
from rift_workbench.dut.evaluation import EvalCounter
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.search.agent import run_search
from rift_workbench.search.config import RlConfig
from rift_workbench.search.tracking import SearchResult


class BudgetedMethod(RiftBaseModel):
    """A method, its evaluation budget and its seed."""

    name: MethodName
    eval_budget: int = Field(..., ge=1)
    seed: int = 0


def run_method(
    method: BudgetedMethod,
    model: QuantizedModel,
    data: RepDataset,
    tau: float,
    cands: Optional[CandidateSet] = None,
    rl: Optional[RlConfig] = None,
    evo: Optional[EvoConfig] = None,
    max_k: int = DEFAULT_MAX_K,
    counter: Optional[EvalCounter] = None,
) -> SearchResult:
    """
    Dispatch to the method's runner with its budget and seed.

    RIFT and the evolutionary search need a candidate set. RIFT runs with
    `rl` (tau overridden by the given one) with its episode count derived
    from the budget, so every method consumes exactly `eval_budget` evaluations.

    Raises:
        SearchError: If a candidate-driven method has no candidates
    """
    name = MethodName(method.name)
    budget, seed = method.eval_budget, method.seed

    if name in (MethodName.RIFT, MethodName.EVOLUTIONARY) and cands is None:
        raise SearchError(f"Method '{name.value}' requires a candidate set")

    if name is MethodName.RFI:
        return run_rfi(model, data, budget, seed, tau, max_k=max_k, counter=counter)
    if name is MethodName.MAGNITUDE:
        return run_magnitude(model, data, budget, tau, counter=counter)
    if name is MethodName.GRADIENT:
        return run_gradient(model, data, budget, tau, counter=counter)
    if name is MethodName.EVOLUTIONARY:
        return run_evolutionary(
            model, data, cands, evo or EvoConfig(), budget, seed, tau, counter=counter
        )
    rl_cfg = (rl or RlConfig()).model_copy(update={"tau": tau})
    return run_search(model, data, cands, rl_cfg, seed, eval_budget=budget, counter=counter)
