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
Comparison methods run under the same evaluation budget as the Q-learning
search: random injection, magnitude and gradient ranking, and evolutionary
search, plus coverage scoring against the critical oracle.
"""

from rift_workbench.baselines.coverage import (
    COMPARISON_COLUMNS,
    MethodComparison,
    compare_methods,
    coverage,
    identified_singletons,
    write_comparison_csv,
)
from rift_workbench.baselines.evolutionary import (
    EvoConfig,
    EvolutionarySearch,
    run_evolutionary,
)
from rift_workbench.baselines.random_injection import (
    DEFAULT_MAX_K,
    rfi_hit_probability,
    run_rfi,
    sample_fault_set,
)
from rift_workbench.baselines.ranking import run_gradient, run_magnitude, run_prefixes
from rift_workbench.baselines.runner import BudgetedMethod, run_method

__all__ = [
    # Random injection
    "DEFAULT_MAX_K",
    "sample_fault_set",
    "rfi_hit_probability",
    "run_rfi",
    # Ranking baselines
    "run_prefixes",
    "run_magnitude",
    "run_gradient",
    # Evolutionary search
    "EvoConfig",
    "EvolutionarySearch",
    "run_evolutionary",
    # Dispatch
    "BudgetedMethod",
    "run_method",
    # Coverage and comparison
    "coverage",
    "identified_singletons",
    "MethodComparison",
    "COMPARISON_COLUMNS",
    "compare_methods",
    "write_comparison_csv",
]
