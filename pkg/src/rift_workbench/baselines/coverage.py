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
Coverage of the critical-singleton ground truth and per-method comparison
rows.
"""

import csv
import logging
from pathlib import Path
from typing import Iterable, Sequence, Union

from pydantic import Field

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import MethodName
from rift_workbench.faults.oracle import CriticalOracle
from rift_workbench.faults.sites import FaultSite
from rift_workbench.search.tracking import SearchResult

logger = logging.getLogger(__name__)


def identified_singletons(
    results: Iterable[SearchResult], oracle: CriticalOracle
) -> set[FaultSite]:
    """
    Critical singletons credited to a method.

    A singleton is credited when some evaluated set contains it and that
    set's measured degradation exceeded the oracle cutoff. Only evaluated
    sets count.
    """
    critical = set(oracle.critical_singletons)
    found: set[FaultSite] = set()
    for result in results:
        for step in result.trace:
            if oracle.is_critical(step.accuracy):
                found.update(site for site in step.faults.sites if site in critical)
    return found


def coverage(results: Iterable[SearchResult], oracle: CriticalOracle) -> float:
    """
    Fraction of oracle.critical_singletons identified by the results.

    An oracle without critical singletons yields 0.0.
    """
    if not oracle.critical_singletons:
        return 0.0
    found = identified_singletons(results, oracle)
    return len(found) / len(oracle.critical_singletons)


class MethodComparison(RiftBaseModel):
    """One comparison row, averaged over the seeds of a method."""

    method: MethodName
    coverage: float = Field(..., ge=0, le=1)
    evaluations: float = Field(..., ge=0, description="Mean evaluate() calls per run")
    distinct_sets: float = Field(..., ge=0, description="Mean distinct sets per run")
    best_set_size: float = Field(..., ge=0, description="Mean |F_crit|")
    success_rate: float = Field(..., ge=0, le=1, description="Runs with acc <= tau")
    efficiency: float = Field(..., ge=0, description="Coverage per 1000 evaluations")
    runs: int = Field(..., ge=1)

    @classmethod
    def from_results(
        cls, method: MethodName, results: Sequence[SearchResult], oracle: CriticalOracle
    ) -> "MethodComparison":
        if not results:
            raise ValueError(f"No results for method '{MethodName(method).value}'")
        n = len(results)
        mean_coverage = sum(coverage([r], oracle) for r in results) / n
        evaluations = sum(r.evaluations_used for r in results) / n
        return cls(
            method=method,
            coverage=mean_coverage,
            evaluations=evaluations,
            distinct_sets=sum(r.distinct_sets for r in results) / n,
            best_set_size=sum(r.f_crit_size for r in results) / n,
            success_rate=sum(r.constraint_satisfied for r in results) / n,
            efficiency=1000.0 * mean_coverage / evaluations if evaluations else 0.0,
            runs=n,
        )


COMPARISON_COLUMNS = [
    "method",
    "coverage",
    "evaluations",
    "distinct_sets",
    "best_set_size",
    "success_rate",
    "efficiency",
    "runs",
]


def compare_methods(
    results_by_method: dict[MethodName, Sequence[SearchResult]], oracle: CriticalOracle
) -> list[MethodComparison]:
    rows = [
        MethodComparison.from_results(method, results, oracle)
        for method, results in results_by_method.items()
    ]
    for row in rows:
        logger.info(
            "%s: coverage %.3f over %.0f evaluations", row.method, row.coverage, row.evaluations
        )
    return rows


def write_comparison_csv(rows: Sequence[MethodComparison], path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=COMPARISON_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row.model_dump())
    return path
