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
Brute-force ground truth of critical single-bit faults.

Every parameter's MSB is flipped alone and the resulting accuracy drop is
compared with the degradation cutoff. The resulting set is the coverage
denominator for all method comparisons.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Union

from pydantic import Field, field_validator

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.dut.dataset import RepDataset
from rift_workbench.dut.evaluation import EvalCounter, evaluate
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.faults.injection import injected
from rift_workbench.faults.sites import MSB, FaultSet, FaultSite
from rift_workbench.utils.encoding import write_text_lf

logger = logging.getLogger(__name__)


class CriticalOracle(RiftBaseModel):
    """
    Exhaustive single-site MSB critical set.

    degradation(acc) = (baseline - acc) / (baseline - chance_floor). With
    the default chance_floor of 0 this is the plain relative accuracy drop;
    a positive floor measures the drop against a chance-level predictor.
    """

    threshold_tau: float = Field(..., ge=0, le=1, description="Failure threshold tau")
    degradation_cutoff: float = Field(
        0.90, ge=0, le=1, description="Relative degradation a critical flip must exceed"
    )
    chance_floor: float = Field(0.0, ge=0, lt=1, description="Accuracy counted as total loss")
    baseline_accuracy: float = Field(..., ge=0, le=1, description="Unfaulted accuracy")
    critical_singletons: tuple[FaultSite, ...] = Field(
        default=(), description="Critical MSB sites in canonical order"
    )
    n_evaluated: int = Field(0, ge=0, description="Singletons enumerated")

    @field_validator("critical_singletons")
    @classmethod
    def sort_singletons(cls, v: tuple[FaultSite, ...]) -> tuple[FaultSite, ...]:
        return tuple(sorted(set(v), key=lambda s: s.pair))

    def degradation(self, accuracy: float) -> float:
        """Relative accuracy drop with respect to the baseline."""
        span = self.baseline_accuracy - self.chance_floor
        if span <= 0:
            return 0.0
        return (self.baseline_accuracy - accuracy) / span

    def is_critical(self, accuracy: float) -> bool:
        return self.degradation(accuracy) > self.degradation_cutoff

    def __contains__(self, site: object) -> bool:
        return site in set(self.critical_singletons)

    def save(self, path: Union[str, Path]) -> Path:
        return write_text_lf(Path(path), self.model_dump_json(indent=2) + "\n")

    @classmethod
    def load(cls, path: Union[str, Path]) -> "CriticalOracle":
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))


def _scan(
    model: QuantizedModel,
    data: RepDataset,
    indices: range,
    counter: Optional[EvalCounter],
) -> list[tuple[int, float]]:
    results = []
    for index in indices:
        with injected(model, FaultSet.msb([index])):
            results.append((index, evaluate(model, data, counter).accuracy))
    return results


def build_critical_oracle(
    model: QuantizedModel,
    data: RepDataset,
    tau: float,
    degradation_cutoff: float = 0.90,
    chance_floor: float = 0.0,
    counter: Optional[EvalCounter] = None,
    max_workers: int = 1,
) -> CriticalOracle:
    """
    Enumerate all single-site MSB flips and keep the critical ones.

    Args:
        model: DUT (restored bit-exactly on return)
        data: Representative dataset
        tau: Failure threshold recorded with the oracle
        degradation_cutoff: Relative degradation a flip must exceed
        chance_floor: Accuracy treated as complete degradation
        counter: Evaluation counter to charge (defaults to the global one)
        max_workers: Threads; each worker scans a chunk on its own clone

    Returns:
        CriticalOracle over all n_params MSB sites
    """
    baseline = evaluate(model, data, counter).accuracy
    oracle = CriticalOracle(
        threshold_tau=tau,
        degradation_cutoff=degradation_cutoff,
        chance_floor=chance_floor,
        baseline_accuracy=baseline,
    )

    n = model.n_params
    if max_workers <= 1:
        scanned = _scan(model, data, range(n), counter)
    else:
        step = -(-n // max_workers)
        chunks = [range(lo, min(lo + step, n)) for lo in range(0, n, step)]
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            parts = pool.map(lambda c: _scan(model.clone(), data, c, counter), chunks)
            scanned = [item for part in parts for item in part]

    critical = [
        FaultSite(param_index=index, bit=MSB)
        for index, accuracy in scanned
        if oracle.is_critical(accuracy)
    ]
    logger.info(
        "Critical oracle: %d of %d MSB singletons critical (baseline accuracy %.4f)",
        len(critical),
        n,
        baseline,
    )
    return oracle.model_copy(
        update={"critical_singletons": tuple(critical), "n_evaluated": n}
    )
