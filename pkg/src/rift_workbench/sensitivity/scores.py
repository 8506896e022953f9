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
Hybrid vulnerability scores and the global parameter ranking.

    S_i = alpha * |g_i| / ||g||_2 + (1 - alpha) * |w_i| / ||W||_2

w are the float shadow weights and g the straight-through gradients of the
mean cross-entropy on the full representative dataset.
"""

import csv
import logging
from pathlib import Path
from typing import Union

import numpy as np
from pydantic import Field, field_validator, model_validator

from rift_workbench.common.base import ArrayModel
from rift_workbench.common.validators import validate_unit_interval
from rift_workbench.dut.dataset import RepDataset
from rift_workbench.dut.evaluation import gradients
from rift_workbench.dut.model import QuantizedModel

logger = logging.getLogger(__name__)


def rank_scores(scores: np.ndarray) -> np.ndarray:
    """Indices by descending score; equal scores keep ascending index order."""
    return np.argsort(-scores, kind="stable")


class SensitivityProfile(ArrayModel):
    """Per-parameter hybrid score and the ranking derived from it."""

    scores: np.ndarray = Field(..., description="S_i >= 0, length n_params")
    ranking: np.ndarray = Field(..., description="Permutation of [0, n) by descending S_i")
    alpha: float = Field(..., ge=0, le=1, description="Gradient weight in the hybrid score")
    hotspot_beta: float = Field(0.0, ge=0, description="Hotspot weighting strength")

    @field_validator("scores")
    @classmethod
    def check_scores(cls, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.float64)
        if v.ndim != 1 or v.size == 0:
            raise ValueError("Invalid scores: expected a non-empty vector")
        if np.any(v < 0) or not np.all(np.isfinite(v)):
            raise ValueError("Invalid scores: values must be finite and non-negative")
        return v

    @model_validator(mode="after")
    def check_ranking(self) -> "SensitivityProfile":
        ranking = np.asarray(self.ranking, dtype=np.int64)
        n = self.scores.size
        if ranking.shape != (n,) or not np.array_equal(np.sort(ranking), np.arange(n)):
            raise ValueError(f"Invalid ranking: expected a permutation of [0, {n})")
        return self

    @classmethod
    def from_scores(
        cls, scores: np.ndarray, alpha: float, hotspot_beta: float = 0.0
    ) -> "SensitivityProfile":
        scores = np.asarray(scores, dtype=np.float64)
        return cls(
            scores=scores,
            ranking=rank_scores(scores),
            alpha=alpha,
            hotspot_beta=hotspot_beta,
        )

    @property
    def n_params(self) -> int:
        return int(self.scores.size)

    def rank_of(self) -> np.ndarray:
        """Rank (0 = most sensitive) of every parameter index."""
        ranks = np.empty(self.n_params, dtype=np.int64)
        ranks[self.ranking] = np.arange(self.n_params)
        return ranks


def hybrid_scores_from_vectors(
    weights: np.ndarray, grads: np.ndarray, alpha: float
) -> np.ndarray:
    """
    Hybrid score kernel on explicit weight and gradient vectors.

    Raises:
        ValueError: If alpha is outside [0, 1] or ||W||_2 is zero
    """
    validate_unit_interval(alpha, "alpha")
    weights = np.asarray(weights, dtype=np.float64)
    grads = np.asarray(grads, dtype=np.float64)
    w_norm = float(np.linalg.norm(weights))
    if w_norm == 0:
        raise ValueError("Invalid weights: ||W||_2 is zero")
    magnitude = np.abs(weights) / w_norm
    g_norm = float(np.linalg.norm(grads))
    gradient = np.abs(grads) / g_norm if g_norm > 0 else np.zeros_like(magnitude)
    return alpha * gradient + (1.0 - alpha) * magnitude


def hybrid_scores(
    model: QuantizedModel, data: RepDataset, alpha: float
) -> SensitivityProfile:
    """
    Score every parameter of the model.

    Gradients are only computed when alpha > 0.

    Args:
        model: Quantized DUT
        data: Representative dataset (full batch)
        alpha: Weight of the gradient term in [0, 1]

    Returns:
        SensitivityProfile with hotspot_beta = 0
    """
    validate_unit_interval(alpha, "alpha")
    grads = gradients(model, data) if alpha > 0 else np.zeros(model.n_params)
    scores = hybrid_scores_from_vectors(model.float_weights, grads, alpha)
    profile = SensitivityProfile.from_scores(scores, alpha)
    logger.info(
        "Sensitivity profile computed: alpha=%.2f, top index %d",
        alpha,
        int(profile.ranking[0]),
    )
    return profile


def export_profile_csv(
    profile: SensitivityProfile, model: QuantizedModel, path: Union[str, Path]
) -> Path:
    """
    Write param_index, group, score, rank rows in parameter-index order.

    rank is 1 for the most sensitive parameter.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    roles = model.role_vector()
    ranks = profile.rank_of()
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["param_index", "group", "score", "rank"])
        for index in range(profile.n_params):
            score = repr(float(profile.scores[index]))
            writer.writerow([index, roles[index], score, int(ranks[index]) + 1])
    return path
