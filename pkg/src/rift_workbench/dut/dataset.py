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
Representative evaluation dataset for the DUT.
"""

from typing import Optional

import numpy as np
import torch
from pydantic import Field, PrivateAttr, field_validator, model_validator

from rift_workbench.common.base import ArrayModel
from rift_workbench.dut.config import ArchConfig, DatasetConfig


class RepDataset(ArrayModel):
    """
    Labelled feature vectors used for every accuracy measurement.

    Inputs are float64 of shape (n_samples, input_dim); labels are int64
    class indices in [0, n_classes).
    """

    inputs: np.ndarray = Field(..., description="Feature matrix (n_samples, input_dim)")
    labels: np.ndarray = Field(..., description="Class index per sample")
    n_classes: int = Field(..., ge=2, description="Number of classes")

    _tensors: Optional[tuple[torch.Tensor, torch.Tensor]] = PrivateAttr(default=None)

    @field_validator("inputs")
    @classmethod
    def check_inputs(cls, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.float64)
        if v.ndim != 2:
            raise ValueError(f"Invalid inputs: expected a 2-D matrix, got shape {v.shape}")
        if v.shape[0] == 0:
            raise ValueError("Invalid dataset: at least one sample is required")
        return v

    @field_validator("labels")
    @classmethod
    def check_labels(cls, v: np.ndarray) -> np.ndarray:
        return np.asarray(v, dtype=np.int64).reshape(-1)

    @model_validator(mode="after")
    def check_consistency(self) -> "RepDataset":
        if self.labels.shape[0] != self.inputs.shape[0]:
            raise ValueError(
                f"Invalid dataset: {self.inputs.shape[0]} inputs but "
                f"{self.labels.shape[0]} labels"
            )
        if self.labels.min() < 0 or self.labels.max() >= self.n_classes:
            raise ValueError(
                f"Invalid labels: expected values in [0, {self.n_classes})"
            )
        return self

    @property
    def n_samples(self) -> int:
        """Number of samples."""
        return int(self.inputs.shape[0])

    def tensors(self) -> tuple[torch.Tensor, torch.Tensor]:
        """Inputs and labels as torch tensors (cached)."""
        if self._tensors is None:
            self._tensors = (
                torch.from_numpy(self.inputs),
                torch.from_numpy(self.labels),
            )
        return self._tensors


def representative_dataset(
    arch: ArchConfig, seed: int, config: Optional[DatasetConfig] = None
) -> RepDataset:
    """
    Generate the balanced Gaussian-cluster dataset for an architecture.

    Args:
        arch: Architecture descriptor (fixes input_dim and n_classes)
        seed: Dataset seed; identical seeds give identical datasets
        config: Cluster parameters (defaults if omitted)

    Returns:
        RepDataset with samples_per_class samples per class, grouped by class
    """
    config = config or DatasetConfig()
    rng = np.random.default_rng(seed)
    directions = rng.standard_normal((arch.n_classes, arch.input_dim))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    centers = directions * config.center_norm

    labels = np.repeat(np.arange(arch.n_classes), config.samples_per_class)
    noise = rng.standard_normal((labels.size, arch.input_dim)) * config.spread
    inputs = centers[labels] + noise
    return RepDataset(inputs=inputs, labels=labels, n_classes=arch.n_classes)
