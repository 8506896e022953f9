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
Deterministic construction of the quantized DUT.
"""

import logging
from typing import Any, Mapping, Optional, Union

import numpy as np
import torch
import torch.nn.functional as F
from pydantic import ValidationError

from rift_workbench.common.errors import DutTrainingError, InvalidArchitectureError
from rift_workbench.dut.config import ArchConfig, DatasetConfig, TrainingConfig
from rift_workbench.dut.dataset import RepDataset, representative_dataset
from rift_workbench.dut.evaluation import predict
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.dut.network import forward, init_weights

logger = logging.getLogger(__name__)


def coerce_arch(arch: Union[ArchConfig, Mapping[str, Any]]) -> ArchConfig:
    """
    Validate an architecture descriptor.

    Raises:
        InvalidArchitectureError: If the descriptor is not a valid DUT shape
    """
    if isinstance(arch, ArchConfig):
        return arch
    try:
        return ArchConfig.model_validate(arch)
    except ValidationError as e:
        raise InvalidArchitectureError(f"invalid architecture: {e}") from e


def quantized_accuracy(model: QuantizedModel, data: RepDataset) -> float:
    """Clean accuracy without charging the evaluation counter."""
    return float(np.mean(predict(model, data) == data.labels))


def build_dut(
    arch: Union[ArchConfig, Mapping[str, Any]],
    seed: int,
    training: Optional[TrainingConfig] = None,
    dataset: Optional[DatasetConfig] = None,
) -> QuantizedModel:
    """
    Train the attention DUT on its representative dataset and quantize it.

    Training is full-batch Adam in float64 with seeded initialization, so
    the result is bit-identical for a given (arch, seed, training, dataset).
    The quantized accuracy is checked every check_interval steps and
    training stops as soon as it reaches target_accuracy.

    Args:
        arch: Architecture descriptor or mapping
        seed: Seed for initialization and the dataset
        training: Step budget and target (defaults if omitted)
        dataset: Dataset parameters (defaults if omitted)

    Returns:
        QuantizedModel meeting the accuracy target

    Raises:
        InvalidArchitectureError: If arch is invalid
        DutTrainingError: If the target is not met within max_steps
    """
    arch = coerce_arch(arch)
    training = training or TrainingConfig()
    data = representative_dataset(arch, seed, dataset)
    inputs, labels = data.tensors()

    generator = torch.Generator().manual_seed(seed)
    params = {label: t.requires_grad_() for label, t in init_weights(arch, generator).items()}
    optimizer = torch.optim.Adam(params.values(), lr=training.learning_rate)

    accuracy = 0.0
    for step in range(1, training.max_steps + 1):
        optimizer.zero_grad()
        loss = F.cross_entropy(forward(arch, params, inputs), labels)
        loss.backward()
        optimizer.step()

        if step % training.check_interval and step != training.max_steps:
            continue
        model = QuantizedModel.from_float(
            arch, {label: t.detach().numpy().copy() for label, t in params.items()}, seed
        )
        accuracy = quantized_accuracy(model, data)
        logger.debug("step %d: loss=%.4f quantized accuracy=%.4f", step, loss.item(), accuracy)
        if accuracy >= training.target_accuracy:
            logger.info(
                "DUT trained: %d parameters, accuracy %.4f after %d steps (seed %d)",
                model.n_params,
                accuracy,
                step,
                seed,
            )
            return model

    raise DutTrainingError(
        f"DUT training reached accuracy {accuracy:.4f} < {training.target_accuracy} "
        f"within {training.max_steps} steps; check the architecture"
    )
