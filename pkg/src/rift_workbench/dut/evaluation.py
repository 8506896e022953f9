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
Accuracy evaluation, straight-through gradients and the evaluation counter.

One call to evaluate() is the budget unit every search method is charged
for. Nothing else in the workbench touches the counter.
"""

import math
import threading
from typing import Literal, Optional

import numpy as np
import torch
import torch.nn.functional as F
from pydantic import Field

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.dut.dataset import RepDataset
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.dut.network import forward


class EvalCounter:
    """Thread-safe accumulator of DUT evaluations."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._value = 0

    def increment(self) -> int:
        with self._lock:
            self._value += 1
            return self._value

    @property
    def value(self) -> int:
        with self._lock:
            return self._value

    def reset(self) -> None:
        with self._lock:
            self._value = 0


GLOBAL_EVAL_COUNTER = EvalCounter()


class EvalResult(RiftBaseModel):
    """Outcome of one DUT evaluation on the representative dataset."""

    accuracy: float = Field(..., ge=0, le=1, description="correct / total")
    loss: float = Field(..., ge=0, description="Mean cross-entropy (inf if non-finite)")
    n_evaluations_counter_delta: Literal[1] = 1


def _logits(model: QuantizedModel, data: RepDataset, flat: Optional[np.ndarray] = None):
    inputs, _ = data.tensors()
    if inputs.shape[1] != model.arch.input_dim:
        raise ValueError(
            f"Invalid dataset: expected {model.arch.input_dim} features, "
            f"got {inputs.shape[1]}"
        )
    _, weights = model.weight_tensors(flat)
    return forward(model.arch, weights, inputs)


def predict(model: QuantizedModel, data: RepDataset) -> np.ndarray:
    """
    Predicted class per sample; ties go to the lowest class index.

    Does not count as an evaluation.
    """
    with torch.no_grad():
        logits = _logits(model, data)
    logits = torch.nan_to_num(logits, nan=-math.inf).numpy()
    return np.argmax(logits, axis=1)


def evaluate(
    model: QuantizedModel, data: RepDataset, counter: Optional[EvalCounter] = None
) -> EvalResult:
    """
    Measure accuracy and loss of the model in its current (possibly faulted)
    state, charging one evaluation to the counter.

    Args:
        model: Quantized DUT; the forward uses q_weights * scale
        data: Representative dataset
        counter: Counter to charge (defaults to GLOBAL_EVAL_COUNTER)

    Returns:
        EvalResult with accuracy = correct / total
    """
    _, labels = data.tensors()
    with torch.no_grad():
        logits = _logits(model, data)
        loss = float(F.cross_entropy(logits, labels))
    predicted = np.argmax(torch.nan_to_num(logits, nan=-math.inf).numpy(), axis=1)
    correct = int(np.count_nonzero(predicted == data.labels))
    (counter or GLOBAL_EVAL_COUNTER).increment()
    return EvalResult(
        accuracy=correct / data.n_samples,
        loss=loss if math.isfinite(loss) else math.inf,
    )


def gradients(
    model: QuantizedModel, data: RepDataset, loss_scale: float = 1.0
) -> np.ndarray:
    """
    Gradient of the mean cross-entropy with respect to every flat weight.

    Straight-through: the loss is differentiated at the dequantized
    weights, treating the quantizer as the identity.

    Args:
        model: Quantized DUT
        data: Representative dataset (full batch)
        loss_scale: Multiplier applied to the loss before differentiation

    Returns:
        float64 vector of length n_params
    """
    inputs, labels = data.tensors()
    flat_t, weights = model.weight_tensors(requires_grad=True)
    loss = F.cross_entropy(forward(model.arch, weights, inputs), labels) * loss_scale
    loss.backward()
    grad = flat_t.grad
    if grad is None:
        return np.zeros(model.n_params, dtype=np.float64)
    return grad.detach().numpy().copy()


def functional_loss(model: QuantizedModel, data: RepDataset, flat: np.ndarray) -> float:
    """
    Mean cross-entropy of the float forward at an arbitrary flat weight vector.

    Used as the finite-difference oracle for gradients().
    """
    _, labels = data.tensors()
    with torch.no_grad():
        logits = _logits(model, data, flat)
        return float(F.cross_entropy(logits, labels))
