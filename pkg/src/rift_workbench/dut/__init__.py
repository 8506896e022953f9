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
Design-under-test: a small int8 quantized attention classifier.

Includes:
- Architecture, dataset and training configuration
- QuantizedModel with its flat parameter index and ParamGroup layout
- evaluate() (the budget unit), straight-through gradients()
- build_dut() deterministic training and the JSON archive
"""

from rift_workbench.dut.config import ArchConfig, DatasetConfig, TrainingConfig
from rift_workbench.dut.dataset import RepDataset, representative_dataset
from rift_workbench.dut.evaluation import (
    GLOBAL_EVAL_COUNTER,
    EvalCounter,
    EvalResult,
    evaluate,
    functional_loss,
    gradients,
    predict,
)
from rift_workbench.dut.model import ParamGroup, QuantizedModel, quantize_tensor
from rift_workbench.dut.network import TensorSpec, forward, parameter_layout
from rift_workbench.dut.serialization import DutArchive, load_model, save_model
from rift_workbench.dut.training import build_dut, coerce_arch, quantized_accuracy

__all__ = [
    # Configuration
    "ArchConfig",
    "DatasetConfig",
    "TrainingConfig",
    # Data
    "RepDataset",
    "representative_dataset",
    # Model
    "ParamGroup",
    "QuantizedModel",
    "quantize_tensor",
    "TensorSpec",
    "parameter_layout",
    "forward",
    # Evaluation
    "EvalCounter",
    "EvalResult",
    "GLOBAL_EVAL_COUNTER",
    "evaluate",
    "predict",
    "gradients",
    "functional_loss",
    # Construction and storage
    "build_dut",
    "coerce_arch",
    "quantized_accuracy",
    "DutArchive",
    "save_model",
    "load_model",
]
