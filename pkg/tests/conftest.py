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
Shared fixtures.

The micro-DUTs have no attention blocks and one token, so the forward is a
single linear classifier on the raw features. Only feature 0 carries
signal (x0 = +-U(0.5, 1.5), class 0 iff x0 > 0); every other feature is
exactly 0, so weights outside column 0 never affect the output.
"""

import numpy as np
import pytest

from rift_workbench.dut import (
    ArchConfig,
    DatasetConfig,
    QuantizedModel,
    RepDataset,
    TrainingConfig,
    build_dut,
    representative_dataset,
)
from rift_workbench.dut.evaluation import EvalCounter

MICRO_SAMPLES_PER_CLASS = 64


def micro_arch(width: int, n_classes: int) -> ArchConfig:
    return ArchConfig(n_blocks=0, width=width, n_tokens=1, n_classes=n_classes)


def signed_feature_dataset(width: int, n_classes: int, seed: int = 0, twin: bool = False) -> RepDataset:
    """Labels 0 (x0 > 0) and 1 (x0 < 0); with twin, feature 1 copies feature 0."""
    rng = np.random.default_rng(seed)
    magnitude = rng.uniform(0.5, 1.5, size=2 * MICRO_SAMPLES_PER_CLASS)
    labels = np.repeat([0, 1], MICRO_SAMPLES_PER_CLASS)
    inputs = np.zeros((labels.size, width))
    inputs[:, 0] = np.where(labels == 0, magnitude, -magnitude)
    if twin:
        inputs[:, 1] = inputs[:, 0]
    return RepDataset(inputs=inputs, labels=labels, n_classes=n_classes)


def classifier_dut(classifier: np.ndarray) -> QuantizedModel:
    n_classes, width = classifier.shape
    return QuantizedModel.from_float(micro_arch(width, n_classes), {"classifier": classifier}, seed=0)


@pytest.fixture
def critical_dut():
    """
    2 classes, width 500 (1000 parameters, 8000 bits), W[0, 0] = 1.

    Flipping the MSB of parameter 0 (q 127 -> -1) drives accuracy to 0;
    every other single bit flip leaves accuracy at 1.
    """
    weights = np.zeros((2, 500))
    weights[0, 0] = 1.0
    return classifier_dut(weights), signed_feature_dataset(500, 2)


@pytest.fixture
def gradient_dut():
    """
    3 classes, width 100, W[0, 0] = 1 and W[2, 0] = 0.75; class 2 never
    occurs in the labels.

    Parameter 0 has the strictly largest |w| and |grad|. Its MSB flip gives
    accuracy 0; the MSB flip of W[2, 0] (index 200) and the bit-6 flip of
    W[0, 0] each give accuracy 0.5.
    """
    weights = np.zeros((3, 100))
    weights[0, 0] = 1.0
    weights[2, 0] = 0.75
    return classifier_dut(weights), signed_feature_dataset(100, 3)


@pytest.fixture
def redundant_dut():
    """2 classes, width 8, feature 1 duplicates feature 0 and W[0, 0] = W[0, 1] = 1."""
    weights = np.zeros((2, 8))
    weights[0, 0] = 1.0
    weights[0, 1] = 1.0
    return classifier_dut(weights), signed_feature_dataset(8, 2, twin=True)


TINY_ARCH = ArchConfig(n_blocks=1, width=8, n_heads=2, n_tokens=2, ffn_multiplier=2, n_classes=3)
TINY_DATASET = DatasetConfig(samples_per_class=32)
TINY_TRAINING = TrainingConfig(max_steps=400, target_accuracy=0.85)


@pytest.fixture(scope="session")
def tiny_dut_session():
    model = build_dut(TINY_ARCH, seed=3, training=TINY_TRAINING, dataset=TINY_DATASET)
    data = representative_dataset(TINY_ARCH, 3, TINY_DATASET)
    return model, data


@pytest.fixture
def tiny_dut(tiny_dut_session):
    """Small trained attention DUT; a fresh clone per test."""
    model, data = tiny_dut_session
    return model.clone(), data


@pytest.fixture
def counter():
    return EvalCounter()
