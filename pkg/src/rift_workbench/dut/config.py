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
Configuration schemas for the design-under-test.

Includes:
- ArchConfig: network shape (blocks, width, heads, tokens, classes)
- DatasetConfig: procedural Gaussian-cluster dataset parameters
- TrainingConfig: full-batch training budget and accuracy target
"""

from pydantic import Field, model_validator

from rift_workbench.common.base import RiftBaseModel


class ArchConfig(RiftBaseModel):
    """
    Architecture descriptor of the quantized attention DUT.

    Inputs are feature vectors of length n_tokens * width, read as
    n_tokens tokens of dimension width. Each block is pre-norm attention
    followed by a pre-norm GELU feed-forward layer, both residual. The
    classifier reads the token mean.
    """

    n_blocks: int = Field(2, description="Number of attention + FFN blocks (0 allowed)")
    width: int = Field(64, description="Token / residual stream dimension")
    n_heads: int = Field(4, description="Attention heads per block")
    n_tokens: int = Field(4, description="Tokens per input vector")
    ffn_multiplier: int = Field(2, description="FFN hidden size as a multiple of width")
    n_classes: int = Field(8, description="Number of output classes")
    norm_eps: float = Field(1e-5, gt=0, description="Layer-norm epsilon")

    @model_validator(mode="after")
    def check_architecture(self) -> "ArchConfig":
        if self.width <= 0:
            raise ValueError(f"invalid architecture: width must be positive, got {self.width}")
        if self.n_blocks < 0:
            raise ValueError(
                f"invalid architecture: n_blocks must be non-negative, got {self.n_blocks}"
            )
        if self.n_tokens <= 0:
            raise ValueError(
                f"invalid architecture: n_tokens must be positive, got {self.n_tokens}"
            )
        if self.n_classes < 2:
            raise ValueError(
                f"invalid architecture: n_classes must be at least 2, got {self.n_classes}"
            )
        if self.n_blocks > 0:
            if self.n_heads <= 0 or self.width % self.n_heads != 0:
                raise ValueError(
                    f"invalid architecture: width {self.width} is not divisible "
                    f"into {self.n_heads} heads"
                )
            if self.ffn_multiplier <= 0:
                raise ValueError(
                    "invalid architecture: ffn_multiplier must be positive, "
                    f"got {self.ffn_multiplier}"
                )
        return self

    @property
    def input_dim(self) -> int:
        """Length of one input feature vector."""
        return self.n_tokens * self.width

    @property
    def ffn_hidden(self) -> int:
        """Hidden size of each feed-forward layer."""
        return self.ffn_multiplier * self.width

    @property
    def head_dim(self) -> int:
        """Dimension of each attention head."""
        return self.width // max(self.n_heads, 1)

    @property
    def chance_accuracy(self) -> float:
        """Accuracy of a constant predictor on balanced data."""
        return 1.0 / self.n_classes


class DatasetConfig(RiftBaseModel):
    """
    Procedural representative dataset: a fixed Gaussian cluster mixture.

    Class centers are random directions scaled to center_norm; samples add
    isotropic noise of standard deviation spread. Classes are balanced.
    """

    samples_per_class: int = Field(64, ge=1, description="Samples per class")
    center_norm: float = Field(6.0, gt=0, description="L2 norm of each class center")
    spread: float = Field(1.0, gt=0, description="Per-feature noise standard deviation")


class TrainingConfig(RiftBaseModel):
    """Full-batch Adam training budget for build_dut."""

    max_steps: int = Field(600, ge=1, description="Step budget before giving up")
    learning_rate: float = Field(1e-2, gt=0, description="Adam learning rate")
    check_interval: int = Field(
        25, ge=1, description="Steps between quantized-accuracy checks"
    )
    target_accuracy: float = Field(
        0.90, ge=0, le=1, description="Clean quantized accuracy required to stop"
    )
