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
Parameter layout and functional forward pass of the attention DUT.

The forward is written against a mapping label -> tensor so the same code
serves float training, dequantized evaluation, straight-through gradients
and finite-difference checks.
"""

import math
from typing import Mapping, NamedTuple

import torch
import torch.nn.functional as F

from rift_workbench.common.enums import ParamRole
from rift_workbench.dut.config import ArchConfig


class TensorSpec(NamedTuple):
    """One entry of the flat parameter layout."""

    label: str
    role: ParamRole
    shape: tuple[int, ...]


def parameter_layout(arch: ArchConfig) -> list[TensorSpec]:
    """
    Ordered tensor layout of the DUT.

    The flat parameter vector W is the concatenation of these tensors in
    this order, each flattened row-major.
    """
    w, h = arch.width, arch.ffn_hidden
    layout: list[TensorSpec] = []
    for b in range(arch.n_blocks):
        p = f"blocks.{b}."
        layout += [
            TensorSpec(p + "norm1_scale", ParamRole.NORM_SCALE, (w,)),
            TensorSpec(p + "norm1_bias", ParamRole.NORM_BIAS, (w,)),
            TensorSpec(p + "attention_q", ParamRole.ATTENTION_Q, (w, w)),
            TensorSpec(p + "attention_k", ParamRole.ATTENTION_K, (w, w)),
            TensorSpec(p + "attention_v", ParamRole.ATTENTION_V, (w, w)),
            TensorSpec(p + "attention_o", ParamRole.ATTENTION_O, (w, w)),
            TensorSpec(p + "norm2_scale", ParamRole.NORM_SCALE, (w,)),
            TensorSpec(p + "norm2_bias", ParamRole.NORM_BIAS, (w,)),
            TensorSpec(p + "ffn_in", ParamRole.FFN_IN, (h, w)),
            TensorSpec(p + "ffn_out", ParamRole.FFN_OUT, (w, h)),
        ]
    layout.append(TensorSpec("classifier", ParamRole.CLASSIFIER, (arch.n_classes, w)))
    return layout


def init_weights(arch: ArchConfig, generator: torch.Generator) -> dict[str, torch.Tensor]:
    """
    Seeded float64 initialization: unit norm gains, zero norm shifts,
    matrices drawn N(0, 1/fan_in).
    """
    weights: dict[str, torch.Tensor] = {}
    for spec in parameter_layout(arch):
        if spec.role == ParamRole.NORM_SCALE:
            tensor = torch.ones(spec.shape, dtype=torch.float64)
        elif spec.role == ParamRole.NORM_BIAS:
            tensor = torch.zeros(spec.shape, dtype=torch.float64)
        else:
            fan_in = spec.shape[1]
            tensor = torch.randn(spec.shape, generator=generator, dtype=torch.float64)
            tensor /= math.sqrt(fan_in)
        weights[spec.label] = tensor
    return weights


def _attention(
    x: torch.Tensor, weights: Mapping[str, torch.Tensor], prefix: str, arch: ArchConfig
) -> torch.Tensor:
    n, t, w = x.shape
    heads, d = arch.n_heads, arch.head_dim

    def split(proj: torch.Tensor) -> torch.Tensor:
        return proj.reshape(n, t, heads, d).transpose(1, 2)

    q = split(x @ weights[prefix + "attention_q"].T)
    k = split(x @ weights[prefix + "attention_k"].T)
    v = split(x @ weights[prefix + "attention_v"].T)
    attn = torch.softmax(q @ k.transpose(-2, -1) / math.sqrt(d), dim=-1)
    mixed = (attn @ v).transpose(1, 2).reshape(n, t, w)
    return mixed @ weights[prefix + "attention_o"].T


def forward(
    arch: ArchConfig, weights: Mapping[str, torch.Tensor], inputs: torch.Tensor
) -> torch.Tensor:
    """
    Compute class logits.

    Args:
        arch: Architecture descriptor
        weights: Tensor per layout label (float64)
        inputs: Feature matrix (n_samples, n_tokens * width)

    Returns:
        Logits of shape (n_samples, n_classes)
    """
    x = inputs.reshape(inputs.shape[0], arch.n_tokens, arch.width)
    for b in range(arch.n_blocks):
        p = f"blocks.{b}."
        normed = F.layer_norm(
            x,
            (arch.width,),
            weight=weights[p + "norm1_scale"],
            bias=weights[p + "norm1_bias"],
            eps=arch.norm_eps,
        )
        x = x + _attention(normed, weights, p, arch)
        normed = F.layer_norm(
            x,
            (arch.width,),
            weight=weights[p + "norm2_scale"],
            bias=weights[p + "norm2_bias"],
            eps=arch.norm_eps,
        )
        hidden = F.gelu(normed @ weights[p + "ffn_in"].T)
        x = x + hidden @ weights[p + "ffn_out"].T
    pooled = x.mean(dim=1)
    return pooled @ weights["classifier"].T
