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
Int8 quantized model container.

Weights live in two flat buffers indexed by the global parameter index:
q_weights (int8, the stored deployment values) and float_weights (float64
shadow weights used for magnitude scores). ParamGroup records describe how
the flat index maps onto architectural tensors.
"""

import hashlib
from typing import Any, Mapping, Optional

import numpy as np
import torch
from pydantic import Field, model_validator

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import ParamRole
from rift_workbench.common.errors import FaultSiteError
from rift_workbench.dut.config import ArchConfig
from rift_workbench.dut.network import parameter_layout


QMAX = 127


class ParamGroup(RiftBaseModel):
    """
    One quantized weight tensor and its slice of the flat index space.
    """

    label: str = Field(..., description="Unique tensor label (e.g., 'blocks.0.attention_q')")
    name: ParamRole = Field(..., description="Architectural role")
    shape: tuple[int, ...] = Field(..., description="Tensor shape")
    offset: int = Field(..., ge=0, description="First flat index of this tensor")
    scale: float = Field(..., gt=0, description="Per-tensor symmetric quantization scale")

    @model_validator(mode="after")
    def check_shape(self) -> "ParamGroup":
        if not self.shape or any(d <= 0 for d in self.shape):
            raise ValueError(f"Invalid shape '{self.shape}': dimensions must be positive")
        return self

    @property
    def size(self) -> int:
        """Number of scalar parameters."""
        return int(np.prod(self.shape))

    @property
    def stop(self) -> int:
        """One past the last flat index."""
        return self.offset + self.size

    @property
    def role(self) -> ParamRole:
        """Role as an enum member."""
        return ParamRole(self.name)


def quantize_tensor(values: np.ndarray) -> tuple[np.ndarray, float]:
    """
    Per-tensor symmetric int8 quantization.

    Args:
        values: Float tensor

    Returns:
        Tuple of (int8 tensor, scale). scale = max|w| / 127, or 1.0 for an
        all-zero tensor.
    """
    values = np.asarray(values, dtype=np.float64)
    peak = float(np.max(np.abs(values))) if values.size else 0.0
    scale = peak / QMAX if peak > 0 else 1.0
    q = np.clip(np.rint(values / scale), -QMAX, QMAX).astype(np.int8)
    return q, scale


class QuantizedModel:
    """
    The design-under-test: int8 weights, float shadow weights and scales.

    The only sanctioned mutation of q_weights is through
    rift_workbench.faults (apply_faults / revert_faults), which also keeps
    applied_faults current. Use clone() to obtain an independent copy for
    parallel work.
    """

    def __init__(
        self,
        arch: ArchConfig,
        groups: list[ParamGroup],
        q_weights: np.ndarray,
        float_weights: np.ndarray,
        seed: Optional[int] = None,
    ) -> None:
        n_params = sum(g.size for g in groups)
        if q_weights.shape != (n_params,) or float_weights.shape != (n_params,):
            raise ValueError(
                f"Invalid weight buffers: expected {n_params} values, got "
                f"{q_weights.shape} and {float_weights.shape}"
            )
        self.arch = arch
        self.groups = list(groups)
        self.seed = seed
        self.q_weights = np.ascontiguousarray(q_weights, dtype=np.int8)
        self.float_weights = np.ascontiguousarray(float_weights, dtype=np.float64)
        self.applied_faults: list[Any] = []

        self._labels = {g.label: g for g in self.groups}
        self._offsets = np.array([g.offset for g in self.groups], dtype=np.int64)
        self._scale_vector = np.repeat(
            np.array([g.scale for g in self.groups], dtype=np.float64),
            [g.size for g in self.groups],
        )
        self._role_vector: Optional[np.ndarray] = None

    @classmethod
    def from_float(
        cls,
        arch: ArchConfig,
        tensors: Mapping[str, np.ndarray],
        seed: Optional[int] = None,
    ) -> "QuantizedModel":
        """
        Quantize a full set of float tensors laid out per parameter_layout.

        Raises:
            ValueError: If a tensor is missing or has the wrong shape
        """
        groups: list[ParamGroup] = []
        q_parts: list[np.ndarray] = []
        f_parts: list[np.ndarray] = []
        offset = 0
        for spec in parameter_layout(arch):
            if spec.label not in tensors:
                raise ValueError(f"Invalid weights: missing tensor '{spec.label}'")
            values = np.asarray(tensors[spec.label], dtype=np.float64)
            if values.shape != spec.shape:
                raise ValueError(
                    f"Invalid tensor '{spec.label}': expected shape {spec.shape}, "
                    f"got {values.shape}"
                )
            q, scale = quantize_tensor(values)
            groups.append(
                ParamGroup(
                    label=spec.label,
                    name=spec.role,
                    shape=spec.shape,
                    offset=offset,
                    scale=scale,
                )
            )
            q_parts.append(q.ravel())
            f_parts.append(values.ravel())
            offset += values.size
        return cls(arch, groups, np.concatenate(q_parts), np.concatenate(f_parts), seed)

    @property
    def n_params(self) -> int:
        """Number of scalar parameters n."""
        return int(self.q_weights.size)

    @property
    def n_bits(self) -> int:
        """Size of the bit-level fault space (8 bits per parameter)."""
        return self.n_params * 8

    def group(self, label: str) -> ParamGroup:
        """Get a group by tensor label."""
        try:
            return self._labels[label]
        except KeyError:
            raise KeyError(f"Unknown tensor label '{label}'") from None

    def locate(self, index: int) -> tuple[ParamGroup, int]:
        """
        Map a flat parameter index to (group, offset within the group).

        Raises:
            FaultSiteError: If the index is outside [0, n_params)
        """
        if not 0 <= index < self.n_params:
            raise FaultSiteError(
                f"Invalid parameter index '{index}': model has {self.n_params} parameters"
            )
        position = int(np.searchsorted(self._offsets, index, side="right")) - 1
        group = self.groups[position]
        return group, int(index) - group.offset

    def flat_index(self, label: str, offset: int) -> int:
        """Inverse of locate."""
        group = self.group(label)
        if not 0 <= offset < group.size:
            raise FaultSiteError(
                f"Invalid offset '{offset}' for '{label}' of size {group.size}"
            )
        return group.offset + offset

    def role_vector(self) -> np.ndarray:
        """Role value of every flat index (cached)."""
        if self._role_vector is None:
            self._role_vector = np.repeat(
                np.array([g.name for g in self.groups], dtype=object),
                [g.size for g in self.groups],
            )
        return self._role_vector

    def role_sizes(self) -> dict[ParamRole, int]:
        """Parameter count per role (one byte per int8 parameter)."""
        sizes: dict[ParamRole, int] = {}
        for g in self.groups:
            sizes[g.role] = sizes.get(g.role, 0) + g.size
        return sizes

    def scale_vector(self) -> np.ndarray:
        """Quantization scale of every flat index."""
        return self._scale_vector

    def dequantized_flat(self) -> np.ndarray:
        """q_weights * scale, the values the forward pass uses."""
        return self.q_weights.astype(np.float64) * self._scale_vector

    def weight_tensors(
        self, flat: Optional[np.ndarray] = None, requires_grad: bool = False
    ) -> tuple[torch.Tensor, dict[str, torch.Tensor]]:
        """
        Split a flat weight vector into per-label torch tensors.

        Args:
            flat: Flat float64 vector (defaults to the dequantized weights)
            requires_grad: Make the flat tensor a differentiable leaf

        Returns:
            Tuple of (flat tensor, label -> shaped view of it)
        """
        values = self.dequantized_flat() if flat is None else np.asarray(flat, np.float64)
        flat_t = torch.tensor(values, dtype=torch.float64, requires_grad=requires_grad)
        views = {g.label: flat_t[g.offset : g.stop].view(g.shape) for g in self.groups}
        return flat_t, views

    def content_digest(self) -> str:
        """SHA-256 of the int8 buffer, for bit-exact comparisons."""
        return hashlib.sha256(self.q_weights.tobytes()).hexdigest()

    def clone(self) -> "QuantizedModel":
        """Independent deep copy, including the applied-fault ledger."""
        twin = QuantizedModel(
            self.arch,
            self.groups,
            self.q_weights.copy(),
            self.float_weights.copy(),
            self.seed,
        )
        twin.applied_faults = list(self.applied_faults)
        return twin

    def __repr__(self) -> str:
        return (
            f"QuantizedModel(n_params={self.n_params}, groups={len(self.groups)}, "
            f"seed={self.seed})"
        )
