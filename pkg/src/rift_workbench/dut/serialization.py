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
JSON archive of a quantized DUT.

Tensors are stored as base64 of their little-endian bytes, so a save/load
round trip is bit-exact for both the int8 and the float64 buffers.
"""

from pathlib import Path
from typing import Literal, Optional, Union

from pydantic import Field

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.dut.config import ArchConfig
from rift_workbench.dut.model import ParamGroup, QuantizedModel
from rift_workbench.utils.encoding import decode_array, encode_array, write_text_lf


class DutArchive(RiftBaseModel):
    """Serialized form of a QuantizedModel."""

    format: Literal["rift-dut/1"] = "rift-dut/1"
    arch: ArchConfig
    seed: Optional[int] = None
    n_params: int = Field(..., ge=1)
    groups: list[ParamGroup]
    q_weights: str = Field(..., description="base64 int8 buffer")
    float_weights: str = Field(..., description="base64 float64 buffer")

    @classmethod
    def from_model(cls, model: QuantizedModel) -> "DutArchive":
        return cls(
            arch=model.arch,
            seed=model.seed,
            n_params=model.n_params,
            groups=model.groups,
            q_weights=encode_array(model.q_weights),
            float_weights=encode_array(model.float_weights),
        )

    def to_model(self) -> QuantizedModel:
        return QuantizedModel(
            self.arch,
            self.groups,
            decode_array(self.q_weights, "int8", self.n_params),
            decode_array(self.float_weights, "float64", self.n_params),
            self.seed,
        )


def save_model(model: QuantizedModel, path: Union[str, Path]) -> Path:
    """Write the model archive as JSON."""
    archive = DutArchive.from_model(model)
    return write_text_lf(Path(path), archive.model_dump_json(indent=2) + "\n")


def load_model(path: Union[str, Path]) -> QuantizedModel:
    """Read a model archive written by save_model."""
    text = Path(path).read_text(encoding="utf-8")
    return DutArchive.model_validate_json(text).to_model()
