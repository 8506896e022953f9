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
UVM fault-sequence generation from a FaultSet JSON file.

The output declares a fault_item object, a queue type of fault items and a
sequence that fills the queue in canonical order and publishes it through
uvm_config_db for the fault-injection agent.
"""

import json
import logging
import re
from pathlib import Path
from typing import Optional, Union

from pydantic import Field, ValidationError, field_validator

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.errors import UvmGenerationError, UvmParseError
from rift_workbench.common.validators import escape_sv_string, validate_sv_identifier
from rift_workbench.faults.sites import FaultSet
from rift_workbench.utils.encoding import write_text_lf
from rift_workbench.uvm.templates import ITEM_TEMPLATE, SEQUENCE_TEMPLATE

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_KEY = "rift_fault_queue"

FAULT_PAIR_PATTERN = re.compile(
    r"item\.param_index = (\d+);\s*item\.bit_position = (\d+);"
)


class UvmGenSpec(RiftBaseModel):
    """Inputs of one sequence generation."""

    fault_file: Path = Field(..., description="FaultSet JSON file")
    sequence_name: str = Field(..., description="SystemVerilog class name of the sequence")
    agent_config_key: str = Field(
        DEFAULT_CONFIG_KEY, min_length=1, description="uvm_config_db field name"
    )
    output_path: Optional[Path] = Field(None, description="Target .sv file")

    @field_validator("sequence_name")
    @classmethod
    def check_sequence_name(cls, v: str) -> str:
        return validate_sv_identifier(v)

    @field_validator("agent_config_key")
    @classmethod
    def check_config_key(cls, v: str) -> str:
        escape_sv_string(v)
        return v


def parse_fault_file(path: Union[str, Path]) -> FaultSet:
    """
    Read and validate a FaultSet JSON file.

    Raises:
        UvmParseError: On malformed JSON (with line and column) or a
            document that does not match the fault-set schema
        OSError: If the file cannot be read
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise UvmParseError(
            f"Malformed fault file {Path(path).name}: {e.msg}", e.lineno, e.colno
        ) from e
    try:
        return FaultSet.model_validate(document)
    except ValidationError as e:
        raise UvmParseError(
            f"Fault file {Path(path).name} does not match the fault-set schema: "
            f"{e.errors()[0]['msg']}"
        ) from e


def render_sequence(
    faults: FaultSet,
    sequence_name: str,
    agent_config_key: str = DEFAULT_CONFIG_KEY,
    source: str = "<memory>",
) -> str:
    """
    Render the sequence source for a fault set.

    Raises:
        UvmGenerationError: If the sequence name or config key is illegal
    """
    try:
        validate_sv_identifier(sequence_name)
        key = escape_sv_string(agent_config_key)
        source = escape_sv_string(source)
    except ValueError as e:
        raise UvmGenerationError(str(e)) from e

    items = "".join(
        ITEM_TEMPLATE.substitute(position=position, param_index=site.param_index, bit=site.bit)
        for position, site in enumerate(faults.sites)
    )
    return SEQUENCE_TEMPLATE.substitute(
        source=source,
        count=len(faults),
        guard=f"{sequence_name.upper()}_SV",
        name=sequence_name,
        items=items,
        config_key=key,
    )


def generate_sequence(spec: UvmGenSpec) -> str:
    """
    Generate the sequence text for the fault file named in a UvmGenSpec.

    Only the base name of the fault file appears in the output, so the
    bytes do not depend on where the file lives.
    """
    faults = parse_fault_file(spec.fault_file)
    return render_sequence(
        faults, spec.sequence_name, spec.agent_config_key, source=spec.fault_file.name
    )


def write_sequence(spec: UvmGenSpec) -> Path:
    """
    Generate and write the sequence (UTF-8, LF).

    Raises:
        UvmGenerationError: If spec.output_path is None
    """
    if spec.output_path is None:
        raise UvmGenerationError("UvmGenSpec.output_path is required to write a sequence")
    path = write_text_lf(spec.output_path, generate_sequence(spec))
    logger.info("Wrote UVM sequence %s to %s", spec.sequence_name, path)
    return path


def extract_fault_pairs(text: str) -> FaultSet:
    """Recover the fault set from generated sequence text."""
    return FaultSet.from_pairs(
        (int(index), int(bit)) for index, bit in FAULT_PAIR_PATTERN.findall(text)
    )
