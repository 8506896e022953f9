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
Shared validation functions for workbench models.

These validators are used from pydantic field validators across modules
and raise ValueError with a message naming the offending value.
"""

import re
from typing import Optional

# SystemVerilog simple identifier (IEEE 1800 5.6)
SV_IDENTIFIER_PATTERN = r"^[A-Za-z_][A-Za-z0-9_]*$"

# Names the generated sequence file declares or relies on
UVM_RESERVED_NAMES = {
    "uvm_object",
    "uvm_sequence",
    "uvm_sequence_item",
    "uvm_component",
    "uvm_config_db",
    "uvm_pkg",
    "fault_item",
    "fault_queue_t",
    "type_id",
    "body",
    "build_faults",
    "get_faults",
}

# Include-guard macros defined inside the sequence template; a sequence
# guards its own file with <NAME>_SV
TEMPLATE_GUARD_MACROS = {"RIFT_FAULT_ITEM_SV"}

# SystemVerilog keywords that are most likely to be picked as names
SV_KEYWORDS = {
    "begin",
    "bit",
    "class",
    "end",
    "endclass",
    "endfunction",
    "endtask",
    "extends",
    "function",
    "int",
    "logic",
    "module",
    "new",
    "null",
    "package",
    "super",
    "task",
    "this",
    "typedef",
    "virtual",
}


def validate_sv_identifier(value: Optional[str]) -> Optional[str]:
    """
    Validate a SystemVerilog identifier for generated code.

    Args:
        value: Candidate identifier (e.g., 'rift_seq')

    Returns:
        The identifier unchanged if valid

    Raises:
        ValueError: If the identifier is illegal, a keyword, or collides
            with a name used by the sequence template
    """
    if value is None:
        return None

    if not re.match(SV_IDENTIFIER_PATTERN, value):
        raise ValueError(
            f"Invalid SystemVerilog identifier '{value}'. "
            "Expected [A-Za-z_][A-Za-z0-9_]*"
        )

    if value in SV_KEYWORDS:
        raise ValueError(
            f"Invalid SystemVerilog identifier '{value}': reserved keyword"
        )

    if value in UVM_RESERVED_NAMES:
        raise ValueError(
            f"Invalid SystemVerilog identifier '{value}': collides with a "
            "template or UVM class name"
        )

    if f"{value.upper()}_SV" in TEMPLATE_GUARD_MACROS:
        raise ValueError(
            f"Invalid SystemVerilog identifier '{value}': its include guard "
            f"{value.upper()}_SV collides with a template guard"
        )

    return value


def validate_unit_interval(
    value: float, name: str, *, open_low: bool = False, open_high: bool = False
) -> float:
    """
    Validate that a value lies in [0, 1], optionally excluding an endpoint.

    Args:
        value: Value to check
        name: Parameter name used in the error message
        open_low: Exclude 0
        open_high: Exclude 1

    Returns:
        The value unchanged if valid

    Raises:
        ValueError: If the value is outside the interval
    """
    low_ok = value > 0.0 if open_low else value >= 0.0
    high_ok = value < 1.0 if open_high else value <= 1.0
    if not (low_ok and high_ok):
        interval = f"{'(' if open_low else '['}0, 1{')' if open_high else ']'}"
        raise ValueError(f"Invalid {name} '{value}': expected a value in {interval}")
    return value


def validate_selection_rate(value: float) -> float:
    """
    Validate a candidate selection rate.

    Args:
        value: Fraction of parameters to keep

    Returns:
        The rate unchanged if valid

    Raises:
        ValueError: If rate is not in (0, 1]
    """
    return validate_unit_interval(value, "selection rate rho", open_low=True)


def escape_sv_string(value: str) -> str:
    """
    Escape a value for use inside a SystemVerilog string literal.

    Backslashes and double quotes are escaped; newlines and other control
    characters are rejected.

    Raises:
        ValueError: If the value contains control characters
    """
    if any(ord(ch) < 0x20 or ord(ch) == 0x7F for ch in value):
        raise ValueError(
            f"Invalid string literal {value!r}: control characters are not allowed"
        )
    return value.replace("\\", "\\\\").replace('"', '\\"')
