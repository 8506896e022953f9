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
UVM test-sequence generation from fault-set files.
"""

from rift_workbench.uvm.generator import (
    DEFAULT_CONFIG_KEY,
    FAULT_PAIR_PATTERN,
    UvmGenSpec,
    extract_fault_pairs,
    generate_sequence,
    parse_fault_file,
    render_sequence,
    write_sequence,
)

__all__ = [
    "DEFAULT_CONFIG_KEY",
    "FAULT_PAIR_PATTERN",
    "UvmGenSpec",
    "parse_fault_file",
    "render_sequence",
    "generate_sequence",
    "write_sequence",
    "extract_fault_pairs",
]
