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
Exception hierarchy for the workbench.

Errors that signal bad input also derive from ValueError so callers that
only know the standard hierarchy still catch them.
"""

from typing import Optional


class RiftError(Exception):
    """Base class for all workbench errors."""


class InvalidArchitectureError(RiftError, ValueError):
    """Architecture descriptor cannot describe a valid DUT."""


class DutTrainingError(RiftError):
    """DUT training did not reach the accuracy target within its step budget."""


class FaultSiteError(RiftError, ValueError):
    """Fault site addresses a parameter or bit outside the model."""


class FaultStateError(RiftError):
    """Fault set reverted without having been applied."""


class BudgetError(RiftError, ValueError):
    """Evaluation budget is missing, non-positive or too small for the method."""


class SearchError(RiftError, ValueError):
    """Search cannot start (for example, empty candidate set)."""


class ConfigError(RiftError):
    """Configuration file missing, unreadable or invalid."""


class UvmGenerationError(RiftError, ValueError):
    """UVM sequence cannot be generated from the given spec."""


class UvmParseError(UvmGenerationError):
    """Fault file is not valid JSON or does not match the fault-set schema."""

    def __init__(
        self, message: str, line: Optional[int] = None, column: Optional[int] = None
    ) -> None:
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
