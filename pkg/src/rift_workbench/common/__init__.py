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
Common base models, enums, validators and errors shared by all modules.
"""

from rift_workbench.common.base import ArrayModel, FrozenModel, RiftBaseModel
from rift_workbench.common.enums import (
    ActionKind,
    MethodName,
    ObjectiveSign,
    ParamRole,
    RoleFamily,
    SchemeName,
)
from rift_workbench.common.errors import (
    BudgetError,
    ConfigError,
    DutTrainingError,
    FaultSiteError,
    FaultStateError,
    InvalidArchitectureError,
    RiftError,
    SearchError,
    UvmGenerationError,
    UvmParseError,
)
from rift_workbench.common.validators import (
    escape_sv_string,
    validate_selection_rate,
    validate_sv_identifier,
    validate_unit_interval,
)

__all__ = [
    # Base models
    "RiftBaseModel",
    "FrozenModel",
    "ArrayModel",
    # Enums
    "ParamRole",
    "RoleFamily",
    "MethodName",
    "ObjectiveSign",
    "ActionKind",
    "SchemeName",
    # Errors
    "RiftError",
    "InvalidArchitectureError",
    "DutTrainingError",
    "FaultSiteError",
    "FaultStateError",
    "BudgetError",
    "SearchError",
    "ConfigError",
    "UvmGenerationError",
    "UvmParseError",
    # Validators
    "validate_sv_identifier",
    "validate_unit_interval",
    "validate_selection_rate",
    "escape_sv_string",
]
