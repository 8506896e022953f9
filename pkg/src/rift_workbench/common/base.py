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
Base model classes for all workbench schemas.

Every configuration object, result record and report in the workbench
derives from one of these bases so that validation and JSON behaviour is
uniform across modules.
"""

from pydantic import BaseModel, ConfigDict


class RiftBaseModel(BaseModel):
    """
    Base model for all workbench schemas.

    Configuration:
        - from_attributes: Allow construction from attribute-bearing objects
        - validate_assignment: Validate on field assignment
        - use_enum_values: Use enum values, not names, in serialization
        - extra: Forbid extra fields by default for strict validation
        - str_strip_whitespace: Strip whitespace from string fields
    """

    model_config = ConfigDict(
        from_attributes=True,
        validate_assignment=True,
        use_enum_values=True,
        extra="forbid",
        str_strip_whitespace=True,
    )


class FrozenModel(RiftBaseModel):
    """
    Immutable, hashable record.

    Use for values that act as dictionary keys or set members
    (fault sites, canonical fault sets).
    """

    model_config = ConfigDict(frozen=True)


class ArrayModel(RiftBaseModel):
    """
    Model that carries numpy arrays or torch tensors as fields.

    Arrays are stored by reference; they are not copied or coerced.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)
