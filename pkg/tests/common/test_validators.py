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

"""Tests for shared validators, enums and base models."""

import pytest
from pydantic import ValidationError

from rift_workbench.common.base import FrozenModel, RiftBaseModel
from rift_workbench.common.enums import MethodName, ParamRole, RoleFamily, SchemeName
from rift_workbench.common.errors import UvmGenerationError, UvmParseError
from rift_workbench.common.validators import (
    escape_sv_string,
    validate_selection_rate,
    validate_sv_identifier,
    validate_unit_interval,
)


class TestSvIdentifier:
    """Tests for SystemVerilog identifier validation."""

    def test_valid_identifiers(self):
        """Test that legal identifiers pass unchanged."""
        for name in ("rift_seq", "_seq", "Seq2", "a"):
            assert validate_sv_identifier(name) == name

    def test_none_passthrough(self):
        """Test that None is returned as-is."""
        assert validate_sv_identifier(None) is None

    def test_illegal_characters(self):
        """Test that identifiers with illegal characters are rejected."""
        for name in ("2seq", "rift-seq", "rift seq", ""):
            with pytest.raises(ValueError, match="Invalid SystemVerilog identifier"):
                validate_sv_identifier(name)

    def test_keyword_rejected(self):
        """Test that SystemVerilog keywords are rejected."""
        with pytest.raises(ValueError, match="reserved keyword"):
            validate_sv_identifier("class")

    def test_template_name_collision(self):
        """Test that names used by the sequence template are rejected."""
        with pytest.raises(ValueError, match="collides"):
            validate_sv_identifier("fault_item")
        with pytest.raises(ValueError, match="collides"):
            validate_sv_identifier("uvm_sequence")

    def test_include_guard_collision(self):
        """Test that a name whose guard matches the fault item guard is rejected."""
        for name in ("rift_fault_item", "Rift_Fault_Item", "RIFT_FAULT_ITEM"):
            with pytest.raises(ValueError, match="include guard RIFT_FAULT_ITEM_SV"):
                validate_sv_identifier(name)
        assert validate_sv_identifier("rift_fault_items") == "rift_fault_items"


class TestUnitInterval:
    """Tests for interval validation."""

    def test_closed_interval(self):
        """Test both endpoints are accepted by default."""
        assert validate_unit_interval(0.0, "x") == 0.0
        assert validate_unit_interval(1.0, "x") == 1.0

    def test_open_endpoints(self):
        """Test open endpoints are excluded."""
        with pytest.raises(ValueError, match=r"expected a value in \(0, 1\]"):
            validate_unit_interval(0.0, "x", open_low=True)
        with pytest.raises(ValueError, match=r"expected a value in \[0, 1\)"):
            validate_unit_interval(1.0, "x", open_high=True)

    def test_selection_rate(self):
        """Test rho must lie in (0, 1]."""
        assert validate_selection_rate(1.0) == 1.0
        with pytest.raises(ValueError, match="selection rate rho"):
            validate_selection_rate(0.0)
        with pytest.raises(ValueError, match="selection rate rho"):
            validate_selection_rate(1.5)


class TestEscapeSvString:
    """Tests for string literal escaping."""

    def test_quotes_and_backslashes(self):
        """Test quotes and backslashes are escaped."""
        assert escape_sv_string('a"b\\c') == 'a\\"b\\\\c'

    def test_control_characters_rejected(self):
        """Test newlines are not allowed in literals."""
        with pytest.raises(ValueError, match="control characters"):
            escape_sv_string("a\nb")


class TestEnums:
    """Tests for workbench enumerations."""

    def test_role_families(self):
        """Test each role rolls up into its architectural family."""
        assert ParamRole.ATTENTION_Q.family == RoleFamily.ATTENTION
        assert ParamRole.ATTENTION_O.family == RoleFamily.ATTENTION
        assert ParamRole.NORM_BIAS.family == RoleFamily.NORMALIZATION
        assert ParamRole.FFN_IN.family == RoleFamily.FFN
        assert ParamRole.CLASSIFIER.family == RoleFamily.CLASSIFIER

    def test_baseline_flag(self):
        """Test only the comparison methods are baselines."""
        assert MethodName.RIFT.is_baseline is False
        assert all(m.is_baseline for m in MethodName if m is not MethodName.RIFT)

    def test_scheme_display_names(self):
        """Test every scheme has a report label."""
        assert SchemeName.TMR.display_name
        assert all(s.display_name for s in SchemeName)


class TestBaseModels:
    """Tests for the shared pydantic bases."""

    def test_extra_fields_forbidden(self):
        """Test unknown fields are rejected."""

        class Sample(RiftBaseModel):
            name: str

        with pytest.raises(ValidationError):
            Sample(name="x", other=1)

    def test_whitespace_stripped(self):
        """Test string fields are stripped."""

        class Sample(RiftBaseModel):
            name: str

        assert Sample(name="  x  ").name == "x"

    def test_frozen_models_are_hashable(self):
        """Test frozen models hash and refuse mutation."""

        class Point(FrozenModel):
            x: int

        assert hash(Point(x=1)) == hash(Point(x=1))
        with pytest.raises(ValidationError):
            Point(x=1).x = 2


class TestErrors:
    """Tests for the error hierarchy."""

    def test_parse_error_location(self):
        """Test parse errors carry line and column."""
        error = UvmParseError("bad json", line=3, column=7)
        assert isinstance(error, UvmGenerationError)
        assert error.line == 3
        assert error.column == 7
