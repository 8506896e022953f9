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

"""Tests for UVM fault-sequence generation."""

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from rift_workbench.common.errors import UvmGenerationError, UvmParseError
from rift_workbench.faults import FaultSet, save_fault_set
from rift_workbench.uvm import (
    DEFAULT_CONFIG_KEY,
    UvmGenSpec,
    extract_fault_pairs,
    generate_sequence,
    parse_fault_file,
    render_sequence,
    write_sequence,
)

GOLDEN_DIR = Path(__file__).parent / "golden"

FIFTY_FAULTS = FaultSet.from_pairs((i * 7 + 3, i % 8) for i in range(50))


def write_faults(path: Path, pairs) -> Path:
    document = {"faults": [{"param_index": i, "bit": b} for i, b in pairs]}
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


def golden(name: str) -> bytes:
    return (GOLDEN_DIR / name).read_bytes()


class TestGoldenFiles:
    """Tests against the reviewed golden sequences."""

    def test_empty(self, tmp_path):
        """Test an empty fault list still yields a complete sequence."""
        spec = UvmGenSpec(
            fault_file=write_faults(tmp_path / "empty.json", []), sequence_name="rift_seq"
        )
        text = generate_sequence(spec)
        assert text.encode("utf-8") == golden("empty.sv")
        assert "fault_item::type_id::create" not in text
        assert "endclass" in text

    def test_two_faults_canonical_order(self, tmp_path):
        """Test (12,7),(3,4) is emitted as (3,4) then (12,7)."""
        path = write_faults(tmp_path / "two_faults.json", [(12, 7), (3, 4)])
        text = generate_sequence(UvmGenSpec(fault_file=path, sequence_name="rift_seq"))
        assert text.encode("utf-8") == golden("two_faults.sv")
        assert text.index("item.param_index = 3;") < text.index("item.param_index = 12;")

    def test_fifty_faults(self, tmp_path):
        """Test a 50-fault campaign file."""
        path = save_fault_set(FIFTY_FAULTS, tmp_path / "fifty_faults.json")
        text = generate_sequence(UvmGenSpec(fault_file=path, sequence_name="rift_seq"))
        assert text.encode("utf-8") == golden("fifty_faults.sv")
        assert text.count("fault_item::type_id::create(") == 50

    def test_goldens_use_lf(self):
        """Test the golden files are LF-only UTF-8."""
        for name in ("empty.sv", "two_faults.sv", "fifty_faults.sv"):
            assert b"\r" not in golden(name)


class TestStructure:
    """Tests for structural properties of generated sequences."""

    def test_round_trip(self):
        """Test pair extraction recovers the input fault set."""
        text = render_sequence(FIFTY_FAULTS, "rift_seq")
        assert extract_fault_pairs(text) == FIFTY_FAULTS
        assert extract_fault_pairs(render_sequence(FaultSet(), "rift_seq")) == FaultSet()

    def test_deterministic(self, tmp_path):
        """Test the same spec twice gives identical bytes."""
        path = write_faults(tmp_path / "f.json", [(5, 1), (2, 7)])
        spec = UvmGenSpec(fault_file=path, sequence_name="seq_a")
        assert generate_sequence(spec) == generate_sequence(spec)

    def test_config_db_pair(self):
        """Test the queue is published and retrieved under the same key."""
        text = render_sequence(FaultSet.msb([1]), "rift_seq", agent_config_key="agent_q")
        assert 'uvm_config_db#(fault_queue_t)::set(null, "*", "agent_q", faults);' in text
        assert '::get(cntxt, inst_name, "agent_q", result)' in text
        assert "class fault_item extends uvm_object;" in text
        assert "class rift_seq extends uvm_sequence" in text

    def test_default_key(self):
        """Test the default configuration key."""
        assert f'"{DEFAULT_CONFIG_KEY}"' in render_sequence(FaultSet(), "rift_seq")

    def test_output_independent_of_directory(self, tmp_path):
        """Test only the file's base name appears in the output."""
        (tmp_path / "a").mkdir()
        first = write_faults(tmp_path / "a" / "f.json", [(1, 7)])
        second = write_faults(tmp_path / "f.json", [(1, 7)])
        assert generate_sequence(UvmGenSpec(fault_file=first, sequence_name="s")) == (
            generate_sequence(UvmGenSpec(fault_file=second, sequence_name="s"))
        )


class TestErrors:
    """Tests for generation errors."""

    def test_malformed_json(self, tmp_path):
        """Test malformed JSON reports line and column."""
        path = tmp_path / "bad.json"
        path.write_text('{"faults": [\n  {"param_index": 1,, "bit": 7}\n]}', encoding="utf-8")
        with pytest.raises(UvmParseError) as excinfo:
            parse_fault_file(path)
        assert excinfo.value.line == 2
        assert excinfo.value.column is not None
        assert "line 2" in str(excinfo.value)

    def test_schema_mismatch(self, tmp_path):
        """Test a document outside the fault-set schema is rejected."""
        path = write_faults(tmp_path / "f.json", [(1, 9)])
        with pytest.raises(UvmParseError, match="does not match the fault-set schema"):
            parse_fault_file(path)

    def test_illegal_identifier(self, tmp_path):
        """Test illegal sequence names are rejected."""
        path = write_faults(tmp_path / "f.json", [])
        with pytest.raises(ValidationError, match="Invalid SystemVerilog identifier"):
            UvmGenSpec(fault_file=path, sequence_name="9seq")
        with pytest.raises(UvmGenerationError, match="collides"):
            render_sequence(FaultSet(), "fault_item")

    def test_guard_collision(self, tmp_path):
        """Test a sequence cannot reuse the fault item include guard."""
        with pytest.raises(UvmGenerationError, match="include guard"):
            render_sequence(FaultSet.from_pairs([(3, 4)]), "rift_fault_item")
        path = write_faults(tmp_path / "f.json", [(3, 4)])
        with pytest.raises(ValidationError, match="include guard"):
            UvmGenSpec(fault_file=path, sequence_name="Rift_Fault_Item")

    def test_write_needs_output(self, tmp_path):
        """Test writing requires an output path."""
        path = write_faults(tmp_path / "f.json", [])
        with pytest.raises(UvmGenerationError, match="output_path"):
            write_sequence(UvmGenSpec(fault_file=path, sequence_name="s"))

    def test_write(self, tmp_path):
        """Test the written file matches the golden bytes."""
        path = write_faults(tmp_path / "two_faults.json", [(3, 4), (12, 7)])
        out = write_sequence(
            UvmGenSpec(fault_file=path, sequence_name="rift_seq", output_path=tmp_path / "o/s.sv")
        )
        assert out.read_bytes() == golden("two_faults.sv")
