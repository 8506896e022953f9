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

"""Tests for the rift command-line interface."""

import json
from pathlib import Path

import pytest

from rift_workbench.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, build_parser, main

GOLDEN_DIR = Path(__file__).parent / "uvm" / "golden"


def write_two_faults(directory: Path) -> Path:
    path = directory / "two_faults.json"
    path.write_text(
        '{"faults": [{"param_index": 12, "bit": 7}, {"param_index": 3, "bit": 4}]}',
        encoding="utf-8",
    )
    return path


class TestParser:
    """Tests for argument parsing."""

    def test_unknown_command(self, capsys):
        """Test an unknown subcommand is a usage error."""
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == EXIT_USAGE
        assert "invalid choice" in capsys.readouterr().err

    def test_missing_command(self):
        """Test a bare invocation is a usage error."""
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == EXIT_USAGE

    def test_baseline_choices(self):
        """Test only baselines are accepted by the baseline command."""
        parser = build_parser()
        assert parser.parse_args(["baseline", "rfi"]).name == "rfi"
        with pytest.raises(SystemExit):
            parser.parse_args(["baseline", "rift"])

    def test_list_options(self):
        """Test comma-separated grids."""
        args = build_parser().parse_args(["ablate", "alpha", "--grid", "0,0.25,1"])
        assert args.grid == [0.0, 0.25, 1.0]
        args = build_parser().parse_args(["scale", "--k", "10,20"])
        assert args.k == [10, 20]


class TestGenUvm:
    """Tests for the gen-uvm command."""

    def test_golden_output(self, tmp_path):
        """Test the written sequence matches the golden file."""
        faults = write_two_faults(tmp_path)
        out = tmp_path / "seq.sv"
        code = main(["gen-uvm", "--faults", str(faults), "--name", "rift_seq", "--out", str(out)])
        assert code == EXIT_OK
        assert out.read_bytes() == (GOLDEN_DIR / "two_faults.sv").read_bytes()

    def test_json_output(self, tmp_path, capsys):
        """Test --json prints exactly one JSON document."""
        faults = write_two_faults(tmp_path)
        out = tmp_path / "seq.sv"
        code = main(
            ["gen-uvm", "--faults", str(faults), "--name", "rift_seq", "--out", str(out), "--json"]
        )
        assert code == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"sequence_file": str(out), "sequence_name": "rift_seq"}

    def test_bad_name(self, tmp_path, capsys):
        """Test an illegal identifier fails with exit status 2."""
        faults = write_two_faults(tmp_path)
        code = main(["gen-uvm", "--faults", str(faults), "--name", "1bad", "--out", str(tmp_path / "s.sv")])
        assert code == EXIT_FAILURE
        assert capsys.readouterr().err.startswith("rift gen-uvm:")

    def test_malformed_faults(self, tmp_path, capsys):
        """Test a malformed fault file fails with exit status 2."""
        bad = tmp_path / "bad.json"
        bad.write_text("{", encoding="utf-8")
        code = main(["gen-uvm", "--faults", str(bad), "--name", "s", "--out", str(tmp_path / "s.sv")])
        assert code == EXIT_FAILURE
        assert "Malformed fault file" in capsys.readouterr().err


class TestCommands:
    """Tests for config handling and the fixed-input commands."""

    def test_missing_config(self, tmp_path, capsys):
        """Test a missing config file fails with exit status 2."""
        code = main(["campaign", "--config", str(tmp_path / "missing.json"), "--out", str(tmp_path)])
        assert code == EXIT_FAILURE
        assert "Cannot read config" in capsys.readouterr().err

    def test_dse_reference(self, tmp_path, capsys):
        """Test the reference DSE table is written and printed."""
        code = main(["dse", "--reference", "--out", str(tmp_path), "--json"])
        assert code == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert "| Strategy | AO (%) | FC (%) | CE (Cov/Area) | Notes |" in payload["markdown"]
        assert (tmp_path / "dse.json").is_file()
        assert (tmp_path / "dse.md").is_file()

    def test_dse_needs_input(self, tmp_path, capsys):
        """Test dse without --faults or --reference fails."""
        code = main(["dse", "--out", str(tmp_path)])
        assert code == EXIT_FAILURE
        assert "--reference" in capsys.readouterr().err
