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

"""Tests for CampaignConfig."""

import json

import pytest
from pydantic import ValidationError

from rift_workbench.campaign import DEFAULT_BASELINES, SEED_ENV_VAR, CampaignConfig
from rift_workbench.common.enums import MethodName
from rift_workbench.common.errors import ConfigError
from rift_workbench.dut import ArchConfig
from rift_workbench.search import RlConfig


class TestCampaignConfig:
    """Tests for defaults and validation."""

    def test_defaults(self):
        """Test the default protocol."""
        config = CampaignConfig()
        assert config.n_seeds == 15
        assert config.rho == 0.001
        assert config.rl.max_evaluations == 1000
        assert config.alpha == 0.5
        assert config.baselines == [m.value for m in DEFAULT_BASELINES]
        assert config.run_seeds() == list(range(15))

    def test_run_seeds_offset(self):
        """Test run s uses seed + s."""
        assert CampaignConfig(seed=10, n_seeds=3).run_seeds() == [10, 11, 12]

    def test_resolved_tau(self):
        """Test tau defaults to 1.5x chance and can be overridden."""
        config = CampaignConfig(arch=ArchConfig(n_classes=3))
        assert config.resolved_tau == pytest.approx(0.5)
        assert CampaignConfig(tau=0.3).resolved_tau == 0.3
        assert CampaignConfig(rl=RlConfig(tau=0.25)).resolved_tau == 0.25

    def test_resolved_budget(self):
        """Test the budget defaults to episodes x steps."""
        assert CampaignConfig(rl=RlConfig(episodes=7, steps=3)).resolved_budget == 21
        assert CampaignConfig(eval_budget=5).resolved_budget == 5

    def test_rift_is_not_a_baseline(self):
        """Test rift in the baseline list is rejected."""
        with pytest.raises(ValidationError, match="always runs"):
            CampaignConfig(baselines=["rift", "rfi"])

    def test_baselines_deduplicated(self):
        """Test duplicate baselines keep first-seen order."""
        config = CampaignConfig(baselines=["gradient", "rfi", "gradient"])
        assert config.baselines == [MethodName.GRADIENT, MethodName.RFI]

    def test_invalid_rho(self):
        """Test rho outside (0, 1] is rejected."""
        with pytest.raises(ValidationError):
            CampaignConfig(rho=0.0)
        with pytest.raises(ValidationError):
            CampaignConfig(rho=1.5)

    def test_unknown_field(self):
        """Test unknown keys are rejected."""
        with pytest.raises(ValidationError):
            CampaignConfig(seeds=3)


class TestFromFile:
    """Tests for loading configs from JSON."""

    def test_load(self, tmp_path, monkeypatch):
        """Test nested sub-configs are parsed."""
        monkeypatch.delenv(SEED_ENV_VAR, raising=False)
        path = tmp_path / "campaign.json"
        path.write_text(
            json.dumps({"seed": 7, "arch": {"n_blocks": 1, "width": 16}, "rl": {"episodes": 4}}),
            encoding="utf-8",
        )
        config = CampaignConfig.from_file(path)
        assert config.seed == 7
        assert config.arch.width == 16
        assert config.rl.episodes == 4

    def test_seed_override(self, tmp_path, monkeypatch):
        """Test RIFT_SEED replaces the configured seed."""
        path = tmp_path / "campaign.json"
        path.write_text('{"seed": 7}', encoding="utf-8")
        monkeypatch.setenv(SEED_ENV_VAR, "42")
        assert CampaignConfig.from_file(path).seed == 42

    @pytest.mark.parametrize("raw", ["abc", "-1"])
    def test_bad_seed_override(self, tmp_path, monkeypatch, raw):
        """Test an unusable RIFT_SEED is a config error."""
        path = tmp_path / "campaign.json"
        path.write_text("{}", encoding="utf-8")
        monkeypatch.setenv(SEED_ENV_VAR, raw)
        with pytest.raises(ConfigError, match=SEED_ENV_VAR):
            CampaignConfig.from_file(path)

    def test_missing_file(self, tmp_path):
        """Test a missing file raises ConfigError."""
        with pytest.raises(ConfigError, match="Cannot read config"):
            CampaignConfig.from_file(tmp_path / "missing.json")

    def test_invalid_document(self, tmp_path):
        """Test a schema violation raises ConfigError."""
        path = tmp_path / "campaign.json"
        path.write_text('{"rho": 2}', encoding="utf-8")
        with pytest.raises(ConfigError, match="Invalid config"):
            CampaignConfig.from_file(path)
