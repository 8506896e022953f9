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

"""Tests for the multi-seed campaign runner."""

import csv
import json

import pytest

from rift_workbench.campaign import (
    AGGREGATE_COLUMNS,
    CampaignConfig,
    SeedRecord,
    prepare_dut,
    replay_seed_record,
    run_campaign,
    run_seed,
)
from rift_workbench.candidates import CandidateSet
from rift_workbench.common.enums import MethodName, RoleFamily
from rift_workbench.faults import FaultSet
from rift_workbench.search import RlConfig
from rift_workbench.uvm import extract_fault_pairs
from tests.conftest import TINY_ARCH, TINY_DATASET, TINY_TRAINING

TINY_CAMPAIGN = CampaignConfig(
    seed=3,
    arch=TINY_ARCH,
    dataset=TINY_DATASET,
    training=TINY_TRAINING,
    rho=0.1,
    rl=RlConfig(episodes=4, steps=5),
    baselines=["rfi", "magnitude"],
    n_seeds=2,
    max_k=3,
)


@pytest.fixture(scope="module")
def campaign_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("campaign")
    return run_campaign(TINY_CAMPAIGN, out), out


class TestRunSeed:
    """Tests for a single seed on the micro-DUT."""

    def test_methods_and_failures(self, critical_dut):
        """Test each method runs and a failing method is recorded."""
        model, data = critical_dut
        config = CampaignConfig(
            tau=0.1,
            rl=RlConfig(episodes=2, steps=5),
            baselines=["magnitude", "evolutionary"],
        )
        cands = CandidateSet(indices=(0, 500, 1, 2), rho=0.004, n_params=1000)
        record, full = run_seed(model, data, cands, config, seed=0)

        assert set(record.results) == {MethodName.RIFT, MethodName.MAGNITUDE}
        assert "must be >= population" in record.failures[MethodName.EVOLUTIONARY]
        magnitude = full[MethodName.MAGNITUDE]
        assert magnitude.constraint_satisfied
        assert magnitude.f_crit == FaultSet.msb([0])
        assert magnitude.evaluations_used == 10
        assert magnitude.trace
        assert record.results[MethodName.MAGNITUDE].trace == []
        assert record.results[MethodName.MAGNITUDE].f_crit == magnitude.f_crit

    def test_model_restored(self, critical_dut):
        """Test the DUT parameters are unchanged after every method ran."""
        model, data = critical_dut
        before = model.q_weights.copy()
        config = CampaignConfig(tau=0.1, rl=RlConfig(episodes=2, steps=5), baselines=["rfi"])
        cands = CandidateSet(indices=(0, 1), rho=0.002, n_params=1000)
        run_seed(model, data, cands, config, seed=1)
        assert (model.q_weights == before).all()


class TestRunCampaign:
    """Smoke tests for the full protocol on the tiny DUT."""

    def test_files(self, campaign_run):
        """Test every report file is written."""
        report, out = campaign_run
        expected = [
            "oracle.json",
            "profile.csv",
            "aggregate.csv",
            "comparison.csv",
            "seeds/seed_3.json",
            "seeds/seed_4.json",
            "uvm/rift_seed_3.json",
            "uvm/rift_seed_3.sv",
            "uvm/rift_seed_4.sv",
        ]
        for name in expected:
            assert name in report.files
            assert (out / name).is_file()
        assert (out / "campaign.json").is_file()
        assert report.files == sorted(report.files)
        assert report.seeds == [3, 4]
        assert report.tau == pytest.approx(0.5)
        assert report.eval_budget == 20

    def test_evaluation_accounting(self, campaign_run):
        """Test per-method evaluations match the seed records and the budget."""
        report, out = campaign_run
        assert report.evaluations_total == sum(report.evaluations_by_method.values())
        assert report.oracle_evaluations == report.n_params + 1
        per_method = {m: 0 for m in report.evaluations_by_method}
        for seed in report.seeds:
            record = SeedRecord.model_validate_json((out / f"seeds/seed_{seed}.json").read_text())
            for name, result in record.results.items():
                per_method[name] += result.evaluations_used
                assert result.evaluations_used <= report.eval_budget
        assert per_method == report.evaluations_by_method

    def test_candidate_concentration(self, campaign_run):
        """Test the report carries per-role and per-family candidate shares."""
        report, out = campaign_run
        families = {RoleFamily(f): share for f, share in report.candidate_families.items()}
        assert set(families) == set(RoleFamily)
        assert sum(families.values()) == pytest.approx(1.0)
        assert sum(report.candidate_groups.values()) == pytest.approx(1.0)
        document = json.loads((out / "campaign.json").read_text())
        assert set(document["candidate_families"]) == {f.value for f in RoleFamily}

    def test_seed_records_drop_traces(self, campaign_run):
        """Test stored records keep F_crit but no trace."""
        _, out = campaign_run
        document = json.loads((out / "seeds/seed_3.json").read_text())
        assert document["seed"] == 3
        for result in document["results"].values():
            assert result["trace"] == []
            assert "faults" in result["f_crit"]

    def test_replay(self, campaign_run):
        """Test re-evaluating stored fault sets reproduces final_accuracy."""
        _, out = campaign_run
        model, data = prepare_dut(TINY_CAMPAIGN)
        for seed in TINY_CAMPAIGN.run_seeds():
            record = SeedRecord.model_validate_json((out / f"seeds/seed_{seed}.json").read_text())
            assert all(replay_seed_record(record, model, data).values())

    def test_aggregate_csv(self, campaign_run):
        """Test the aggregate table columns and comparison rows."""
        _, out = campaign_run
        with open(out / "aggregate.csv", newline="") as handle:
            rows = list(csv.DictReader(handle))
        assert list(rows[0]) == AGGREGATE_COLUMNS
        sizes = {r["method"]: r for r in rows if r["metric"] == "f_crit_size"}
        assert set(sizes) == {"rift", "rfi", "magnitude"}
        assert sizes["rift"]["comparison"] == ""
        assert sizes["rfi"]["comparison"] == "rift"

    def test_uvm_matches_seed_record(self, campaign_run):
        """Test each generated sequence carries the seed's RIFT F_crit."""
        _, out = campaign_run
        record = SeedRecord.model_validate_json((out / "seeds/seed_4.json").read_text())
        text = (out / "uvm/rift_seed_4.sv").read_text()
        assert extract_fault_pairs(text) == record.results[MethodName.RIFT].f_crit
        assert "class rift_seq_s4 extends uvm_sequence" in text

    @pytest.mark.slow
    def test_deterministic(self, campaign_run, tmp_path):
        """Test a second run reproduces every seed record byte for byte."""
        _, first = campaign_run
        run_campaign(TINY_CAMPAIGN, tmp_path)
        for seed in TINY_CAMPAIGN.run_seeds():
            name = f"seeds/seed_{seed}.json"
            assert (tmp_path / name).read_bytes() == (first / name).read_bytes()
        assert (tmp_path / "profile.csv").read_bytes() == (first / "profile.csv").read_bytes()
