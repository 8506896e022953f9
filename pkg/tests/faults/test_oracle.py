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

"""Tests for the brute-force critical-singleton oracle."""

import pytest

from rift_workbench.dut import evaluate
from rift_workbench.dut.evaluation import EvalCounter
from rift_workbench.faults import (
    MSB,
    CriticalOracle,
    FaultSet,
    FaultSite,
    build_critical_oracle,
    evaluate_faulted,
)


class TestCriticalOracle:
    """Tests for build_critical_oracle."""

    def test_single_critical_bit(self, critical_dut, counter):
        """Test the gating weight is the only critical singleton."""
        model, data = critical_dut
        oracle = build_critical_oracle(model, data, tau=0.1, counter=counter)
        assert oracle.critical_singletons == (FaultSite(param_index=0, bit=MSB),)
        assert oracle.baseline_accuracy == 1.0
        assert oracle.n_evaluated == model.n_params
        assert counter.value == model.n_params + 1

    def test_redundant_model_has_none(self, redundant_dut, counter):
        """Test a model with duplicated paths survives every single flip."""
        model, data = redundant_dut
        oracle = build_critical_oracle(model, data, tau=0.75, counter=counter)
        assert oracle.critical_singletons == ()

    def test_partial_degradation_not_critical(self, gradient_dut, counter):
        """Test a flip halving accuracy stays below the 0.90 cutoff."""
        model, data = gradient_dut
        oracle = build_critical_oracle(model, data, tau=0.5, counter=counter)
        assert FaultSite(param_index=0, bit=MSB) in oracle
        assert FaultSite(param_index=200, bit=MSB) not in oracle
        assert evaluate_faulted(model, data, FaultSet.msb([200]), counter).accuracy == 0.5

    def test_soundness(self, tiny_dut, counter):
        """Test every reported singleton reproduces the degradation."""
        model, data = tiny_dut
        oracle = build_critical_oracle(model, data, tau=0.5, counter=counter)
        for site in oracle.critical_singletons:
            accuracy = evaluate_faulted(model, data, FaultSet(sites=(site,)), counter).accuracy
            assert oracle.degradation(accuracy) > oracle.degradation_cutoff

    def test_restores_model(self, tiny_dut):
        """Test enumeration leaves the model bit-identical."""
        model, data = tiny_dut
        digest = model.content_digest()
        build_critical_oracle(model, data, tau=0.5, counter=EvalCounter())
        assert model.content_digest() == digest
        assert model.applied_faults == []

    def test_deterministic_and_parallel(self, tiny_dut):
        """Test serial, repeated and threaded scans agree."""
        model, data = tiny_dut
        first = build_critical_oracle(model, data, tau=0.5, counter=EvalCounter())
        second = build_critical_oracle(model, data, tau=0.5, counter=EvalCounter())
        threaded = build_critical_oracle(
            model, data, tau=0.5, counter=EvalCounter(), max_workers=4
        )
        assert first == second
        assert threaded.critical_singletons == first.critical_singletons

    def test_chance_floor(self):
        """Test degradation measured against a chance-level floor."""
        oracle = CriticalOracle(threshold_tau=0.1, baseline_accuracy=0.9, chance_floor=0.1)
        assert oracle.degradation(0.1) == pytest.approx(1.0)
        assert oracle.degradation(0.5) == pytest.approx(0.5)
        assert oracle.is_critical(0.15) is True
        assert oracle.is_critical(0.3) is False

    def test_zero_baseline(self):
        """Test an already-broken model has no degradation."""
        oracle = CriticalOracle(threshold_tau=0.1, baseline_accuracy=0.0)
        assert oracle.degradation(0.0) == 0.0

    def test_save_and_load(self, critical_dut, tmp_path):
        """Test oracle files round-trip."""
        model, data = critical_dut
        oracle = build_critical_oracle(model, data, tau=0.1, counter=EvalCounter())
        assert CriticalOracle.load(oracle.save(tmp_path / "oracle.json")) == oracle

    def test_baseline_evaluation_counted(self, critical_dut, counter):
        """Test the baseline evaluation is charged like any other."""
        model, data = critical_dut
        evaluate(model, data, counter)
        build_critical_oracle(model, data, tau=0.1, counter=counter)
        assert counter.value == model.n_params + 2
