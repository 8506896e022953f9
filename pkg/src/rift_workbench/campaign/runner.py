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
Multi-seed campaign: RIFT and the baselines under one evaluation budget.

Output layout under out_dir:

    oracle.json             critical-singleton ground truth
    profile.csv             sensitivity scores and ranks
    seeds/seed_<s>.json     per-seed results (byte-stable across runs)
    aggregate.csv           per-method statistics, compared against RIFT
    comparison.csv          coverage and efficiency per method
    dse.json, dse.md        protection design-space report
    uvm/rift_seed_<s>.sv    UVM sequence for each RIFT F_crit
    campaign.json           run summary including wall-clock time
"""

import csv
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence, Union

from pydantic import Field

from rift_workbench.baselines.coverage import compare_methods, write_comparison_csv
from rift_workbench.baselines.runner import BudgetedMethod, run_method
from rift_workbench.campaign.config import CampaignConfig
from rift_workbench.campaign.pipeline import candidates_for, prepare_dut
from rift_workbench.campaign.stats import StatsSummary, summarize
from rift_workbench.candidates.selection import (
    CandidateSet,
    family_concentration,
    group_concentration,
)
from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import MethodName, ParamRole, RoleFamily
from rift_workbench.common.errors import RiftError
from rift_workbench.dse.report import DseReport, run_dse
from rift_workbench.dut.dataset import RepDataset
from rift_workbench.dut.evaluation import EvalCounter, evaluate
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.faults.oracle import CriticalOracle, build_critical_oracle
from rift_workbench.faults.sites import FaultSite, save_fault_set
from rift_workbench.search.tracking import SearchResult, replay_accuracy
from rift_workbench.sensitivity.scores import export_profile_csv
from rift_workbench.utils.encoding import write_text_lf
from rift_workbench.uvm.generator import UvmGenSpec, write_sequence

logger = logging.getLogger(__name__)

AGGREGATE_COLUMNS = [
    "method",
    "metric",
    "n",
    "mean",
    "sd",
    "ci95_lo",
    "ci95_hi",
    "comparison",
    "welch_p",
    "cohens_d",
]


class SeedRecord(RiftBaseModel):
    """All method results of one seed. Traces are dropped; F_crit is kept."""

    seed: int
    tau: float
    eval_budget: int
    results: dict[MethodName, SearchResult] = Field(default_factory=dict)
    failures: dict[MethodName, str] = Field(default_factory=dict)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class CampaignReport(RiftBaseModel):
    config: CampaignConfig
    tau: float
    eval_budget: int
    seeds: list[int]
    n_params: int
    n_candidates: int
    candidate_groups: dict[ParamRole, float] = Field(default_factory=dict)
    candidate_families: dict[RoleFamily, float] = Field(default_factory=dict)
    baseline_accuracy: float
    oracle_critical: Optional[int] = None
    oracle_evaluations: int = 0
    evaluations_by_method: dict[MethodName, int] = Field(default_factory=dict)
    evaluations_total: int = 0
    failures: int = 0
    f_crit_size: dict[MethodName, StatsSummary] = Field(default_factory=dict)
    files: list[str] = Field(default_factory=list)
    wall_clock_seconds: float = 0.0


def _methods(config: CampaignConfig) -> list[MethodName]:
    return [MethodName.RIFT, *(MethodName(m) for m in config.baselines)]


def run_seed(
    model: QuantizedModel,
    data: RepDataset,
    cands: CandidateSet,
    config: CampaignConfig,
    seed: int,
) -> tuple[SeedRecord, dict[MethodName, SearchResult]]:
    """
    Run every method once for one seed.

    Each method gets its own counter, checked against the evaluations the
    result reports. A method that fails is recorded and the others go on.

    Returns:
        The stored record and the full results with traces
    """
    tau, budget = config.resolved_tau, config.resolved_budget
    record = SeedRecord(seed=seed, tau=tau, eval_budget=budget)
    full: dict[MethodName, SearchResult] = {}
    for name in _methods(config):
        counter = EvalCounter()
        try:
            result = run_method(
                BudgetedMethod(name=name, eval_budget=budget, seed=seed),
                model,
                data,
                tau,
                cands=cands,
                rl=config.rl,
                evo=config.evo,
                max_k=config.max_k,
                counter=counter,
            )
        except RiftError as e:
            logger.warning("seed %d: %s failed: %s", seed, name.value, e)
            record.failures[name] = str(e)
            continue
        if counter.value != result.evaluations_used:
            raise RiftError(
                f"{name.value} reported {result.evaluations_used} evaluations but "
                f"charged {counter.value}"
            )
        full[name] = result
        record.results[name] = result.model_copy(update={"trace": []})
    return record, full


def replay_seed_record(
    record: SeedRecord, model: QuantizedModel, data: RepDataset
) -> dict[str, bool]:
    """Re-evaluate every stored F_crit; True where final_accuracy matches exactly."""
    return {
        MethodName(name).value: result.final_accuracy is None
        or replay_accuracy(model, data, result) == result.final_accuracy
        for name, result in record.results.items()
    }


def _write_aggregate(
    path: Path, methods: Sequence[MethodName], runs: dict[MethodName, list[SearchResult]]
) -> dict[MethodName, StatsSummary]:
    metrics = {
        "f_crit_size": lambda r: r.f_crit_size,
        "evaluations_used": lambda r: r.evaluations_used,
        "distinct_sets": lambda r: r.distinct_sets,
        "first_hit_evaluation": lambda r: r.first_hit_evaluation,
        "constraint_satisfied": lambda r: float(r.constraint_satisfied),
    }
    sizes: dict[MethodName, StatsSummary] = {}
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=AGGREGATE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for metric, getter in metrics.items():
            reference = [getter(r) for r in runs.get(MethodName.RIFT, [])]
            reference = [v for v in reference if v is not None]
            for method in methods:
                values = [getter(r) for r in runs.get(method, [])]
                values = [v for v in values if v is not None]
                if not values:
                    continue
                compare = reference if method is not MethodName.RIFT else None
                summary = summarize(values, compare, "rift" if compare is not None else None)
                if metric == "f_crit_size":
                    sizes[method] = summary
                writer.writerow(
                    {"method": method.value, "metric": metric, **summary.model_dump()}
                )
    return sizes


def _critical_faults(
    runs: dict[MethodName, list[SearchResult]], oracle: Optional[CriticalOracle]
) -> list[FaultSite]:
    found = {
        site
        for result in runs.get(MethodName.RIFT, [])
        if result.constraint_satisfied
        for site in result.f_crit.sites
    }
    if not found and oracle is not None:
        found = set(oracle.critical_singletons)
    return sorted(found, key=lambda s: s.pair)


def run_campaign(config: CampaignConfig, out_dir: Union[str, Path]) -> CampaignReport:
    """
    Run the full protocol and write every report under out_dir.

    Args:
        config: Campaign configuration
        out_dir: Output directory (created if missing)

    Returns:
        CampaignReport, also written to campaign.json

    Raises:
        InvalidArchitectureError: If config.arch is invalid
        DutTrainingError: If the DUT cannot be trained
    """
    started = time.perf_counter()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files: list[Path] = []

    model, data = prepare_dut(config)
    tau, budget = config.resolved_tau, config.resolved_budget
    baseline_accuracy = evaluate(model, data, EvalCounter()).accuracy

    oracle: Optional[CriticalOracle] = None
    oracle_counter = EvalCounter()
    if config.build_oracle:
        oracle = build_critical_oracle(
            model,
            data,
            tau,
            degradation_cutoff=config.degradation_cutoff,
            chance_floor=model.arch.chance_accuracy,
            counter=oracle_counter,
            max_workers=config.max_workers,
        )
        files.append(oracle.save(out / "oracle.json"))

    profile, cands = candidates_for(model, data, config)
    files.append(export_profile_csv(profile, model, out / "profile.csv"))
    families = family_concentration(cands, model)
    logger.info(
        "Candidates: k=%d, %s",
        cands.k,
        ", ".join(f"{RoleFamily(f).value} {share:.2f}" for f, share in families.items()),
    )

    seeds = config.run_seeds()
    logger.info(
        "Campaign: %d seeds, methods %s, budget %d, tau %.4f",
        len(seeds),
        ", ".join(m.value for m in _methods(config)),
        budget,
        tau,
    )
    if config.max_workers > 1:
        with ThreadPoolExecutor(max_workers=config.max_workers) as pool:
            outcomes = list(
                pool.map(lambda s: run_seed(model.clone(), data, cands, config, s), seeds)
            )
    else:
        outcomes = [run_seed(model, data, cands, config, s) for s in seeds]

    methods = _methods(config)
    runs: dict[MethodName, list[SearchResult]] = {m: [] for m in methods}
    for record, full in outcomes:
        seed_file = out / "seeds" / f"seed_{record.seed}.json"
        files.append(write_text_lf(seed_file, record.to_json() + "\n"))
        for name, result in full.items():
            runs[MethodName(name)].append(result)

    sizes = _write_aggregate(out / "aggregate.csv", methods, runs)
    files.append(out / "aggregate.csv")

    if oracle is not None:
        rows = compare_methods({m: r for m, r in runs.items() if r}, oracle)
        files.append(write_comparison_csv(rows, out / "comparison.csv"))

    faults = _critical_faults(runs, oracle)
    if faults:
        dse: DseReport = run_dse(faults, model, config.dse)
        dse.save(out / "dse.json", out / "dse.md")
        files.extend([out / "dse.json", out / "dse.md"])
    else:
        logger.warning("No critical faults discovered; DSE report skipped")

    if config.emit_uvm:
        for record, full in outcomes:
            if MethodName.RIFT not in full:
                continue
            seed, result = record.seed, full[MethodName.RIFT]
            fault_file = save_fault_set(result.f_crit, out / "uvm" / f"rift_seed_{seed}.json")
            spec = UvmGenSpec(
                fault_file=fault_file,
                sequence_name=f"rift_seq_s{seed}",
                output_path=out / "uvm" / f"rift_seed_{seed}.sv",
            )
            files.extend([fault_file, write_sequence(spec)])

    evaluations = {m: sum(r.evaluations_used for r in runs[m]) for m in methods}
    report = CampaignReport(
        config=config,
        tau=tau,
        eval_budget=budget,
        seeds=seeds,
        n_params=model.n_params,
        n_candidates=cands.k,
        candidate_groups=group_concentration(cands, model),
        candidate_families=families,
        baseline_accuracy=baseline_accuracy,
        oracle_critical=len(oracle.critical_singletons) if oracle else None,
        oracle_evaluations=oracle_counter.value,
        evaluations_by_method=evaluations,
        evaluations_total=sum(evaluations.values()),
        failures=sum(len(record.failures) for record, _ in outcomes),
        f_crit_size=sizes,
        files=sorted(p.relative_to(out).as_posix() for p in files),
    )
    report.wall_clock_seconds = time.perf_counter() - started
    write_text_lf(out / "campaign.json", report.model_dump_json(by_alias=True, indent=2) + "\n")
    logger.info(
        "Campaign finished in %.1f s: %d evaluations, %d files",
        report.wall_clock_seconds,
        report.evaluations_total,
        len(report.files) + 1,
    )
    return report
