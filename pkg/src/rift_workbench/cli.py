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
Command-line entry point: ``rift <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 runtime failure.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from rift_workbench.baselines.runner import BudgetedMethod, run_method
from rift_workbench.campaign.ablation import (
    ablation_alpha,
    ablation_rl_only,
    ablation_rl_params,
)
from rift_workbench.campaign.config import CampaignConfig
from rift_workbench.campaign.pipeline import candidates_for, profile_model
from rift_workbench.campaign.runner import run_campaign
from rift_workbench.campaign.scalability import scalability_sweep
from rift_workbench.candidates.selection import CandidateSet, family_concentration
from rift_workbench.common.enums import MethodName
from rift_workbench.common.errors import RiftError
from rift_workbench.dse.report import reference_report, run_dse
from rift_workbench.dut.dataset import RepDataset, representative_dataset
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.dut.serialization import load_model, save_model
from rift_workbench.dut.training import build_dut, quantized_accuracy
from rift_workbench.faults.sites import load_fault_set, save_fault_set
from rift_workbench.search.agent import run_search
from rift_workbench.search.tracking import SearchResult
from rift_workbench.sensitivity.scores import export_profile_csv
from rift_workbench.utils.encoding import write_text_lf
from rift_workbench.uvm.generator import DEFAULT_CONFIG_KEY, UvmGenSpec, write_sequence

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

Payload = dict[str, Any]


class RiftArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that exits with status 1 on usage errors."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'") from e


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from e


# -- configuration and shared state -------------------------------------------


def load_config(args: argparse.Namespace) -> CampaignConfig:
    """File (or defaults), then RIFT_SEED, then --seed."""
    if args.config is not None:
        config = CampaignConfig.from_file(args.config)
    else:
        config = CampaignConfig().with_env_overrides()
    if args.seed is not None:
        config = config.model_copy(update={"seed": args.seed})
    return config


def _dut(args: argparse.Namespace, config: CampaignConfig) -> tuple[QuantizedModel, RepDataset]:
    path = Path(args.dut) if args.dut else Path(args.out) / "dut.json"
    if path.exists():
        model = load_model(path)
        logger.info("Loaded DUT from %s", path)
    else:
        model = build_dut(config.arch, config.seed, config.training, config.dataset)
    seed = model.seed if model.seed is not None else config.seed
    return model, representative_dataset(model.arch, seed, config.dataset)


def _result_payload(result: SearchResult, path: Path) -> Payload:
    return {
        "method": result.method,
        "seed": result.seed,
        "f_crit": [list(pair) for pair in result.f_crit.key],
        "f_crit_size": result.f_crit_size,
        "final_accuracy": result.final_accuracy,
        "constraint_satisfied": result.constraint_satisfied,
        "evaluations_used": result.evaluations_used,
        "first_hit_evaluation": result.first_hit_evaluation,
        "result_file": str(path),
    }


# -- commands ------------------------------------------------------------------


def cmd_build_dut(args: argparse.Namespace, config: CampaignConfig) -> Payload:
    model = build_dut(config.arch, config.seed, config.training, config.dataset)
    data = representative_dataset(config.arch, config.seed, config.dataset)
    path = save_model(model, Path(args.out) / "dut.json")
    return {
        "dut_file": str(path),
        "n_params": model.n_params,
        "accuracy": quantized_accuracy(model, data),
        "seed": config.seed,
    }


def cmd_profile(args: argparse.Namespace, config: CampaignConfig) -> Payload:
    model, data = _dut(args, config)
    profile = profile_model(model, data, config)
    path = export_profile_csv(profile, model, Path(args.out) / "profile.csv")
    return {
        "profile_file": str(path),
        "alpha": profile.alpha,
        "top": [int(i) for i in profile.ranking[: args.top]],
    }


def cmd_select(args: argparse.Namespace, config: CampaignConfig) -> Payload:
    model, data = _dut(args, config)
    _, cands = candidates_for(model, data, config)
    path = write_text_lf(Path(args.out) / "candidates.json", cands.model_dump_json(indent=2) + "\n")
    return {
        "candidates_file": str(path),
        "k": cands.k,
        "rho": cands.rho,
        "families": {str(f): share for f, share in family_concentration(cands, model).items()},
    }


def _candidates(args: argparse.Namespace, config: CampaignConfig, model, data) -> CandidateSet:
    if args.candidates:
        return CandidateSet.model_validate_json(Path(args.candidates).read_text(encoding="utf-8"))
    return candidates_for(model, data, config)[1]


def cmd_search(args: argparse.Namespace, config: CampaignConfig) -> Payload:
    model, data = _dut(args, config)
    cands = _candidates(args, config, model, data)
    rl = config.rl.model_copy(update={"tau": config.resolved_tau})
    result = run_search(model, data, cands, rl, config.seed, eval_budget=config.eval_budget)
    out = Path(args.out)
    path = result.save(out / f"search_seed_{config.seed}.json")
    save_fault_set(result.f_crit, out / "f_crit.json")
    return _result_payload(result, path)


def cmd_baseline(args: argparse.Namespace, config: CampaignConfig) -> Payload:
    model, data = _dut(args, config)
    name = MethodName(args.name)
    cands = _candidates(args, config, model, data) if name is MethodName.EVOLUTIONARY else None
    result = run_method(
        BudgetedMethod(name=name, eval_budget=config.resolved_budget, seed=config.seed),
        model,
        data,
        config.resolved_tau,
        cands=cands,
        evo=config.evo,
        max_k=config.max_k,
    )
    path = result.save(Path(args.out) / f"{name.value}_seed_{config.seed}.json")
    return _result_payload(result, path)


def cmd_campaign(args: argparse.Namespace, config: CampaignConfig) -> Payload:
    report = run_campaign(config, args.out)
    return {
        "out_dir": str(args.out),
        "seeds": len(report.seeds),
        "tau": report.tau,
        "eval_budget": report.eval_budget,
        "oracle_critical": report.oracle_critical,
        "mean_f_crit_size": {str(m): s.mean for m, s in report.f_crit_size.items()},
        "failures": report.failures,
        "wall_clock_seconds": report.wall_clock_seconds,
    }


def cmd_dse(args: argparse.Namespace, config: CampaignConfig) -> Payload:
    if args.reference:
        report = reference_report()
    else:
        if not args.faults:
            raise RiftError("dse needs --faults FILE or --reference")
        model, _ = _dut(args, config)
        report = run_dse(list(load_fault_set(args.faults).sites), model, config.dse)
    out = Path(args.out)
    report.save(out / "dse.json", out / "dse.md")
    return {"dse_file": str(out / "dse.json"), "markdown": report.to_markdown()}


def cmd_gen_uvm(args: argparse.Namespace, config: CampaignConfig) -> Payload:
    spec = UvmGenSpec(
        fault_file=args.faults,
        sequence_name=args.name,
        agent_config_key=args.key,
        output_path=args.out,
    )
    path = write_sequence(spec)
    return {"sequence_file": str(path), "sequence_name": spec.sequence_name}


def cmd_ablate(args: argparse.Namespace, config: CampaignConfig) -> Payload:
    out = Path(args.out)
    if args.study == "alpha":
        rows = ablation_alpha(config, args.grid, out / "ablation_alpha.csv")
    elif args.study == "rl-only":
        rows = ablation_rl_only(config, out / "ablation_rl_only.csv")
    else:
        rows = ablation_rl_params(
            config, args.episodes, args.epsilons, out / "ablation_rl_params.csv"
        )
    return {"study": args.study, "rows": [row.csv_row() for row in rows]}


def cmd_scale(args: argparse.Namespace, config: CampaignConfig) -> Payload:
    report = scalability_sweep(args.k, config)
    path = write_text_lf(Path(args.out) / "scalability.json", report.model_dump_json(indent=2) + "\n")
    return {"scalability_file": str(path), **report.model_dump(mode="json", exclude={"points"})}


# -- parser ----------------------------------------------------------------------


def _common(with_out: bool = True) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="Campaign config JSON file")
    common.add_argument("--seed", type=int, default=None, help="Override the base seed")
    common.add_argument("--json", action="store_true", help="Print one JSON document on stdout")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    if with_out:
        common.add_argument("--out", default="rift-out", help="Output directory")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = RiftArgumentParser(
        prog="rift",
        description="Fault-assessment workbench for quantized DUTs",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    common = _common()
    dut_flag = argparse.ArgumentParser(add_help=False)
    dut_flag.add_argument("--dut", default=None, help="DUT archive (default: <out>/dut.json)")

    def add(name: str, handler: Callable, help_text: str, *parents) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common, *parents], help=help_text)
        p.set_defaults(handler=handler)
        return p

    add("build-dut", cmd_build_dut, "Train and save the DUT")
    p = add("profile", cmd_profile, "Compute and export sensitivity scores", dut_flag)
    p.add_argument("--top", type=int, default=10, help="Top indices to print")
    add("select", cmd_select, "Select candidate parameters", dut_flag)
    p = add("search", cmd_search, "Run the Q-learning search", dut_flag)
    p.add_argument("--candidates", default=None, help="CandidateSet JSON from 'select'")
    p = add("baseline", cmd_baseline, "Run one baseline method", dut_flag)
    p.add_argument(
        "name", choices=[m.value for m in MethodName if m.is_baseline], help="Baseline method"
    )
    p.add_argument("--candidates", default=None, help="CandidateSet JSON (evolutionary)")
    add("campaign", cmd_campaign, "Run the multi-seed campaign")
    p = add("dse", cmd_dse, "Protection design-space exploration", dut_flag)
    p.add_argument("--faults", default=None, help="FaultSet JSON of critical faults")
    p.add_argument("--reference", action="store_true", help="Reference table from fixed inputs")

    p = sub.add_parser("gen-uvm", parents=[_common(with_out=False)], help="Generate a UVM sequence")
    p.set_defaults(handler=cmd_gen_uvm)
    p.add_argument("--faults", required=True, help="FaultSet JSON file")
    p.add_argument("--name", required=True, help="Sequence class name")
    p.add_argument("--out", required=True, help="Output .sv file")
    p.add_argument("--key", default=DEFAULT_CONFIG_KEY, help="uvm_config_db field name")

    p = add("ablate", cmd_ablate, "Ablation studies")
    p.add_argument("study", choices=["alpha", "rl-only", "rl-params"])
    p.add_argument("--grid", type=_float_list, default=[0.0, 0.5, 1.0], help="Alpha values")
    p.add_argument("--episodes", type=_int_list, default=[10, 25, 50], help="Episode counts")
    p.add_argument("--epsilons", type=_float_list, default=[0.1, 0.2, 0.4], help="Epsilons")

    p = add("scale", cmd_scale, "Scalability sweep over candidate counts")
    p.add_argument("--k", type=_int_list, default=[100, 200, 400, 800], help="Candidate counts")
    return parser


def _emit(payload: Payload, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
        return
    for key, value in payload.items():
        if isinstance(value, str) and "\n" in value:
            print(value, end="")
        else:
            print(f"{key}: {value}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = load_config(args)
        payload = args.handler(args, config)
    except (RiftError, OSError, ValueError) as e:
        message = str(e).splitlines()[0] if str(e) else type(e).__name__
        print(f"rift {args.command}: {message}", file=sys.stderr)
        return EXIT_FAILURE
    _emit(payload, args.json)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
