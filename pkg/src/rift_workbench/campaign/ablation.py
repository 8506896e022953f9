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
Ablation experiments: hybrid-score weight, the pruning phases and the
Q-learning hyperparameters. Every arm runs on the same seeds (paired
design) and the same DUT.
"""

import csv
import logging
import math
from pathlib import Path
from typing import Optional, Sequence, Union

from pydantic import Field

from rift_workbench.campaign.config import CampaignConfig
from rift_workbench.campaign.pipeline import candidates_for, prepare_dut
from rift_workbench.campaign.stats import StatsSummary, summarize
from rift_workbench.candidates.selection import CandidateSet, random_candidates
from rift_workbench.common.base import RiftBaseModel
from rift_workbench.dut.dataset import RepDataset
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.search.agent import run_search
from rift_workbench.search.config import RlConfig
from rift_workbench.search.tracking import SearchResult

logger = logging.getLogger(__name__)

CONVERGENCE_TOLERANCE = 0.01


def convergence_episode(episode_best_rewards: Sequence[float]) -> Optional[int]:
    """
    First episode (1-based) whose best reward is within 1% of the final best.

    Returns None for an empty or non-finite history.
    """
    if not episode_best_rewards or not math.isfinite(episode_best_rewards[-1]):
        return None
    final = episode_best_rewards[-1]
    for episode, value in enumerate(episode_best_rewards, start=1):
        if abs(value - final) <= CONVERGENCE_TOLERANCE * abs(final):
            return episode
    return len(episode_best_rewards)


def _search_seeds(
    model: QuantizedModel,
    data: RepDataset,
    cands: CandidateSet,
    rl: RlConfig,
    config: CampaignConfig,
) -> list[SearchResult]:
    rl = rl.model_copy(update={"tau": config.resolved_tau})
    return [
        run_search(model, data, cands, rl, seed, eval_budget=config.resolved_budget)
        for seed in config.run_seeds()
    ]


class AblationRow(RiftBaseModel):
    """One arm of an ablation, summarized over seeds."""

    arm: str
    alpha: Optional[float] = None
    episodes: Optional[int] = None
    epsilon: Optional[float] = None
    f_crit_size: StatsSummary
    success_rate: float = Field(..., ge=0, le=1)
    mean_evaluations: float = Field(..., ge=0)
    mean_convergence_episode: Optional[float] = None

    @classmethod
    def from_results(
        cls,
        arm: str,
        results: Sequence[SearchResult],
        comparison: Optional[Sequence[float]] = None,
        **settings: object,
    ) -> "AblationRow":
        sizes = [float(r.f_crit_size) for r in results]
        episodes = [convergence_episode(r.episode_best_rewards) for r in results]
        episodes = [e for e in episodes if e is not None]
        return cls(
            arm=arm,
            f_crit_size=summarize(sizes, comparison, "complete" if comparison else None),
            success_rate=sum(r.constraint_satisfied for r in results) / len(results),
            mean_evaluations=sum(r.evaluations_used for r in results) / len(results),
            mean_convergence_episode=sum(episodes) / len(episodes) if episodes else None,
            **settings,
        )

    def csv_row(self) -> dict[str, object]:
        return {
            "arm": self.arm,
            "alpha": self.alpha,
            "episodes": self.episodes,
            "epsilon": self.epsilon,
            "mean_f_crit_size": self.f_crit_size.mean,
            "sd_f_crit_size": self.f_crit_size.sd,
            "ci95_lo": self.f_crit_size.ci95_lo,
            "ci95_hi": self.f_crit_size.ci95_hi,
            "welch_p": self.f_crit_size.welch_p,
            "success_rate": self.success_rate,
            "mean_evaluations": self.mean_evaluations,
            "mean_convergence_episode": self.mean_convergence_episode,
        }


def write_ablation_csv(rows: Sequence[AblationRow], path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    records = [row.csv_row() for row in rows]
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
    return path


def ablation_alpha(
    config: CampaignConfig,
    alpha_grid: Sequence[float],
    out_path: Optional[Union[str, Path]] = None,
) -> list[AblationRow]:
    """
    Full pipeline per alpha over the configured seeds.

    Returns:
        One row per alpha, in grid order
    """
    if not alpha_grid:
        raise ValueError("Invalid alpha grid: at least one value is required")
    model, data = prepare_dut(config)
    rows = []
    for alpha in alpha_grid:
        _, cands = candidates_for(model, data, config, alpha=alpha)
        results = _search_seeds(model, data, cands, config.rl, config)
        rows.append(AblationRow.from_results(f"alpha={alpha:g}", results, alpha=alpha))
        logger.info("alpha=%g: mean |F_crit| %.2f", alpha, rows[-1].f_crit_size.mean)
    if out_path is not None:
        write_ablation_csv(rows, out_path)
    return rows


def ablation_rl_only(
    config: CampaignConfig, out_path: Optional[Union[str, Path]] = None
) -> list[AblationRow]:
    """
    Complete pipeline against Q-learning on a random candidate set of equal
    size (profiling and pruning bypassed), same RlConfig and budget.

    Returns:
        [complete, rl_only]; the rl_only row carries Welch p against complete
    """
    model, data = prepare_dut(config)
    _, cands = candidates_for(model, data, config)
    complete = _search_seeds(model, data, cands, config.rl, config)

    rl = config.rl.model_copy(update={"tau": config.resolved_tau})
    rl_only = [
        run_search(
            model,
            data,
            random_candidates(model.n_params, cands.k, seed),
            rl,
            seed,
            eval_budget=config.resolved_budget,
        )
        for seed in config.run_seeds()
    ]
    complete_sizes = [float(r.f_crit_size) for r in complete]
    rows = [
        AblationRow.from_results("complete", complete),
        AblationRow.from_results("rl_only", rl_only, comparison=complete_sizes),
    ]
    logger.info(
        "RL-only ablation: complete %.2f vs rl_only %.2f mean |F_crit|",
        rows[0].f_crit_size.mean,
        rows[1].f_crit_size.mean,
    )
    if out_path is not None:
        write_ablation_csv(rows, out_path)
    return rows


def ablation_rl_params(
    config: CampaignConfig,
    episode_grid: Sequence[int],
    epsilon_grid: Sequence[float],
    out_path: Optional[Union[str, Path]] = None,
) -> list[AblationRow]:
    """
    Sweep episode count and exploration rate on fixed candidates.

    The budget of each arm is its own E_max * T_max.
    """
    if not episode_grid or not epsilon_grid:
        raise ValueError("Invalid grid: episode and epsilon grids must be non-empty")
    model, data = prepare_dut(config)
    _, cands = candidates_for(model, data, config)
    rows = []
    for episodes in episode_grid:
        for epsilon in epsilon_grid:
            rl = RlConfig.model_validate(
                {
                    **config.rl.model_dump(),
                    "episodes": episodes,
                    "epsilon": epsilon,
                    "tau": config.resolved_tau,
                }
            )
            results = [
                run_search(model, data, cands, rl, seed) for seed in config.run_seeds()
            ]
            rows.append(
                AblationRow.from_results(
                    f"episodes={episodes},epsilon={epsilon:g}",
                    results,
                    episodes=episodes,
                    epsilon=epsilon,
                )
            )
    if out_path is not None:
        write_ablation_csv(rows, out_path)
    return rows
