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
Generational evolutionary search over candidate MSB sites.

A genome is a FaultSet whose sites are MSB flips of candidate parameters.
Fitness is impact per flip, the negated search reward. Every offspring
costs one evaluation; elites are carried over without re-evaluation.
"""

import logging
from typing import Optional, Sequence

import numpy as np
from pydantic import Field, ValidationInfo, field_validator, model_validator

from rift_workbench.candidates.selection import CandidateSet
from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import MethodName
from rift_workbench.common.errors import BudgetError, SearchError
from rift_workbench.common.validators import validate_unit_interval
from rift_workbench.dut.dataset import RepDataset
from rift_workbench.dut.evaluation import EvalCounter
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.faults.injection import evaluate_faulted
from rift_workbench.faults.sites import MSB, FaultSet, FaultSite
from rift_workbench.search.reward import fitness
from rift_workbench.search.tracking import BestTracker, SearchResult

logger = logging.getLogger(__name__)


class EvoConfig(RiftBaseModel):
    """Genetic-algorithm settings."""

    population: int = Field(20, ge=2, description="Genomes per generation")
    mutation_rate: float = Field(0.2, description="Probability an offspring is mutated")
    crossover_rate: float = Field(0.8, description="Probability of uniform crossover")
    tournament_size: int = Field(3, ge=1, description="Contestants per tournament")
    elitism: int = Field(1, ge=0, description="Best genomes copied unchanged")
    initial_max_size: int = Field(3, ge=1, description="Largest random initial genome")

    @field_validator("mutation_rate", "crossover_rate")
    @classmethod
    def check_rate(cls, v: float, info: ValidationInfo) -> float:
        return validate_unit_interval(v, info.field_name)

    @model_validator(mode="after")
    def check_elitism(self) -> "EvoConfig":
        if self.elitism >= self.population:
            raise ValueError(
                f"Invalid elitism '{self.elitism}': must be below population "
                f"{self.population}"
            )
        return self


class EvolutionarySearch:
    """
    Budgeted genetic search.

    `generations` holds every population in order, starting with the
    initial one; a generation cut short by the budget is recorded as far as
    it got, elites included.
    """

    def __init__(
        self,
        model: QuantizedModel,
        data: RepDataset,
        cands: CandidateSet,
        config: EvoConfig,
        budget: int,
        seed: int,
        tau: float,
        counter: Optional[EvalCounter] = None,
        initial_population: Optional[Sequence[FaultSet]] = None,
    ) -> None:
        if budget < config.population:
            raise BudgetError(
                f"Invalid evaluation budget '{budget}': must be >= population "
                f"{config.population}"
            )
        if initial_population is not None and len(initial_population) != config.population:
            raise SearchError(
                f"Initial population has {len(initial_population)} genomes, "
                f"expected {config.population}"
            )
        self.model = model
        self.data = data
        self.cands = cands
        self.config = config
        self.budget = budget
        self.seed = seed
        self.counter = counter
        self.rng = np.random.default_rng(seed)
        self.tracker = BestTracker(tau)
        self._initial = list(initial_population) if initial_population is not None else None
        self.generations: list[list[FaultSet]] = []

    def _score(self, genome: FaultSet) -> float:
        accuracy = evaluate_faulted(self.model, self.data, genome, self.counter).accuracy
        self.tracker.observe(genome, accuracy)
        return fitness(accuracy, len(genome))

    def _random_genome(self) -> FaultSet:
        upper = min(self.config.initial_max_size, self.cands.k)
        size = int(self.rng.integers(1, upper + 1))
        picks = self.rng.choice(self.cands.k, size=size, replace=False)
        return FaultSet.msb(self.cands.indices[int(p)] for p in picks)

    def _tournament(self, fits: list[float]) -> int:
        drawn = self.rng.integers(len(fits), size=self.config.tournament_size)
        return min((int(i) for i in drawn), key=lambda i: (-fits[i], i))

    def _crossover(self, a: FaultSet, b: FaultSet) -> FaultSet:
        in_a, in_b = set(a.indices), set(b.indices)
        coins = self.rng.random(self.cands.k) < 0.5
        chosen = (
            index
            for index, from_a in zip(self.cands.indices, coins)
            if (index in in_a if from_a else index in in_b)
        )
        return FaultSet.msb(chosen)

    def _mutate(self, genome: FaultSet) -> FaultSet:
        index = self.cands.indices[int(self.rng.integers(self.cands.k))]
        site = FaultSite(param_index=index, bit=MSB)
        return genome.without_site(site) if site in genome else genome.with_site(site)

    def _offspring(self, population: list[FaultSet], fits: list[float]) -> FaultSet:
        first = population[self._tournament(fits)]
        second = population[self._tournament(fits)]
        child = first
        if self.rng.random() < self.config.crossover_rate:
            child = self._crossover(first, second)
        if self.rng.random() < self.config.mutation_rate:
            child = self._mutate(child)
        return child

    def run(self) -> SearchResult:
        population = self._initial or [
            self._random_genome() for _ in range(self.config.population)
        ]
        fits = [self._score(genome) for genome in population]
        self.generations.append(list(population))

        while self.tracker.evaluations < self.budget:
            order = sorted(range(len(population)), key=lambda i: (-fits[i], i))
            elites = order[: self.config.elitism]
            next_population = [population[i] for i in elites]
            next_fits = [fits[i] for i in elites]
            while (
                len(next_population) < self.config.population
                and self.tracker.evaluations < self.budget
            ):
                child = self._offspring(population, fits)
                next_population.append(child)
                next_fits.append(self._score(child))
            population, fits = next_population, next_fits
            self.generations.append(list(population))
            logger.debug(
                "generation %d: best fitness %.4f, %d evaluations",
                len(self.generations) - 1,
                max(fits),
                self.tracker.evaluations,
            )

        result = self.tracker.result(MethodName.EVOLUTIONARY, seed=self.seed)
        logger.info(
            "evolutionary finished: |F_crit|=%d, satisfied=%s, %d generations",
            result.f_crit_size,
            result.constraint_satisfied,
            len(self.generations),
        )
        return result


def run_evolutionary(
    model: QuantizedModel,
    data: RepDataset,
    cands: CandidateSet,
    evo: EvoConfig,
    budget: int,
    seed: int,
    tau: float,
    counter: Optional[EvalCounter] = None,
) -> SearchResult:
    """
    Run a budgeted evolutionary search over the candidate MSB sites.

    Raises:
        BudgetError: If budget < evo.population
    """
    return EvolutionarySearch(model, data, cands, evo, budget, seed, tau, counter).run()
