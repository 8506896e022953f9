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
Design-space exploration report over the protection schemes.
"""

import logging
from collections import Counter
from pathlib import Path
from typing import Optional, Sequence, Union

from pydantic import Field

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import ParamRole, SchemeName
from rift_workbench.dse.schemes import (
    REFERENCE_SCHEMES,
    ProtectionScheme,
    cost_effectiveness,
    default_schemes,
    scheme_coverage,
    selective_overhead,
    selective_overhead_from_fraction,
)
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.faults.sites import FaultSite
from rift_workbench.utils.encoding import write_text_lf

logger = logging.getLogger(__name__)

UNDEFINED = "--"

# Reference guided-ECC operating point: coverage and protected byte fraction
REFERENCE_GUIDED_COVERAGE = 88.5
REFERENCE_GUIDED_FRACTION = 0.738


class DseConfig(RiftBaseModel):
    """Inputs of the protection study."""

    target_share: float = Field(
        0.85, gt=0, le=1, description="Share of critical faults the guided scheme must cover"
    )
    guided_base: SchemeName = Field(
        SchemeName.ECC_SECDED, description="Code applied selectively by the guided scheme"
    )
    protected_groups: Optional[tuple[ParamRole, ...]] = Field(
        None, description="Fixed guided role set; None selects it from the faults"
    )


class DseRow(RiftBaseModel):
    scheme: SchemeName
    strategy: str
    area_overhead_pct: float = Field(..., ge=0)
    fault_coverage_pct: float = Field(..., ge=0, le=100)
    cost_effectiveness: Optional[float] = None
    notes: str = ""


class DseReport(RiftBaseModel):
    """Per-scheme area overhead, coverage and cost-effectiveness."""

    rows: list[DseRow]
    protected_groups: tuple[ParamRole, ...] = ()
    n_critical_faults: int = Field(0, ge=0)
    notes: list[str] = Field(default_factory=list)

    def row(self, scheme: SchemeName) -> DseRow:
        for row in self.rows:
            if SchemeName(row.scheme) is SchemeName(scheme):
                return row
        raise KeyError(f"No row for scheme '{SchemeName(scheme).value}'")

    def ce_ratio(self, numerator: SchemeName, denominator: SchemeName) -> Optional[float]:
        """Ratio of two cost-effectiveness values, rounded to one decimal."""
        top = self.row(numerator).cost_effectiveness
        bottom = self.row(denominator).cost_effectiveness
        if top is None or not bottom:
            return None
        return round(top / bottom, 1)

    def to_markdown(self) -> str:
        lines = [
            "| Strategy | AO (%) | FC (%) | CE (Cov/Area) | Notes |",
            "|---|---:|---:|---:|---|",
        ]
        for row in self.rows:
            ce = UNDEFINED if row.cost_effectiveness is None else f"{row.cost_effectiveness:.1f}"
            lines.append(
                f"| {row.strategy} | {row.area_overhead_pct:.1f} | "
                f"{row.fault_coverage_pct:.1f} | {ce} | {row.notes} |"
            )
        lines.extend(f"\n{note}" for note in self.notes)
        return "\n".join(lines) + "\n"

    def save(self, json_path: Union[str, Path], markdown_path: Union[str, Path]) -> None:
        write_text_lf(Path(json_path), self.model_dump_json(indent=2) + "\n")
        write_text_lf(Path(markdown_path), self.to_markdown())


def _row(scheme: ProtectionScheme, overhead: float, coverage: float) -> DseRow:
    name = SchemeName(scheme.name)
    return DseRow(
        scheme=name,
        strategy=name.display_name,
        area_overhead_pct=overhead,
        fault_coverage_pct=coverage,
        cost_effectiveness=cost_effectiveness(coverage, overhead),
        notes=name.notes,
    )


def select_protected_roles(
    critical_faults: Sequence[FaultSite], model: QuantizedModel, target_share: float
) -> tuple[ParamRole, ...]:
    """
    Smallest set of roles holding at least `target_share` of the faults.

    Roles are taken by descending fault count; ties go to the role with
    fewer bytes, then by name.
    """
    roles = model.role_vector()
    sizes = model.role_sizes()
    counts = Counter(ParamRole(roles[site.param_index]) for site in critical_faults)
    order = sorted(counts, key=lambda role: (-counts[role], sizes[role], role.value))
    chosen: list[ParamRole] = []
    covered = 0
    for role in order:
        if covered >= target_share * len(critical_faults):
            break
        chosen.append(role)
        covered += counts[role]
    return tuple(chosen)


def run_dse(
    critical_faults: Sequence[FaultSite],
    model: QuantizedModel,
    config: Optional[DseConfig] = None,
) -> DseReport:
    """
    Evaluate every reference scheme against the discovered critical faults.

    Args:
        critical_faults: Fault sites discovered by the campaign (non-empty)
        model: DUT whose roles define the protection regions
        config: Target share and guided base code

    Returns:
        DseReport with rows in reference order
    """
    config = config or DseConfig()
    faults = list(critical_faults)
    groups = config.protected_groups
    if groups is None:
        groups = select_protected_roles(faults, model, config.target_share)
    base_overhead = REFERENCE_SCHEMES[SchemeName(config.guided_base)][0]

    rows = []
    for scheme in default_schemes(groups):
        if SchemeName(scheme.name) is SchemeName.RIFT_GUIDED_ECC:
            overhead = selective_overhead(groups, model, base_overhead)
        else:
            overhead = scheme.area_overhead_pct
        rows.append(_row(scheme, overhead, scheme_coverage(scheme, faults, model)))

    report = DseReport(
        rows=rows,
        protected_groups=tuple(groups),
        n_critical_faults=len(faults),
        notes=[
            "Guided overhead uses the byte-fraction model: base overhead times "
            "the protected share of parameter bytes."
        ],
    )
    guided = report.row(SchemeName.RIFT_GUIDED_ECC)
    logger.info(
        "DSE: guided ECC protects %s (%.1f%% overhead, %.1f%% coverage)",
        ", ".join(ParamRole(g).value for g in groups) or "nothing",
        guided.area_overhead_pct,
        guided.fault_coverage_pct,
    )
    return report


def reference_report() -> DseReport:
    """
    Protection table from the fixed reference inputs.

    Uniform schemes cover every fault, so their coverage is 100 * efficacy.
    The guided row uses the reference coverage and protected byte fraction.
    """
    rows = []
    for scheme in default_schemes():
        name = SchemeName(scheme.name)
        if name is SchemeName.RIFT_GUIDED_ECC:
            overhead = selective_overhead_from_fraction(
                REFERENCE_GUIDED_FRACTION, REFERENCE_SCHEMES[SchemeName.ECC_SECDED][0]
            )
            coverage = REFERENCE_GUIDED_COVERAGE
        else:
            overhead = scheme.area_overhead_pct
            coverage = 100.0 * scheme.efficacy if scheme.corrects else 0.0
        rows.append(_row(scheme, overhead, coverage))
    return DseReport(
        rows=rows,
        notes=[
            "Guided ECC: SECDED on a protected byte fraction of "
            f"{REFERENCE_GUIDED_FRACTION} (reconstructed operating point)."
        ],
    )
