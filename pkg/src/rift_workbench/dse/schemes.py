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
Protection schemes and their coverage and cost arithmetic.

Area overheads are inputs taken from synthesis studies, not derived here.
Correction efficacy factors are calibrated so the uniform schemes land on
their reference coverage; they are not a model of the codes themselves.
"""

from typing import Iterable, Optional

from pydantic import Field, field_validator

from rift_workbench.common.base import RiftBaseModel
from rift_workbench.common.enums import ParamRole, SchemeName
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.faults.sites import FaultSite

# Reference inputs: scheme -> (area overhead %, corrects, efficacy)
REFERENCE_SCHEMES: dict[SchemeName, tuple[float, bool, float]] = {
    SchemeName.NONE: (0.0, False, 0.0),
    SchemeName.PARITY: (6.3, False, 0.0),
    SchemeName.ECC_SECDED: (18.7, True, 0.951),
    SchemeName.ECC_CHIPKILL: (31.4, True, 0.987),
    SchemeName.TMR: (205.0, True, 0.992),
    SchemeName.RIFT_GUIDED_ECC: (18.7, True, 1.0),
}


class ProtectionScheme(RiftBaseModel):
    """
    One protection strategy.

    protected_groups is None for uniform schemes (every role protected).
    For the guided scheme area_overhead_pct is the overhead of the
    underlying code applied uniformly; the effective overhead scales with
    the protected byte fraction.
    """

    name: SchemeName
    area_overhead_pct: float = Field(..., ge=0, description="Area overhead in percent")
    corrects: bool = Field(..., description="False for detection-only schemes")
    efficacy: float = Field(1.0, ge=0, le=1, description="Correction efficacy factor")
    protected_groups: Optional[tuple[ParamRole, ...]] = Field(
        None, description="Protected roles; None protects all"
    )

    @field_validator("protected_groups")
    @classmethod
    def sort_groups(cls, v: Optional[tuple[ParamRole, ...]]) -> Optional[tuple[ParamRole, ...]]:
        if v is None:
            return v
        return tuple(sorted(set(v), key=lambda role: ParamRole(role).value))

    @property
    def is_uniform(self) -> bool:
        return self.protected_groups is None

    def protects(self, role: str) -> bool:
        if self.protected_groups is None:
            return True
        return ParamRole(role) in {ParamRole(r) for r in self.protected_groups}


def default_schemes(
    guided_groups: Iterable[ParamRole] = (),
) -> list[ProtectionScheme]:
    """Reference schemes in report order; the guided one protects `guided_groups`."""
    schemes = []
    for name, (overhead, corrects, efficacy) in REFERENCE_SCHEMES.items():
        schemes.append(
            ProtectionScheme(
                name=name,
                area_overhead_pct=overhead,
                corrects=corrects,
                efficacy=efficacy,
                protected_groups=(
                    tuple(guided_groups) if name is SchemeName.RIFT_GUIDED_ECC else None
                ),
            )
        )
    return schemes


def cost_effectiveness(coverage_pct: float, overhead_pct: float) -> Optional[float]:
    """
    Coverage per unit area, rounded to one decimal.

    Returns None (reported as "--") when the overhead is zero.
    """
    if overhead_pct <= 0:
        return None
    return round(coverage_pct / overhead_pct, 1)


def scheme_coverage(
    scheme: ProtectionScheme, critical_faults: list[FaultSite], model: QuantizedModel
) -> float:
    """
    Percent of critical faults the scheme corrects.

    100 * (fraction of faults in protected roles) * efficacy for correcting
    schemes; detection-only schemes and no protection give 0.

    Raises:
        ValueError: If critical_faults is empty
    """
    if not critical_faults:
        raise ValueError("Invalid fault list: at least one critical fault is required")
    if not scheme.corrects:
        return 0.0
    roles = model.role_vector()
    covered = sum(scheme.protects(roles[site.param_index]) for site in critical_faults)
    return 100.0 * covered / len(critical_faults) * scheme.efficacy


def protected_fraction(protected_groups: Iterable[ParamRole], model: QuantizedModel) -> float:
    """Share of parameter bytes held by the protected roles (int8: one byte each)."""
    protected = {ParamRole(role) for role in protected_groups}
    sizes = model.role_sizes()
    return sum(size for role, size in sizes.items() if ParamRole(role) in protected) / model.n_params


def selective_overhead_from_fraction(fraction: float, base_overhead_pct: float) -> float:
    """Byte-fraction overhead model: base * fraction."""
    if not 0.0 <= fraction <= 1.0:
        raise ValueError(f"Invalid protected fraction '{fraction}': expected [0, 1]")
    return base_overhead_pct * fraction


def selective_overhead(
    protected_groups: Iterable[ParamRole], model: QuantizedModel, base_overhead_pct: float
) -> float:
    """Overhead of applying a code with `base_overhead_pct` to the given roles only."""
    return selective_overhead_from_fraction(
        protected_fraction(protected_groups, model), base_overhead_pct
    )
