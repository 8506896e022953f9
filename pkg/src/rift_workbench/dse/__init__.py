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
Protection design-space exploration: area overhead, fault coverage and
cost-effectiveness of uniform and guided memory protection.
"""

from rift_workbench.dse.report import (
    REFERENCE_GUIDED_COVERAGE,
    REFERENCE_GUIDED_FRACTION,
    UNDEFINED,
    DseConfig,
    DseReport,
    DseRow,
    reference_report,
    run_dse,
    select_protected_roles,
)
from rift_workbench.dse.schemes import (
    REFERENCE_SCHEMES,
    ProtectionScheme,
    cost_effectiveness,
    default_schemes,
    protected_fraction,
    scheme_coverage,
    selective_overhead,
    selective_overhead_from_fraction,
)

__all__ = [
    # Schemes
    "REFERENCE_SCHEMES",
    "ProtectionScheme",
    "default_schemes",
    # Arithmetic
    "cost_effectiveness",
    "scheme_coverage",
    "protected_fraction",
    "selective_overhead",
    "selective_overhead_from_fraction",
    # Report
    "UNDEFINED",
    "REFERENCE_GUIDED_COVERAGE",
    "REFERENCE_GUIDED_FRACTION",
    "DseConfig",
    "DseRow",
    "DseReport",
    "select_protected_roles",
    "run_dse",
    "reference_report",
]
