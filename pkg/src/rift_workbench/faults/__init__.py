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
Bit-level fault model: sites, canonical fault sets, injection and the
critical-singleton oracle.
"""

from rift_workbench.faults.injection import (
    apply_faults,
    check_sites,
    evaluate_faulted,
    injected,
    msb_flip,
    revert_faults,
)
from rift_workbench.faults.oracle import CriticalOracle, build_critical_oracle
from rift_workbench.faults.sites import (
    MSB,
    FaultSet,
    FaultSite,
    SiteKey,
    load_fault_set,
    save_fault_set,
)
from rift_workbench.faults.space import fault_space_size

__all__ = [
    # Sites and sets
    "MSB",
    "FaultSite",
    "FaultSet",
    "SiteKey",
    "load_fault_set",
    "save_fault_set",
    # Injection
    "apply_faults",
    "revert_faults",
    "injected",
    "check_sites",
    "evaluate_faulted",
    "msb_flip",
    # Fault space and ground truth
    "fault_space_size",
    "CriticalOracle",
    "build_critical_oracle",
]
