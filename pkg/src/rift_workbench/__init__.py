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
RIFT Workbench

Fault-assessment workbench for a small int8 quantized attention DUT:
hybrid sensitivity profiling, candidate pruning, tabular Q-learning search
for minimal critical fault sets, budget-matched baselines, protection
design-space exploration and UVM sequence generation.

Usage:
    from rift_workbench.dut import build_dut, representative_dataset
    from rift_workbench.sensitivity import hybrid_scores
    from rift_workbench.candidates import select_candidates
    from rift_workbench.search import RlConfig, run_search
    from rift_workbench.campaign import CampaignConfig, run_campaign
"""

__version__ = "0.1.0"
__author__ = "The RIFT Workbench Authors"

from rift_workbench.common import RiftBaseModel, RiftError

__all__ = [
    "__version__",
    "RiftBaseModel",
    "RiftError",
]
