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
Vulnerability profiling: hybrid sensitivity scores, hotspot weighting and
the global ranking.
"""

from rift_workbench.sensitivity.hotspots import HotspotMap, apply_hotspot_weighting
from rift_workbench.sensitivity.scores import (
    SensitivityProfile,
    export_profile_csv,
    hybrid_scores,
    hybrid_scores_from_vectors,
    rank_scores,
)

__all__ = [
    "SensitivityProfile",
    "hybrid_scores",
    "hybrid_scores_from_vectors",
    "rank_scores",
    "export_profile_csv",
    "HotspotMap",
    "apply_hotspot_weighting",
]
