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
Candidate pruning of the ranked parameter space.
"""

from rift_workbench.candidates.selection import (
    CandidateSet,
    candidate_count,
    family_concentration,
    group_concentration,
    random_candidates,
    select_candidates,
)

__all__ = [
    "CandidateSet",
    "candidate_count",
    "select_candidates",
    "random_candidates",
    "group_concentration",
    "family_concentration",
]
