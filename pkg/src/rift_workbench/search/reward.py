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
Reward and value-update arithmetic.
"""

from rift_workbench.common.enums import ObjectiveSign


def reward(accuracy: float, set_size: int) -> float:
    """
    Impact-per-flip reward, r = -(1 - acc) / max(1, |s|).

    Always in [-1, 0]; more negative means more damage per flip.
    """
    return 0.0 - (1.0 - accuracy) / max(1, set_size)


def fitness(accuracy: float, set_size: int) -> float:
    """Evolutionary fitness, the negated reward."""
    return -reward(accuracy, set_size)


def q_reward(r: float, sign: ObjectiveSign) -> float:
    """Reward fed to the Bellman target under the chosen objective sign."""
    if ObjectiveSign(sign) is ObjectiveSign.IMPACT_MAXIMIZING:
        return -r
    return r


def bellman_update(
    q: float, r: float, discount: float, max_next: float, learning_rate: float
) -> float:
    """Q + lr * (r + gamma * max_a' Q(s', a') - Q)."""
    return q + learning_rate * (r + discount * max_next - q)
