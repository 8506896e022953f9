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
Common enumerations shared across modules.

These enums name the architectural roles of DUT tensors, the search
methods under comparison, the protection schemes of the design-space
exploration and the Bellman objective variants.
"""

from enum import Enum


class ParamRole(str, Enum):
    """
    Architectural role of a DUT weight tensor.

    Several tensors may share a role (one per block); the role is what
    hotspot weighting, concentration reports and selective protection
    operate on.
    """

    ATTENTION_Q = "attention_q"  # Query projection
    ATTENTION_K = "attention_k"  # Key projection
    ATTENTION_V = "attention_v"  # Value projection
    ATTENTION_O = "attention_o"  # Output projection
    FFN_IN = "ffn_in"  # Feed-forward expansion
    FFN_OUT = "ffn_out"  # Feed-forward contraction
    NORM_SCALE = "norm_scale"  # Layer-norm gain
    NORM_BIAS = "norm_bias"  # Layer-norm shift
    CLASSIFIER = "classifier"  # Output head

    @property
    def family(self) -> "RoleFamily":
        """Get the coarse family this role belongs to."""
        family_map = {
            ParamRole.ATTENTION_Q: RoleFamily.ATTENTION,
            ParamRole.ATTENTION_K: RoleFamily.ATTENTION,
            ParamRole.ATTENTION_V: RoleFamily.ATTENTION,
            ParamRole.ATTENTION_O: RoleFamily.ATTENTION,
            ParamRole.FFN_IN: RoleFamily.FFN,
            ParamRole.FFN_OUT: RoleFamily.FFN,
            ParamRole.NORM_SCALE: RoleFamily.NORMALIZATION,
            ParamRole.NORM_BIAS: RoleFamily.NORMALIZATION,
            ParamRole.CLASSIFIER: RoleFamily.CLASSIFIER,
        }
        return family_map[self]


class RoleFamily(str, Enum):
    """Coarse grouping of parameter roles used in concentration reports."""

    ATTENTION = "attention"
    FFN = "ffn"
    NORMALIZATION = "normalization"
    CLASSIFIER = "classifier"


class MethodName(str, Enum):
    """
    Fault-search methods compared under identical evaluation budgets.
    """

    RFI = "rfi"  # Random fault injection over the full bit space
    MAGNITUDE = "magnitude"  # Greedy prefixes of the |w| ranking
    GRADIENT = "gradient"  # Greedy prefixes of the |grad| ranking
    EVOLUTIONARY = "evolutionary"  # Generational GA over candidate MSB sites
    RIFT = "rift"  # Profiling + pruning + tabular Q-learning

    @property
    def is_baseline(self) -> bool:
        """Check if this method is a comparison baseline."""
        return self is not MethodName.RIFT


class ObjectiveSign(str, Enum):
    """
    Sign convention of the reward inside the Bellman update.

    RAW_REWARD maximizes the reward unchanged, which pulls the policy toward
    unfaulted states. IMPACT_MAXIMIZING maximizes its negation, impact per
    flip, while best tracking still ranks by the reward itself.
    """

    RAW_REWARD = "raw_reward"
    IMPACT_MAXIMIZING = "impact_maximizing"


class ActionKind(str, Enum):
    """Kind of fault-set edit an RL action performs."""

    ADD = "add"
    REMOVE = "remove"


class SchemeName(str, Enum):
    """
    Memory protection schemes evaluated by the design-space exploration.
    """

    NONE = "none"  # Baseline, no protection
    PARITY = "parity"  # Detection only
    ECC_SECDED = "ecc_secded"  # Single-error correct, double-error detect
    ECC_CHIPKILL = "ecc_chipkill"  # Symbol-level correction
    TMR = "tmr"  # Triple modular redundancy
    RIFT_GUIDED_ECC = "rift_guided_ecc"  # SECDED on selected roles only

    @property
    def display_name(self) -> str:
        """Get the table label for this scheme."""
        names = {
            SchemeName.NONE: "No Protection",
            SchemeName.PARITY: "Parity (Uniform)",
            SchemeName.ECC_SECDED: "ECC SECDED (Uniform)",
            SchemeName.ECC_CHIPKILL: "ECC ChipKill (Uniform)",
            SchemeName.TMR: "TMR (Uniform)",
            SchemeName.RIFT_GUIDED_ECC: "RIFT-Guided ECC",
        }
        return names[self]

    @property
    def notes(self) -> str:
        """Get the short characterization shown in the notes column."""
        notes = {
            SchemeName.NONE: "Baseline",
            SchemeName.PARITY: "Detect Only",
            SchemeName.ECC_SECDED: "Std Correction",
            SchemeName.ECC_CHIPKILL: "Adv Correction",
            SchemeName.TMR: "Max Redundancy",
            SchemeName.RIFT_GUIDED_ECC: "Targeted",
        }
        return notes[self]
