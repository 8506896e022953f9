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

"""Size of the combinatorial fault space."""

import math

from scipy.special import gammaln


def fault_space_size(n_params: float, bits: int, k: int) -> float:
    """
    log10 of the number of k-flip fault sets, C(n_params * bits, k).

    Args:
        n_params: Number of parameters (may be given as a float, e.g. 8e9)
        bits: Bits per parameter
        k: Fault-set size

    Returns:
        log10 C(n_params * bits, k), computed through log-gamma

    Raises:
        ValueError: If k is negative or exceeds the number of bits
    """
    total = float(n_params) * bits
    if k < 0:
        raise ValueError(f"Invalid fault-set size '{k}': must be non-negative")
    if k > total:
        raise ValueError(
            f"Invalid fault-set size '{k}': exceeds the {total:.0f} addressable bits"
        )
    if k == 0:
        return 0.0
    ln_binom = gammaln(total + 1) - gammaln(k + 1) - gammaln(total - k + 1)
    return float(ln_binom / math.log(10))
