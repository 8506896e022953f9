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
Bit-flip injection on the int8 weight buffer.

Flips are XOR toggles on the two's-complement bytes, so applying a fault
set twice restores the original bits. The model keeps a ledger of applied
sets and refuses to revert a set it never saw.
"""

from contextlib import contextmanager
from typing import Iterator, Optional

import numpy as np

from rift_workbench.common.errors import FaultSiteError, FaultStateError
from rift_workbench.dut.dataset import RepDataset
from rift_workbench.dut.evaluation import EvalCounter, EvalResult, evaluate
from rift_workbench.dut.model import QuantizedModel
from rift_workbench.faults.sites import FaultSet


def msb_flip(value: int) -> int:
    """
    Flip bit 7 of an int8 value.

    Returns v - 128 for v >= 0 and v + 128 for v < 0.
    """
    if not -128 <= value <= 127:
        raise ValueError(f"Invalid int8 value '{value}'")
    word = np.array([value], dtype=np.int8)
    raw = word.view(np.uint8)
    raw ^= 0x80
    return int(word[0])


def _toggle(model: QuantizedModel, faults: FaultSet) -> None:
    if not faults.sites:
        return
    indices = np.fromiter((s.param_index for s in faults.sites), dtype=np.int64)
    masks = np.fromiter((1 << s.bit for s in faults.sites), dtype=np.uint8)
    np.bitwise_xor.at(model.q_weights.view(np.uint8), indices, masks)


def check_sites(model: QuantizedModel, faults: FaultSet) -> None:
    """
    Raises:
        FaultSiteError: If any site addresses a parameter outside the model
    """
    for site in faults.sites:
        if site.param_index >= model.n_params:
            raise FaultSiteError(
                f"Invalid fault site ({site.param_index}, {site.bit}): model has "
                f"{model.n_params} parameters"
            )


def apply_faults(model: QuantizedModel, faults: FaultSet) -> QuantizedModel:
    """
    Flip every site of the fault set in place.

    Args:
        model: Model to perturb
        faults: Sites to flip

    Returns:
        The same model object, now perturbed

    Raises:
        FaultSiteError: If a site is out of range (nothing is flipped)
    """
    check_sites(model, faults)
    _toggle(model, faults)
    model.applied_faults.append(faults.key)
    return model


def revert_faults(model: QuantizedModel, faults: FaultSet) -> QuantizedModel:
    """
    Undo a previous apply_faults of the same set.

    Raises:
        FaultStateError: If the set is not currently applied
    """
    key = faults.key
    if key not in model.applied_faults:
        raise FaultStateError(
            f"Cannot revert fault set of size {len(faults)}: it is not applied"
        )
    _toggle(model, faults)
    # last occurrence, so nested applies of the same set unwind in order
    position = len(model.applied_faults) - 1 - model.applied_faults[::-1].index(key)
    del model.applied_faults[position]
    return model


@contextmanager
def injected(model: QuantizedModel, faults: FaultSet) -> Iterator[QuantizedModel]:
    """Apply faults for the duration of a with-block, reverting on exit."""
    apply_faults(model, faults)
    try:
        yield model
    finally:
        revert_faults(model, faults)


def evaluate_faulted(
    model: QuantizedModel,
    data: RepDataset,
    faults: FaultSet,
    counter: Optional[EvalCounter] = None,
) -> EvalResult:
    """Evaluate the model with faults applied; one evaluation is charged."""
    with injected(model, faults):
        return evaluate(model, data, counter)
