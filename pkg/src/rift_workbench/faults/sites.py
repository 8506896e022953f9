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
Fault sites and canonical fault sets.

The JSON form of a FaultSet is the interchange format consumed by the UVM
generator:

    {"faults": [{"param_index": 3, "bit": 4}, {"param_index": 12, "bit": 7}]}

Sites are always sorted by (param_index, bit) and deduplicated, so equal
sets serialize to identical bytes.
"""

from pathlib import Path
from typing import Iterable, Union

from pydantic import AliasChoices, Field, field_validator

from rift_workbench.common.base import FrozenModel
from rift_workbench.utils.encoding import write_text_lf

MSB = 7

SiteKey = tuple[tuple[int, int], ...]


class FaultSite(FrozenModel):
    """One addressable bit: (flat parameter index, bit position)."""

    param_index: int = Field(..., ge=0, description="Flat index into W")
    bit: int = Field(..., ge=0, le=7, description="Bit position; 7 is the sign bit (MSB)")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.param_index, self.bit)

    def __lt__(self, other: "FaultSite") -> bool:
        return self.pair < other.pair


class FaultSet(FrozenModel):
    """
    Canonical set of bit flips.

    Construction sorts and deduplicates, so membership alone determines
    the value, its key and its serialization.
    """

    sites: tuple[FaultSite, ...] = Field(
        default=(),
        validation_alias=AliasChoices("faults", "sites"),
        serialization_alias="faults",
        description="Sites in canonical (param_index, bit) order",
    )

    @field_validator("sites")
    @classmethod
    def canonicalize(cls, v: tuple[FaultSite, ...]) -> tuple[FaultSite, ...]:
        return tuple(sorted(set(v), key=lambda s: s.pair))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "FaultSet":
        """Build from (param_index, bit) pairs."""
        return cls(sites=tuple(FaultSite(param_index=i, bit=b) for i, b in pairs))

    @classmethod
    def msb(cls, indices: Iterable[int]) -> "FaultSet":
        """MSB flips of the given parameter indices."""
        return cls.from_pairs((int(i), MSB) for i in indices)

    @property
    def key(self) -> SiteKey:
        """Injective hashable key: the sorted pair list itself."""
        return tuple(s.pair for s in self.sites)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(s.param_index for s in self.sites)

    def __len__(self) -> int:
        return len(self.sites)

    def __contains__(self, site: object) -> bool:
        return site in set(self.sites)

    def with_site(self, site: FaultSite) -> "FaultSet":
        return FaultSet(sites=self.sites + (site,))

    def without_site(self, site: FaultSite) -> "FaultSet":
        return FaultSet(sites=tuple(s for s in self.sites if s != site))

    def to_json(self) -> str:
        """Canonical JSON document."""
        return self.model_dump_json(by_alias=True)

    @classmethod
    def from_json(cls, text: Union[str, bytes]) -> "FaultSet":
        return cls.model_validate_json(text)


def save_fault_set(faults: FaultSet, path: Union[str, Path]) -> Path:
    """Write the canonical JSON of a fault set (UTF-8, LF)."""
    return write_text_lf(Path(path), faults.to_json() + "\n")


def load_fault_set(path: Union[str, Path]) -> FaultSet:
    """Read a fault set JSON file."""
    return FaultSet.from_json(Path(path).read_text(encoding="utf-8"))
