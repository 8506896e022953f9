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
Summary statistics for per-seed series.

Welch's unequal-variance t-test, Cohen's d with pooled SD and a Student-t
95% interval. Degenerate series follow fixed conventions instead of
returning NaN:

- two constant series with equal means: p = 1
- two constant series with different means: p = 0
- zero pooled SD: d = 0 for equal means, otherwise undefined (None)
"""

import math
from typing import NamedTuple, Optional, Sequence

import numpy as np
from pydantic import Field, model_validator
from scipy import stats

from rift_workbench.common.base import RiftBaseModel


class WelchResult(NamedTuple):
    t: float
    df: float
    p: float


def _as_series(values: Sequence[float], name: str, minimum: int = 2) -> np.ndarray:
    series = np.asarray(values, dtype=np.float64)
    if series.ndim != 1 or series.size < minimum:
        raise ValueError(f"Invalid series {name}: need at least {minimum} values")
    return series


def welch_test(a: Sequence[float], b: Sequence[float]) -> WelchResult:
    """
    Two-sided Welch t-test with Welch-Satterthwaite degrees of freedom.

    Raises:
        ValueError: If either series has fewer than two values
    """
    xa, xb = _as_series(a, "a"), _as_series(b, "b")
    va, vb = xa.var(ddof=1) / xa.size, xb.var(ddof=1) / xb.size
    diff = float(xa.mean() - xb.mean())
    if va + vb == 0:
        if diff == 0:
            return WelchResult(0.0, math.nan, 1.0)
        return WelchResult(math.copysign(math.inf, diff), math.nan, 0.0)
    t = diff / math.sqrt(va + vb)
    df = (va + vb) ** 2 / (va**2 / (xa.size - 1) + vb**2 / (xb.size - 1))
    p = float(stats.ttest_ind(xa, xb, equal_var=False).pvalue)
    return WelchResult(float(t), float(df), p)


def welch_t(a: Sequence[float], b: Sequence[float]) -> float:
    """Two-sided Welch p-value."""
    return welch_test(a, b).p


def cohens_d(a: Sequence[float], b: Sequence[float]) -> Optional[float]:
    """
    Standardized mean difference (a - b) / pooled SD.

    Returns None when the pooled SD is zero and the means differ.
    """
    xa, xb = _as_series(a, "a"), _as_series(b, "b")
    pooled = math.sqrt(
        ((xa.size - 1) * xa.var(ddof=1) + (xb.size - 1) * xb.var(ddof=1))
        / (xa.size + xb.size - 2)
    )
    diff = float(xa.mean() - xb.mean())
    if pooled == 0:
        return 0.0 if diff == 0 else None
    return diff / pooled


def ci95(values: Sequence[float]) -> tuple[float, float]:
    """Student-t 95% confidence interval of the mean."""
    series = _as_series(values, "values")
    mean = float(series.mean())
    half = float(stats.t.ppf(0.975, series.size - 1)) * float(series.std(ddof=1)) / math.sqrt(
        series.size
    )
    return mean - half, mean + half


class StatsSummary(RiftBaseModel):
    """Mean, spread and (optionally) a comparison against another series."""

    n: int = Field(..., ge=1)
    mean: float
    sd: float = Field(..., ge=0)
    ci95_lo: float
    ci95_hi: float
    comparison: Optional[str] = Field(None, description="Name of the comparison series")
    welch_p: Optional[float] = Field(None, ge=0, le=1)
    cohens_d: Optional[float] = None

    @model_validator(mode="after")
    def check_interval(self) -> "StatsSummary":
        if not self.ci95_lo <= self.mean <= self.ci95_hi:
            raise ValueError(
                f"Invalid interval [{self.ci95_lo}, {self.ci95_hi}] for mean {self.mean}"
            )
        return self


def summarize(
    series: Sequence[float],
    comparison: Optional[Sequence[float]] = None,
    comparison_name: Optional[str] = None,
) -> StatsSummary:
    """
    Summarize a series; a single value gets sd 0 and a degenerate interval.

    Welch p and Cohen's d are filled when both series have two or more values.
    """
    values = np.asarray(series, dtype=np.float64)
    if values.size == 0:
        raise ValueError("Invalid series: no values to summarize")
    mean = float(values.mean())
    if values.size >= 2:
        sd = float(values.std(ddof=1))
        lo, hi = ci95(values)
    else:
        sd, lo, hi = 0.0, mean, mean

    welch_p = d = None
    if comparison is not None and values.size >= 2 and len(comparison) >= 2:
        welch_p = welch_t(values, comparison)
        d = cohens_d(values, comparison)
    return StatsSummary(
        n=int(values.size),
        mean=mean,
        sd=sd,
        ci95_lo=min(lo, mean),
        ci95_hi=max(hi, mean),
        comparison=comparison_name if comparison is not None else None,
        welch_p=welch_p,
        cohens_d=d,
    )
