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
Encoding helpers for JSON containers and platform-stable text output.
"""

import base64
from pathlib import Path

import numpy as np


def encode_array(array: np.ndarray) -> str:
    """
    Encode a numpy array's raw little-endian bytes as base64.

    Args:
        array: Array of a fixed-width dtype

    Returns:
        ASCII base64 string of the array's bytes
    """
    little = array.astype(array.dtype.newbyteorder("<"), copy=False)
    return base64.b64encode(np.ascontiguousarray(little).tobytes()).decode("ascii")


def decode_array(payload: str, dtype: str, count: int) -> np.ndarray:
    """
    Decode a base64 payload produced by encode_array.

    Args:
        payload: Base64 string
        dtype: Numpy dtype name (e.g., 'int8', 'float64')
        count: Expected number of elements

    Returns:
        Writable array in native byte order

    Raises:
        ValueError: If the payload length does not match count
    """
    raw = base64.b64decode(payload.encode("ascii"), validate=True)
    array = np.frombuffer(raw, dtype=np.dtype(dtype).newbyteorder("<"))
    if array.size != count:
        raise ValueError(
            f"Invalid array payload: expected {count} {dtype} values, got {array.size}"
        )
    return array.astype(np.dtype(dtype), copy=True)


def write_text_lf(path: Path, text: str) -> Path:
    """Write UTF-8 text with LF line endings on every platform."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    return path
