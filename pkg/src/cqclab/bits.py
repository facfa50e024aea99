"""Helpers for the binary streams every other module passes around.

Bit streams are exposed to users as strings of ASCII '0'/'1' (messages,
arrival patterns, ack streams) and handled internally as uint8 arrays.
"""

import numpy as np


def as_bit_array(bits) -> np.ndarray:
    """Coerce a '0'/'1' string or an int sequence to a uint8 array."""
    if isinstance(bits, str):
        if not bits or bits.strip("01"):
            raise ValueError(f"not a binary string: {bits!r}")
        return np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
    arr = np.asarray(bits, dtype=np.uint8)
    if arr.ndim != 1:
        raise ValueError("bit stream must be one-dimensional")
    if arr.size and arr.max() > 1:
        raise ValueError("bit stream entries must be 0 or 1")
    return arr


def bit_string(bits) -> str:
    """Render an int sequence as a '0'/'1' string."""
    return "".join("1" if b else "0" for b in bits)
