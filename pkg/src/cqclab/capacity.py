"""Capacity of the scheduler timing channel, lossless and lossy.

Over a lossless link the best rate is max_p h(p)/(1+p), attained at
p* = (3 - sqrt 5)/2 and equal to log2 of the golden ratio, about 0.6942
bits per slot.  Per-packet drops turn the bit pipe into a Z-channel
('0' always survives, '1' flips with the drop probability) and shorten
dropped '1's to one slot, so the lossy objective becomes
[h((1-d)p) - p*h(d)] / (1 + (1-d)p).
"""

import math
from dataclasses import dataclass

import numpy as np


P_STAR_LOSSLESS = (3.0 - math.sqrt(5.0)) / 2.0

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

GRID_POINTS = 10_001


@dataclass(frozen=True)
class CapacityPoint:
    delta: float
    p_star: float
    capacity: float  # bits per time slot


@dataclass(frozen=True)
class MutualInfoPoint:
    p: float
    delta: float
    mi: float  # bits per channel use


def _check_unit(x, name):
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {x}")


def binary_entropy(p: float) -> float:
    """h(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0."""
    _check_unit(p, "p")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def _entropy_arr(p):
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    inner = (p > 0.0) & (p < 1.0)
    q = p[inner]
    out[inner] = -q * np.log2(q) - (1.0 - q) * np.log2(1.0 - q)
    return out


def slots_per_bit(p: float, delta: float) -> float:
    """Mean slots per message bit: 1 + (1-delta)*p.

    A '0' and a dropped '1' each take one slot; a delivered '1' takes
    two.
    """
    _check_unit(p, "p")
    _check_unit(delta, "delta")
    return 1.0 + (1.0 - delta) * p


def z_mutual_info(p: float, delta: float) -> MutualInfoPoint:
    """Per-use mutual information of the Z-channel induced by drops."""
    _check_unit(p, "p")
    _check_unit(delta, "delta")
    mi = binary_entropy((1.0 - delta) * p) - p * binary_entropy(delta)
    return MutualInfoPoint(p, delta, mi)


def noiseless_capacity() -> CapacityPoint:
    """Lossless-link capacity point, from the closed form."""
    p = P_STAR_LOSSLESS
    return CapacityPoint(0.0, p, binary_entropy(p) / (1.0 + p))


def golden_section_max(f, a: float = 0.0, b: float = 1.0, tol: float = 1e-10) -> float:
    """Argmax of a unimodal ``f`` on [a, b], to interval width ``tol``."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def noisy_capacity(delta: float) -> CapacityPoint:
    """Lossy-link capacity point at drop probability ``delta``.

    Maximizes [h((1-d)p) - p h(d)] / (1 + (1-d)p) over p in [0, 1] by
    golden-section search and cross-checks a 10^4-point grid scan; if
    the grid beats the search by more than 1e-6 the grid argmax wins.
    The objective is smooth and empirically unimodal; the grid guards
    that assumption.
    """
    _check_unit(delta, "delta")
    hd = binary_entropy(delta)
    keep = 1.0 - delta

    def f(p):
        return (binary_entropy(keep * p) - p * hd) / (1.0 + keep * p)

    grid = np.linspace(0.0, 1.0, GRID_POINTS)
    grid_vals = (_entropy_arr(keep * grid) - grid * hd) / (1.0 + keep * grid)
    gi = int(np.argmax(grid_vals))
    p_grid, f_grid = float(grid[gi]), float(grid_vals[gi])

    p_gold = golden_section_max(f)
    f_gold = f(p_gold)

    if f_grid - f_gold > 1e-6:
        p_star, cap = p_grid, f_grid
    else:
        p_star, cap = p_gold, f_gold
    return CapacityPoint(float(delta), p_star, max(cap, 0.0))
