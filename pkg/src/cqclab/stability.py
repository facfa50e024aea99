"""Long-run queue behavior under random load.

The scheduler serves one packet per slot whenever any queue is
nonempty, so the queue-length sum obeys q(n+1) = (q(n) + a(n) - 1)_+
with a(n) the combined Bernoulli arrivals.  Below combined load 1 the
quadratic Lyapunov function V(q) = q^2/2 drifts downward once the queue
is long enough and the system is stable; at or above load 1 the queue
grows linearly.  This module estimates both effects from seeded
simulations and provides the matching analytic quantities.
"""

import math
from dataclasses import dataclass

import numpy as np


MIN_DRIFT_SAMPLES = 100  # buckets with fewer samples are not reported


@dataclass(frozen=True)
class ArrivalModel:
    """Independent per-slot Bernoulli arrival probabilities."""

    lambda_alice: float
    lambda_bob: float

    def __post_init__(self):
        for lam in (self.lambda_alice, self.lambda_bob):
            if not 0.0 <= lam <= 1.0:
                raise ValueError("arrival probabilities lie in [0, 1]")

    @property
    def load(self) -> float:
        return self.lambda_alice + self.lambda_bob


@dataclass
class StabilityReport:
    slots: int
    time_avg_total_queue: float
    max_total_queue: int
    tail_slope: float  # packets per slot over the run's final half
    drift_samples: dict  # total-queue bucket -> mean one-step drift of V
    drift_counts: dict  # total-queue bucket -> sample count


def simulate_trajectory(model: ArrivalModel, slots: int, seed: int, backend=None):
    """End-of-slot queue lengths (q_alice, q_bob); deterministic per seed."""
    from .backend import get_backend

    ss_a, ss_b = np.random.SeedSequence(seed).spawn(2)
    arr_a = (np.random.Generator(np.random.PCG64(ss_a)).random(slots)
             < model.lambda_alice).astype(np.uint8)
    arr_b = (np.random.Generator(np.random.PCG64(ss_b)).random(slots)
             < model.lambda_bob).astype(np.uint8)
    return get_backend(backend).queue_sim_loop(arr_a, arr_b)


def simulate_queues(model: ArrivalModel, slots: int, seed: int = 0,
                    backend=None) -> StabilityReport:
    """Simulate the queues and summarize the total-queue trajectory.

    Reports the time average and maximum of the queue sum, the
    least-squares slope over the final half of the run, and the mean
    one-step drift of V(q) = q^2/2 bucketed by the queue sum at the
    start of the step (integer buckets, at least
    ``MIN_DRIFT_SAMPLES`` samples each).
    """
    if slots < 10_000:
        raise ValueError("need at least 10^4 slots for stable statistics")
    q_alice, q_bob = simulate_trajectory(model, slots, seed, backend=backend)
    total = q_alice + q_bob

    # Queue sums at slot starts: prepend the empty initial state.
    starts = np.concatenate((np.zeros(1, dtype=total.dtype), total))
    v = 0.5 * starts.astype(np.float64) ** 2
    dv = v[1:] - v[:-1]
    states = starts[:-1]
    counts = np.bincount(states)
    sums = np.bincount(states, weights=dv)
    drift_samples = {}
    drift_counts = {}
    for q in range(counts.size):
        if counts[q] >= MIN_DRIFT_SAMPLES:
            drift_samples[q] = float(sums[q] / counts[q])
            drift_counts[q] = int(counts[q])

    half = slots // 2
    t = np.arange(half, slots, dtype=np.float64)
    tail_slope = float(np.polyfit(t, total[half:].astype(np.float64), 1)[0])

    return StabilityReport(
        slots=slots,
        time_avg_total_queue=float(total.mean()),
        max_total_queue=int(total.max()),
        tail_slope=tail_slope,
        drift_samples=drift_samples,
        drift_counts=drift_counts,
    )


def _drift_constant(model: ArrivalModel) -> float:
    # c = E[(a - 1)^2]/2 for the combined arrivals a = a_A + a_B.
    la, lb = model.lambda_alice, model.lambda_bob
    load = la + lb
    second = la * (1.0 - la) + lb * (1.0 - lb) + load * load  # E[a^2]
    return 0.5 * (second + 1.0 - 2.0 * load)


def drift_bound(model: ArrivalModel, q: int) -> float:
    """Analytic drift envelope c - 2q(1 - load) at queue sum ``q``."""
    if q < 0:
        raise ValueError("queue length is nonnegative")
    return _drift_constant(model) - 2.0 * q * (1.0 - model.load)


def bounded_set_threshold(model: ArrivalModel) -> float:
    """Queue level where the envelope turns negative; inf at load >= 1."""
    if model.load >= 1.0:
        return math.inf
    return _drift_constant(model) / (2.0 * (1.0 - model.load))


def expected_drift(model: ArrivalModel, q: int) -> float:
    """Exact one-step expected drift of V(q) = q^2/2 at queue sum ``q``."""
    if q < 0:
        raise ValueError("queue length is nonnegative")
    if q >= 1:
        return _drift_constant(model) - q * (1.0 - model.load)
    # Empty system: only a double arrival leaves a packet behind.
    return 0.5 * model.lambda_alice * model.lambda_bob
