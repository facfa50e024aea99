"""Covert queueing channel laboratory.

Simulates two users sharing a round robin scheduler, the timing codec
that turns their coupled service delays into a bit pipe, the optimal
variable- and fixed-length codebooks for it, the channel's capacity
with and without packet drops, and the queueing stability of the whole
arrangement.
"""

from .backend import BACKEND
from .capacity import (
    CapacityPoint,
    MutualInfoPoint,
    binary_entropy,
    noiseless_capacity,
    noisy_capacity,
    slots_per_bit,
    z_mutual_info,
)
from .codebook import (
    Codebook,
    Codeword,
    RatePoint,
    build_fixed,
    build_variable,
    codebook_rate,
    codeword_cost,
    decode_message,
    exhaustive_min_cost,
)
from .codec import (
    ChannelParams,
    MalformedAckStream,
    TransmissionReport,
    bob_policy,
    decode_acks,
    encode_plan,
    transmit,
)
from .scheduler import ServiceLog, SchedulerState, SlotOutcome, UserId, ack_stream, run, step
from .stability import ArrivalModel, StabilityReport, drift_bound, expected_drift, simulate_queues

__version__ = "0.1.0"

__all__ = [
    "ArrivalModel",
    "BACKEND",
    "CapacityPoint",
    "ChannelParams",
    "Codebook",
    "Codeword",
    "MalformedAckStream",
    "MutualInfoPoint",
    "RatePoint",
    "SchedulerState",
    "ServiceLog",
    "SlotOutcome",
    "StabilityReport",
    "TransmissionReport",
    "UserId",
    "ack_stream",
    "binary_entropy",
    "bob_policy",
    "build_fixed",
    "build_variable",
    "codebook_rate",
    "codeword_cost",
    "decode_acks",
    "decode_message",
    "drift_bound",
    "encode_plan",
    "exhaustive_min_cost",
    "expected_drift",
    "noiseless_capacity",
    "noisy_capacity",
    "run",
    "simulate_queues",
    "slots_per_bit",
    "step",
    "transmit",
    "z_mutual_info",
]
