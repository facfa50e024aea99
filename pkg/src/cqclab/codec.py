"""Timing codec riding on the round robin scheduler.

Alice writes message bits into her own arrival pattern: a '1' is one
packet followed by a forced idle slot, a '0' is a single idle slot.
Bob keeps a standing backlog of packets so that his head-of-queue is
occupied in every slot; each of Alice's packets then displaces his
service by exactly one slot.  Reading Bob's acknowledgment stream back
recovers the message: service followed by a gap is a '1', service in
two consecutive slots is a '0'.

With lossy links, a dropped Alice packet turns the corresponding '1'
into a '0' on Bob's side while '0' bits always survive, so the
end-to-end channel behaves like a Z-channel with the per-packet drop
probability.  Alice learns her own queue length at each slot's end, so
she skips the idle slot after a dropped packet instead of wasting it.
"""

from dataclasses import dataclass, field

import numpy as np

from .bits import as_bit_array, bit_string


class MalformedAckStream(Exception):
    """Ack pattern cannot be parsed into message bits.

    Raised on two consecutive idle slots inside the decode window or on
    a window too short for the requested message length; both indicate
    Bob starved or the decoder lost alignment.
    """

    def __init__(self, message, bob_starved=False):
        super().__init__(message)
        self.bob_starved = bob_starved


@dataclass(frozen=True)
class ChannelParams:
    """Link and policy knobs for one transmission."""

    delta: float = 0.0  # per-packet drop probability on the shared link
    seed: int = 0
    bob_target: int = 10  # queue length Bob maintains (L)

    def __post_init__(self):
        if not 0.0 <= self.delta <= 1.0:
            raise ValueError("delta must lie in [0, 1]")
        if self.bob_target < 1:
            raise ValueError("bob_target must be a positive integer")


@dataclass(frozen=True)
class TransmissionReport:
    decoded: str
    slots_used: int
    drops: int  # Alice packets lost on the link during the message window
    bob_starved: bool


def encode_plan(bits) -> str:
    """Arrival pattern for a message over a lossless link.

    Maps '1' to the two slots [1, 0] and '0' to the single slot [0], in
    message order; the result never contains two adjacent packets, which
    would merge in Alice's queue and corrupt the following bits.
    """
    arr = as_bit_array(bits)
    if arr.size == 0:
        raise ValueError("message must contain at least one bit")
    return "".join("10" if b else "0" for b in arr)


def bob_policy(queue_len: int, target: int, warmup: bool = False) -> int:
    """Bob's per-slot arrival rule: top the queue back up to ``target``.

    During a warm-up phase he sends unconditionally; afterwards he sends
    exactly when his queue has dropped below the target, replacing each
    served packet.
    """
    if warmup:
        return 1
    return 1 if queue_len < target else 0


class AdaptiveEncoder:
    """Alice's slot-by-slot encoder, reacting to per-packet link feedback.

    For each '1' she sends one packet; if it entered the queue she idles
    one slot before the next bit (two slots total), and if it was
    dropped she moves on immediately (one slot).  A '0' is always a
    single idle slot.  Feedback is her own queue length at the end of
    the slot, available on both lossless and lossy links.
    """

    def __init__(self, bits):
        self._bits = as_bit_array(bits)
        if self._bits.size == 0:
            raise ValueError("message must contain at least one bit")
        self._pos = 0
        self._tail = False  # forced idle slot behind a delivered packet

    @property
    def done(self) -> bool:
        return self._pos >= self._bits.size

    def decide(self) -> int:
        """Arrival decision for the current slot (1 sends a packet)."""
        if self.done or self._tail:
            return 0
        return int(self._bits[self._pos])

    def advance(self, entered=None):
        """Finish the slot; ``entered`` is the fate of this slot's packet.

        Pass True/False when ``decide`` sent a packet, None otherwise.
        """
        if self.done:
            raise RuntimeError("encoder already finished")
        if self._tail:
            self._tail = False
            self._pos += 1
        elif self._bits[self._pos] == 0:
            self._pos += 1
        elif entered:
            self._tail = True
        else:
            self._pos += 1  # dropped packet: the bit cost one slot


def decode_acks(acks, m: int) -> str:
    """Recover ``m`` message bits from Bob's acknowledgment stream.

    Scans served slots left to right: a served slot followed by another
    served slot yields '0' (consuming one slot); a served slot followed
    by an idle slot yields '1' (consuming both).  The stream must extend
    one slot past the last pattern so a trailing '0' is resolvable.
    """
    arr = as_bit_array(acks)
    if m < 1:
        raise ValueError("message length must be positive")
    out = []
    pos = 0
    n = arr.size
    while len(out) < m:
        if pos >= n:
            raise MalformedAckStream(
                f"ack stream ended after {len(out)} of {m} bits")
        if arr[pos] == 0:
            if pos + 1 >= n or arr[pos + 1] == 0:
                raise MalformedAckStream(
                    f"two consecutive idle slots at slot {pos}",
                    bob_starved=True)
            pos += 1  # stray idle slot: resync on the next served slot
            continue
        if pos + 1 >= n:
            raise MalformedAckStream(
                f"ack stream truncated inside a pattern at slot {pos}")
        if arr[pos + 1] == 1:
            out.append(0)
            pos += 1
        else:
            out.append(1)
            pos += 2
    return bit_string(out)


def transmit(bits, params: ChannelParams = None, *, backend=None) -> TransmissionReport:
    """Send a message end to end through the simulated scheduler.

    Wires the adaptive encoder and Bob's replenishment policy into the
    scheduler, with independent per-packet drops (probability ``delta``)
    applied to both users' packets on the link, then decodes Bob's ack
    stream.  Bob holds a standing backlog of ``bob_target`` packets when
    the message starts and keeps topping it up; the run covers the
    message window plus one trailing slot so the decoder can resolve a
    final '0'.  Deterministic given the seed.

    Raises :class:`MalformedAckStream` when Bob starved badly enough to
    destroy the ack pattern; the exception carries ``bob_starved``.
    """
    from .backend import get_backend

    if params is None:
        params = ChannelParams()
    kernel = get_backend(backend)
    arr = as_bit_array(bits)
    m = int(arr.size)
    if m == 0:
        raise ValueError("message must contain at least one bit")
    n_ones = int(arr.sum())

    # One uniform per potential packet, split per user so the consumption
    # order is identical in every kernel backend.
    ss_alice, ss_bob = np.random.SeedSequence(params.seed).spawn(2)
    u_alice = np.random.Generator(np.random.PCG64(ss_alice)).random(n_ones)
    u_bob = np.random.Generator(np.random.PCG64(ss_bob)).random(2 * m + 2)

    acks, slots_used, drops, starved = kernel.transmit_loop(
        arr, params.bob_target, params.delta, u_alice, u_bob)
    try:
        decoded = decode_acks(acks, m)
    except MalformedAckStream as exc:
        exc.bob_starved = bool(exc.bob_starved or starved)
        raise
    return TransmissionReport(decoded, int(slots_used), int(drops), bool(starved))
