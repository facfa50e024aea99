"""Discrete-time simulator of a two-user round robin scheduler.

Alice and Bob buffer packets in separate queues in front of a shared
server that can serve one packet per time slot.  Arrivals land at the
beginning of a slot, departures happen at the end.  When both queues
hold packets, Bob (the fixed-priority user) is served in the current
slot and the next slot is granted to Alice; the grant survives any new
arrivals, which is what makes contended service alternate B, A.  Each
user receives an acknowledgment in exactly the slots where one of its
own packets departs.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .bits import as_bit_array, bit_string


class UserId(Enum):
    ALICE = "alice"
    BOB = "bob"


@dataclass(slots=True)
class SchedulerState:
    """Queue lengths plus the grant that encodes round robin alternation.

    ``owed`` names the user guaranteed service in the current slot
    because of contention in the previous one; it implies that user
    still has a buffered packet.
    """

    slot: int = 0
    q_alice: int = 0
    q_bob: int = 0
    owed: Optional[UserId] = None


@dataclass(slots=True)
class SlotOutcome:
    served: Optional[UserId]
    ack_alice: bool
    ack_bob: bool


@dataclass
class ServiceLog:
    """Per-slot outcomes of a simulated run, indexed by slot."""

    outcomes: list

    def __len__(self):
        return len(self.outcomes)


def step(state: SchedulerState, arrival_alice: int, arrival_bob: int):
    """Advance the scheduler by one slot.

    Within the slot: enqueue arrivals, then serve the owed user if a
    grant is pending, else serve Bob on contention (granting Alice the
    next slot), else serve whichever queue is nonempty, else idle.
    Returns the successor state and the slot's outcome; the transition
    is total.
    """
    if arrival_alice not in (0, 1) or arrival_bob not in (0, 1):
        raise ValueError("arrivals are at most one packet per user per slot")
    q_alice = state.q_alice + arrival_alice
    q_bob = state.q_bob + arrival_bob
    owed = state.owed

    if owed is not None:
        served = owed
        owed = None
    elif q_alice >= 1 and q_bob >= 1:
        served = UserId.BOB
        owed = UserId.ALICE
    elif q_bob >= 1:
        served = UserId.BOB
    elif q_alice >= 1:
        served = UserId.ALICE
    else:
        served = None

    if served is UserId.ALICE:
        q_alice -= 1
    elif served is UserId.BOB:
        q_bob -= 1

    new_state = SchedulerState(state.slot + 1, q_alice, q_bob, owed)
    outcome = SlotOutcome(served, served is UserId.ALICE, served is UserId.BOB)
    return new_state, outcome


def run(arrivals_alice, bob_policy: Callable[[int, int], int], n_slots: int) -> ServiceLog:
    """Drive ``step`` for ``n_slots`` slots from an empty system.

    ``arrivals_alice`` is a bit string or int sequence, zero-padded when
    shorter than the run.  ``bob_policy(slot, bob_queue)`` returns Bob's
    arrival bit for each slot given his queue length at the start of it.
    Deterministic given its inputs.
    """
    if n_slots <= 0:
        raise ValueError("cannot run for zero slots")
    arr_a = as_bit_array(arrivals_alice)
    state = SchedulerState()
    outcomes = []
    for t in range(n_slots):
        a = int(arr_a[t]) if t < arr_a.size else 0
        b = int(bob_policy(t, state.q_bob))
        if b not in (0, 1):
            raise ValueError("bob_policy must return 0 or 1")
        state, out = step(state, a, b)
        outcomes.append(out)
    return ServiceLog(outcomes)


def ack_stream(log: ServiceLog, user: UserId) -> str:
    """Project a run onto one user's acknowledgment bits."""
    if user is UserId.ALICE:
        return bit_string(o.ack_alice for o in log.outcomes)
    return bit_string(o.ack_bob for o in log.outcomes)
