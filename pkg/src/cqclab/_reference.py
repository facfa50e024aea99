"""Pure-Python kernels: the readable composition of the public pieces.

These drive :func:`cqclab.scheduler.step` slot by slot and exist both as
the import-time fallback when the compiled extension is unavailable and
as the reference the extension is checked against.  Both backends must
consume the pre-drawn uniforms in the same order (one per potential
packet, per user) so their outputs are bit-identical.
"""

import numpy as np

from .scheduler import SchedulerState, UserId, step


NAME = "pure-python"


def transmit_loop(bits, bob_target, delta, u_alice, u_bob):
    """Run one message through the scheduler and collect Bob's acks.

    Returns ``(acks, slots_used, drops, starved)``.  ``acks`` covers the
    message window plus one trailing slot; ``drops`` counts Alice
    packets lost on the link; ``starved`` flags any slot in which Bob
    had no packet available at decision time.
    """
    from .codec import AdaptiveEncoder, bob_policy

    enc = AdaptiveEncoder(bits)
    state = SchedulerState(q_bob=bob_target)  # Bob's standing backlog
    acks = []
    ia = ib = 0
    drops = 0
    starved = False
    slots_used = 0
    while True:
        in_window = not enc.done

        arr_bob = 0
        if bob_policy(state.q_bob, bob_target):
            arr_bob = 1 if u_bob[ib] >= delta else 0
            ib += 1

        arr_alice = 0
        entered = None
        if in_window and enc.decide():
            entered = bool(u_alice[ia] >= delta)
            ia += 1
            if entered:
                arr_alice = 1
            else:
                drops += 1

        if state.q_bob + arr_bob == 0:
            starved = True

        state, out = step(state, arr_alice, arr_bob)
        acks.append(1 if out.served is UserId.BOB else 0)

        if in_window:
            enc.advance(entered)
            if enc.done:
                slots_used = len(acks)
        else:
            break  # the slot just recorded was the trailing guard slot
    return np.asarray(acks, dtype=np.uint8), slots_used, drops, starved


def queue_sim_loop(arrivals_alice, arrivals_bob):
    """End-of-slot queue lengths under scripted arrival bits.

    Returns ``(q_alice, q_bob)`` as int64 arrays, one entry per slot.
    """
    arr_a = np.ascontiguousarray(arrivals_alice, dtype=np.uint8)
    arr_b = np.ascontiguousarray(arrivals_bob, dtype=np.uint8)
    if arr_a.shape != arr_b.shape:
        raise ValueError("arrival streams must have equal length")
    n = arr_a.size
    q_alice = np.empty(n, dtype=np.int64)
    q_bob = np.empty(n, dtype=np.int64)
    state = SchedulerState()
    for t in range(n):
        state, _ = step(state, int(arr_a[t]), int(arr_b[t]))
        q_alice[t] = state.q_alice
        q_bob[t] = state.q_bob
    return q_alice, q_bob
