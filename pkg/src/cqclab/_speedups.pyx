# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the slot-stepping hot loops.

Semantics mirror cqclab._reference exactly, including the order in which
the pre-drawn per-packet uniforms are consumed; the test suite checks
the two backends produce bit-identical outputs.
"""

import numpy as np


NAME = "compiled"


def transmit_loop(bits, int bob_target, double delta, u_alice, u_bob):
    """Fused encoder + scheduler + ack recording for one message."""
    cdef const unsigned char[::1] msg = np.ascontiguousarray(bits, dtype=np.uint8)
    cdef const double[::1] ua = np.ascontiguousarray(u_alice, dtype=np.float64)
    cdef const double[::1] ub = np.ascontiguousarray(u_bob, dtype=np.float64)
    cdef Py_ssize_t m = msg.shape[0]
    if m == 0:
        raise ValueError("message must contain at least one bit")
    # Window <= 2m slots plus one guard slot; one potential Bob packet per slot.
    if ub.shape[0] < 2 * m + 2:
        raise ValueError("u_bob too short for the worst-case slot count")

    acks_arr = np.zeros(2 * m + 2, dtype=np.uint8)
    cdef unsigned char[::1] acks = acks_arr

    cdef long q_alice = 0, q_bob = bob_target
    cdef int owed_alice = 0, tail = 0, in_window
    cdef int arr_alice, arr_bob, entered, served_bob
    cdef Py_ssize_t pos = 0, t = 0, ia = 0, ib = 0
    cdef long drops = 0
    cdef int starved = 0
    cdef Py_ssize_t slots_used = 0

    while True:
        in_window = pos < m

        arr_bob = 0
        if q_bob < bob_target:
            if ub[ib] >= delta:
                arr_bob = 1
            ib += 1

        arr_alice = 0
        entered = -1
        if in_window and tail == 0 and msg[pos] == 1:
            if ua[ia] >= delta:
                entered = 1
                arr_alice = 1
            else:
                entered = 0
                drops += 1
            ia += 1

        q_alice += arr_alice
        q_bob += arr_bob
        if q_bob == 0:
            starved = 1

        served_bob = 0
        if owed_alice:
            owed_alice = 0
            q_alice -= 1
        elif q_alice >= 1 and q_bob >= 1:
            served_bob = 1
            owed_alice = 1
            q_bob -= 1
        elif q_bob >= 1:
            served_bob = 1
            q_bob -= 1
        elif q_alice >= 1:
            q_alice -= 1
        acks[t] = <unsigned char>served_bob
        t += 1

        if in_window:
            if tail:
                tail = 0
                pos += 1
            elif msg[pos] == 0:
                pos += 1
            elif entered == 1:
                tail = 1
            else:
                pos += 1
            if pos >= m:
                slots_used = t
        else:
            break  # the slot just recorded was the trailing guard slot
    return acks_arr[:slots_used + 1], slots_used, drops, bool(starved)


def queue_sim_loop(arrivals_alice, arrivals_bob):
    """End-of-slot queue lengths under scripted arrival bits."""
    cdef const unsigned char[::1] arr_a = np.ascontiguousarray(arrivals_alice, dtype=np.uint8)
    cdef const unsigned char[::1] arr_b = np.ascontiguousarray(arrivals_bob, dtype=np.uint8)
    if arr_a.shape[0] != arr_b.shape[0]:
        raise ValueError("arrival streams must have equal length")
    cdef Py_ssize_t n = arr_a.shape[0]
    qa_arr = np.empty(n, dtype=np.int64)
    qb_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] qa = qa_arr
    cdef long long[::1] qb = qb_arr

    cdef long long q_alice = 0, q_bob = 0
    cdef int owed_alice = 0
    cdef Py_ssize_t t
    for t in range(n):
        q_alice += arr_a[t]
        q_bob += arr_b[t]
        if owed_alice:
            owed_alice = 0
            q_alice -= 1
        elif q_alice >= 1 and q_bob >= 1:
            owed_alice = 1
            q_bob -= 1
        elif q_bob >= 1:
            q_bob -= 1
        elif q_alice >= 1:
            q_alice -= 1
        qa[t] = q_alice
        qb[t] = q_bob
    return qa_arr, qb_arr
