# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled coloring-extension kernel.

Twin of the pure-Python `pure` module: same search order, same
tie-breaks, same results.  Keep the two in lockstep when changing
either.
"""

from libc.stdlib cimport free, malloc

__all__ = ["extend_colors", "search_order"]


cdef int _compute_order(int m, int n, int *eu, int *ev, int *res,
                        int *order, char *touched) noexcept:
    """Fill `order` with the static search order; returns its length.

    Mirrors the pure twin: start from vertices touched by fixed edges,
    repeatedly take the lowest-id unordered to-color edge with a touched
    endpoint, falling back to the lowest-id one when none connects.
    """
    cdef int e, pick, olen = 0, remaining = 0
    for e in range(m):
        if res[e] == -1:
            remaining += 1
    while remaining:
        pick = -1
        for e in range(m):
            if res[e] == -1:
                if touched[eu[e]] or touched[ev[e]]:
                    pick = e
                    break
                if pick == -1:
                    pick = e
        touched[eu[pick]] = 1
        touched[ev[pick]] = 1
        res[pick] = -3  # mark as ordered; overwritten during the search
        order[olen] = pick
        olen += 1
        remaining -= 1
    return olen


def search_order(n, eu, ev, fixed):
    """Static edge order for the extension search (see the pure twin)."""
    m = len(fixed)
    touched = [False] * n
    for e in range(m):
        if fixed[e] >= 0:
            touched[eu[e]] = True
            touched[ev[e]] = True
    pending = [e for e in range(m) if fixed[e] == -1]
    order = []
    while pending:
        pick = None
        for e in pending:  # pending stays sorted ascending
            if touched[eu[e]] or touched[ev[e]]:
                pick = e
                break
        if pick is None:
            pick = pending[0]
        pending.remove(pick)
        order.append(pick)
        touched[eu[pick]] = True
        touched[ev[pick]] = True
    return order


def extend_colors(k, n, eu, ev, fixed):
    """Extend a partial proper edge coloring (see the pure twin).

    Entries of `fixed`: a color 0..k-1, -1 (to color), or -2 (excluded).
    Returns a full assignment list or None; colors are tried ascending,
    so the first solution is deterministic and backend-independent.
    """
    cdef int m = len(fixed)
    cdef int nn = n
    cdef int kk = k
    cdef int full = (1 << kk) - 1
    cdef int e, u, v, c, bit, depth, olen, entering
    cdef int *c_eu
    cdef int *c_ev
    cdef int *res
    cdef int *order
    cdef int *avail
    cdef int *cand
    cdef int *chosen
    cdef char *touched

    c_eu = <int *> malloc(sizeof(int) * (m + 1))
    c_ev = <int *> malloc(sizeof(int) * (m + 1))
    res = <int *> malloc(sizeof(int) * (m + 1))
    order = <int *> malloc(sizeof(int) * (m + 1))
    cand = <int *> malloc(sizeof(int) * (m + 1))
    chosen = <int *> malloc(sizeof(int) * (m + 1))
    avail = <int *> malloc(sizeof(int) * (nn + 1))
    touched = <char *> malloc(nn + 1)
    if (c_eu == NULL or c_ev == NULL or res == NULL or order == NULL
            or cand == NULL or chosen == NULL or avail == NULL
            or touched == NULL):
        free(c_eu); free(c_ev); free(res); free(order)
        free(cand); free(chosen); free(avail); free(touched)
        raise MemoryError()

    try:
        for e in range(m):
            c_eu[e] = eu[e]
            c_ev[e] = ev[e]
            res[e] = fixed[e]
        for u in range(nn):
            avail[u] = full
            touched[u] = 0

        for e in range(m):
            c = res[e]
            if c >= 0:
                bit = 1 << c
                u = c_eu[e]
                v = c_ev[e]
                if not (avail[u] & bit) or not (avail[v] & bit):
                    return None  # fixed part already improper
                avail[u] &= ~bit
                avail[v] &= ~bit
                touched[u] = 1
                touched[v] = 1

        olen = _compute_order(m, nn, c_eu, c_ev, res, order, touched)

        depth = 0
        entering = 1
        while True:
            if depth == olen:
                return [res[e] for e in range(m)]
            e = order[depth]
            u = c_eu[e]
            v = c_ev[e]
            if entering:
                cand[depth] = avail[u] & avail[v]
            if cand[depth]:
                bit = cand[depth] & (-cand[depth])
                cand[depth] ^= bit
                avail[u] ^= bit
                avail[v] ^= bit
                c = 0
                while (1 << c) != bit:
                    c += 1
                res[e] = c
                chosen[depth] = bit
                depth += 1
                entering = 1
            else:
                res[e] = -1
                if depth == 0:
                    return None
                depth -= 1
                entering = 0
                e = order[depth]
                avail[c_eu[e]] |= chosen[depth]
                avail[c_ev[e]] |= chosen[depth]
    finally:
        free(c_eu); free(c_ev); free(res); free(order)
        free(cand); free(chosen); free(avail); free(touched)
