"""Pure-Python coloring-extension kernel.

Twin of the compiled `_fast` module: same search order, same tie-breaks,
same results.  Keep the two in lockstep when changing either.
"""

from __future__ import annotations

__all__ = ["extend_colors", "search_order"]


def search_order(n, eu, ev, fixed):
    """Static edge order for the extension search.

    Starting from the vertices touched by fixed edges, repeatedly pick the
    lowest-id uncolored edge with an endpoint already touched, falling back
    to the lowest-id uncolored edge when none connects.  Computed once up
    front, so the search order is a pure function of the input -- results
    are reproducible and identical across backends.
    """
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
    """Extend a partial proper edge coloring to all to-color edges.

    k: number of colors (3 for the usual search, 4 for class-two
    witnesses).  Edges are given as parallel arrays eu/ev.  Each entry of
    `fixed` is a color 0..k-1 (pre-colored), -1 (to color), or -2 (edge
    excluded from the instance entirely -- lets callers color g minus an
    edge without renumbering).

    Returns a full assignment list (excluded edges keep -2) or None when
    no proper extension exists.  Colors are tried in ascending order at
    every step, so the first solution found is deterministic.
    """
    m = len(fixed)
    full = (1 << k) - 1
    avail = [full] * n
    for e in range(m):
        c = fixed[e]
        if c >= 0:
            bit = 1 << c
            u = eu[e]
            v = ev[e]
            if not (avail[u] & bit) or not (avail[v] & bit):
                return None  # fixed part already improper
            avail[u] &= ~bit
            avail[v] &= ~bit

    order = search_order(n, eu, ev, fixed)
    result = list(fixed)

    def rec(i):
        if i == len(order):
            return True
        e = order[i]
        u = eu[e]
        v = ev[e]
        cand = avail[u] & avail[v]
        while cand:
            bit = cand & -cand
            cand ^= bit
            avail[u] ^= bit
            avail[v] ^= bit
            result[e] = bit.bit_length() - 1
            if rec(i + 1):
                return True
            avail[u] |= bit
            avail[v] |= bit
        result[e] = -1
        return False

    if rec(0):
        return result
    return None
