"""Kempe chains: two-color alternating components, linkage, and swaps.

Under a proper partial coloring, the edges carrying two chosen colors form
a subgraph of maximum degree 2, so each component is a path or an even
cycle.  Swapping the two colors along one component preserves properness;
these swaps are the basic move of every recoloring argument in the rest
of the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import ALL_COLORS, Graph, UNCOLORED, ValidationError, validate_coloring

__all__ = ["KempeChain", "chain_at", "linked", "swap", "swap_at"]


@dataclass(frozen=True)
class KempeChain:
    """One component of the two-colored subgraph.

    color_pair: the two colors, sorted ascending.
    edges: the component's edge ids, sorted ascending; empty for the empty
    chain (anchored at a vertex seeing neither color).
    endpoints: the two path ends, sorted, or () for an even cycle and for
    the empty chain.
    """

    color_pair: tuple
    edges: tuple
    endpoints: tuple

    @property
    def is_cycle(self) -> bool:
        return bool(self.edges) and not self.endpoints

    def vertices(self, g: Graph) -> set:
        out = set()
        for eid in self.edges:
            out.update(g.edges[eid])
        return out


def _check_pair(pair) -> tuple:
    a, b = sorted(pair)
    if a == b or a not in ALL_COLORS or b not in ALL_COLORS:
        raise ValidationError("color pair must be two distinct colors, got %r" % (pair,))
    return (a, b)


def chain_at(g: Graph, coloring, v: int, pair) -> KempeChain:
    """The maximal alternating component through v for the given pair.

    Returns the empty chain when v sees neither color of the pair, so
    callers can swap at any vertex unconditionally (an empty swap is the
    identity).
    """
    pair = _check_pair(pair)
    validate_coloring(g, coloring)
    if not 0 <= v < g.vertex_count:
        raise ValidationError("vertex %r out of range" % (v,))

    def pair_edges(w):
        return [eid for eid in g.adjacency[w] if coloring[eid] in pair]

    frontier = pair_edges(v)
    if not frontier:
        return KempeChain(pair, (), ())

    seen_edges = set()
    seen_vertices = {v}
    stack = [(v, eid) for eid in frontier]
    while stack:
        w, eid = stack.pop()
        if eid in seen_edges:
            continue
        seen_edges.add(eid)
        nxt = g.other_end(eid, w)
        if nxt not in seen_vertices:
            seen_vertices.add(nxt)
        for other in pair_edges(nxt):
            if other not in seen_edges:
                stack.append((nxt, other))

    # properness caps the two-colored degree at 2: the component is a path
    # (two vertices of component-degree 1) or an even cycle (none)
    degree_in_chain = {}
    for eid in seen_edges:
        for w in g.edges[eid]:
            degree_in_chain[w] = degree_in_chain.get(w, 0) + 1
    ends = sorted(w for w, d in degree_in_chain.items() if d == 1)
    assert len(ends) in (0, 2), "two-colored component is neither path nor cycle"
    if not ends:
        assert len(seen_edges) % 2 == 0, "odd alternating cycle under a proper coloring"
    return KempeChain(pair, tuple(sorted(seen_edges)), tuple(ends))


def linked(g: Graph, coloring, u: int, v: int, pair) -> bool:
    """True iff u and v lie in the same (nonempty) chain for the pair."""
    chain = chain_at(g, coloring, u, pair)
    if not chain.edges:
        return False
    return v in chain.vertices(g)


def swap(g: Graph, coloring, chain: KempeChain):
    """Exchange the chain's two colors along exactly its edges.

    An involution; the empty chain swaps to the identity.  Raises if the
    chain does not belong to this coloring (wrong colors on its edges or a
    fragment that breaks properness when toggled).
    """
    a, b = _check_pair(chain.color_pair)
    validate_coloring(g, coloring)
    result = list(coloring)
    for eid in chain.edges:
        c = coloring[eid]
        if c == a:
            result[eid] = b
        elif c == b:
            result[eid] = a
        else:
            raise ValidationError(
                "chain edge %d is colored %r, not in the chain's pair" % (eid, c)
            )
    try:
        validate_coloring(g, result)
    except ValidationError:
        raise ValidationError(
            "swap broke properness: the chain is not a full component"
        )
    return tuple(result)


def swap_at(g: Graph, coloring, v: int, pair):
    """Swap the pair's chain through v (identity when v sees neither color)."""
    return swap(g, coloring, chain_at(g, coloring, v, pair))
