"""Shared test helpers: graph strategies and small independent oracles.

The oracles here are deliberately written with no shared logic with the
package (full-permutation canonicalization, exhaustive edge-subset sweeps)
so the fast implementations have something honest to be checked against.
"""

from __future__ import annotations

from itertools import combinations, permutations

from hypothesis import strategies as st

from kempe.graphs import Graph, UNCOLORED

# The vertex-deleted Petersen graph, written out by hand from the standard
# labeling (outer cycle 0-4, pentagram 5-9, vertex 0 removed, labels
# shifted down by one).  Used to cross-check the generator.
P_STAR_TEXT = """0: 1 5
1: 0 2 6
2: 1 3 7
3: 2 8
4: 6 7
5: 0 7 8
6: 1 4 8
7: 2 4 5
8: 3 5 6"""


@st.composite
def subcubic_graphs(draw, min_vertices=1, max_vertices=8):
    """Random simple subcubic graphs (not necessarily connected)."""
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    if pairs:
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True))
    else:
        chosen = []
    deg = [0] * n
    edges = []
    for u, v in chosen:
        if deg[u] < 3 and deg[v] < 3:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
    return Graph(n, edges)


@st.composite
def graphs_with_colorings(draw, max_vertices=8):
    """A random graph plus a random proper partial coloring of it."""
    g = draw(subcubic_graphs(max_vertices=max_vertices))
    raw = draw(
        st.lists(
            st.integers(-1, 2), min_size=g.edge_count, max_size=g.edge_count
        )
    )
    used = [set() for _ in range(g.vertex_count)]
    coloring = []
    for eid, c in enumerate(raw):
        u, v = g.edges[eid]
        if c != UNCOLORED and c not in used[u] and c not in used[v]:
            used[u].add(c)
            used[v].add(c)
            coloring.append(c)
        else:
            coloring.append(UNCOLORED)
    return g, coloring


def perm_canonical(n, edges):
    """Canonical form by minimizing over all n! relabelings.

    Independent of the package's canonicalizer; only usable for tiny n.
    """
    best = None
    for perm in permutations(range(n)):
        relabeled = tuple(
            sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges)
        )
        if best is None or relabeled < best:
            best = relabeled
    return (n, best)


def brute_connected_subcubic_canon(n):
    """Canonical forms of every connected simple subcubic graph on n
    vertices, by sweeping all 2^C(n,2) edge subsets.  Usable for n <= 5."""
    pairs = list(combinations(range(n), 2))
    found = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        deg = [0] * n
        ok = True
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
            if deg[u] > 3 or deg[v] > 3:
                ok = False
                break
        if not ok:
            continue
        g = Graph(n, edges)
        if not g.is_connected():
            continue
        found.add(perm_canonical(n, edges))
    return found
