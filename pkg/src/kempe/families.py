"""Constructions of the graph families the toolkit is typically run on.

Provides the Petersen graph, the Petersen graph with one vertex deleted
(the smallest graph the discharging machinery targets), the Hajos join
operation, the join-chain family built from repeated Hajos joins, and an
exhaustive isomorphism-free enumeration of small connected subcubic
graphs used as an oracle corpus by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import Graph, SizeError, ValidationError

__all__ = [
    "FamilySpec",
    "enumerate_subcubic",
    "hajos_join",
    "petersen",
    "petersen_star",
    "woodall_j",
]


def petersen() -> Graph:
    """The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def petersen_star() -> Graph:
    """The Petersen graph with vertex 0 deleted: 9 vertices, 12 edges.

    Labels are the standard Petersen labels shifted down by one, so the
    three 2-vertices (the deleted vertex's former neighbors) are 0, 3, 4.
    """
    full = petersen()
    edges = [
        (u - 1, v - 1) for (u, v) in full.edges if u != 0 and v != 0
    ]
    return Graph(9, edges)


def hajos_join(g1: Graph, e1: int, g2: Graph, e2: int, which_ends=(0, 0)) -> Graph:
    """Hajos join of g1 and g2 along edges e1 and e2.

    e1 and e2 are edge ids.  ``which_ends = (i, j)`` picks the merged
    endpoints: g1.edges[e1][i] is identified with g2.edges[e2][j], both
    edges are deleted, and a new edge joins the two remaining endpoints.
    The result keeps g1's labels; g2's vertices are appended densely.

    |V| = |V1| + |V2| - 1 and |E| = |E1| + |E2| - 1.
    """
    if not 0 <= e1 < g1.edge_count:
        raise ValidationError("edge id %r out of range for first graph" % (e1,))
    if not 0 <= e2 < g2.edge_count:
        raise ValidationError("edge id %r out of range for second graph" % (e2,))
    i, j = which_ends
    if i not in (0, 1) or j not in (0, 1):
        raise ValidationError("which_ends must be a pair of 0/1 flags")

    v1, v2 = g1.edges[e1][i], g1.edges[e1][1 - i]
    v3, v4 = g2.edges[e2][j], g2.edges[e2][1 - j]

    merged_degree = (g1.degree(v1) - 1) + (g2.degree(v3) - 1)
    if merged_degree > 3:
        raise ValidationError(
            "degree overflow: merged vertex would have degree %d" % merged_degree
        )

    n1 = g1.vertex_count
    relabel = {}
    next_id = n1
    for w in range(g2.vertex_count):
        if w == v3:
            relabel[w] = v1
        else:
            relabel[w] = next_id
            next_id += 1

    edges = [e for k, e in enumerate(g1.edges) if k != e1]
    edges.extend(
        (relabel[u], relabel[v]) for k, (u, v) in enumerate(g2.edges) if k != e2
    )
    edges.append((v2, relabel[v4]))

    result = Graph(n1 + g2.vertex_count - 1, edges)
    if result.has_parallel_edges:
        raise ValidationError("parallel edge created by join")
    return result


def woodall_j(k: int) -> Graph:
    """The k-th member of the join chain: 8k+9 vertices, 11k+12 edges.

    Start from `petersen_star` and take the Hajos join with a fresh copy
    k times.  Each join merges a 2-vertex of the current graph with the
    fresh copy's 2-vertex 0 and runs the new edge between their lowest
    3-neighbors, so every intermediate graph stays subcubic.  The joined
    edge is chosen deterministically (lexicographically least 2-vertex,
    then its least 3-neighbor) to make the output reproducible.
    """
    if not isinstance(k, int) or not 1 <= k <= 10:
        raise ValidationError("k must be an integer between 1 and 10")
    current = petersen_star()
    for _ in range(k):
        u = min(v for v in range(current.vertex_count) if current.degree(v) == 2)
        w = min(n for n in current.neighbors(u) if current.degree(n) == 3)
        e1 = current.edge_id(u, w)
        fresh = petersen_star()
        e2 = fresh.edge_id(0, 1)
        ends = (current.edges[e1].index(u), fresh.edges[e2].index(0))
        current = hajos_join(current, e1, fresh, e2, ends)
    return current


def enumerate_subcubic(n: int):
    """Yield all connected simple subcubic graphs on n vertices, one per
    isomorphism class.

    Works level by level: every connected graph on m vertices arises from
    a connected graph on m-1 vertices by attaching a new vertex to a
    nonempty set of at most three vertices of degree below 3 (remove any
    non-cut vertex to see this), so augmenting every smaller graph by
    every eligible attachment set and deduplicating by canonical form is
    exhaustive.  Deterministic order; capped at n = 10 where the exact
    canonicalizer is still comfortable.
    """
    if not isinstance(n, int) or n < 1:
        raise ValidationError("vertex count must be a positive integer")
    if n > 10:
        raise SizeError("enumeration is capped at 10 vertices (asked for %d)" % n)

    level = [Graph(1, [])]
    for m in range(2, n + 1):
        seen = {}
        for g in level:
            eligible = [v for v in range(m - 1) if g.degree(v) < 3]
            for size in (1, 2, 3):
                for subset in combinations(eligible, size):
                    h = Graph(m, list(g.edges) + [(v, m - 1) for v in subset])
                    key = canonical_key(h)
                    if key not in seen:
                        seen[key] = h
        level = list(seen.values())
    yield from level


def canonical_key(g: Graph):
    """A complete isomorphism invariant for simple graphs.

    Minimizes the upper-triangle adjacency bit sequence (column by column)
    over all vertex orderings whose degree-and-neighbor-degree profile is
    sorted descending.  The restriction to profile-sorted orderings is
    isomorphism-invariant, so two graphs get the same key iff they are
    isomorphic; it also prunes the search hard on irregular graphs.
    """
    n = g.vertex_count
    if n == 0:
        return (0, ())
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    degs = [bin(a).count("1") for a in adj]
    profile = []
    for u in range(n):
        nbr_degs = sorted(
            (degs[w] for w in range(n) if (adj[u] >> w) & 1), reverse=True
        )
        profile.append((degs[u], tuple(nbr_degs)))
    target = sorted(profile, reverse=True)

    best = None
    perm = []
    used = [False] * n

    def rec(bits):
        nonlocal best
        pos = len(perm)
        if pos == n:
            if best is None or bits < best:
                best = bits
            return
        want = target[pos]
        for u in range(n):
            if used[u] or profile[u] != want:
                continue
            cand = bits + [(adj[u] >> perm[r]) & 1 for r in range(pos)]
            # Lexicographic branch-and-bound: a prefix already above the
            # incumbent can never finish below it.
            if best is not None and cand > best[: len(cand)]:
                continue
            used[u] = True
            perm.append(u)
            rec(cand)
            perm.pop()
            used[u] = False

    rec([])
    return (n, tuple(best))


@dataclass(frozen=True)
class FamilySpec:
    """Declarative recipe for one generated graph.

    family: "petersen" | "p_star" | "j_k" | "hajos_join"
    parameters: family-specific -- {} | {} | {"k": int} |
        {"g1": Graph, "e1": int, "g2": Graph, "e2": int, "which_ends": (i, j)}
    """

    family: str
    parameters: dict = field(default_factory=dict)

    def build(self) -> Graph:
        if self.family == "petersen":
            self._expect(())
            return petersen()
        if self.family == "p_star":
            self._expect(())
            return petersen_star()
        if self.family == "j_k":
            self._expect(("k",))
            return woodall_j(self.parameters["k"])
        if self.family == "hajos_join":
            self._expect(("g1", "e1", "g2", "e2", "which_ends"))
            p = self.parameters
            return hajos_join(p["g1"], p["e1"], p["g2"], p["e2"], p["which_ends"])
        raise ValidationError("unknown family %r" % (self.family,))

    def _expect(self, keys):
        if set(self.parameters) != set(keys):
            raise ValidationError(
                "family %r takes parameters %s, got %s"
                % (self.family, sorted(keys), sorted(self.parameters))
            )
