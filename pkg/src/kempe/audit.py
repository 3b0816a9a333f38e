"""Structural scanners for subcubic graphs near the critical frontier.

Critical class-2 graphs of maximum degree 3 cannot contain certain
small substructures (adjacent 2-vertices, a 3-vertex with two
2-neighbors, triangles, violations of the degree-sum condition on
neighborhoods).  This module detects all of them, embeds arbitrary
degree-annotated patterns, and computes the decomposition that the
discharging argument runs on: the subgraph H induced by the 3-vertices
having a 2-neighbor, split into components, plus the classification of
the remaining 3-vertices by the component sizes around them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, ValidationError

__all__ = [
    "HDecomposition",
    "RichVertexType",
    "Violation",
    "audit_basic",
    "classify_rich",
    "decompose_h",
    "find_pattern",
]


@dataclass(frozen=True)
class Violation:
    """One offending site found by a scan."""

    kind: str
    vertices: tuple

    def __str__(self):
        return "%s at %s" % (self.kind, ",".join(str(v) for v in self.vertices))


def audit_basic(g):
    """Scan for the always-forbidden local structures.

    Returns a tuple of Violation records, empty when the graph contains
    no adjacent 2-vertices, no 3-vertex with two or more 2-neighbors,
    no triangle, and no neighborhood-degree violation (for every edge
    (u, v), u must have at least 4 - d(v) neighbors of degree 3 besides
    v).  Vertices of degree below 2 always trip the last check.
    """
    if not g.is_simple:
        raise ValidationError("audit requires a simple graph")
    degree = g.degrees()
    out = []
    for u, v in g.edges:
        if degree[u] == 2 and degree[v] == 2:
            out.append(Violation("adjacent-2-vertices", (u, v)))
    for v in range(g.vertex_count):
        if degree[v] != 3:
            continue
        twos = tuple(u for u in g.neighbors(v) if degree[u] == 2)
        if len(twos) >= 2:
            out.append(Violation("multiple-2-neighbors", (v,) + twos))
    for u, v in g.edges:
        for w in g.neighbors(u):
            if w > v and w in g.neighbors(v):
                out.append(Violation("triangle", (u, v, w)))
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            need = 4 - degree[b]
            have = sum(1 for w in g.neighbors(a) if w != b and degree[w] == 3)
            if have < need:
                out.append(Violation("neighborhood-degrees", (a, b)))
    return tuple(out)


@dataclass(frozen=True)
class HDecomposition:
    """The 3-vertices with 2-neighbors, split into induced components.

    Each component is listed in path order (or cycle order for the
    flagged degenerate shapes).  ``flags`` records components that are
    not paths on at most 5 vertices; a clean decomposition has none.
    """

    h_vertices: frozenset
    components: tuple
    component_of: dict = field(compare=True)
    flags: tuple = ()

    @property
    def is_clean(self):
        return not self.flags

    def order_of(self, v):
        """Order of the component containing v, or 0 if v is not in H."""
        cid = self.component_of.get(v)
        return 0 if cid is None else len(self.components[cid])


def decompose_h(g):
    """Compute the H-decomposition of a subcubic graph."""
    if not g.is_simple:
        raise ValidationError("H-decomposition requires a simple graph")
    degree = g.degrees()
    members = frozenset(
        v for v in range(g.vertex_count)
        if degree[v] == 3 and any(degree[u] == 2 for u in g.neighbors(v)))
    adjacency = {v: [u for u in g.neighbors(v) if u in members] for v in members}

    components = []
    flags = []
    component_of = {}
    seen = set()
    for start in sorted(members):
        if start in seen:
            continue
        # Collect the component first, then lay it out.
        comp = set()
        stack = [start]
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(adjacency[v])
        seen |= comp
        cid = len(components)
        # Every member keeps one edge for its 2-neighbor, so it has at
        # most two neighbors inside H: components are paths or cycles.
        ends = sorted(v for v in comp if len(adjacency[v]) <= 1)
        if not ends:
            ordered = _walk(adjacency, min(comp), len(comp))
            flags.append((cid, "cycle"))
        else:
            ordered = _walk(adjacency, ends[0], len(comp))
            if len(comp) > 5:
                flags.append((cid, "path of %d vertices" % len(comp)))
        components.append(ordered)
        for v in comp:
            component_of[v] = cid
    return HDecomposition(
        h_vertices=members,
        components=tuple(components),
        component_of=component_of,
        flags=tuple(flags),
    )


def _walk(adjacency, start, size):
    """Walk a path or cycle component from ``start``, smaller branch first."""
    ordered = [start]
    previous = None
    while len(ordered) < size:
        nxt = min(u for u in adjacency[ordered[-1]] if u != previous)
        previous = ordered[-1]
        ordered.append(nxt)
    return tuple(ordered)


@dataclass(frozen=True)
class RichVertexType:
    """A 3-vertex with no 2-neighbor, typed by nearby component orders.

    ``triple`` holds the orders of the H-components of the vertex's
    three neighbors, ascending, with 0 for neighbors outside H.  Two
    neighbors may sit in one component (possible in joins of smaller
    critical graphs), so ``distinct_orders`` lists each adjacent
    component once; the forbidden shapes are about distinct components.
    """

    vertex: int
    triple: tuple
    distinct_orders: tuple

    def flagged(self, threshold=4):
        """True when two distinct adjacent components reach ``threshold``.

        The default threshold 4 is the shape ruled out of minimal
        counterexamples directly; the sharper computer-checked argument
        lowers it to 3.
        """
        return sum(1 for t in self.distinct_orders if t >= threshold) >= 2


def classify_rich(g, h):
    """Type every rich vertex (3-vertex with no 2-neighbor) of g."""
    degree = g.degrees()
    out = []
    for v in range(g.vertex_count):
        if degree[v] != 3 or v in h.h_vertices:
            continue
        triple = tuple(sorted(h.order_of(u) for u in g.neighbors(v)))
        cids = {h.component_of[u] for u in g.neighbors(v) if u in h.h_vertices}
        distinct = tuple(sorted(len(h.components[c]) for c in cids))
        out.append(RichVertexType(vertex=v, triple=triple, distinct_orders=distinct))
    return out


def find_pattern(g, cfg, raw=False):
    """All embeddings of a configuration's pattern into a host graph.

    An embedding maps pattern vertices injectively onto host vertices so
    that every pattern edge lands on a host edge (the image need not be
    induced) and every ordinary pattern vertex keeps its declared host
    degree exactly; free pattern vertices may land anywhere.  Returned
    as tuples indexed by pattern vertex, sorted.  By default embeddings
    that differ only by an automorphism of the pattern are collapsed to
    their least representative; ``raw=True`` returns all of them.
    """
    embeddings = _embed(cfg, g, exact_degrees=True)
    if raw:
        return embeddings
    autos = _automorphisms(cfg)
    reps = {min(tuple(emb[a[p]] for p in range(len(emb))) for a in autos)
            for emb in embeddings}
    return sorted(reps)


def _declared(cfg):
    slots = {}
    for v, _ in cfg.boundary:
        slots[v] = slots.get(v, 0) + 1
    return [None if v in cfg.free else cfg.pattern.degree(v) + slots.get(v, 0)
            for v in range(cfg.pattern.vertex_count)]


def _match_order(pattern):
    """Pattern vertices, connectivity-first, so placement is always pruned."""
    order = []
    placed = set()
    pending = list(range(pattern.vertex_count))
    while pending:
        pick = None
        for v in pending:
            if any(u in placed for u in pattern.neighbors(v)):
                pick = v
                break
        if pick is None:
            pick = pending[0]
        pending.remove(pick)
        placed.add(pick)
        order.append(pick)
    return order


def _embed(cfg, host, exact_degrees):
    pattern = cfg.pattern
    declared = _declared(cfg)
    host_degree = host.degrees()
    host_nbrs = [set(host.neighbors(v)) for v in range(host.vertex_count)]
    order = _match_order(pattern)
    out = []
    image = [None] * pattern.vertex_count
    used = [False] * host.vertex_count

    def place(i):
        if i == len(order):
            out.append(tuple(image))
            return
        p = order[i]
        anchors = [(q, image[q]) for q in pattern.neighbors(p) if image[q] is not None]
        if anchors:
            candidates = sorted(host_nbrs[anchors[0][1]])
        else:
            candidates = range(host.vertex_count)
        for v in candidates:
            if used[v]:
                continue
            if declared[p] is not None and exact_degrees and host_degree[v] != declared[p]:
                continue
            if any(v not in host_nbrs[hq] for _, hq in anchors):
                continue
            image[p] = v
            used[v] = True
            place(i + 1)
            image[p] = None
            used[v] = False

    place(0)
    return sorted(out)


def _automorphisms(cfg):
    """Vertex permutations preserving edges, free status, declared degrees."""
    pattern = cfg.pattern
    declared = _declared(cfg)
    nbrs = [set(pattern.neighbors(v)) for v in range(pattern.vertex_count)]
    order = _match_order(pattern)
    autos = []
    image = [None] * pattern.vertex_count
    used = [False] * pattern.vertex_count

    def place(i):
        if i == len(order):
            # Edge-preserving injections between equal finite edge sets
            # are automorphisms; degrees came along for free.
            autos.append(tuple(image))
            return
        p = order[i]
        for v in range(pattern.vertex_count):
            if used[v] or declared[v] != declared[p]:
                continue
            if pattern.degree(v) != pattern.degree(p):
                continue
            if any(image[q] is not None and image[q] not in nbrs[v]
                   for q in pattern.neighbors(p)):
                continue
            image[p] = v
            used[v] = True
            place(i + 1)
            image[p] = None
            used[v] = False

    place(0)
    return autos
