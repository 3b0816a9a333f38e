"""Subcubic graph value type, edge colorings, and bit-exact text I/O.

Everything downstream (coloring search, Kempe chains, the board game,
discharging) works on the `Graph` type defined here.  Graphs are immutable
value objects with dense 0-based vertex ids and a deterministic edge
ordering, so search results are reproducible run to run.
"""

from __future__ import annotations

from collections import Counter

__all__ = [
    "ALL_COLORS",
    "COLOR_LETTERS",
    "Graph",
    "GraphError",
    "ParseError",
    "SizeError",
    "UNCOLORED",
    "ValidationError",
    "color_letter",
    "emit_graph",
    "empty_coloring",
    "is_proper",
    "is_total",
    "letter_color",
    "missing_colors",
    "parse_graph",
    "validate_coloring",
]

# The three edge colors are the integers 0, 1, 2, printed as x, y, z.
COLOR_LETTERS = "xyz"
ALL_COLORS = (0, 1, 2)

# Marker for an uncolored edge inside a partial coloring.  A partial edge
# coloring is simply a sequence indexed by edge id whose entries are a color
# or UNCOLORED; lists are used while mutating, tuples for stored values.
UNCOLORED = -1


class GraphError(Exception):
    """Problem with a graph document or graph structure."""


class ParseError(GraphError):
    """Malformed graph document.  Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class ValidationError(GraphError):
    """Structurally invalid input (self-loop, degree above 3, bad coloring)."""


class SizeError(GraphError):
    """Input exceeds the documented size cap of an exhaustive operation."""


class Graph:
    """An undirected graph with maximum degree 3 and dense 0-based vertex ids.

    Value type: two graphs are equal iff they have the same vertex count and
    the same edge multiset.  Edges are normalized to (low, high) pairs and
    stored sorted, so edge ids are deterministic for a given graph.

    Parallel edges are representable -- vertex identification during graph
    surgery can create them -- but they are flagged via `has_parallel_edges`
    and rejected by the coloring and audit entry points.  Self-loops and
    degrees above 3 are rejected outright.
    """

    __slots__ = ("vertex_count", "edges", "adjacency", "has_parallel_edges")

    def __init__(self, vertex_count: int, edges):
        if vertex_count < 0:
            raise ValidationError("vertex count must be nonnegative")
        norm = []
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValidationError(
                    "edge (%r, %r) out of range for %d vertices" % (u, v, vertex_count)
                )
            if u == v:
                raise ValidationError("self-loop at vertex %d" % u)
            norm.append((u, v) if u < v else (v, u))
        norm.sort()

        adjacency = [[] for _ in range(vertex_count)]
        for eid, (u, v) in enumerate(norm):
            adjacency[u].append(eid)
            adjacency[v].append(eid)
        for v, incident in enumerate(adjacency):
            if len(incident) > 3:
                raise ValidationError(
                    "vertex %d has degree %d (maximum is 3)" % (v, len(incident))
                )

        self.vertex_count = vertex_count
        self.edges = tuple(norm)
        self.adjacency = tuple(tuple(inc) for inc in adjacency)
        self.has_parallel_edges = any(
            norm[i] == norm[i - 1] for i in range(1, len(norm))
        )

    # -- value semantics -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count and self.edges == other.edges
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return "Graph(%d, %r)" % (self.vertex_count, list(self.edges))

    # -- basic accessors -------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def is_simple(self) -> bool:
        return not self.has_parallel_edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple:
        return tuple(len(inc) for inc in self.adjacency)

    def max_degree(self) -> int:
        return max((len(inc) for inc in self.adjacency), default=0)

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError("vertex %d is not an endpoint of edge %d" % (v, eid))

    def neighbors(self, v: int) -> tuple:
        """Neighbors of v in ascending order, repeated for parallel edges."""
        out = [self.other_end(eid, v) for eid in self.adjacency[v]]
        out.sort()
        return tuple(out)

    def edge_id(self, u: int, v: int):
        """Id of an edge joining u and v, or None.

        With parallel edges the lowest id wins; callers that care about
        multiplicity should use `edge_ids_between`.
        """
        for eid in self.adjacency[u]:
            if self.other_end(eid, u) == v:
                return eid
        return None

    def edge_ids_between(self, u: int, v: int) -> tuple:
        return tuple(
            eid for eid in self.adjacency[u] if self.other_end(eid, u) == v
        )

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        seen = [False] * self.vertex_count
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            v = stack.pop()
            for eid in self.adjacency[v]:
                w = self.other_end(eid, v)
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.vertex_count


# -- text format ----------------------------------------------------------
#
# One vertex per line, "<id>: <space-separated neighbor ids>", every edge
# listed at both endpoints, lines sorted by id, LF line endings.  A vertex
# with no neighbors gets a bare "<id>:" line.  The empty document is the
# empty graph.


def parse_graph(text: str) -> Graph:
    """Parse an adjacency-list document into a Graph.

    Lenient about neighbor order within a line and about trailing blank
    lines; strict about everything else (dense ascending ids, symmetric
    adjacency, subcubic degrees, no self-loops).
    """
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    n = len(lines)

    neighbor_counts = []
    for idx, raw in enumerate(lines):
        line_no = idx + 1
        head, sep, tail = raw.partition(":")
        if not sep:
            raise ParseError("expected '<id>: <neighbor ids>'", line_no)
        head = head.strip()
        if not head.isdigit():
            raise ParseError("bad vertex id %r" % head, line_no)
        if int(head) != idx:
            raise ParseError(
                "vertex id %s out of order (expected %d)" % (head, idx), line_no
            )
        counts = Counter()
        for tok in tail.split():
            if not tok.isdigit():
                raise ParseError("bad neighbor id %r" % tok, line_no)
            w = int(tok)
            if w >= n:
                raise ParseError(
                    "neighbor %d out of range (document has %d vertices)" % (w, n),
                    line_no,
                )
            counts[w] += 1
        neighbor_counts.append(counts)

    edges = []
    for u in range(n):
        for w in sorted(neighbor_counts[u]):
            mult = neighbor_counts[u][w]
            if w == u:
                raise ValidationError("self-loop at vertex %d" % u)
            back = neighbor_counts[w][u]
            if back != mult:
                raise ParseError(
                    "edge %d-%d listed %d time(s) at %d but %d time(s) at %d"
                    % (u, w, mult, u, back, w),
                    u + 1,
                )
            if u < w:
                edges.extend([(u, w)] * mult)
    return Graph(n, edges)


def emit_graph(g: Graph) -> str:
    """Emit the canonical document for g (inverse of parse_graph)."""
    lines = []
    for v in range(g.vertex_count):
        nbrs = g.neighbors(v)
        if nbrs:
            lines.append("%d: %s" % (v, " ".join(str(w) for w in nbrs)))
        else:
            lines.append("%d:" % v)
    return "\n".join(lines)


# -- partial edge colorings ------------------------------------------------


def empty_coloring(g: Graph) -> list:
    return [UNCOLORED] * g.edge_count


def validate_coloring(g: Graph, coloring) -> None:
    """Raise ValidationError unless coloring is a well-formed proper partial
    coloring of g (right length, values in {UNCOLORED, 0, 1, 2}, no clash at
    any vertex)."""
    if len(coloring) != g.edge_count:
        raise ValidationError(
            "coloring has %d entries for %d edges" % (len(coloring), g.edge_count)
        )
    for eid, c in enumerate(coloring):
        if c != UNCOLORED and c not in ALL_COLORS:
            raise ValidationError("edge %d has invalid color %r" % (eid, c))
    if not is_proper(g, coloring):
        raise ValidationError("coloring is not proper")


def is_proper(g: Graph, coloring) -> bool:
    for v in range(g.vertex_count):
        seen = 0
        for eid in g.adjacency[v]:
            c = coloring[eid]
            if c == UNCOLORED:
                continue
            bit = 1 << c
            if seen & bit:
                return False
            seen |= bit
    return True


def is_total(g: Graph, coloring) -> bool:
    return len(coloring) == g.edge_count and all(c != UNCOLORED for c in coloring)


def missing_colors(g: Graph, coloring, v: int) -> set:
    """The set of colors absent from the colored edges at v.

    Always has at least 3 - d(v) elements; for a vertex saturated by a
    proper coloring it can be empty (degree 3) or not (degree below 3).
    """
    missing = {0, 1, 2}
    for eid in g.adjacency[v]:
        missing.discard(coloring[eid])
    return missing


def color_letter(c: int) -> str:
    return COLOR_LETTERS[c]


def letter_color(ch: str) -> int:
    idx = COLOR_LETTERS.find(ch.lower())
    if idx < 0:
        raise ValueError("unknown color letter %r" % ch)
    return idx
