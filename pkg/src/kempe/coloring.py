"""Exact chromatic-index computation and criticality testing.

For subcubic graphs the chromatic index is 3 or 4 whenever the maximum
degree is 3 (Vizing), so the engine settles every question by exhausting
a 3-coloring search; the 4-coloring case is witnessed by one extra search
with a fourth color.  An independent brute-force oracle with no shared
search logic backs the fast engine on small inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernel import extend_colors
from .graphs import (
    Graph,
    SizeError,
    UNCOLORED,
    ValidationError,
    empty_coloring,
    validate_coloring,
)

__all__ = [
    "ChiResult",
    "CriticalityReport",
    "chromatic_index",
    "colorable_with_3",
    "is_3_critical",
    "oracle_chromatic_index",
]

# Kernel marker for "edge excluded from the instance" (color g minus an
# edge without renumbering edge ids).
_SKIP = -2


@dataclass(frozen=True)
class ChiResult:
    """Exact chromatic index with a witness coloring.

    For chromatic_index <= 3 the witness is a proper total coloring.  For
    chromatic_index == 4 only three color values exist, so the witness is
    a proper partial 3-coloring whose uncolored edges form the fourth
    color class (necessarily a matching): coloring the uncolored edges
    with a fourth color gives the full 4-edge-coloring.
    """

    chromatic_index: int
    witness: tuple


@dataclass(frozen=True)
class CriticalityReport:
    """Outcome of a criticality test.

    critical: the graph needs 4 colors but every single-edge deletion
    drops it to 3.
    reason: set when not critical -- which requirement failed.
    evidence: when critical, one proper coloring per edge e (in edge id
    order), total except for e itself, showing g minus e is 3-colorable.
    """

    critical: bool
    reason: str | None = None
    evidence: tuple | None = None


def _edge_arrays(g: Graph):
    return [u for u, _ in g.edges], [v for _, v in g.edges]


def _require_simple(g: Graph, operation: str) -> None:
    if g.has_parallel_edges:
        raise ValidationError("%s requires a simple graph" % operation)


def colorable_with_3(g: Graph, fixed=None):
    """A proper total 3-coloring of g extending `fixed`, or None.

    `fixed` is a proper partial coloring (UNCOLORED entries are free).
    Deterministic: same input, same output coloring.
    """
    _require_simple(g, "colorable_with_3")
    if fixed is None:
        fixed = empty_coloring(g)
    validate_coloring(g, fixed)
    eu, ev = _edge_arrays(g)
    result = extend_colors(3, g.vertex_count, eu, ev, list(fixed))
    return None if result is None else tuple(result)


def chromatic_index(g: Graph) -> ChiResult:
    """Exact chromatic index of a simple subcubic graph, with witness.

    Degrees above 3 are unrepresentable in Graph, so with a simple input
    the answer is between the maximum degree and 4.
    """
    _require_simple(g, "chromatic_index")
    if g.edge_count == 0:
        return ChiResult(0, ())
    eu, ev = _edge_arrays(g)
    free = [-1] * g.edge_count
    for k in range(max(1, g.max_degree()), 5):
        result = extend_colors(k, g.vertex_count, eu, ev, list(free))
        if result is not None:
            if k == 4:
                # express the fourth color class as the uncolored matching
                result = [UNCOLORED if c == 3 else c for c in result]
            return ChiResult(k, tuple(result))
    raise AssertionError("subcubic graph with chromatic index above 4")


def is_3_critical(g: Graph) -> CriticalityReport:
    """Test whether g needs 4 colors while every g minus an edge needs 3.

    Requires a simple connected graph with maximum degree exactly 3;
    anything else is a caller bug and raises (a disconnected graph can
    never be critical -- each component could be handled separately -- so
    a disconnected query almost certainly means the wrong graph was
    loaded).
    """
    _require_simple(g, "is_3_critical")
    if g.max_degree() != 3:
        raise ValidationError(
            "is_3_critical requires maximum degree 3, got %d" % g.max_degree()
        )
    if not g.is_connected():
        raise ValidationError("is_3_critical requires a connected graph")

    if colorable_with_3(g) is not None:
        return CriticalityReport(False, reason="graph is already 3-colorable")

    eu, ev = _edge_arrays(g)
    evidence = []
    for e, (u, v) in enumerate(g.edges):
        fixed = [-1] * g.edge_count
        fixed[e] = _SKIP
        result = extend_colors(3, g.vertex_count, eu, ev, fixed)
        if result is None:
            return CriticalityReport(
                False,
                reason="graph minus edge %d-%d is still not 3-colorable" % (u, v),
            )
        result[e] = UNCOLORED
        evidence.append(tuple(result))
    return CriticalityReport(True, evidence=tuple(evidence))


def oracle_chromatic_index(g: Graph) -> int:
    """Brute-force chromatic index for cross-checking the engine.

    Deliberately naive and independent: tries k = 1, 2, 3, 4 in turn and
    searches edge-by-edge in input order, checking properness by scanning
    the endpoints' incident edges each time.  No bitmask state, no shared
    ordering heuristics.  Capped by edge count since the search is
    exponential.
    """
    if g.edge_count > 25:
        raise SizeError(
            "oracle is capped at 25 edges (got %d)" % g.edge_count
        )
    m = g.edge_count
    if m == 0:
        return 0
    colors = [None] * m

    def clashes(e, c):
        for v in g.edges[e]:
            for other in g.adjacency[v]:
                if other != e and colors[other] == c:
                    return True
        return False

    def rec(e, k):
        if e == m:
            return True
        for c in range(k):
            if not clashes(e, c):
                colors[e] = c
                if rec(e + 1, k):
                    return True
                colors[e] = None
        return False

    for k in (1, 2, 3, 4):
        if rec(0, k):
            return k
    raise AssertionError("no proper 4-edge-coloring found on a subcubic graph")
