"""Structure scanners: basic audit, H-decomposition, rich types, patterns."""

from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings

from conftest import subcubic_graphs
from kempe.audit import (
    HDecomposition,
    RichVertexType,
    Violation,
    audit_basic,
    classify_rich,
    decompose_h,
    find_pattern,
)
from kempe.families import petersen, petersen_star, woodall_j
from kempe.fixability import Configuration, load_pattern
from kempe.graphs import Graph, ValidationError


def k4():
    return Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])


def completion_host(cfg):
    """The pattern with one fresh pendant per slot, realizing every
    declared degree exactly."""
    slots = [v for v, _ in cfg.boundary]
    n = cfg.pattern.vertex_count
    extra = [(slots[i], n + i) for i in range(len(slots))]
    return Graph(n + len(slots), list(cfg.pattern.edges) + extra)


@pytest.fixture(scope="module")
def ring_host():
    """A cubic-ish host wrapping the 15-vertex two-pentagon pattern.

    A 7-cycle of fresh vertices is attached to the pattern's seven slots
    in boundary order, completing every declared degree.  The join
    vertex between the two pentagons ends up rich with both of its
    H-neighbors in 4-vertex components.
    """
    cfg = load_pattern("fig3")
    slots = [v for v, _ in cfg.boundary]
    n = cfg.pattern.vertex_count
    ring = [(n + i, n + (i + 1) % 7) for i in range(7)]
    attach = [(slots[i], n + i) for i in range(7)]
    return Graph(n + 7, list(cfg.pattern.edges) + ring + attach)


# ---------------------------------------------------------------- audit_basic

def test_audit_clean_on_critical_graphs():
    for g in (petersen_star(), woodall_j(1), woodall_j(2)):
        assert audit_basic(g) == ()


def test_audit_clean_on_petersen():
    assert audit_basic(petersen()) == ()


def test_adjacent_2_vertices_flagged():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    report = audit_basic(g)
    assert Violation("adjacent-2-vertices", (1, 2)) in report


def test_multiple_2_neighbors_flagged():
    # 0 has degree 3; neighbors 1 and 2 have degree 2, neighbor 3 degree 1.
    g = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)])
    report = audit_basic(g)
    assert Violation("multiple-2-neighbors", (0, 1, 2)) in report


def test_triangles_flagged():
    report = audit_basic(k4())
    triangles = {v.vertices for v in report if v.kind == "triangle"}
    assert triangles == {(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)}
    # K4 is otherwise fine: cubic, so the neighborhood condition holds.
    assert all(v.kind == "triangle" for v in report)


def test_neighborhood_degree_condition():
    # A claw: every edge fails in both directions (no degree-3 support).
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    report = audit_basic(g)
    assert len(report) == 6
    assert {v.kind for v in report} == {"neighborhood-degrees"}
    assert Violation("neighborhood-degrees", (1, 0)) in report
    assert Violation("neighborhood-degrees", (0, 1)) in report


def test_audit_requires_simple():
    g = Graph(2, [(0, 1), (0, 1)])
    with pytest.raises(ValidationError):
        audit_basic(g)
    with pytest.raises(ValidationError):
        decompose_h(g)


def test_ring_host_passes_basic_audit(ring_host):
    # The dangerous shape is invisible to the local scans; only the
    # rich-vertex classification below catches it.
    assert audit_basic(ring_host) == ()


# ---------------------------------------------------------------- decompose_h

def test_h_of_petersen_star_is_a_6_cycle():
    h = decompose_h(petersen_star())
    assert h.h_vertices == frozenset({1, 2, 5, 6, 7, 8})
    assert h.components == ((1, 2, 7, 5, 8, 6),)
    assert h.flags == ((0, "cycle"),)
    assert not h.is_clean
    assert h.order_of(1) == 6
    assert h.order_of(0) == 0
    assert h.component_of == {v: 0 for v in h.h_vertices}


def test_h_of_woodall_chain():
    h = decompose_h(woodall_j(1))
    assert h.is_clean
    assert {frozenset(c) for c in h.components} == {
        frozenset({2, 5, 6, 7, 8}),
        frozenset({10, 13, 14, 15, 16}),
    }
    g = woodall_j(1)
    for comp in h.components:
        # genuinely laid out in path order
        assert all(b in g.neighbors(a) for a, b in zip(comp, comp[1:]))
        assert len(set(comp)) == len(comp) == 5


def test_h_members_have_a_2_neighbor():
    g = woodall_j(2)
    h = decompose_h(g)
    degree = g.degrees()
    for v in range(g.vertex_count):
        in_h = degree[v] == 3 and any(degree[u] == 2 for u in g.neighbors(v))
        assert (v in h.h_vertices) == in_h


def test_long_path_component_flagged():
    # Caterpillar: 6-vertex spine, every spine vertex fed by 2-chains so
    # the spine is exactly H and forms a path on 6 vertices.
    edges = [(i, i + 1) for i in range(5)]
    nxt = 6
    for v, chains in [(0, 2), (1, 1), (2, 1), (3, 1), (4, 1), (5, 2)]:
        for _ in range(chains):
            edges += [(v, nxt), (nxt, nxt + 1)]
            nxt += 2
    g = Graph(nxt, edges)
    h = decompose_h(g)
    assert h.components[0] == (0, 1, 2, 3, 4, 5)
    assert h.flags == ((0, "path of 6 vertices"),)
    assert not h.is_clean


def test_ring_host_decomposition(ring_host):
    h = decompose_h(ring_host)
    assert h.is_clean
    assert h.components == ((1, 2, 3, 4), (9, 10, 11, 12), (16, 17), (20, 21))


@settings(max_examples=60)
@given(subcubic_graphs(max_vertices=8))
def test_h_partition_property(g):
    h = decompose_h(g)
    covered = sorted(v for comp in h.components for v in comp)
    assert covered == sorted(h.h_vertices)
    assert set(h.component_of) == h.h_vertices
    for cid, comp in enumerate(h.components):
        assert all(h.component_of[v] == cid for v in comp)
        flagged = any(f[0] == cid for f in h.flags)
        if not flagged:
            assert len(comp) <= 5
            assert all(b in g.neighbors(a) for a, b in zip(comp, comp[1:]))


# -------------------------------------------------------------- classify_rich

def test_no_rich_vertices_in_petersen_star():
    g = petersen_star()
    assert classify_rich(g, decompose_h(g)) == []


def test_cubic_graph_is_all_rich_zeros():
    g = k4()
    types = classify_rich(g, decompose_h(g))
    assert types == [RichVertexType(v, (0, 0, 0), ()) for v in range(4)]
    assert not any(t.flagged() for t in types)


def test_woodall_rich_types():
    # The two join vertices see a 5-component twice — but it is the
    # SAME component both times, so neither forbidden shape applies
    # (that is exactly how these graphs stay critical).
    g = woodall_j(1)
    types = classify_rich(g, decompose_h(g))
    assert types == [
        RichVertexType(1, (0, 5, 5), (5,)),
        RichVertexType(9, (0, 5, 5), (5,)),
    ]
    assert not any(t.flagged() for t in types)
    assert not any(t.flagged(3) for t in types)


def test_ring_host_rich_classification(ring_host):
    h = decompose_h(ring_host)
    types = classify_rich(ring_host, h)
    assert [(t.vertex, t.triple, t.distinct_orders) for t in types] == [
        (7, (0, 4, 4), (4, 4)),
        (15, (2, 2, 4), (2, 2, 4)),
        (18, (0, 0, 2), (2,)),
        (19, (0, 2, 4), (2, 4)),
    ]
    # Vertex 7 touches two DISTINCT 4-components: the forbidden shape.
    assert [t.vertex for t in types if t.flagged()] == [7]
    assert [t.vertex for t in types if t.flagged(3)] == [7]


def test_double_attachment_distinguished_from_two_components(ring_host):
    # Join-built graphs really do carry a rich vertex with two
    # neighbors in one H-component; the flags must not fire on those.
    g = woodall_j(1)
    h = decompose_h(g)
    for t in classify_rich(g, h):
        cids = {
            h.component_of[u]
            for u in g.neighbors(t.vertex)
            if u in h.h_vertices
        }
        assert len(cids) == 1  # double attachment, single component
    # ...whereas the ring host's flagged vertex touches two components.
    h2 = decompose_h(ring_host)
    seven = [t for t in classify_rich(ring_host, h2) if t.vertex == 7][0]
    assert seven.distinct_orders == (4, 4)


# --------------------------------------------------------------- find_pattern

def test_triangle_embeddings_in_k4():
    cfg = load_pattern("triangle")
    assert len(find_pattern(k4(), cfg)) == 4
    assert len(find_pattern(k4(), cfg, raw=True)) == 24


def test_pattern_found_in_its_own_completion():
    cfg = load_pattern("fig2b")
    host = completion_host(cfg)
    assert find_pattern(host, cfg) == [(0, 1, 2, 3, 4)]
    # The pattern has one mirror symmetry.
    assert find_pattern(host, cfg, raw=True) == [
        (0, 1, 2, 3, 4),
        (0, 3, 2, 1, 4),
    ]


def test_six_slot_pattern_absent_from_petersen_star():
    assert find_pattern(petersen_star(), load_pattern("fig2a")) == []


def test_embeddings_need_not_be_induced():
    # An all-free 3-path embeds into K4 even though K4 has no induced P3.
    cfg = Configuration(
        pattern=Graph(3, [(0, 1), (1, 2)]),
        boundary=(),
        free=frozenset({0, 1, 2}),
    )
    raw = find_pattern(k4(), cfg, raw=True)
    assert len(raw) == 24
    assert len(find_pattern(k4(), cfg)) == 12


def test_interior_degrees_must_match_exactly():
    cfg = load_pattern("adjacent-2-vertices")  # two 2-vertices, one edge
    path = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert find_pattern(path, cfg, raw=True) == [(1, 2), (2, 1)]
    assert find_pattern(path, cfg) == [(1, 2)]
    cycle = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert len(find_pattern(cycle, cfg, raw=True)) == 12
    assert len(find_pattern(cycle, cfg)) == 6


def brute_force_embeddings(host, cfg):
    declared = {}
    for v, _ in cfg.boundary:
        declared[v] = declared.get(v, 0) + 1
    need = [
        None if p in cfg.free else cfg.pattern.degree(p) + declared.get(p, 0)
        for p in range(cfg.pattern.vertex_count)
    ]
    nbrs = [set(host.neighbors(v)) for v in range(host.vertex_count)]
    out = []
    for img in permutations(range(host.vertex_count), cfg.pattern.vertex_count):
        if any(
            need[p] is not None and host.degree(img[p]) != need[p]
            for p in range(len(img))
        ):
            continue
        if all(img[b] in nbrs[img[a]] for a, b in cfg.pattern.edges):
            out.append(tuple(img))
    return sorted(out)


@settings(max_examples=25, deadline=None)
@given(subcubic_graphs(min_vertices=3, max_vertices=7))
def test_find_pattern_matches_brute_force(g):
    for name in ("adjacent-2-vertices", "triangle", "fig2b"):
        cfg = load_pattern(name)
        assert find_pattern(g, cfg, raw=True) == brute_force_embeddings(g, cfg)


def test_quotient_is_a_subset_of_raw():
    cfg = load_pattern("fig2c")
    host = completion_host(cfg)
    raw = find_pattern(host, cfg, raw=True)
    reps = find_pattern(host, cfg)
    assert set(reps) <= set(raw)
    assert reps and raw


def test_decomposition_type_shape():
    h = decompose_h(petersen_star())
    assert isinstance(h, HDecomposition)
    assert isinstance(h.h_vertices, frozenset)
    assert isinstance(h.components, tuple)
