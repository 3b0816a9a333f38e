"""Configurations: patterns with boundary slots and host-degree bookkeeping.

A configuration wraps a simple pattern graph together with an ordered
*boundary*: a sequence of (vertex, slot index) entries, one per edge
that leaves the pattern in the host graph.  A vertex's declared host
degree is its pattern degree plus its slot count, and must be 2 or 3
for every ordinary vertex.  Vertices listed as *free* opt out of that
bookkeeping; they stand for parts of the host whose degrees the
configuration doesn't pin down, and they may not carry slots.

Configurations are value objects.  The text format mirrors the graph
format with directive lines appended:

    0: 1 2          # pattern adjacency, same syntax as plain graphs
    1: 0
    2: 0
    boundary: 1/0 2/0
    identify: 1=2   # optional, merges declared-degree twins
    free: 0         # optional

``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

try:
    from importlib import resources
except ImportError:  # pragma: no cover
    import importlib_resources as resources

from ..graphs import Graph, ParseError, ValidationError, emit_graph, parse_graph

_PATTERN_ALIASES = {"fig4": "fig3"}


@dataclass(frozen=True)
class Configuration:
    """An immutable pattern-plus-boundary description."""

    pattern: Graph
    boundary: tuple
    identifications: tuple = ()
    free: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(self.boundary))
        object.__setattr__(self, "identifications", tuple(self.identifications))
        object.__setattr__(self, "free", frozenset(self.free))
        self._validate()

    def _validate(self):
        g = self.pattern
        if not g.is_simple:
            raise ValidationError("pattern graphs must be simple")
        for v in self.free:
            if not (0 <= v < g.vertex_count):
                raise ValidationError("free vertex %r out of range" % (v,))
        slots = {}
        for entry in self.boundary:
            if len(entry) != 2:
                raise ValidationError("boundary entries are (vertex, slot) pairs")
            v, s = entry
            if not (0 <= v < g.vertex_count):
                raise ValidationError("boundary vertex %r out of range" % (v,))
            if v in self.free:
                raise ValidationError(
                    "vertex %d is free and cannot carry boundary slots" % v)
            slots.setdefault(v, []).append(s)
        for v, indices in slots.items():
            if sorted(indices) != list(range(len(indices))):
                raise ValidationError(
                    "slot indices at vertex %d must be 0..%d"
                    % (v, len(indices) - 1))
        for v in range(g.vertex_count):
            if v in self.free:
                continue
            declared = g.degree(v) + len(slots.get(v, ()))
            if declared not in (2, 3):
                raise ValidationError(
                    "vertex %d has declared degree %d, expected 2 or 3"
                    % (v, declared))

    @property
    def slots(self):
        return len(self.boundary)

    @property
    def interior(self):
        """Vertices with pinned host degrees (everything not free)."""
        return tuple(v for v in range(self.pattern.vertex_count)
                     if v not in self.free)

    def declared_degree(self, v):
        if v in self.free:
            raise ValidationError("vertex %d is free" % v)
        return self.pattern.degree(v) + sum(1 for u, _ in self.boundary if u == v)

    def slots_at(self, v):
        """Boundary positions (indices into ``boundary``) at vertex ``v``."""
        return tuple(i for i, (u, _) in enumerate(self.boundary) if u == v)


def identify(cfg, *pairs):
    """Merge vertex pairs with equal declared degrees into single vertices.

    Each pair ``(a, b)`` collapses ``b`` into ``a``.  The two vertices
    must be ordinary (not free), non-adjacent, share no neighbor, and
    have the same declared degree; their pattern degrees must add up to
    exactly that degree, so that the merged vertex needs no slots of its
    own and both vertices' boundary entries simply disappear.  A merge
    that would leave slots on the merged vertex is rejected: there is no
    canonical way to renumber a partially surviving slot set.

    Pairs are applied left to right; labels in later pairs refer to the
    configuration as it was before any merging.
    """
    if not pairs:
        return cfg
    # original label -> current label, None once merged away
    forward = list(range(cfg.pattern.vertex_count))
    current = cfg
    for a0, b0 in pairs:
        a = forward[a0] if 0 <= a0 < len(forward) else None
        b = forward[b0] if 0 <= b0 < len(forward) else None
        if a is None or b is None:
            raise ValidationError(
                "identification %r=%r refers to a merged or missing vertex"
                % (a0, b0))
        current, relabel = _identify_one(current, a, b)
        forward = [None if x is None else relabel[x] for x in forward]
    return Configuration(
        pattern=current.pattern,
        boundary=current.boundary,
        identifications=cfg.identifications + tuple((a, b) for a, b in pairs),
        free=current.free,
    )


def _identify_one(cfg, a, b):
    """Merge ``b`` into ``a``; return (new config, old->new label map)."""
    g = cfg.pattern
    if a == b:
        raise ValidationError("cannot identify a vertex with itself")
    if a in cfg.free or b in cfg.free:
        raise ValidationError("cannot identify free vertices")
    da, db = cfg.declared_degree(a), cfg.declared_degree(b)
    if da != db:
        raise ValidationError(
            "cannot identify vertices of declared degrees %d and %d" % (da, db))
    na, nb = set(g.neighbors(a)), set(g.neighbors(b))
    if b in na:
        raise ValidationError("cannot identify adjacent vertices %d and %d" % (a, b))
    if na & nb:
        raise ValidationError(
            "vertices %d and %d share a neighbor; merging would double an edge"
            % (a, b))
    merged_degree = g.degree(a) + g.degree(b)
    if merged_degree > da:
        raise ValidationError(
            "merged vertex would have pattern degree %d > declared degree %d"
            % (merged_degree, da))
    leftover = da - merged_degree
    if leftover != 0:
        raise ValidationError(
            "identifying %d and %d leaves %d slot(s) on the merged vertex; "
            "such ambiguous partial slot merges are not supported" % (a, b, leftover))

    relabel = {}
    for v in range(g.vertex_count):
        if v == b:
            relabel[v] = a if a < b else a - 1
        else:
            relabel[v] = v if v < b else v - 1
    edges = [tuple(sorted((relabel[u], relabel[v]))) for u, v in g.edges]
    boundary = tuple((relabel[v], s) for v, s in cfg.boundary if v not in (a, b))
    free = frozenset(relabel[v] for v in cfg.free)
    merged = Configuration(
        pattern=Graph(g.vertex_count - 1, edges),
        boundary=boundary,
        identifications=cfg.identifications,
        free=free,
    )
    return merged, relabel


def emit_configuration(cfg):
    """Canonical text for a configuration (identifications already applied)."""
    lines = [emit_graph(cfg.pattern)] if cfg.pattern.vertex_count else []
    lines.append("boundary: " + " ".join("%d/%d" % entry for entry in cfg.boundary)
                 if cfg.boundary else "boundary:")
    if cfg.free:
        lines.append("free: " + " ".join(str(v) for v in sorted(cfg.free)))
    return "\n".join(lines)


def config_hash(cfg):
    """Stable content digest, e.g. ``sha256:9f2c...``."""
    digest = hashlib.sha256(emit_configuration(cfg).encode("utf-8")).hexdigest()
    return "sha256:" + digest


def parse_configuration(text):
    """Parse the configuration text format (see module docstring)."""
    graph_lines = []     # (original line number, text)
    directives = []      # (original line number, name, rest)
    in_directives = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        head, sep, rest = line.partition(":")
        name = head.strip()
        if sep and name and not name.isdigit():
            directives.append((lineno, name, rest.strip()))
            in_directives = True
        else:
            if in_directives:
                raise ParseError("graph lines must precede directives", lineno)
            graph_lines.append((lineno, line))

    try:
        pattern = parse_graph("\n".join(line for _, line in graph_lines))
    except ParseError as exc:
        # Map the sub-document line number back to this file.
        if exc.line is not None and 1 <= exc.line <= len(graph_lines):
            bare = str(exc).split(": ", 1)[1]
            raise ParseError(bare, graph_lines[exc.line - 1][0]) from None
        raise

    boundary = None
    pairs = []
    free = frozenset()
    seen_names = set()
    for lineno, name, rest in directives:
        if name in seen_names:
            raise ParseError("duplicate %r directive" % name, lineno)
        seen_names.add(name)
        if name == "boundary":
            boundary = []
            for token in rest.split():
                v, slash, s = token.partition("/")
                if not slash or not v.isdigit() or not s.isdigit():
                    raise ParseError(
                        "bad boundary entry %r, expected VERTEX/SLOT" % token, lineno)
                boundary.append((int(v), int(s)))
        elif name == "identify":
            for token in rest.split():
                a, eq, b = token.partition("=")
                if not eq or not a.isdigit() or not b.isdigit():
                    raise ParseError(
                        "bad identification %r, expected A=B" % token, lineno)
                pairs.append((int(a), int(b)))
        elif name == "free":
            try:
                free = frozenset(int(tok) for tok in rest.split())
            except ValueError:
                raise ParseError("bad free vertex list %r" % rest, lineno) from None
        else:
            raise ParseError("unknown directive %r" % name, lineno)
    if boundary is None:
        raise ParseError("missing boundary directive", len(text.splitlines()) or 1)

    cfg = Configuration(pattern=pattern, boundary=tuple(boundary), free=free)
    if pairs:
        cfg = identify(cfg, *pairs)
    return cfg


def load_pattern(name):
    """Load a bundled pattern by name (``fig4`` is an alias for ``fig3``)."""
    base = _PATTERN_ALIASES.get(name, name)
    try:
        text = (resources.files("kempe") / "patterns" / (base + ".cfg")).read_text("utf-8")
    except (FileNotFoundError, ModuleNotFoundError):
        raise ValidationError("unknown pattern %r (try list_patterns())" % (name,)) from None
    return parse_configuration(text)


def list_patterns():
    """Names accepted by :func:`load_pattern`, sorted."""
    names = set(_PATTERN_ALIASES)
    for entry in (resources.files("kempe") / "patterns").iterdir():
        if entry.name.endswith(".cfg"):
            names.add(entry.name[:-len(".cfg")])
    return sorted(names)
