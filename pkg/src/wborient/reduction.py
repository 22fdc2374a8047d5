"""Cubic vertex cover to bounded-orientation instances, and back.

Given a cubic multigraph H with budget k, ``build_well_balanced_instance``
produces a graph G with per-vertex out-degree bounds such that G has a
bounds-respecting well-balanced orientation exactly when H has a vertex
cover of size at most k; ``build_best_balanced_instance`` extends G with
pendant vertices so the same holds for best-balanced orientations.

Per vertex v of H the graph gets a six-vertex gadget (two chains p0-p1-p2
and q0-q1-q2 joined by the root edge p0-q0), per edge e a six-vertex
gadget (x, y and four degree-3 vertices z1..z4), plus a hub and a sink
joined to every z.  Most edges carry a forced direction (the fixed
partial orientation); an orientation agreeing with all forced directions
is called convenient, and only the 3 root-area edges per vertex gadget
stay free.  The transformations below move between covers, convenient
orientations, arbitrary valid orientations, and the best-balanced
variant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from .checks import (
    OutDegreeBounds,
    apply_eulerian_reversal,
    is_ell_bounded,
    is_well_balanced,
)
from .connectivity import PathSet, arc_disjoint_paths
from .core import (
    GraphBuilder,
    MixedGraph,
    Orientation,
    _edge_incidence,
    degree,
    edge_direction_for_bit,
    induced,
)
from .errors import GraphError, InternalInvariantError, PreconditionError

KIND_WELL = "well-balanced"
KIND_BEST = "best-balanced"


def _invariant(condition: bool, message: str) -> None:
    if not condition:
        raise InternalInvariantError(message)


@dataclass(frozen=True)
class CvcInstance:
    """A cubic vertex cover instance: cubic multigraph H plus budget k."""

    graph: MixedGraph
    k: int

    def __post_init__(self) -> None:
        if not self.graph.is_graph:
            raise GraphError("instance graph must be arc-free")
        if not self.graph.vertices:
            raise GraphError("instance graph must be nonempty")
        for v in self.graph.vertices:
            if degree(self.graph, v) != 3:
                raise GraphError(f"graph is not cubic: vertex {v} has degree {degree(self.graph, v)}")
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 0:
            raise PreconditionError(f"budget k must be a nonnegative integer, got {self.k!r}")

    def __hash__(self) -> int:
        return hash((self.graph, self.k))

    @property
    def n(self) -> int:
        """Half the vertex count; a cubic graph has 2n vertices and 3n edges."""
        return len(self.graph.vertices) // 2


@dataclass(frozen=True)
class VertexGadget:
    """Gadget vertex ids for one vertex of H."""

    p0: int
    p1: int
    p2: int
    q0: int
    q1: int
    q2: int

    @property
    def members(self) -> tuple[int, ...]:
        return (self.p0, self.p1, self.p2, self.q0, self.q1, self.q2)


@dataclass(frozen=True)
class EdgeGadget:
    """Gadget vertex ids for one edge of H."""

    x: int
    y: int
    z1: int
    z2: int
    z3: int
    z4: int

    @property
    def members(self) -> tuple[int, ...]:
        return (self.x, self.y, self.z1, self.z2, self.z3, self.z4)

    @property
    def z_members(self) -> tuple[int, ...]:
        return (self.z1, self.z2, self.z3, self.z4)


@dataclass(frozen=True)
class _FreeTriple:
    """Edge ids of the three free edges at one vertex gadget."""

    hub_p0: int
    hub_q0: int
    root: int


@dataclass(frozen=True)
class _ZEdges:
    """Edge ids incident to one z vertex: to the hub, the sink, and its gadget."""

    hub_edge: int
    sink_edge: int
    feed_edge: int


@dataclass(frozen=True)
class ReductionArtifact:
    """Constructed instance with the labels locating every gadget vertex."""

    kind: str
    source: CvcInstance
    graph: MixedGraph
    bounds: OutDegreeBounds
    hub: int
    sink: int
    pendants: tuple[int, ...]
    vertex_gadgets: dict[int, VertexGadget]
    edge_gadgets: dict[int, EdgeGadget]
    incident_edges: dict[int, tuple[int, int, int]]

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def k(self) -> int:
        return self.source.k

    @cached_property
    def z_all(self) -> frozenset[int]:
        return frozenset(z for g in self.edge_gadgets.values() for z in g.z_members)

    @cached_property
    def z_outbound(self) -> frozenset[int]:
        """z vertices whose forced pattern routes hub -> z -> sink (z1, z2)."""
        return frozenset(z for g in self.edge_gadgets.values() for z in (g.z1, g.z2))

    @cached_property
    def z_return(self) -> frozenset[int]:
        """z vertices whose forced pattern routes sink -> z -> hub (z3, z4)."""
        return frozenset(z for g in self.edge_gadgets.values() for z in (g.z3, g.z4))

    @cached_property
    def xy_vertices(self) -> frozenset[int]:
        return frozenset(v for g in self.edge_gadgets.values() for v in (g.x, g.y))

    @cached_property
    def chain_vertices(self) -> frozenset[int]:
        return frozenset(v for g in self.vertex_gadgets.values() for v in g.members)

    def wbo_graph(self) -> MixedGraph:
        """The well-balanced-side graph G (the full graph minus pendants)."""
        if self.kind == KIND_WELL:
            return self.graph
        cached = self.__dict__.get("_wbo_graph")
        if cached is None:
            cached = induced(self.graph, self.graph.vertices - set(self.pendants))
            self.__dict__["_wbo_graph"] = cached
        return cached

    def wbo_bounds(self) -> OutDegreeBounds:
        """The well-balanced-side bounds: hub capped at 8n+k, every z at 1."""
        cached = self.__dict__.get("_wbo_bounds")
        if cached is None:
            G = self.wbo_graph()
            by_vertex = {v: degree(G, v) for v in G.vertices}
            by_vertex[self.hub] = 8 * self.n + self.k
            for z in self.z_all:
                by_vertex[z] = 1
            cached = OutDegreeBounds(by_vertex)
            self.__dict__["_wbo_bounds"] = cached
        return cached

    @cached_property
    def _pair_edge(self) -> dict[frozenset[int], int]:
        out: dict[frozenset[int], int] = {}
        for eid, (u, v) in self.graph.edges.items():
            key = frozenset((u, v))
            _invariant(key not in out, "constructed graph has parallel edges")
            out[key] = eid
        return out

    def edge_between(self, u: int, v: int) -> int:
        """Edge id joining u and v; the constructed graph is simple."""
        eid = self._pair_edge.get(frozenset((u, v)))
        if eid is None:
            raise GraphError(f"no edge between {u} and {v}")
        return eid

    @cached_property
    def z_edges(self) -> dict[int, _ZEdges]:
        out: dict[int, _ZEdges] = {}
        for g in self.edge_gadgets.values():
            for z in g.z_members:
                feed = g.x if z == g.z1 else g.y
                out[z] = _ZEdges(
                    hub_edge=self.edge_between(self.hub, z),
                    sink_edge=self.edge_between(self.sink, z),
                    feed_edge=self.edge_between(feed, z),
                )
        return out

    @cached_property
    def free_triples(self) -> dict[int, _FreeTriple]:
        out: dict[int, _FreeTriple] = {}
        for hv, g in self.vertex_gadgets.items():
            out[hv] = _FreeTriple(
                hub_p0=self.edge_between(self.hub, g.p0),
                hub_q0=self.edge_between(self.hub, g.q0),
                root=self.edge_between(g.p0, g.q0),
            )
        return out

    @cached_property
    def pendant_edges(self) -> dict[int, int]:
        return {w: self.edge_between(self.hub, w) for w in self.pendants}

    @cached_property
    def fixed_orientation(self) -> Orientation:
        """The forced partial orientation; 6n root-area edges stay free."""
        G = self.wbo_graph()
        d: dict[int, tuple[int, int]] = {}
        for he in sorted(self.edge_gadgets):
            g = self.edge_gadgets[he]
            d[self.edge_between(g.x, g.y)] = (g.x, g.y)
            d[self.z_edges[g.z1].feed_edge] = (g.x, g.z1)
            for z in (g.z2, g.z3, g.z4):
                d[self.z_edges[z].feed_edge] = (g.y, z)
            for z in (g.z1, g.z2):
                d[self.z_edges[z].hub_edge] = (self.hub, z)
                d[self.z_edges[z].sink_edge] = (z, self.sink)
            for z in (g.z3, g.z4):
                d[self.z_edges[z].hub_edge] = (z, self.hub)
                d[self.z_edges[z].sink_edge] = (self.sink, z)
        for hv in sorted(self.vertex_gadgets):
            g = self.vertex_gadgets[hv]
            e1, e2, e3 = self.incident_edges[hv]
            d[self.edge_between(g.p0, g.p1)] = (g.p0, g.p1)
            d[self.edge_between(g.p1, g.p2)] = (g.p1, g.p2)
            d[self.edge_between(g.q0, g.q1)] = (g.q0, g.q1)
            d[self.edge_between(g.q1, g.q2)] = (g.q1, g.q2)
            d[self.edge_between(g.p1, self.edge_gadgets[e1].y)] = (g.p1, self.edge_gadgets[e1].y)
            d[self.edge_between(g.p2, self.edge_gadgets[e2].y)] = (g.p2, self.edge_gadgets[e2].y)
            d[self.edge_between(g.p2, self.edge_gadgets[e3].y)] = (g.p2, self.edge_gadgets[e3].y)
            d[self.edge_between(g.q1, self.edge_gadgets[e1].x)] = (g.q1, self.edge_gadgets[e1].x)
            d[self.edge_between(g.q2, self.edge_gadgets[e2].x)] = (g.q2, self.edge_gadgets[e2].x)
            d[self.edge_between(g.q2, self.edge_gadgets[e3].x)] = (g.q2, self.edge_gadgets[e3].x)
        fixed = Orientation(G, d)
        _invariant(len(fixed.free_edges()) == 6 * self.n, "free edge count is off")
        return fixed


def build_well_balanced_instance(inst: CvcInstance) -> ReductionArtifact:
    """Construct the bounded well-balanced orientation instance (G, bounds)."""
    return _build_artifact(inst, best=False)


def build_best_balanced_instance(inst: CvcInstance) -> ReductionArtifact:
    """Construct the bounded best-balanced instance: G plus 2k pendants on the hub."""
    return _build_artifact(inst, best=True)


def _build_artifact(inst: CvcInstance, best: bool) -> ReductionArtifact:
    H = inst.graph
    n, k = inst.n, inst.k
    b = GraphBuilder()
    hub = b.add_vertex()
    sink = b.add_vertex()
    vertex_gadgets: dict[int, VertexGadget] = {}
    for hv in sorted(H.vertices):
        vertex_gadgets[hv] = VertexGadget(*b.add_vertices(6))
    edge_gadgets: dict[int, EdgeGadget] = {}
    for he in sorted(H.edges):
        edge_gadgets[he] = EdgeGadget(*b.add_vertices(6))

    for hv in sorted(H.vertices):
        g = vertex_gadgets[hv]
        b.add_edge(g.p0, g.p1)
        b.add_edge(g.p1, g.p2)
        b.add_edge(g.q0, g.q1)
        b.add_edge(g.q1, g.q2)
        b.add_edge(g.p0, g.q0)
    for he in sorted(H.edges):
        g = edge_gadgets[he]
        b.add_edge(g.x, g.y)
        b.add_edge(g.x, g.z1)
        b.add_edge(g.y, g.z2)
        b.add_edge(g.y, g.z3)
        b.add_edge(g.y, g.z4)
    for he in sorted(H.edges):
        for z in edge_gadgets[he].z_members:
            b.add_edge(hub, z)
            b.add_edge(sink, z)
    incident_edges: dict[int, tuple[int, int, int]] = {}
    for hv in sorted(H.vertices):
        e1, e2, e3 = _edge_incidence(H)[hv]
        incident_edges[hv] = (e1, e2, e3)
        g = vertex_gadgets[hv]
        b.add_edge(hub, g.p0)
        b.add_edge(hub, g.q0)
        b.add_edge(g.p1, edge_gadgets[e1].y)
        b.add_edge(g.p2, edge_gadgets[e2].y)
        b.add_edge(g.p2, edge_gadgets[e3].y)
        b.add_edge(g.q1, edge_gadgets[e1].x)
        b.add_edge(g.q2, edge_gadgets[e2].x)
        b.add_edge(g.q2, edge_gadgets[e3].x)
    pendants: tuple[int, ...] = ()
    if best:
        pendants = tuple(b.add_vertices(2 * k))
        for w in pendants:
            b.add_edge(hub, w)
    G = b.build()

    _invariant(len(G.vertices) == 30 * n + 2 + len(pendants), "vertex count is off")
    _invariant(len(G.edges) == 65 * n + len(pendants), "edge count is off")
    _invariant(degree(G, hub) == 16 * n + len(pendants), "hub degree is off")
    _invariant(degree(G, sink) == 12 * n, "sink degree is off")

    by_vertex = {v: degree(G, v) for v in G.vertices}
    z_all = [z for g in edge_gadgets.values() for z in g.z_members]
    for z in z_all:
        by_vertex[z] = 1
    if not best:
        by_vertex[hub] = 8 * n + k
    return ReductionArtifact(
        kind=KIND_BEST if best else KIND_WELL,
        source=inst,
        graph=G,
        bounds=OutDegreeBounds(by_vertex),
        hub=hub,
        sink=sink,
        pendants=pendants,
        vertex_gadgets=vertex_gadgets,
        edge_gadgets=edge_gadgets,
        incident_edges=incident_edges,
    )


def build_fixed_orientation(art: ReductionArtifact) -> Orientation:
    """The forced partial orientation of G; see the module docstring."""
    return art.fixed_orientation


def is_convenient(D: Orientation, art: ReductionArtifact) -> bool:
    """True iff D is total over G and agrees with every forced direction."""
    if D.base != art.wbo_graph():
        raise PreconditionError("orientation is not over the instance graph")
    D.require_total()
    direction = D.direction
    return all(direction[e] == th for e, th in art.fixed_orientation.direction.items())


def _root_side(
    art: ReductionArtifact, hv: int, direction: Mapping[int, tuple[int, int]]
) -> tuple[bool, bool, int]:
    """Evaluate one vertex gadget's free-edge pattern.

    Returns (both root edges leave the hub, both roots reachable from the
    hub inside the gadget, number of free arcs leaving the hub).
    """
    trip = art.free_triples[hv]
    g = art.vertex_gadgets[hv]
    hub_p0 = direction[trip.hub_p0] == (art.hub, g.p0)
    hub_q0 = direction[trip.hub_q0] == (art.hub, g.q0)
    p_to_q = direction[trip.root] == (g.p0, g.q0)
    reach_p0 = hub_p0 or (hub_q0 and not p_to_q)
    reach_q0 = hub_q0 or (hub_p0 and p_to_q)
    return hub_p0 and hub_q0, reach_p0 and reach_q0, int(hub_p0) + int(hub_q0)


def check_root_coverage(D: Orientation, art: ReductionArtifact) -> bool:
    """Local characterization of well-balancedness for convenient orientations.

    Requires, for every edge uv of H, that (i) at least one endpoint has
    both of its root edges directed away from the hub, and (ii) all four
    root vertices p0, q0 of both endpoints are reachable from the hub in
    the orientation induced on the hub and those roots.  For convenient
    orientations this holds if and only if the orientation is
    well-balanced.
    """
    if not is_convenient(D, art):
        raise PreconditionError("orientation is not convenient")
    side: dict[int, tuple[bool, bool, int]] = {
        hv: _root_side(art, hv, D.direction) for hv in art.vertex_gadgets
    }
    for u, v in art.source.graph.edges.values():
        full_u, ok_u, _ = side[u]
        full_v, ok_v, _ = side[v]
        if not (full_u or full_v):
            return False
        if not (ok_u and ok_v):
            return False
    return True


def cover_to_orientation(art: ReductionArtifact, cover: Iterable[int]) -> Orientation:
    """The convenient orientation encoding a vertex subset of H.

    Per vertex v of H the free edges become hub->p0 and p0->q0, plus
    hub->q0 exactly when v is in the given set (q0->hub otherwise).  The
    result is well-balanced iff the set is a vertex cover and within
    bounds iff the set has size at most k.
    """
    chosen = frozenset(cover)
    unknown = chosen - art.source.graph.vertices
    if unknown:
        raise PreconditionError(f"not vertices of the source graph: {sorted(unknown)}")
    direction = dict(art.fixed_orientation.direction)
    for hv, g in art.vertex_gadgets.items():
        trip = art.free_triples[hv]
        direction[trip.hub_p0] = (art.hub, g.p0)
        direction[trip.root] = (g.p0, g.q0)
        direction[trip.hub_q0] = (art.hub, g.q0) if hv in chosen else (g.q0, art.hub)
    return Orientation(art.wbo_graph(), direction)


def orientation_to_cover(D: Orientation, art: ReductionArtifact) -> frozenset[int]:
    """Extract the encoded vertex cover from a convenient, bounded,
    well-balanced orientation.

    The cover is the set of H-vertices whose both root edges leave the
    hub; its size is the hub's out-degree minus 8n, hence at most k.
    """
    if not is_convenient(D, art):
        raise PreconditionError("orientation is not convenient")
    if not is_ell_bounded(D, art.wbo_bounds()):
        raise PreconditionError("orientation exceeds the out-degree bounds")
    if not check_root_coverage(D, art):
        raise PreconditionError("orientation is not well-balanced")
    cover = frozenset(
        hv
        for hv in art.vertex_gadgets
        if _root_side(art, hv, D.direction)[0]
    )
    H = art.source.graph
    _invariant(
        all(u in cover or v in cover for u, v in H.edges.values()),
        "extracted set does not cover the source graph",
    )
    _invariant(len(cover) <= art.k, "extracted cover exceeds the budget")
    return cover


@dataclass(frozen=True)
class ConvenientizeTrace:
    """Intermediate objects of the convenient-ization rewrite.

    ``z_from_sink`` are the z vertices fed by the sink in the input,
    ``z_to_sink`` the rest, ``z_into_gadget`` those feeding their gadget.
    ``circuits`` maps each z of ``z_into_gadget`` to the reversed circuit
    through it; ``eulerian_reversal`` is the arc set of the second
    reversal.
    """

    z_from_sink: frozenset[int]
    z_to_sink: frozenset[int]
    z_into_gadget: frozenset[int]
    path_family: PathSet
    circuits: dict[int, tuple[int, ...]]
    eulerian_reversal: frozenset[int]


def convenientize(
    D: Orientation, art: ReductionArtifact
) -> tuple[Orientation, ConvenientizeTrace]:
    """Rewrite a bounded well-balanced orientation into a convenient one.

    Two eulerian reversals do the work, so the out-degree of every vertex
    and all pairwise directed connectivities are preserved exactly:

    1. Take a maximum family of arc-disjoint sink->hub paths (there are 6n;
       each passes through exactly one z, which it enters first).  For
       every z currently feeding its gadget, close its path into a circuit
       with the hub->z arc and reverse the circuit.  Afterwards every
       gadget-z edge points into z.
    2. Reverse the union of the hub/sink arc pairs of every z whose two
       hub/sink edges still disagree with the forced pattern; the counts
       on both sides match, so the union is eulerian.

    The input must be total, within bounds, and well-balanced; all the
    intermediate guarantees are asserted and raise InternalInvariantError
    if they fail, which would mean a bug, not bad input.
    """
    G = art.wbo_graph()
    if D.base != G:
        raise PreconditionError("orientation is not over the instance graph")
    D.require_total()
    bounds = art.wbo_bounds()
    if not is_ell_bounded(D, bounds):
        raise PreconditionError("orientation exceeds the out-degree bounds")
    if not is_well_balanced(D):
        raise PreconditionError("orientation is not well-balanced")

    n = art.n
    z_edges = art.z_edges
    z_from_sink = frozenset(
        z for z in art.z_all if D.direction[z_edges[z].sink_edge] == (art.sink, z)
    )
    z_to_sink = art.z_all - z_from_sink
    z_into_gadget = frozenset(
        z for z in art.z_all if D.direction[z_edges[z].feed_edge][0] == z
    )
    _invariant(len(z_from_sink) == 6 * n, "sink out-degree split is off")
    _invariant(z_into_gadget <= z_from_sink, "gadget-feeding z not fed by the sink")

    dig = D.as_digraph()
    family = arc_disjoint_paths(dig, art.sink, art.hub)
    _invariant(len(family) == 6 * n, "sink->hub path family has wrong size")
    owner: dict[int, tuple[int, ...]] = {}
    for path in family.paths:
        z = dig.arcs[path[0]][1]
        _invariant(z in z_from_sink and z not in owner, "path family misses a z")
        interior = {dig.arcs[a][1] for a in path[1:]}
        _invariant(not (interior & art.z_all), "path visits a second z")
        owner[z] = path

    circuits: dict[int, tuple[int, ...]] = {}
    for z in sorted(z_into_gadget):
        hub_edge = z_edges[z].hub_edge
        _invariant(D.direction[hub_edge] == (art.hub, z), "hub edge points away from z")
        circuits[z] = owner[z][1:] + (hub_edge,)
    first = set().union(*circuits.values()) if circuits else set()
    _invariant(
        len(first) == sum(len(c) for c in circuits.values()),
        "circuits are not arc-disjoint",
    )
    step1 = apply_eulerian_reversal(D, first)

    second: set[int] = set()
    for z in z_from_sink & art.z_outbound:
        second.update((z_edges[z].sink_edge, z_edges[z].hub_edge))
    for z in z_to_sink & art.z_return:
        second.update((z_edges[z].hub_edge, z_edges[z].sink_edge))
    result = apply_eulerian_reversal(step1, second)

    _invariant(is_convenient(result, art), "rewrite did not reach a convenient orientation")
    _invariant(result.out_degrees() == D.out_degrees(), "out-degree vector changed")
    trace = ConvenientizeTrace(
        z_from_sink=z_from_sink,
        z_to_sink=z_to_sink,
        z_into_gadget=z_into_gadget,
        path_family=family,
        circuits=circuits,
        eulerian_reversal=frozenset(second),
    )
    return result, trace


def lift_orientation(D: Orientation, art: ReductionArtifact) -> Orientation:
    """Extend a convenient, bounded, well-balanced orientation of G to a
    best-balanced orientation of the pendant-extended graph.

    Exactly 8n+k minus the hub's current out-degree pendant edges are
    directed away from the hub (lowest pendant ids first), bringing the
    hub to out-degree 8n+k, half its extended degree.  Well-balancedness
    of the input is validated through its local characterization on
    convenient orientations.
    """
    if art.kind != KIND_BEST:
        raise PreconditionError("lift needs a best-balanced artifact")
    if not is_convenient(D, art):
        raise PreconditionError("orientation is not convenient")
    if not is_ell_bounded(D, art.wbo_bounds()):
        raise PreconditionError("orientation exceeds the out-degree bounds")
    if not check_root_coverage(D, art):
        raise PreconditionError("orientation is not well-balanced")
    n, k = art.n, art.k
    hub_out = D.out_degrees()[art.hub]
    if not 8 * n <= hub_out <= 8 * n + k:
        raise PreconditionError(
            f"hub out-degree {hub_out} outside [{8 * n}, {8 * n + k}]"
        )
    outward = 8 * n + k - hub_out
    direction = dict(D.direction)
    for i, w in enumerate(sorted(art.pendants)):
        eid = art.pendant_edges[w]
        direction[eid] = (art.hub, w) if i < outward else (w, art.hub)
    return Orientation(art.graph, direction)


def restrict_orientation(D: Orientation, art: ReductionArtifact) -> Orientation:
    """Restrict a bounded best-balanced orientation of the pendant-extended
    graph to G; the result is well-balanced and within the G-side bounds."""
    if art.kind != KIND_BEST:
        raise PreconditionError("restrict needs a best-balanced artifact")
    if D.base != art.graph:
        raise PreconditionError("orientation is not over the extended graph")
    D.require_total()
    if not is_ell_bounded(D, art.bounds):
        raise PreconditionError("orientation exceeds the out-degree bounds")
    from .checks import is_best_balanced

    if not is_best_balanced(D):
        raise PreconditionError("orientation is not best-balanced")
    G = art.wbo_graph()
    return Orientation(
        G, {e: th for e, th in D.direction.items() if e in G.edges}
    )


_DECIDE_CHUNK = 1 << 18


def decide_well_balanced(
    inst: CvcInstance, *, max_n: int = 4
) -> tuple[bool, Orientation | None]:
    """Decide by exhaustive scan whether the constructed instance admits a
    bounded well-balanced orientation.

    Every completion of the 6n free edges is examined in ascending bitmask
    order (bit i clear orients the i-th free edge from its lower to its
    higher endpoint); the first convenient orientation passing the root
    coverage conditions within the hub bound is returned as witness.
    Restricting the scan to convenient orientations is lossless: any
    bounded well-balanced orientation can be rewritten into a convenient
    one by ``convenientize``.
    """
    if inst.n > max_n:
        raise PreconditionError(
            f"instance too large for exhaustive decision: n={inst.n} > {max_n}"
        )
    art = build_well_balanced_instance(inst)
    fixed = art.fixed_orientation
    free = fixed.free_edges()
    bit_of = {e: i for i, e in enumerate(free)}
    hub_budget = 8 * art.n + art.k

    # Per vertex gadget: positions of its three free-edge bits plus lookup
    # tables over the 8 local patterns, built by simulating each pattern.
    entries = []
    for hv in sorted(art.vertex_gadgets):
        trip = art.free_triples[hv]
        side_ok = np.zeros(8, dtype=bool)
        fully_out = np.zeros(8, dtype=bool)
        hub_arcs = np.zeros(8, dtype=np.int16)
        for code in range(8):
            local = {
                trip.hub_p0: edge_direction_for_bit(fixed.base, trip.hub_p0, (code >> 2) & 1),
                trip.hub_q0: edge_direction_for_bit(fixed.base, trip.hub_q0, (code >> 1) & 1),
                trip.root: edge_direction_for_bit(fixed.base, trip.root, code & 1),
            }
            full, ok, cnt = _root_side(art, hv, local)
            side_ok[code] = ok
            fully_out[code] = full
            hub_arcs[code] = cnt
        entries.append(
            (hv, bit_of[trip.hub_p0], bit_of[trip.hub_q0], bit_of[trip.root],
             side_ok, fully_out, hub_arcs)
        )

    h_edges = list(art.source.graph.edges.values())
    total = 1 << len(free)
    witness_mask: int | None = None
    for start in range(0, total, _DECIDE_CHUNK):
        stop = min(start + _DECIDE_CHUNK, total)
        masks = np.arange(start, stop, dtype=np.int64)
        ok = np.ones(stop - start, dtype=bool)
        hub_extra = np.zeros(stop - start, dtype=np.int32)
        full_of: dict[int, np.ndarray] = {}
        for hv, pa, pb, pc, side_ok, fully_out, hub_arcs in entries:
            code = ((masks >> pa) & 1) << 2 | ((masks >> pb) & 1) << 1 | ((masks >> pc) & 1)
            ok &= side_ok[code]
            full_of[hv] = fully_out[code]
            hub_extra += hub_arcs[code]
        for u, v in h_edges:
            ok &= full_of[u] | full_of[v]
        ok &= (6 * art.n + hub_extra) <= hub_budget
        hits = np.flatnonzero(ok)
        if hits.size:
            witness_mask = start + int(hits[0])
            break
    if witness_mask is None:
        return False, None

    direction = dict(fixed.direction)
    for e in free:
        direction[e] = edge_direction_for_bit(fixed.base, e, (witness_mask >> bit_of[e]) & 1)
    witness = Orientation(fixed.base, direction)
    _invariant(
        check_root_coverage(witness, art) and is_ell_bounded(witness, art.wbo_bounds()),
        "scan accepted an invalid witness",
    )
    return True, witness
