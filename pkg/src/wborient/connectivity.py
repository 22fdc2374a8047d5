"""Local edge- and arc-connectivity via unit-capacity maximum flow.

All queries reduce to augmenting-path max flow with shortest-path
(breadth first) augmentation and ascending-id tie breaking, so values and
extracted path systems are deterministic for a fixed input.  Undirected
queries run on the bidirected replacement digraph (each edge becomes two
anti-parallel unit arcs).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .core import MixedGraph
from .errors import GraphError, PreconditionError


@dataclass(frozen=True)
class PathSet:
    """Pairwise arc-disjoint directed source->sink paths, as arc-id tuples."""

    source: int
    sink: int
    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)

    def validate(self, D: MixedGraph) -> None:
        """Check every path is a source->sink walk and no arc repeats anywhere."""
        used: set[int] = set()
        for path in self.paths:
            if not path:
                raise PreconditionError("empty path in path set")
            at = self.source
            for aid in path:
                if aid in used:
                    raise PreconditionError(f"arc {aid} used twice in path set")
                used.add(aid)
                if aid not in D.arcs:
                    raise PreconditionError(f"path uses unknown arc {aid}")
                tail, head = D.arcs[aid]
                if tail != at:
                    raise PreconditionError(f"arc {aid} does not continue the walk")
                at = head
            if at != self.sink:
                raise PreconditionError("path does not end at the sink")

    def to_json_obj(self) -> list[list[int]]:
        return [list(p) for p in self.paths]


@dataclass
class _FlowNet:
    """Position-indexed view of a digraph for flow computations.

    ``key`` maps arc position back to the caller's arc id (or, for
    bidirected nets, the originating edge id).
    """

    vertex_at: list[int]
    pos_of: dict[int, int]
    key: list[int]
    tail: list[int]
    head: list[int]
    out_arcs: list[list[int]]
    in_arcs: list[list[int]]


def _net_from_arcs(vertices: frozenset[int], arcs: list[tuple[int, int, int]]) -> _FlowNet:
    vertex_at = sorted(vertices)
    pos_of = {v: i for i, v in enumerate(vertex_at)}
    key: list[int] = []
    tail: list[int] = []
    head: list[int] = []
    out_arcs: list[list[int]] = [[] for _ in vertex_at]
    in_arcs: list[list[int]] = [[] for _ in vertex_at]
    for k, t, h in arcs:
        p = len(key)
        key.append(k)
        tail.append(pos_of[t])
        head.append(pos_of[h])
        out_arcs[pos_of[t]].append(p)
        in_arcs[pos_of[h]].append(p)
    return _FlowNet(vertex_at, pos_of, key, tail, head, out_arcs, in_arcs)


@lru_cache(maxsize=128)
def _digraph_net(D: MixedGraph) -> _FlowNet:
    arcs = [(aid, *D.arcs[aid]) for aid in sorted(D.arcs)]
    return _net_from_arcs(D.vertices, arcs)


@lru_cache(maxsize=128)
def _bidirected_net(G: MixedGraph) -> _FlowNet:
    arcs: list[tuple[int, int, int]] = []
    for eid in sorted(G.edges):
        u, v = G.edges[eid]
        arcs.append((eid, u, v))
        arcs.append((eid, v, u))
    return _net_from_arcs(G.vertices, arcs)


def _max_flow(net: _FlowNet, s: int, t: int, limit: int | None = None) -> tuple[int, bytearray]:
    """Unit-capacity Edmonds-Karp from position s to position t.

    Stops early once ``limit`` augmenting paths are found.  Returns the
    flow value and a 0/1 byte per arc position.
    """
    n = len(net.vertex_at)
    flow = bytearray(len(net.key))
    value = 0
    tail, head, out_arcs, in_arcs = net.tail, net.head, net.out_arcs, net.in_arcs
    while limit is None or value < limit:
        parent: list[int] = [-1] * n  # arc position that discovered the vertex
        forward: list[bool] = [True] * n
        parent[s] = -2
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if u == t:
                break
            for p in out_arcs[u]:
                w = head[p]
                if not flow[p] and parent[w] == -1:
                    parent[w] = p
                    forward[w] = True
                    queue.append(w)
            for p in in_arcs[u]:
                w = tail[p]
                if flow[p] and parent[w] == -1:
                    parent[w] = p
                    forward[w] = False
                    queue.append(w)
        if parent[t] == -1:
            break
        at = t
        while at != s:
            p = parent[at]
            if forward[at]:
                flow[p] = 1
                at = tail[p]
            else:
                flow[p] = 0
                at = head[p]
        value += 1
    return value, flow


def _require_distinct(D: MixedGraph, u: int, v: int) -> None:
    D.require_vertex(u)
    D.require_vertex(v)
    if u == v:
        raise PreconditionError("local connectivity needs two distinct vertices")


def lambda_undirected(G: MixedGraph, u: int, v: int) -> int:
    """Max number of pairwise edge-disjoint u-v paths (= min u/v cut size)."""
    if not G.is_graph:
        raise GraphError("lambda_undirected is defined for arc-free graphs")
    _require_distinct(G, u, v)
    net = _bidirected_net(G)
    value, _ = _max_flow(net, net.pos_of[u], net.pos_of[v])
    return value


def lambda_directed(D: MixedGraph, u: int, v: int) -> int:
    """Max number of pairwise arc-disjoint directed u->v paths."""
    _require_distinct(D, u, v)
    net = _digraph_net(D)
    value, _ = _max_flow(net, net.pos_of[u], net.pos_of[v])
    return value


def lambda_directed_at_least(D: MixedGraph, u: int, v: int, bound: int) -> bool:
    """True iff lambda_directed(D, u, v) >= bound, stopping flow work early."""
    if bound <= 0:
        return True
    _require_distinct(D, u, v)
    net = _digraph_net(D)
    value, _ = _max_flow(net, net.pos_of[u], net.pos_of[v], limit=bound)
    return value >= bound


def arc_disjoint_paths(D: MixedGraph, u: int, v: int) -> PathSet:
    """Menger witness: a maximum family of arc-disjoint directed u->v paths.

    The flow is decomposed by repeated greedy walks from the source taking
    the lowest-id unused flow arc; any cycle a walk picks up is excised, so
    every returned path is simple.
    """
    _require_distinct(D, u, v)
    net = _digraph_net(D)
    value, flow = _max_flow(net, net.pos_of[u], net.pos_of[v])
    spos, tpos = net.pos_of[u], net.pos_of[v]
    unused: list[list[int]] = [
        [p for p in outs if flow[p]] for outs in net.out_arcs
    ]
    taken = [0] * len(net.vertex_at)  # next unused index per vertex
    paths: list[tuple[int, ...]] = []
    for _ in range(value):
        arcs: list[int] = []
        seen_at: dict[int, int] = {spos: 0}
        at = spos
        while at != tpos:
            p = unused[at][taken[at]]
            taken[at] += 1
            arcs.append(p)
            at = net.head[p]
            if at in seen_at:
                del_from = seen_at[at]
                for q in arcs[del_from:]:
                    seen_at.pop(net.tail[q], None)
                arcs = arcs[:del_from]
            seen_at[at] = len(arcs)
        paths.append(tuple(net.key[p] for p in arcs))
    result = PathSet(u, v, tuple(paths))
    result.validate(D)
    return result


def reachable_from(D: MixedGraph, source: int) -> frozenset[int]:
    """Vertices reachable from source by directed arcs (source included)."""
    D.require_vertex(source)
    net = _digraph_net(D)
    seen = {net.pos_of[source]}
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for p in net.out_arcs[u]:
            w = net.head[p]
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(net.vertex_at[i] for i in seen)


def all_pairs_reachability(D: MixedGraph) -> dict[int, frozenset[int]]:
    """Vertex -> set of vertices reachable from it."""
    return {v: reachable_from(D, v) for v in sorted(D.vertices)}
