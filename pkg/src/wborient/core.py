"""Mixed multigraphs and (partial) orientations.

A mixed graph holds a vertex set plus individually addressable edges
(unordered pairs) and arcs (ordered pairs).  Parallel edges and parallel
arcs are allowed, loops are not.  Edge and arc ids live in one shared id
space, so the two id sets of a graph are always disjoint; builders assign
ids densely in insertion order and every algorithm in this package breaks
ties by ascending id.

Values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import GraphError, PreconditionError


def _check_vertex_id(v: object) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise GraphError(f"vertex id must be a nonnegative integer, got {v!r}")
    return v


@dataclass(frozen=True)
class MixedGraph:
    """Immutable mixed multigraph.

    ``edges`` maps edge id to a canonical ``(lo, hi)`` endpoint pair;
    ``arcs`` maps arc id to ``(tail, head)``.
    """

    vertices: frozenset[int]
    edges: dict[int, tuple[int, int]]
    arcs: dict[int, tuple[int, int]]

    def __post_init__(self) -> None:
        for v in self.vertices:
            _check_vertex_id(v)
        seen: set[int] = set()
        canonical: dict[int, tuple[int, int]] = {}
        for eid, (u, v) in self.edges.items():
            if eid in seen:
                raise GraphError(f"duplicate id {eid}")
            seen.add(eid)
            if u == v:
                raise GraphError(f"edge {eid} is a loop at vertex {u}")
            if u not in self.vertices or v not in self.vertices:
                raise GraphError(f"edge {eid} references unknown vertex")
            canonical[eid] = (u, v) if u < v else (v, u)
        object.__setattr__(self, "edges", canonical)
        for aid, (t, h) in self.arcs.items():
            if aid in seen:
                raise GraphError(f"arc id {aid} collides with another id")
            seen.add(aid)
            if t == h:
                raise GraphError(f"arc {aid} is a loop at vertex {t}")
            if t not in self.vertices or h not in self.vertices:
                raise GraphError(f"arc {aid} references unknown vertex")

    @classmethod
    def build(
        cls,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int]] = (),
        arcs: Iterable[tuple[int, int]] = (),
    ) -> "MixedGraph":
        """Construct with dense ids: edges get 0..m-1, arcs continue after."""
        edge_map: dict[int, tuple[int, int]] = {}
        arc_map: dict[int, tuple[int, int]] = {}
        next_id = 0
        for u, v in edges:
            edge_map[next_id] = (u, v)
            next_id += 1
        for t, h in arcs:
            arc_map[next_id] = (t, h)
            next_id += 1
        return cls(frozenset(vertices), edge_map, arc_map)

    def __hash__(self) -> int:
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(
                (
                    self.vertices,
                    tuple(sorted(self.edges.items())),
                    tuple(sorted(self.arcs.items())),
                )
            )
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def is_graph(self) -> bool:
        """True when arc-free (an undirected graph)."""
        return not self.arcs

    @property
    def is_digraph(self) -> bool:
        """True when edge-free (a digraph)."""
        return not self.edges

    def edge_ids(self) -> list[int]:
        return sorted(self.edges)

    def arc_ids(self) -> list[int]:
        return sorted(self.arcs)

    def require_vertex(self, v: int) -> int:
        if v not in self.vertices:
            raise GraphError(f"unknown vertex id {v}")
        return v

    def require_vertices(self, xs: Iterable[int]) -> frozenset[int]:
        result = frozenset(xs)
        for v in result:
            self.require_vertex(v)
        return result


class GraphBuilder:
    """Single-owner mutable builder; ids are dense in insertion order."""

    def __init__(self) -> None:
        self._vertices: set[int] = set()
        self._edges: dict[int, tuple[int, int]] = {}
        self._arcs: dict[int, tuple[int, int]] = {}
        self._next_vertex = 0
        self._next_id = 0

    def add_vertex(self, vid: int | None = None) -> int:
        if vid is None:
            vid = self._next_vertex
        _check_vertex_id(vid)
        if vid in self._vertices:
            raise GraphError(f"vertex id {vid} already present")
        self._vertices.add(vid)
        self._next_vertex = max(self._next_vertex, vid + 1)
        return vid

    def add_vertices(self, count: int) -> list[int]:
        return [self.add_vertex() for _ in range(count)]

    def add_edge(self, u: int, v: int) -> int:
        eid = self._next_id
        self._next_id += 1
        self._edges[eid] = (u, v)
        return eid

    def add_arc(self, tail: int, head: int) -> int:
        aid = self._next_id
        self._next_id += 1
        self._arcs[aid] = (tail, head)
        return aid

    def build(self) -> MixedGraph:
        return MixedGraph(frozenset(self._vertices), dict(self._edges), dict(self._arcs))


def _as_vertex_set(G: MixedGraph, X: int | Iterable[int]) -> frozenset[int]:
    if isinstance(X, int):
        X = (X,)
    return G.require_vertices(X)


@lru_cache(maxsize=256)
def _edge_incidence(G: MixedGraph) -> dict[int, tuple[int, ...]]:
    """Vertex -> incident edge ids, ascending."""
    inc: dict[int, list[int]] = {v: [] for v in G.vertices}
    for eid in sorted(G.edges):
        u, v = G.edges[eid]
        inc[u].append(eid)
        inc[v].append(eid)
    return {v: tuple(ids) for v, ids in inc.items()}


def degree(G: MixedGraph, v: int) -> int:
    """Number of edge endpoints at v; defined for arc-free graphs."""
    if not G.is_graph:
        raise GraphError("degree is defined for arc-free graphs")
    G.require_vertex(v)
    return len(_edge_incidence(G)[v])


def cut_degree(G: MixedGraph, X: int | Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in X."""
    if not G.is_graph:
        raise GraphError("cut_degree is defined for arc-free graphs")
    xs = _as_vertex_set(G, X)
    return sum(1 for u, v in G.edges.values() if (u in xs) != (v in xs))


def inner_edges(G: MixedGraph, X: int | Iterable[int]) -> int:
    """Number of edges with both endpoints in X."""
    if not G.is_graph:
        raise GraphError("inner_edges is defined for arc-free graphs")
    xs = _as_vertex_set(G, X)
    return sum(1 for u, v in G.edges.values() if u in xs and v in xs)


def out_degree(D: MixedGraph, X: int | Iterable[int]) -> int:
    """Number of arcs leaving X (tail inside, head outside)."""
    xs = _as_vertex_set(D, X)
    return sum(1 for t, h in D.arcs.values() if t in xs and h not in xs)


def in_degree(D: MixedGraph, X: int | Iterable[int]) -> int:
    """Number of arcs entering X; equals out_degree of the complement."""
    xs = _as_vertex_set(D, X)
    return sum(1 for t, h in D.arcs.values() if h in xs and t not in xs)


def reverse_arcs(D: MixedGraph, S: Iterable[int]) -> MixedGraph:
    """Swap tail and head of every arc in S; ids are stable."""
    ids = set(S)
    missing = ids - set(D.arcs)
    if missing:
        raise GraphError(f"unknown arc ids {sorted(missing)}")
    arcs = {
        aid: ((h, t) if aid in ids else (t, h)) for aid, (t, h) in D.arcs.items()
    }
    return MixedGraph(D.vertices, dict(D.edges), arcs)


def induced(F: MixedGraph, X: int | Iterable[int]) -> MixedGraph:
    """Sub-mixed-graph on X: all edges/arcs with both endpoints in X, ids kept."""
    xs = _as_vertex_set(F, X)
    edges = {e: (u, v) for e, (u, v) in F.edges.items() if u in xs and v in xs}
    arcs = {a: (t, h) for a, (t, h) in F.arcs.items() if t in xs and h in xs}
    return MixedGraph(xs, edges, arcs)


def edge_direction_for_bit(G: MixedGraph, eid: int, bit: int) -> tuple[int, int]:
    """Shared bitmask convention: bit 0 orients low -> high endpoint."""
    if eid not in G.edges:
        raise GraphError(f"unknown edge id {eid}")
    lo, hi = G.edges[eid]
    return (lo, hi) if bit == 0 else (hi, lo)


def is_eulerian(D: MixedGraph) -> bool:
    """True iff every vertex has equal arc out-degree and in-degree.

    Connectivity is not required; the empty digraph qualifies.
    """
    balance: Counter[int] = Counter()
    for t, h in D.arcs.values():
        balance[t] += 1
        balance[h] -= 1
    return all(b == 0 for b in balance.values())


@dataclass(frozen=True)
class Orientation:
    """Assignment of a direction to a subset of the edges of an arc-free base.

    ``direction`` maps edge id to ``(tail, head)``.  A total orientation
    assigns every edge; any subset gives a partial orientation.
    """

    base: MixedGraph
    direction: dict[int, tuple[int, int]]

    def __post_init__(self) -> None:
        if not self.base.is_graph:
            raise GraphError("orientations are defined over arc-free graphs")
        for eid, (t, h) in self.direction.items():
            pair = self.base.edges.get(eid)
            if pair is None:
                raise GraphError(f"direction given for unknown edge {eid}")
            if (t, h) != pair and (h, t) != pair:
                raise GraphError(
                    f"direction {t}->{h} does not match endpoints of edge {eid}"
                )

    def __hash__(self) -> int:
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.base, tuple(sorted(self.direction.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def is_total(self) -> bool:
        return len(self.direction) == len(self.base.edges)

    def free_edges(self) -> list[int]:
        """Unoriented edge ids, ascending."""
        return sorted(set(self.base.edges) - set(self.direction))

    def as_digraph(self) -> MixedGraph:
        """Digraph view of the oriented part; arc ids equal edge ids."""
        dig = self.__dict__.get("_digraph")
        if dig is None:
            dig = MixedGraph(self.base.vertices, {}, dict(self.direction))
            object.__setattr__(self, "_digraph", dig)
        return dig

    def require_total(self) -> "Orientation":
        if not self.is_total:
            raise PreconditionError(
                f"total orientation required; {len(self.free_edges())} edges unoriented"
            )
        return self

    def extend(self, more: Mapping[int, tuple[int, int]]) -> "Orientation":
        """New orientation with extra directions; re-orienting is rejected."""
        overlap = set(more) & set(self.direction)
        if overlap:
            raise PreconditionError(f"edges already oriented: {sorted(overlap)}")
        merged = dict(self.direction)
        merged.update(more)
        return Orientation(self.base, merged)

    def induced(self, X: int | Iterable[int]) -> "Orientation":
        """Orientation of the induced subgraph on X."""
        sub = induced(self.base, X)
        return Orientation(
            sub, {e: th for e, th in self.direction.items() if e in sub.edges}
        )

    def out_degrees(self) -> dict[int, int]:
        """Vertex -> out-degree in the oriented part (0 for untouched vertices)."""
        out = {v: 0 for v in self.base.vertices}
        for t, _ in self.direction.values():
            out[t] += 1
        return out

    def in_degrees(self) -> dict[int, int]:
        inn = {v: 0 for v in self.base.vertices}
        for _, h in self.direction.values():
            inn[h] += 1
        return inn
