"""Independent brute-force references and seeded test-instance generators.

Everything here trades speed for being obviously correct: exact vertex
cover by branch and bound, orientation enumeration by bitmask, witness
search for the guaranteed best-balanced orientation, plus deterministic
random generators for cubic multigraphs and circuit reversals.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

from .checks import is_well_balanced
from .core import MixedGraph, Orientation, degree, edge_direction_for_bit
from .errors import GenerationError, GraphError, PreconditionError

ENUMERATION_GUARD = 24


@dataclass(frozen=True)
class EnumerationReport:
    """Outcome of an exhaustive orientation scan."""

    total: int
    matching: int
    first_witness: Orientation | None


def min_vertex_cover(
    H: MixedGraph, *, max_vertices: int = 24
) -> tuple[int, frozenset[int]]:
    """Exact minimum vertex cover by branch and bound on uncovered edges.

    Branches on the lowest-id uncovered edge, trying its lower endpoint
    first, so the witness is deterministic.
    """
    if not H.is_graph:
        raise GraphError("vertex cover is defined for arc-free graphs")
    if len(H.vertices) > max_vertices:
        raise PreconditionError(
            f"instance too large for exact cover: {len(H.vertices)} > {max_vertices}"
        )
    edges = [H.edges[e] for e in sorted(H.edges)]
    best_size = len(H.vertices)
    best: frozenset[int] = frozenset(H.vertices)

    def search(index: int, chosen: set[int]) -> None:
        nonlocal best_size, best
        if len(chosen) >= best_size:
            return
        while index < len(edges):
            u, v = edges[index]
            if u not in chosen and v not in chosen:
                break
            index += 1
        else:
            best_size = len(chosen)
            best = frozenset(chosen)
            return
        u, v = edges[index]
        for pick in sorted((u, v)):
            chosen.add(pick)
            search(index + 1, chosen)
            chosen.remove(pick)

    search(0, set())
    return best_size, best


def orientation_from_mask(
    base: MixedGraph,
    free: Sequence[int],
    mask: int,
    fixed: dict[int, tuple[int, int]] | None = None,
) -> Orientation:
    """Complete an orientation from a bitmask over the given free edges."""
    direction = dict(fixed) if fixed else {}
    for i, eid in enumerate(free):
        direction[eid] = edge_direction_for_bit(base, eid, (mask >> i) & 1)
    return Orientation(base, direction)


def enumerate_orientations(
    graph: MixedGraph,
    predicate: Callable[[Orientation], bool],
    partial: Orientation | None = None,
    *,
    max_free_edges: int = ENUMERATION_GUARD,
) -> EnumerationReport:
    """Apply a predicate to every completion of the free edges.

    With no partial orientation every edge is free.  Masks are scanned in
    ascending order and the lowest matching completion is kept as witness.
    """
    if partial is None:
        partial = Orientation(graph, {})
    elif partial.base != graph:
        raise PreconditionError("partial orientation is not over the given graph")
    free = partial.free_edges()
    if len(free) > max_free_edges:
        raise PreconditionError(
            f"too many free edges to enumerate: {len(free)} > {max_free_edges}"
        )
    total = 1 << len(free)
    matching = 0
    first_witness: Orientation | None = None
    for mask in range(total):
        candidate = orientation_from_mask(graph, free, mask, partial.direction)
        if predicate(candidate):
            matching += 1
            if first_witness is None:
                first_witness = candidate
    return EnumerationReport(total, matching, first_witness)


def nash_williams_witness(
    G: MixedGraph, *, max_edges: int = ENUMERATION_GUARD
) -> Orientation | None:
    """Lowest-bitmask best-balanced orientation; one always exists.

    Returning None for a graph within the guard would mean a checker bug,
    since every graph has a best-balanced orientation.
    """
    if not G.is_graph:
        raise GraphError("witness search is defined for arc-free graphs")
    if len(G.edges) > max_edges:
        raise PreconditionError(
            f"too many edges to enumerate: {len(G.edges)} > {max_edges}"
        )
    free = G.edge_ids()
    halves = {v: degree(G, v) // 2 for v in G.vertices}
    for mask in range(1 << len(free)):
        candidate = orientation_from_mask(G, free, mask)
        outs = candidate.out_degrees()
        if any(outs[v] != halves[v] and outs[v] != halves[v] + (degree(G, v) & 1)
               for v in G.vertices):
            continue
        if is_well_balanced(candidate):
            return candidate
    return None


def random_cubic_multigraph(n: int, seed: int) -> MixedGraph:
    """Connected cubic multigraph on 2n vertices as a union of three
    perfect matchings; deterministic per (n, seed).

    Matchings cannot create loops; disconnected unions are rejected and
    redrawn.  For n=1 this always yields the theta graph (two vertices
    joined by three parallel edges).
    """
    if n < 1:
        raise PreconditionError("n must be at least 1")
    rng = random.Random(f"cubic/{n}/{seed}")
    vertices = list(range(2 * n))
    for _ in range(200):
        edges: list[tuple[int, int]] = []
        for _ in range(3):
            shuffled = vertices[:]
            rng.shuffle(shuffled)
            pairs = [(shuffled[2 * i], shuffled[2 * i + 1]) for i in range(n)]
            pairs.sort(key=lambda p: (min(p), max(p)))
            edges.extend(pairs)
        G = MixedGraph.build(vertices, edges)
        if _connected(G):
            return G
    raise GenerationError(f"no connected cubic multigraph after 200 draws (n={n}, seed={seed})")


def _connected(G: MixedGraph) -> bool:
    if not G.vertices:
        return True
    adjacency: dict[int, set[int]] = {v: set() for v in G.vertices}
    for u, v in G.edges.values():
        adjacency[u].add(v)
        adjacency[v].add(u)
    start = next(iter(G.vertices))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(G.vertices)


def _strong_components(D: MixedGraph) -> dict[int, int]:
    """Vertex -> strongly connected component index (Kosaraju, iterative)."""
    order_out: dict[int, list[int]] = {v: [] for v in D.vertices}
    order_in: dict[int, list[int]] = {v: [] for v in D.vertices}
    for aid in sorted(D.arcs):
        t, h = D.arcs[aid]
        order_out[t].append(h)
        order_in[h].append(t)
    finished: list[int] = []
    seen: set[int] = set()
    for root in sorted(D.vertices):
        if root in seen:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        seen.add(root)
        while stack:
            v, i = stack.pop()
            if i < len(order_out[v]):
                stack.append((v, i + 1))
                w = order_out[v][i]
                if w not in seen:
                    seen.add(w)
                    stack.append((w, 0))
            else:
                finished.append(v)
    component: dict[int, int] = {}
    index = 0
    for root in reversed(finished):
        if root in component:
            continue
        component[root] = index
        stack2 = [root]
        while stack2:
            v = stack2.pop()
            for w in order_in[v]:
                if w not in component:
                    component[w] = index
                    stack2.append(w)
        index += 1
    return component


def random_circuit(D: Orientation, rng: random.Random) -> frozenset[int]:
    """Arc ids of one directed circuit of D, found by a seeded random walk.

    Walks only along arcs inside a strongly connected component, so the
    walk always closes a cycle within |V| steps.
    """
    D.require_total()
    component = _strong_components(D.as_digraph())
    cyclic = sorted(
        e for e, (t, h) in D.direction.items() if component[t] == component[h]
    )
    if not cyclic:
        raise PreconditionError("orientation has no directed circuit")
    out_by_vertex: dict[int, list[int]] = {}
    for e in cyclic:
        out_by_vertex.setdefault(D.direction[e][0], []).append(e)
    start = rng.choice(cyclic)
    walk = [start]
    first_index = {D.direction[start][0]: 0}
    at = D.direction[start][1]
    while at not in first_index:
        first_index[at] = len(walk)
        step = rng.choice(out_by_vertex[at])
        walk.append(step)
        at = D.direction[step][1]
    return frozenset(walk[first_index[at]:])


def perturb_by_eulerian(D: Orientation, seed: int) -> Orientation:
    """Reverse one pseudo-randomly chosen directed circuit of D.

    Deterministic per (D, seed); preserves out-degrees, in-degrees, all
    pairwise directed connectivities, and hence well-balancedness and any
    out-degree bounds.
    """
    from .checks import apply_eulerian_reversal

    rng = random.Random(f"perturb/{seed}")
    circuit = random_circuit(D, rng)
    return apply_eulerian_reversal(D, circuit)
