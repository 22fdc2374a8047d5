from __future__ import annotations

import itertools
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wborient.core import MixedGraph, Orientation
from wborient.connectivity import reachable_from


def theta_graph() -> MixedGraph:
    """Two vertices joined by three parallel edges: the smallest cubic multigraph."""
    return MixedGraph.build([0, 1], [(0, 1), (0, 1), (0, 1)])


def k4_graph() -> MixedGraph:
    return MixedGraph.build(range(4), list(itertools.combinations(range(4), 2)))


def k33_graph() -> MixedGraph:
    return MixedGraph.build(range(6), [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)])


def prism_graph() -> MixedGraph:
    """Two triangles joined by a perfect matching (cubic, 6 vertices)."""
    return MixedGraph.build(
        range(6),
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )


@pytest.fixture
def theta() -> MixedGraph:
    return theta_graph()


@pytest.fixture
def k4() -> MixedGraph:
    return k4_graph()


@pytest.fixture
def k33() -> MixedGraph:
    return k33_graph()


@pytest.fixture
def prism() -> MixedGraph:
    return prism_graph()


def random_multigraph(rng: random.Random, max_vertices: int = 7, max_edges: int = 12) -> MixedGraph:
    """Random loopless multigraph; parallel edges allowed, not necessarily connected."""
    n = rng.randint(2, max_vertices)
    m = rng.randint(1, max_edges)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n)
        while v == u:
            v = rng.randrange(n)
        edges.append((u, v))
    return MixedGraph.build(range(n), edges)


def random_connected_multigraph(rng: random.Random, n: int, extra: int) -> MixedGraph:
    """Random spanning tree plus `extra` additional edges."""
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    for _ in range(extra):
        u = rng.randrange(n)
        v = rng.randrange(n)
        while v == u:
            v = rng.randrange(n)
        edges.append((u, v))
    return MixedGraph.build(range(n), edges)


def random_digraph(rng: random.Random, max_vertices: int = 8, max_arcs: int = 16) -> MixedGraph:
    """Random loopless digraph; parallel arcs allowed."""
    n = rng.randint(2, max_vertices)
    m = rng.randint(1, max_arcs)
    arcs = []
    for _ in range(m):
        t = rng.randrange(n)
        h = rng.randrange(n)
        while h == t:
            h = rng.randrange(n)
        arcs.append((t, h))
    return MixedGraph.build(range(n), arcs=arcs)


def random_orientation(rng: random.Random, G: MixedGraph) -> Orientation:
    direction = {}
    for eid, (u, v) in G.edges.items():
        direction[eid] = (u, v) if rng.random() < 0.5 else (v, u)
    return Orientation(G, direction)


def random_strongly_connected_orientation(
    rng: random.Random, max_vertices: int = 10
) -> Orientation:
    """Seeded orientation of a random dense-ish multigraph, redrawn until strong."""
    while True:
        n = rng.randint(3, max_vertices)
        G = random_connected_multigraph(rng, n, extra=n + rng.randint(1, n))
        D = random_orientation(rng, G)
        dig = D.as_digraph()
        if all(
            len(reachable_from(dig, v)) == len(G.vertices) for v in G.vertices
        ):
            return D
