"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines and timings.
"""

from __future__ import annotations

import itertools
import random
import time
from contextlib import contextmanager

from wborient.checks import (
    is_best_balanced,
    is_ell_bounded,
    is_well_balanced,
)
from wborient.connectivity import arc_disjoint_paths, lambda_directed, lambda_undirected
from wborient.core import MixedGraph, degree
from wborient.oracle import (
    min_vertex_cover,
    nash_williams_witness,
    orientation_from_mask,
    perturb_by_eulerian,
    random_circuit,
    random_cubic_multigraph,
)
from wborient.reduction import (
    CvcInstance,
    build_best_balanced_instance,
    build_fixed_orientation,
    build_well_balanced_instance,
    check_root_coverage,
    convenientize,
    cover_to_orientation,
    decide_well_balanced,
    is_convenient,
    lift_orientation,
    orientation_to_cover,
    restrict_orientation,
)
from wborient.checks import apply_eulerian_reversal

from bruteforce import max_disjoint_paths_bruteforce
from conftest import (
    k33_graph,
    k4_graph,
    prism_graph,
    random_strongly_connected_orientation,
    theta_graph,
)


@contextmanager
def criterion(num: int, name: str, budget: float):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget, f"criterion {num} took {elapsed:.1f}s, budget {budget:.0f}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        status = "PASS" if ok else "FAIL"
        print(f"[acceptance] criterion {num:>2} ({name}): {status} ({elapsed:.2f}s / {budget:.0f}s)")


def test_c01_construction_fidelity():
    with criterion(1, "construction fidelity", 1.0):
        for n in (1, 2, 3, 4):
            H = random_cubic_multigraph(n, seed=100 + n)
            art = build_well_balanced_instance(CvcInstance(H, n))
            G = art.graph
            assert len(G.vertices) == 30 * n + 2
            assert len(G.edges) == 65 * n
            assert degree(G, art.hub) == 16 * n
            assert degree(G, art.sink) == 12 * n
            for v in art.chain_vertices | art.z_all:
                assert degree(G, v) == 3
            for g in art.edge_gadgets.values():
                assert degree(G, g.x) == 4
                assert degree(G, g.y) == 6


def test_c02_hub_connectivity_saturates_degrees():
    with criterion(2, "lambda(s, hub) = degree(s)", 10.0):
        for n in (1, 2, 3):
            H = random_cubic_multigraph(n, seed=200 + n)
            art = build_well_balanced_instance(CvcInstance(H, n))
            G = art.graph
            for s in sorted(G.vertices):
                if s != art.hub:
                    assert lambda_undirected(G, s, art.hub) == degree(G, s)


def test_c03_cover_orientations_fully_valid():
    with criterion(3, "forward map validity", 30.0):
        for H in (theta_graph(), k4_graph(), k33_graph()):
            size, cover = min_vertex_cover(H)
            art = build_well_balanced_instance(CvcInstance(H, size))
            D = cover_to_orientation(art, cover)
            assert is_convenient(D, art)
            assert is_ell_bounded(D, art.bounds)
            assert is_well_balanced(D)


def test_c04_root_coverage_equals_well_balanced():
    with criterion(4, "local characterization equivalence", 120.0):
        art1 = build_well_balanced_instance(CvcInstance(theta_graph(), 1))
        fixed1 = build_fixed_orientation(art1)
        free1 = fixed1.free_edges()
        for mask in range(1 << 6):
            D = orientation_from_mask(art1.graph, free1, mask, fixed1.direction)
            assert check_root_coverage(D, art1) == is_well_balanced(D)

        art2 = build_well_balanced_instance(CvcInstance(k4_graph(), 2))
        fixed2 = build_fixed_orientation(art2)
        free2 = fixed2.free_edges()
        rng = random.Random(40404)
        for mask in rng.sample(range(1 << 12), 1000):
            D = orientation_from_mask(art2.graph, free2, mask, fixed2.direction)
            assert check_root_coverage(D, art2) == is_well_balanced(D)


def test_c05_convenientize_on_perturbed_inputs():
    with criterion(5, "convenient-ization", 120.0):
        for H in (theta_graph(), k4_graph()):
            size, cover = min_vertex_cover(H)
            art = build_well_balanced_instance(CvcInstance(H, size))
            base = cover_to_orientation(art, cover)
            rng = random.Random(50505)
            for _ in range(50):
                D = base
                for _ in range(rng.randint(1, 3)):
                    D = perturb_by_eulerian(D, rng.randrange(1 << 30))
                result, _ = convenientize(D, art)
                assert is_convenient(result, art)
                assert is_ell_bounded(result, art.bounds)
                assert is_well_balanced(result)
                assert result.out_degrees() == D.out_degrees()


def _all_covers(H: MixedGraph) -> list[frozenset[int]]:
    vertices = sorted(H.vertices)
    edges = list(H.edges.values())
    covers = []
    for r in range(len(vertices) + 1):
        for subset in itertools.combinations(vertices, r):
            chosen = frozenset(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                covers.append(chosen)
    return covers


def test_c06_cover_round_trip():
    with criterion(6, "cover round trip", 60.0):
        for H in (theta_graph(), k4_graph(), k33_graph()):
            artifacts: dict[int, object] = {}
            for cover in _all_covers(H):
                k = len(cover)
                art = artifacts.get(k)
                if art is None:
                    art = artifacts[k] = build_well_balanced_instance(CvcInstance(H, k))
                D = cover_to_orientation(art, cover)
                assert orientation_to_cover(D, art) == cover


def test_c07_decision_equivalence():
    with criterion(7, "decision equivalence", 300.0):
        for H in (theta_graph(), k4_graph(), k33_graph(), prism_graph()):
            cover_size, _ = min_vertex_cover(H)
            for k in range(len(H.vertices) + 1):
                positive, witness = decide_well_balanced(CvcInstance(H, k))
                assert positive == (cover_size <= k)
                if positive:
                    art = build_well_balanced_instance(CvcInstance(H, k))
                    assert check_root_coverage(witness, art)
                    assert is_ell_bounded(witness, art.bounds)


def test_c08_best_balanced_lift_and_restrict():
    with criterion(8, "best-balanced lift/restrict", 120.0):
        cases = [
            (theta_graph(), 1, {0}),
            (theta_graph(), 2, {0}),
            (k4_graph(), 3, min_vertex_cover(k4_graph())[1]),
            (k4_graph(), 4, min_vertex_cover(k4_graph())[1]),
            (k33_graph(), 3, min_vertex_cover(k33_graph())[1]),
        ]
        for H, k, cover in cases:
            art = build_best_balanced_instance(CvcInstance(H, k))
            n = art.n
            D = cover_to_orientation(art, cover)
            lifted = lift_orientation(D, art)
            assert lifted.out_degrees()[art.hub] == 8 * n + k
            assert is_best_balanced(lifted)
            assert is_ell_bounded(lifted, art.bounds)
            restricted = restrict_orientation(lifted, art)
            assert restricted == D
            assert is_well_balanced(restricted)
            assert is_ell_bounded(restricted, art.wbo_bounds())


def test_c09_eulerian_reversal_preserves_everything():
    with criterion(9, "eulerian reversal invariance", 180.0):
        rng = random.Random(90909)
        for trial in range(100):
            D = random_strongly_connected_orientation(rng, max_vertices=10)
            arcs = random_circuit(D, rng)
            second = random_circuit(D, rng)
            if not arcs & second:
                arcs = arcs | second
            R = apply_eulerian_reversal(D, arcs)
            assert R.out_degrees() == D.out_degrees()
            dig_before, dig_after = D.as_digraph(), R.as_digraph()
            vs = sorted(D.base.vertices)
            for u in vs:
                for v in vs:
                    if u != v:
                        assert lambda_directed(dig_after, u, v) == lambda_directed(
                            dig_before, u, v
                        )


def test_c10_menger_oracle_agreement():
    with criterion(10, "Menger oracle agreement", 180.0):
        rng = random.Random(101010)
        for trial in range(200):
            n = rng.randint(2, 8)
            m = rng.randint(1, 16)
            arcs = []
            for _ in range(m):
                t = rng.randrange(n)
                h = rng.randrange(n)
                while h == t:
                    h = rng.randrange(n)
                arcs.append((t, h))
            D = MixedGraph.build(range(n), arcs=arcs)
            u, v = rng.sample(range(n), 2)
            flow_value = lambda_directed(D, u, v)
            assert flow_value == max_disjoint_paths_bruteforce(D, u, v)
            assert len(arc_disjoint_paths(D, u, v)) == flow_value


def _connected_graph_catalog() -> list[MixedGraph]:
    """All connected labeled simple graphs on 5 vertices with <= 8 edges,
    plus a few small multigraphs for the parallel-edge cases."""
    pairs = list(itertools.combinations(range(5), 2))
    catalog: list[MixedGraph] = []
    for mask in range(1 << len(pairs)):
        if bin(mask).count("1") > 8:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        reach = {0}
        grow = True
        while grow:
            grow = False
            for u, v in edges:
                if (u in reach) != (v in reach):
                    reach |= {u, v}
                    grow = True
        if len(reach) == 5:
            catalog.append(MixedGraph.build(range(5), edges))
    catalog.append(theta_graph())
    catalog.append(MixedGraph.build(range(2), [(0, 1)] * 2))
    catalog.append(MixedGraph.build(range(3), [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2)]))
    catalog.append(MixedGraph.build(range(4), [(0, 1), (1, 2), (2, 3), (3, 0), (0, 1), (2, 3)]))
    return catalog


def test_c11_best_balanced_witness_always_exists():
    with criterion(11, "guaranteed witness search", 300.0):
        catalog = _connected_graph_catalog()
        assert len(catalog) >= 500
        for G in catalog:
            assert nash_williams_witness(G) is not None
