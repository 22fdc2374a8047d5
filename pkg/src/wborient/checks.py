"""Deciders for well-balanced, best-balanced and degree-bounded orientations.

An orientation is well-balanced when, for every ordered vertex pair, the
directed local connectivity is at least half (floored) of the undirected
local connectivity of the base graph.  Best-balanced additionally pins
every out-degree to the floor or ceiling of half the degree.  Everything
here is exact integer arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .connectivity import (
    _bidirected_net,
    _digraph_net,
    _max_flow,
    all_pairs_reachability,
)
from .core import MixedGraph, Orientation, degree, is_eulerian
from .errors import PreconditionError


@dataclass(frozen=True)
class OutDegreeBounds:
    """Per-vertex cap on out-degrees (the bound function of an instance)."""

    by_vertex: dict[int, int]

    def __post_init__(self) -> None:
        for v, b in self.by_vertex.items():
            if not isinstance(b, int) or isinstance(b, bool) or b < 0:
                raise PreconditionError(f"bound for vertex {v} must be a nonnegative int")

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.by_vertex.items())))

    def require_total(self, G: MixedGraph) -> None:
        missing = G.vertices - set(self.by_vertex)
        if missing:
            raise PreconditionError(f"no bound for vertices {sorted(missing)}")

    @classmethod
    def trivial(cls, G: MixedGraph) -> "OutDegreeBounds":
        """The vacuous bound: every vertex capped at its degree."""
        return cls({v: degree(G, v) for v in G.vertices})


@lru_cache(maxsize=32)
def all_pairs_lambda_undirected(G: MixedGraph) -> dict[tuple[int, int], int]:
    """Undirected local connectivity for every unordered pair, keyed (u, v) with u < v."""
    net = _bidirected_net(G)
    order = sorted(G.vertices)
    out: dict[tuple[int, int], int] = {}
    for i, u in enumerate(order):
        for v in order[i + 1 :]:
            value, _ = _max_flow(net, net.pos_of[u], net.pos_of[v])
            out[(u, v)] = value
    return out


def _capped_lambda_ok(dig: MixedGraph, u: int, v: int, bound: int) -> bool:
    net = _digraph_net(dig)
    value, _ = _max_flow(net, net.pos_of[u], net.pos_of[v], limit=bound)
    return value >= bound


def is_well_balanced(D: Orientation) -> bool:
    """Definitional check over all ordered pairs.

    The undirected side is computed once per unordered pair (it is
    symmetric) and cached per base graph.  Pairs whose requirement is one
    path are settled by reachability; only the few high-connectivity pairs
    need capped flow runs, cheapest first.
    """
    D.require_total()
    lam = all_pairs_lambda_undirected(D.base)
    dig = D.as_digraph()
    reach: dict[int, frozenset[int]] | None = None
    flow_pairs: list[tuple[int, int, int]] = []
    for (u, v), lam_uv in lam.items():
        need = lam_uv // 2
        if need == 0:
            continue
        if reach is None:
            reach = all_pairs_reachability(dig)
        if v not in reach[u] or u not in reach[v]:
            return False
        if need >= 2:
            flow_pairs.append((need, u, v))
    flow_pairs.sort()
    for need, u, v in flow_pairs:
        if not _capped_lambda_ok(dig, u, v, need):
            return False
        if not _capped_lambda_ok(dig, v, u, need):
            return False
    return True


def is_best_balanced(D: Orientation) -> bool:
    """Well-balanced with every out-degree in {floor(d/2), ceil(d/2)}."""
    D.require_total()
    for v, out in D.out_degrees().items():
        d = degree(D.base, v)
        if out != d // 2 and out != (d + 1) // 2:
            return False
    return is_well_balanced(D)


def is_ell_bounded(D: Orientation, bounds: OutDegreeBounds) -> bool:
    """True iff every vertex's out-degree is at most its bound."""
    D.require_total()
    bounds.require_total(D.base)
    by_vertex = bounds.by_vertex
    return all(out <= by_vertex[v] for v, out in D.out_degrees().items())


def hub_certify_well_balanced(D: Orientation, hub: int) -> bool:
    """Certify well-balancedness through a single hub vertex.

    Requires directed connectivity at least floor(degree(s)/2) between the
    hub and every other vertex s, in both directions.  Success implies the
    orientation is well-balanced; when the base graph additionally has
    lambda(s, hub) = degree(s) for all s, this is exact.
    """
    D.require_total()
    D.base.require_vertex(hub)
    dig = D.as_digraph()
    reach = None
    flow_pairs: list[tuple[int, int]] = []
    for s in sorted(D.base.vertices):
        if s == hub:
            continue
        need = degree(D.base, s) // 2
        if need == 0:
            continue
        if reach is None:
            reach = all_pairs_reachability(dig)
        if s not in reach[hub] or hub not in reach[s]:
            return False
        if need >= 2:
            flow_pairs.append((need, s))
    flow_pairs.sort()
    for need, s in flow_pairs:
        if not _capped_lambda_ok(dig, hub, s, need):
            return False
        if not _capped_lambda_ok(dig, s, hub, need):
            return False
    return True


def apply_eulerian_reversal(D: Orientation, S: Iterable[int]) -> Orientation:
    """Reverse the arcs of an eulerian sub-digraph of a total orientation.

    The selected arcs must form a sub-digraph with equal in- and
    out-degree at every vertex; this is validated, not trusted, because
    the degree and connectivity preservation guarantees fail otherwise.
    Out-degrees, in-degrees and all pairwise directed connectivities of
    the result equal those of the input.
    """
    D.require_total()
    ids = frozenset(S)
    missing = ids - set(D.direction)
    if missing:
        raise PreconditionError(f"unknown arc ids {sorted(missing)}")
    balance: Counter[int] = Counter()
    for eid in ids:
        t, h = D.direction[eid]
        balance[t] += 1
        balance[h] -= 1
    if any(b != 0 for b in balance.values()):
        raise PreconditionError("selected arcs do not form an eulerian sub-digraph")
    flipped = {
        eid: ((h, t) if eid in ids else (t, h))
        for eid, (t, h) in D.direction.items()
    }
    return Orientation(D.base, flipped)


def eulerian_arc_set(D: Orientation, S: Iterable[int]) -> bool:
    """True iff the arcs of S form an eulerian sub-digraph of D."""
    ids = frozenset(S)
    sub = MixedGraph(
        D.base.vertices, {}, {eid: D.direction[eid] for eid in ids}
    )
    return is_eulerian(sub)
