"""File formats: JSON interchange, the p/e/k instance text format, DOT.

JSON schemas
------------
graph        {"vertices": [ids], "edges": [[id, u, v]], "arcs": [[id, tail, head]]}
orientation  {"graph": <graph object or path string>, "dir": [[edge, tail, head]]}
bounds       {"bounds": [[vertex, bound]]}
instance     {"vertices": [...], "edges": [[id, u, v]], "k": int}
cover        {"cover": [vertices]}
report       {"total": int, "matching": int, "witness": dir-list or null}

Instance text format (DIMACS-like): a ``p <nv> <ne>`` header with the
vertices implicitly 0..nv-1, one ``e u v`` line per edge (ids assigned in
file order), one ``k <int>`` line, ``c`` comment lines anywhere.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .checks import OutDegreeBounds
from .core import MixedGraph, Orientation
from .errors import FormatError
from .reduction import (
    KIND_BEST,
    KIND_WELL,
    ConvenientizeTrace,
    CvcInstance,
    ReductionArtifact,
    build_best_balanced_instance,
    build_well_balanced_instance,
)


def _int_list(values: Any, what: str) -> list[int]:
    if not isinstance(values, list) or not all(isinstance(x, int) for x in values):
        raise FormatError(f"{what} must be a list of integers")
    return values


def _triples(values: Any, what: str) -> list[tuple[int, int, int]]:
    if not isinstance(values, list):
        raise FormatError(f"{what} must be a list")
    out = []
    for item in values:
        if (
            not isinstance(item, list)
            or len(item) != 3
            or not all(isinstance(x, int) for x in item)
        ):
            raise FormatError(f"{what} entries must be [id, int, int] triples")
        out.append((item[0], item[1], item[2]))
    return out


def graph_to_obj(G: MixedGraph) -> dict[str, Any]:
    return {
        "vertices": sorted(G.vertices),
        "edges": [[e, u, v] for e, (u, v) in sorted(G.edges.items())],
        "arcs": [[a, t, h] for a, (t, h) in sorted(G.arcs.items())],
    }


def graph_from_obj(obj: Any) -> MixedGraph:
    if not isinstance(obj, dict):
        raise FormatError("graph must be a JSON object")
    vertices = _int_list(obj.get("vertices", []), "vertices")
    edges = {e: (u, v) for e, u, v in _triples(obj.get("edges", []), "edges")}
    arcs = {a: (t, h) for a, t, h in _triples(obj.get("arcs", []), "arcs")}
    return MixedGraph(frozenset(vertices), edges, arcs)


def orientation_to_obj(D: Orientation, graph_ref: str | None = None) -> dict[str, Any]:
    """Inline the base graph unless a reference path is given."""
    return {
        "graph": graph_ref if graph_ref is not None else graph_to_obj(D.base),
        "dir": [[e, t, h] for e, (t, h) in sorted(D.direction.items())],
    }


def orientation_from_obj(obj: Any, base_dir: Path | None = None) -> Orientation:
    if not isinstance(obj, dict) or "dir" not in obj:
        raise FormatError("orientation must be an object with 'graph' and 'dir'")
    graph_field = obj.get("graph")
    if isinstance(graph_field, str):
        ref = Path(graph_field)
        if base_dir is not None and not ref.is_absolute():
            ref = base_dir / ref
        base = graph_from_obj(_read_json(ref))
    else:
        base = graph_from_obj(graph_field)
    direction = {e: (t, h) for e, t, h in _triples(obj["dir"], "dir")}
    return Orientation(base, direction)


def bounds_to_obj(bounds: OutDegreeBounds) -> dict[str, Any]:
    return {"bounds": [[v, b] for v, b in sorted(bounds.by_vertex.items())]}


def bounds_from_obj(obj: Any) -> OutDegreeBounds:
    if not isinstance(obj, dict) or "bounds" not in obj:
        raise FormatError("bounds must be an object with a 'bounds' list")
    pairs = obj["bounds"]
    if not isinstance(pairs, list):
        raise FormatError("'bounds' must be a list of [vertex, bound] pairs")
    by_vertex: dict[int, int] = {}
    for item in pairs:
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError("'bounds' must be a list of [vertex, bound] pairs")
        by_vertex[item[0]] = item[1]
    return OutDegreeBounds(by_vertex)


def instance_to_obj(inst: CvcInstance) -> dict[str, Any]:
    return {
        "vertices": sorted(inst.graph.vertices),
        "edges": [[e, u, v] for e, (u, v) in sorted(inst.graph.edges.items())],
        "k": inst.k,
    }


def instance_from_obj(obj: Any) -> CvcInstance:
    if not isinstance(obj, dict) or "k" not in obj:
        raise FormatError("instance must be an object with vertices, edges and k")
    if not isinstance(obj["k"], int):
        raise FormatError("k must be an integer")
    graph = graph_from_obj({"vertices": obj.get("vertices", []), "edges": obj.get("edges", [])})
    return CvcInstance(graph, obj["k"])


def format_instance_text(inst: CvcInstance) -> str:
    """p/e/k text; vertices must be dense 0-based for this format."""
    nv = len(inst.graph.vertices)
    if inst.graph.vertices != frozenset(range(nv)):
        raise FormatError("text format needs vertices numbered 0..nv-1")
    lines = [f"p {nv} {len(inst.graph.edges)}"]
    for e in sorted(inst.graph.edges):
        u, v = inst.graph.edges[e]
        lines.append(f"e {u} {v}")
    lines.append(f"k {inst.k}")
    return "\n".join(lines) + "\n"


def parse_instance_text(text: str) -> CvcInstance:
    nv = ne = None
    k = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        try:
            if fields[0] == "p" and len(fields) == 3:
                if nv is not None:
                    raise FormatError(f"line {lineno}: duplicate p line")
                nv, ne = int(fields[1]), int(fields[2])
            elif fields[0] == "e" and len(fields) == 3:
                edges.append((int(fields[1]), int(fields[2])))
            elif fields[0] == "k" and len(fields) == 2:
                if k is not None:
                    raise FormatError(f"line {lineno}: duplicate k line")
                k = int(fields[1])
            else:
                raise FormatError(f"line {lineno}: unrecognized line {line!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: bad integer in {line!r}") from exc
    if nv is None:
        raise FormatError("missing p line")
    if k is None:
        raise FormatError("missing k line")
    if ne != len(edges):
        raise FormatError(f"p line announces {ne} edges but {len(edges)} e lines follow")
    graph = MixedGraph.build(range(nv), edges)
    return CvcInstance(graph, k)


def load_instance(path: Path) -> CvcInstance:
    """Sniff JSON (leading '{') versus p/e/k text."""
    text = path.read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON: {exc}") from exc
        return instance_from_obj(obj)
    return parse_instance_text(text)


def artifact_to_obj(art: ReductionArtifact) -> dict[str, Any]:
    return {
        "kind": art.kind,
        "meta": {"n": art.n, "k": art.k, "min_n_relaxed": art.n < 2},
        "source": instance_to_obj(art.source),
        "graph": graph_to_obj(art.graph),
        "bounds": bounds_to_obj(art.bounds),
        "hub": art.hub,
        "sink": art.sink,
        "pendants": list(art.pendants),
        "vertex_gadgets": [
            [hv, list(g.members)] for hv, g in sorted(art.vertex_gadgets.items())
        ],
        "edge_gadgets": [
            [he, list(g.members)] for he, g in sorted(art.edge_gadgets.items())
        ],
        "incidence_order": [
            [hv, list(order)] for hv, order in sorted(art.incident_edges.items())
        ],
    }


def artifact_from_obj(obj: Any) -> ReductionArtifact:
    """Rebuild from the embedded source instance, then verify the stored
    graph and bounds match; the construction is deterministic, so any
    mismatch means the file was edited or corrupted."""
    if not isinstance(obj, dict):
        raise FormatError("artifact must be a JSON object")
    kind = obj.get("kind")
    if kind not in (KIND_WELL, KIND_BEST):
        raise FormatError(f"unknown artifact kind {kind!r}")
    inst = instance_from_obj(obj.get("source"))
    art = (
        build_best_balanced_instance(inst)
        if kind == KIND_BEST
        else build_well_balanced_instance(inst)
    )
    if graph_from_obj(obj.get("graph")) != art.graph:
        raise FormatError("stored graph does not match the deterministic construction")
    if bounds_from_obj(obj.get("bounds")) != art.bounds:
        raise FormatError("stored bounds do not match the deterministic construction")
    return art


def report_to_obj(report) -> dict[str, Any]:
    """EnumerationReport as JSON; the witness is its direction list or null."""
    witness = report.first_witness
    return {
        "total": report.total,
        "matching": report.matching,
        "witness": None
        if witness is None
        else [[e, t, h] for e, (t, h) in sorted(witness.direction.items())],
    }


def cover_to_obj(cover: frozenset[int]) -> dict[str, Any]:
    return {"cover": sorted(cover)}


def cover_from_obj(obj: Any) -> frozenset[int]:
    if not isinstance(obj, dict) or "cover" not in obj:
        raise FormatError("cover must be an object with a 'cover' list")
    return frozenset(_int_list(obj["cover"], "cover"))


def trace_to_obj(trace: ConvenientizeTrace) -> dict[str, Any]:
    return {
        "z_from_sink": sorted(trace.z_from_sink),
        "z_to_sink": sorted(trace.z_to_sink),
        "z_into_gadget": sorted(trace.z_into_gadget),
        "path_family": trace.path_family.to_json_obj(),
        "circuits": [[z, list(arcs)] for z, arcs in sorted(trace.circuits.items())],
        "eulerian_reversal": sorted(trace.eulerian_reversal),
    }


_EDGE_ROLE_COLORS = {"vertex-gadget": "red", "edge-gadget": "blue", "linking": "green"}


def artifact_to_dot(art: ReductionArtifact) -> str:
    """Undirected DOT drawing with edges colored by gadget role."""
    labels: dict[int, str] = {art.hub: "hub", art.sink: "sink"}
    for hv, g in art.vertex_gadgets.items():
        for name, vid in zip(("p0", "p1", "p2", "q0", "q1", "q2"), g.members):
            labels[vid] = f"{name}({hv})"
    for he, g in art.edge_gadgets.items():
        for name, vid in zip(("x", "y", "z1", "z2", "z3", "z4"), g.members):
            labels[vid] = f"{name}({he})"
    for w in art.pendants:
        labels[w] = f"w{w}"
    vertex_gadget_edges: set[int] = set()
    for hv, g in art.vertex_gadgets.items():
        for u, v in (
            (g.p0, g.p1), (g.p1, g.p2), (g.q0, g.q1), (g.q1, g.q2), (g.p0, g.q0),
        ):
            vertex_gadget_edges.add(art.edge_between(u, v))
    edge_gadget_edges: set[int] = set()
    for he, g in art.edge_gadgets.items():
        for u, v in (
            (g.x, g.y), (g.x, g.z1), (g.y, g.z2), (g.y, g.z3), (g.y, g.z4),
        ):
            edge_gadget_edges.add(art.edge_between(u, v))
    lines = ["graph reduction {"]
    for vid in sorted(art.graph.vertices):
        lines.append(f'  {vid} [label="{labels[vid]}"];')
    for eid in sorted(art.graph.edges):
        u, v = art.graph.edges[eid]
        if eid in vertex_gadget_edges:
            role = "vertex-gadget"
        elif eid in edge_gadget_edges:
            role = "edge-gadget"
        else:
            role = "linking"
        lines.append(f"  {u} -- {v} [color={_EDGE_ROLE_COLORS[role]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _read_json(path: Path) -> Any:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}") from exc


def read_json(path: Path) -> Any:
    return _read_json(path)


def write_json(path: Path, obj: Any) -> None:
    path.write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n", encoding="utf-8")
