"""Command line front end.

Exit codes: 0 = YES / all checks passed / success, 1 = NO / a requested
check failed, 2 = input or usage error, 3 = internal invariant failure.
Decision commands reserve 0/1 strictly for the decision.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import formats
from .checks import is_best_balanced, is_ell_bounded, is_well_balanced
from .core import Orientation, degree
from .errors import FormatError, GenerationError, InternalInvariantError
from .oracle import min_vertex_cover, random_cubic_multigraph
from .reduction import (
    KIND_BEST,
    CvcInstance,
    build_best_balanced_instance,
    build_well_balanced_instance,
    convenientize,
    cover_to_orientation,
    decide_well_balanced,
    is_convenient,
    orientation_to_cover,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _load_orientation(path: Path) -> Orientation:
    return formats.orientation_from_obj(formats.read_json(path), base_dir=path.parent)


def cmd_gen(args: argparse.Namespace) -> int:
    graph = random_cubic_multigraph(args.n, args.seed)
    inst = CvcInstance(graph, args.k if args.k is not None else args.n)
    _emit(formats.format_instance_text(inst), args.out)
    return EXIT_YES


def cmd_reduce(args: argparse.Namespace) -> int:
    inst = formats.load_instance(args.instance)
    build = build_best_balanced_instance if args.best_balanced else build_well_balanced_instance
    art = build(inst)
    out = args.out or args.instance.with_suffix(".artifact.json")
    formats.write_json(out, formats.artifact_to_obj(art))
    print(
        f"V={len(art.graph.vertices)} E={len(art.graph.edges)}"
        f" ell(hub)={art.bounds.by_vertex[art.hub]} d(hub)={degree(art.graph, art.hub)}"
    )
    return EXIT_YES


_CHECK_NAMES = ("well-balanced", "best-balanced", "bounded", "convenient")


def cmd_check(args: argparse.Namespace) -> int:
    art = formats.artifact_from_obj(formats.read_json(args.artifact))
    D = _load_orientation(args.orientation)
    on_extended = art.kind == KIND_BEST and D.base == art.graph
    if not on_extended and D.base != art.wbo_graph():
        raise FormatError("orientation graph matches neither the artifact graph nor its core")
    requested = [name for name in _CHECK_NAMES if getattr(args, name.replace("-", "_"))]
    if args.all:
        # best-balanced is only a sensible default on the pendant-extended graph
        requested = [
            name for name in _CHECK_NAMES if name != "best-balanced" or on_extended
        ]
    if not requested:
        raise FormatError("no property requested; use --all or property flags")
    results: dict[str, bool] = {}
    for name in requested:
        if name == "well-balanced":
            results[name] = is_well_balanced(D)
        elif name == "best-balanced":
            results[name] = is_best_balanced(D)
        elif name == "bounded":
            bounds = art.bounds if on_extended else art.wbo_bounds()
            results[name] = is_ell_bounded(D, bounds)
        else:
            core = D if not on_extended else Orientation(
                art.wbo_graph(),
                {e: th for e, th in D.direction.items() if e in art.wbo_graph().edges},
            )
            results[name] = is_convenient(core, art)
    for name in requested:
        print(f"{name}: {'PASS' if results[name] else 'FAIL'}")
    return EXIT_YES if all(results.values()) else EXIT_NO


def cmd_forward(args: argparse.Namespace) -> int:
    art = formats.artifact_from_obj(formats.read_json(args.artifact))
    cover = formats.cover_from_obj(formats.read_json(args.cover))
    D = cover_to_orientation(art, cover)
    _emit(_dump_orientation(D), args.out)
    return EXIT_YES


def cmd_extract(args: argparse.Namespace) -> int:
    art = formats.artifact_from_obj(formats.read_json(args.artifact))
    D = _load_orientation(args.orientation)
    cover = orientation_to_cover(D, art)
    _emit(_dump(formats.cover_to_obj(cover)), args.out)
    return EXIT_YES


def cmd_convenientize(args: argparse.Namespace) -> int:
    art = formats.artifact_from_obj(formats.read_json(args.artifact))
    D = _load_orientation(args.orientation)
    result, trace = convenientize(D, art)
    _emit(_dump_orientation(result), args.out)
    if args.trace is not None:
        formats.write_json(args.trace, formats.trace_to_obj(trace))
    return EXIT_YES


def cmd_decide(args: argparse.Namespace) -> int:
    inst = formats.load_instance(args.instance)
    if args.via == "cover":
        size, _ = min_vertex_cover(inst.graph)
        positive = size <= inst.k
    else:
        positive, _ = decide_well_balanced(inst, max_n=args.max_n)
    print("YES" if positive else "NO")
    return EXIT_YES if positive else EXIT_NO


def cmd_dot(args: argparse.Namespace) -> int:
    art = formats.artifact_from_obj(formats.read_json(args.artifact))
    _emit(formats.artifact_to_dot(art), args.out)
    return EXIT_YES


def _dump(obj: object) -> str:
    import json

    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def _dump_orientation(D: Orientation) -> str:
    return _dump(formats.orientation_to_obj(D))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wborient",
        description="Build, transform and verify bounded balanced-orientation instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random cubic instance (p/e/k text)")
    p.add_argument("n", type=int, help="half the vertex count (2n vertices, 3n edges)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-k", type=int, default=None, help="budget line (default: n)")
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="build the orientation instance from a cubic instance")
    p.add_argument("instance", type=Path)
    p.add_argument("--best-balanced", action="store_true")
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("check", help="check orientation properties against an artifact")
    p.add_argument("orientation", type=Path)
    p.add_argument("artifact", type=Path)
    p.add_argument("--well-balanced", action="store_true")
    p.add_argument("--best-balanced", action="store_true")
    p.add_argument("--bounded", action="store_true")
    p.add_argument("--convenient", action="store_true")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("forward", help="vertex cover -> convenient orientation")
    p.add_argument("artifact", type=Path)
    p.add_argument("cover", type=Path)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_forward)

    p = sub.add_parser("extract", help="convenient orientation -> vertex cover")
    p.add_argument("artifact", type=Path)
    p.add_argument("orientation", type=Path)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("convenientize", help="rewrite a valid orientation into a convenient one")
    p.add_argument("artifact", type=Path)
    p.add_argument("orientation", type=Path)
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--trace", type=Path, default=None)
    p.set_defaults(func=cmd_convenientize)

    p = sub.add_parser("decide", help="decide the instance (exit 0 = YES, 1 = NO)")
    p.add_argument("instance", type=Path)
    p.add_argument("--via", choices=("search", "cover"), default="search")
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("dot", help="DOT drawing of an artifact, edges colored by role")
    p.add_argument("artifact", type=Path)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_dot)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_YES
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InternalInvariantError, GenerationError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())
