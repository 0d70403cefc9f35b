"""Command-line surface.

Exit codes: 0 ok, 2 parse failure, 3 unknown vertex, 4 an arrow has three or
more shortest return paths, 5 input is not of finite cluster type and
--force was not given.  CQT_BUDGET overrides the default search budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import effective_budget
from .mutation_class import (
    enumerate_class,
    is_double_path_avoiding,
    is_finite_cluster_type,
)
from .path_algebra import algebra_report, build_rewrite_system
from .quiver import Quiver, QuiverFormatError, UnknownVertexError, mutate
from .relations import ThreeOrMoreShortestPaths, synthesize_relations

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BAD_VERTEX = 3
EXIT_TOO_MANY_PATHS = 4
EXIT_INFINITE_TYPE = 5


class _InfiniteType(Exception):
    pass


def _load_quiver(path: str) -> Quiver:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return Quiver.from_json(fh.read())
    except OSError as exc:
        raise QuiverFormatError(f"cannot read {path}: {exc}") from exc


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_quiver(args, q: Quiver) -> None:
    if args.format == "json":
        _emit(args, q.to_json(indent=2) + "\n")
    elif args.format == "dot":
        _emit(args, q.to_dot())
    else:
        _emit(args, q.to_text())


def _emit_json(args, data: dict) -> None:
    _emit(args, json.dumps(data, indent=2) + "\n")


def _cmd_mutate(args) -> int:
    q = _load_quiver(args.quiver)
    for k in args.at:
        q = mutate(q, k)
    _emit_quiver(args, q)
    return EXIT_OK


def _render_verdict(verdict) -> str:
    if verdict.kind == "finite":
        return f"finite {verdict.dynkin}\n"
    if verdict.kind == "infinite":
        lines = ["infinite" + (f" ({verdict.reason})" if verdict.reason else "")]
        if verdict.witness is not None:
            lines.append("witness trace: " + "; ".join(verdict.witness.trace_strings()))
        return "\n".join(lines) + "\n"
    return "budget-exceeded\n"


def _cmd_relations(args) -> int:
    q = _load_quiver(args.quiver)
    budget = effective_budget(args.budget)
    if not args.force:
        verdict = is_finite_cluster_type(q, budget)
        if not verdict.is_finite:
            raise _InfiniteType(
                f"not finite cluster type (verdict: {verdict.kind}); use --force to synthesize anyway"
            )
    try:
        rels = synthesize_relations(q)
    except ValueError as exc:
        raise QuiverFormatError(str(exc)) from exc
    report = None
    if args.algebra:
        report = algebra_report(build_rewrite_system(q, rels))
    if args.format == "json":
        if report is None:
            _emit_json(args, rels.to_json_dict())
        else:
            _emit_json(args, {"relations": rels.to_json_dict(), "report": report})
    else:
        text = rels.render()
        if report is not None:
            text += (
                f"dimension: {report['dimension']}\n"
                + "projective lengths: "
                + " ".join(f"{v}:{d}" for v, d in report["projective_lengths"].items())
                + "\n"
            )
        _emit(args, text)
    return EXIT_OK


def _cmd_typecheck(args) -> int:
    q = _load_quiver(args.quiver)
    verdict = is_finite_cluster_type(q, effective_budget(args.budget))
    if args.format == "json":
        _emit_json(args, verdict.to_json_dict())
    else:
        _emit(args, _render_verdict(verdict))
    return EXIT_OK


def _cmd_class(args) -> int:
    q = _load_quiver(args.quiver)
    cls = enumerate_class(q, effective_budget(args.budget), jobs=args.jobs)
    if args.format == "json":
        _emit_json(args, cls.to_json_dict())
    else:
        state = "complete" if cls.complete else "budget-exceeded"
        _emit(args, f"{len(cls)} members ({state})\n")
    return EXIT_OK


def _cmd_dpa(args) -> int:
    q = _load_quiver(args.quiver)
    verdict = is_double_path_avoiding(q, effective_budget(args.budget))
    if args.format == "json":
        _emit_json(args, verdict.to_json_dict())
    else:
        if verdict.kind == "false" and verdict.witness is not None:
            trace = "; ".join(verdict.witness.trace_strings()) or "(seed)"
            _emit(args, f"false\nwitness trace: {trace}\n")
        else:
            _emit(args, verdict.kind + "\n")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cqt",
        description="Quiver mutation and finite-type cluster-tilted algebra toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("json", "text")) -> None:
        p.add_argument("quiver", help="path to a quiver JSON file")
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--output", help="write to a file instead of stdout")

    p = sub.add_parser("mutate", help="apply a mutation sequence")
    add_common(p, formats=("json", "dot", "text"))
    p.add_argument(
        "--at",
        action="append",
        required=True,
        metavar="VERTEX",
        help="vertex to mutate at; repeat to apply a sequence left to right",
    )
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("relations", help="synthesize the defining relations")
    add_common(p)
    p.add_argument("--algebra", action="store_true", help="include the algebra report")
    p.add_argument("--force", action="store_true", help="skip the finite-type gate")
    p.add_argument("--budget", type=int, help="finite-type search budget")
    p.set_defaults(func=_cmd_relations)

    p = sub.add_parser("typecheck", help="decide finite cluster type")
    add_common(p)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_typecheck)

    p = sub.add_parser("class", help="enumerate the mutation class")
    add_common(p)
    p.add_argument("--budget", type=int)
    p.add_argument("--jobs", type=int, default=1, help="parallel frontier expansion")
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("dpa", help="check double-path-avoidance")
    add_common(p)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_dpa)

    p = sub.add_parser("serve", help="run the JSON service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8649)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QuiverFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnknownVertexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_VERTEX
    except ThreeOrMoreShortestPaths as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_MANY_PATHS
    except _InfiniteType as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFINITE_TYPE


if __name__ == "__main__":
    sys.exit(main())
