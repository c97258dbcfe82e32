"""Command-line entry point: ``wienerorient <subcommand> ...``.

Exit status is 0 whenever a result was computed (including "no" answers) and
2 for malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass

from .constructions import (
    INTEGRAL_FORMS,
    ClosedForm,
    Stage,
    build_dk_stage,
    closed_form,
    closed_form_int,
    find_center_vertex,
    is_zigzag,
)
from .graph import (
    GraphError,
    MixedGraph,
    apply_orientation,
    parse_mixed_graph,
    serialize_mixed_graph,
    wiener_directed,
    wiener_max,
    wiener_undirected,
)
from .reduction import build_gadget, hampath_bruteforce, verify_forward_reduction
from .solver import Strategy, orient_local_search, orient_max_exact, orient_min_exact, tournament_max
from .transitive import find_transitive_orientation, is_transitive


@dataclass(frozen=True)
class InvocationResult:
    exit_code: int
    stdout: str
    stderr: str


class UsageError(Exception):
    pass


def _read_graph(path: str) -> MixedGraph:
    if path == "-":
        return parse_mixed_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_mixed_graph(fh.read())


def _graph_payload(g: MixedGraph, labels) -> dict:
    return {
        "n": g.n,
        "undirected_edges": [list(e) for e in g.undirected_edges],
        "arcs": [list(e) for e in g.arcs],
        "labels": {name: index for index, name in labels},
    }


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def cmd_wiener(args):
    g = _read_graph(args.graph)
    fn = {"undirected": wiener_undirected, "directed": wiener_directed, "max": wiener_max}[args.mode]
    value = fn(g)
    _emit(args, {"mode": args.mode, "value": value}, str(value))


def _report_text(report) -> str:
    d = report.to_dict()
    lines = [
        f"objective: {d['objective']}",
        f"strategy: {d['strategy']}",
        f"value: {d['value']}",
        f"explored: {d['explored']}",
        f"pruned: {d['pruned']}",
    ]
    lines += [f"witness: {' '.join(w)}" for w in d["witnesses"]]
    return "\n".join(lines)


def cmd_orient(args):
    g = _read_graph(args.graph)
    strategy = Strategy(args.strategy)
    if args.objective == "max":
        if strategy is Strategy.LOCAL:
            report = orient_local_search(g, restarts=args.restarts, seed=args.seed)
        else:
            report = orient_max_exact(g, strategy, all_optima=args.all_optima, workers=args.workers)
    else:
        if strategy is not Strategy.EXHAUSTIVE:
            raise UsageError("orient min supports only --strategy exhaustive")
        report = orient_min_exact(g, strategy, workers=args.workers)
    _emit(args, report.to_dict(), _report_text(report))


def cmd_gen(args):
    inst = build_dk_stage(args.k, Stage(args.stage))
    labels = inst.labels()
    _emit(args, _graph_payload(inst.graph, labels), serialize_mixed_graph(inst.graph, labels))


def cmd_closedform(args):
    try:
        form = ClosedForm(args.id)
    except ValueError:
        raise UsageError(f"unknown closed form {args.id!r}") from None
    value = closed_form_int(form, args.k) if form in INTEGRAL_FORMS else closed_form(form, args.k)
    text = str(value)
    payload = {"id": form.value, "k": args.k, "value": text}
    _emit(args, payload, text)


def cmd_zigzag(args):
    g = _read_graph(args.graph)
    z = is_zigzag(g, args.method)
    _emit(args, {"method": args.method, "zigzag": z}, "yes" if z else "no")


def cmd_center(args):
    g = _read_graph(args.graph)
    c = find_center_vertex(g)
    _emit(args, {"center": c}, "none" if c is None else str(c))


def _vertex(g: MixedGraph, v: int) -> int:
    if not 0 <= v < g.n:
        raise UsageError(f"vertex {v} outside 0..{g.n - 1}")
    return v


def cmd_gadget(args):
    g = _read_graph(args.graph)
    gi = build_gadget(g, _vertex(g, args.a), _vertex(g, args.b))
    labels = gi.labels()
    _emit(args, _graph_payload(gi.graph, labels), serialize_mixed_graph(gi.graph, labels))


def cmd_hampath(args):
    g = _read_graph(args.graph)
    path = hampath_bruteforce(g, _vertex(g, args.a), _vertex(g, args.b))
    text = "none" if path is None else " ".join(map(str, path))
    _emit(args, {"path": None if path is None else list(path)}, text)


def cmd_reduction_verify(args):
    g = _read_graph(args.graph)
    report = verify_forward_reduction(g, _vertex(g, args.a), _vertex(g, args.b))
    lines = [f"status: {report['status']}", f"M: {report['M']}"]
    if report["status"] == "vacuous":
        lines.append("forward direction vacuous: no Hamiltonian path")
    else:
        lines.append(f"path: {' '.join(map(str, report['path']))}")
        lines.append(f"W: {report['W']}")
        lines.append(f"W_AB: {report['W_AB']}")
        lines += [f"{name}: {'pass' if ok else 'fail'}" for name, ok in report["checks"].items()]
    _emit(args, report, "\n".join(lines))


def cmd_transitive(args):
    g = _read_graph(args.graph)
    if g.is_digraph and g.arcs:
        t = is_transitive(g)
        _emit(args, {"kind": "digraph", "transitive": t}, f"transitive: {'yes' if t else 'no'}")
    elif g.is_undirected:
        w = find_transitive_orientation(g)
        arcs = [] if w is None else [f"{u}->{v}" for u, v in apply_orientation(g, w).arcs]
        payload = {"kind": "graph", "comparability": w is not None, "witness": arcs if w else None}
        text = f"comparability: {'yes' if w else 'no'}"
        if w is not None:
            text += "\n" + "\n".join(arcs)
        _emit(args, payload, text)
    else:
        raise UsageError("transitive expects a graph or a digraph, not a mixed graph")


def cmd_tournament_max(args):
    value, witness, bound = tournament_max(args.n)
    arcs = [f"{u}->{v}" for u, v in witness.arcs]
    payload = {"n": args.n, "value": value, "bound": bound, "witness": arcs}
    text = f"value: {value}\nbound: {bound}\nwitness: {' '.join(arcs)}"
    _emit(args, payload, text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON payload")
    common.add_argument("--workers", type=int, default=1, help="solver processes")

    parser = argparse.ArgumentParser(prog="wienerorient")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wiener", parents=[common], help="Wiener index of a graph file")
    p.add_argument("graph")
    p.add_argument("--mode", choices=["undirected", "directed", "max"], default="undirected")
    p.set_defaults(func=cmd_wiener)

    p = sub.add_parser("orient", parents=[common], help="extreme-Wiener orientation search")
    p.add_argument("objective", choices=["max", "min"])
    p.add_argument("graph")
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default="exhaustive")
    p.add_argument("--all-optima", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=8)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("gen", parents=[common], help="generate T_k or one of its orientations")
    p.add_argument("stage", choices=[s.value for s in Stage])
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("closedform", parents=[common], help="evaluate a closed-form polynomial")
    p.add_argument("id")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_closedform)

    p = sub.add_parser("zigzag", parents=[common], help="is a tree orientation zig-zag")
    p.add_argument("graph")
    p.add_argument("--method", choices=["center", "path"], default="center")
    p.set_defaults(func=cmd_zigzag)

    p = sub.add_parser("center", parents=[common], help="center vertex of a tree orientation")
    p.add_argument("graph")
    p.set_defaults(func=cmd_center)

    for name, func, help_ in (
        ("gadget", cmd_gadget, "build the reduction gadget"),
        ("hampath", cmd_hampath, "Hamiltonian (a,b)-path by backtracking"),
        ("reduction-verify", cmd_reduction_verify, "check the forward reduction"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("graph")
        p.add_argument("a", type=int)
        p.add_argument("b", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("transitive", parents=[common], help="transitivity / comparability test")
    p.add_argument("graph")
    p.set_defaults(func=cmd_transitive)

    p = sub.add_parser("tournament-max", parents=[common], help="best tournament of order n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_tournament_max)
    return parser


def run(argv) -> InvocationResult:
    out, err = io.StringIO(), io.StringIO()
    code = 0
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            args = build_parser().parse_args(list(argv))
            if args.workers < 1:
                raise UsageError("--workers must be at least 1")
            args.func(args)
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 2
        except (UsageError, GraphError, ValueError, ArithmeticError, OSError) as exc:
            out.truncate(0)
            out.seek(0)
            print(f"error: {exc}", file=err)
            code = 2
    return InvocationResult(code, out.getvalue(), err.getvalue())


def main(argv=None) -> None:
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
