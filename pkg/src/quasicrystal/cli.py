"""Command-line interface.

Exit codes: 0 success, 2 bad parameters, 3 a checked property failed, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import crystal, graphs, qsym, skeleton
from .errors import ParameterError, QuasiCrystalError, StructureError, TheoremViolation
from .insertion import hypoplactic_insert, schensted_insert
from .verify import run_verify
from .words import check_rank, format_composition, format_word, parse_composition, parse_word

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_VIOLATION = 3
EXIT_IO = 4


def _tableau_output(t) -> str:
    return t.render() + "\n" + json.dumps(t.to_json(), separators=(",", ":"))


def cmd_insert(args) -> str:
    w = parse_word(args.word)
    t = schensted_insert(w) if args.kind == "plac" else hypoplactic_insert(w)
    return _tableau_output(t)


def cmd_op(args) -> str:
    w = parse_word(args.word)
    if args.index < 1:
        raise ParameterError("operator index must be positive")
    result = crystal.operator(args.kind, args.direction)(w, args.index)
    return "undefined" if result is None else format_word(result)


def _serialize(g, fmt: str) -> str:
    if fmt == "json":
        return graphs.to_json(g) + "\n"
    if fmt == "dot":
        return graphs.to_dot(g)
    lines = [f"{k}: {_one_line(v)}" for k, v in enumerate(g.vertices)]
    lines += [f"{s} -> {d} [{lab}]" for s, d, lab in g.edges]
    return "\n".join(lines) + "\n"


def _one_line(v) -> str:
    return graphs.vertex_label(v).replace("\n", " / ")


def _serialize_skeleton(sk, fmt: str) -> str:
    if fmt == "json":
        return skeleton.to_json(sk) + "\n"
    if fmt == "dot":
        return skeleton.to_dot(sk)
    return skeleton.format_report(sk) + "\n"


def _component(args):
    seed = parse_word(args.seed)
    check_rank(seed, args.rank)
    return graphs.build_component(seed, args.kind, args.rank)


def _delta(args):
    if args.rank < 1 or args.size < 1:
        raise ParameterError("rank and size must be positive")
    return graphs.build_delta(args.rank, args.size)


def _skeleton(args):
    return skeleton.skeleton(parse_composition(args.shape), args.rank)


def cmd_component(args) -> str:
    return _serialize(_component(args), args.out)


def cmd_delta(args) -> str:
    return _serialize(_delta(args), args.out)


def _read(path: str) -> str:
    return Path(path).read_text()


def cmd_iso(args) -> str:
    g1 = graphs.from_json(_read(args.first))
    g2 = graphs.from_json(_read(args.second))
    witness = graphs.isomorphic(g1, g2, args.mode)
    if witness is None:
        if args.mode == "unlabelled":
            return "no witness found by shape transport"
        return "not isomorphic"
    pairs = [f"{_one_line(v)} -> {_one_line(witness(v))}" for v in g1.vertices]
    return "\n".join(["isomorphic"] + pairs)


def cmd_skeleton(args) -> str:
    sk = _skeleton(args)
    if args.report:
        return skeleton.format_report(sk)
    return _serialize_skeleton(sk, args.out).rstrip("\n")


def cmd_expand(args) -> str:
    expansion = qsym.schur_to_fundamental(parse_composition(args.shape))
    return "\n".join(f"{format_composition(a)}:{c}" for a, c in sorted(expansion.items()))


def cmd_poly(args) -> str:
    if args.vars < 1:
        raise ParameterError("number of variables must be positive")
    return qsym.fundamental_poly(parse_composition(args.comp), args.vars).format()


def seed_figures(directory: Path) -> list[Path]:
    """Write every reproduced figure as DOT and JSON; returns the written paths."""
    directory.mkdir(parents=True, exist_ok=True)
    written = []

    def put(name: str, text: str) -> None:
        path = directory / name
        path.write_text(text)
        written.append(path)

    def put_graph(stem: str, g) -> None:
        put(f"{stem}.json", graphs.to_json(g) + "\n")
        put(f"{stem}.dot", graphs.to_dot(g))

    def put_points(stem: str, g, shape) -> None:
        data = {
            "shape": list(shape),
            "rank": g.rank,
            "points": [list(p) for p in graphs.polytope_coordinates(g)],
            "edges": [{"src": s, "dst": d, "label": lab} for s, d, lab in g.edges],
        }
        put(f"{stem}.json", json.dumps(data, separators=(",", ":")) + "\n")

    for rank, stem in ((3, "crystal_quasicrystal"), (4, "quasicrystal_infinite_rank4")):
        put_graph(f"{stem}_hypo_211", graphs.build_component((2, 1, 1), "hypo", rank))
        put_graph(f"{stem}_hypo_212", graphs.build_component((2, 1, 2), "hypo", rank))
        put_graph(f"{stem}_plac_211", graphs.build_component((2, 1, 1), "plac", rank))
    put_graph("delta_qa_3_4", graphs.build_delta(3, 4))
    put_graph("isom_hypo_5_1321", graphs.build_component((1, 3, 2, 1), "hypo", 5))
    put_graph("isom_hypo_4_1121", graphs.build_component((1, 1, 2, 1), "hypo", 4))
    put_points("gamma_hypo_4_3", graphs.build_shape_component((3,), "hypo", 4), (3,))
    # drawn entries reach 5, so the drawn component has rank 5
    put_points("gamma_hypo_5_21", graphs.build_shape_component((2, 1), "hypo", 5), (2, 1))
    sk = skeleton.skeleton((3, 2, 2))
    put("skel_322.json", skeleton.to_json(sk) + "\n")
    put("skel_322.dot", skeleton.to_dot(sk))
    return written


def cmd_export(args) -> str:
    if args.seed_figures:
        paths = seed_figures(Path(args.seed_figures))
        return "\n".join(str(p) for p in paths)
    if args.artifact is None or args.path is None:
        raise ParameterError("export needs --seed-figures, or --artifact with --path")
    if args.artifact == "skeleton":
        if args.shape is None:
            raise ParameterError("--shape is required for a skeleton")
        text = _serialize_skeleton(_skeleton(args), args.format)
    elif args.artifact == "delta":
        if args.rank is None or args.size is None:
            raise ParameterError("--rank and --size are required for delta")
        text = _serialize(_delta(args), args.format)
    else:
        if args.rank is None or args.seed is None:
            raise ParameterError("--rank and --seed are required for a component")
        text = _serialize(_component(args), args.format)
    Path(args.path).write_text(text)
    return str(args.path)


def cmd_verify(args):
    report = run_verify(args.max_weight, args.max_rank)
    return report.format(), (EXIT_OK if report.passed else EXIT_VIOLATION)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasicrystal", description="Crystal and quasi-crystal graph computations."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", help="insertion tableau of a word")
    p.add_argument("kind", choices=("plac", "hypo"))
    p.add_argument("word")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("op", help="apply a (quasi-)Kashiwara operator to a word")
    p.add_argument("direction", choices=("e", "f"))
    p.add_argument("kind", choices=("plac", "hypo"))
    p.add_argument("index", type=int)
    p.add_argument("word")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("component", help="connected component of a word")
    p.add_argument("--kind", choices=("plac", "hypo"), required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--seed", required=True)
    p.add_argument("--out", choices=("dot", "json", "text"), default="json")
    p.set_defaults(func=cmd_component)

    p = sub.add_parser("delta", help="quasi-array graph")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--out", choices=("dot", "json", "text"), default="json")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("iso", help="isomorphism check between two exported graphs")
    p.add_argument("--mode", choices=graphs.MODES, default="labelled_weighted")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("skeleton", help="skeleton of the crystal component of a shape")
    p.add_argument("--shape", required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--out", choices=("dot", "json"), default="json")
    p.add_argument("--report", action="store_true")
    p.set_defaults(func=cmd_skeleton)

    p = sub.add_parser("expand", help="expansions in fundamental quasi-symmetric functions")
    p.add_argument("what", choices=("schur-to-F",))
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("poly", help="polynomial of a fundamental quasi-symmetric function")
    p.add_argument("what", choices=("F",))
    p.add_argument("--comp", required=True)
    p.add_argument("--vars", type=int, required=True)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="run every bounded invariant check")
    p.add_argument("--max-weight", type=int, default=5)
    p.add_argument("--max-rank", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write artifacts to files")
    p.add_argument("--seed-figures", metavar="DIR")
    p.add_argument("--artifact", choices=("component", "delta", "skeleton"))
    p.add_argument("--format", choices=("dot", "json", "text"), default="json")
    p.add_argument("--path")
    p.add_argument("--kind", choices=("plac", "hypo"), default="hypo")
    p.add_argument("--rank", type=int)
    p.add_argument("--seed")
    p.add_argument("--size", type=int)
    p.add_argument("--shape")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (TheoremViolation, StructureError) as exc:
        print(f"property violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (QuasiCrystalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except OSError as exc:
        where = f" ({exc.filename})" if exc.filename else ""
        print(f"I/O error{where}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    if result:
        print(result.rstrip("\n"))
    return code


if __name__ == "__main__":
    sys.exit(main())
