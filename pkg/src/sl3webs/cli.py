"""Command-line front end: every library operation behind JSON file I/O.

Each subcommand reads JSON (stdin or ``--in``), calls exactly one library
operation, and prints a single JSON document (stdout or ``--out``, written
atomically).  Exit codes: 0 success, 1 membership/validation failure,
2 malformed input.  Outputs are deterministic: stable key order and no
timestamps, so identical inputs yield byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import annulus as annulus_mod
from . import oracle as oracle_mod
from . import pants as pants_mod
from . import surface as surface_mod
from .decomposition import DecompositionGraph, standard_graph, validate_graph
from .errors import BoxTooLarge, SL3WebsError


class MalformedInput(Exception):
    pass


def _read_json(path: str | None) -> object:
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise MalformedInput(f"cannot read input: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc


def _require_object(data: object) -> dict:
    if not isinstance(data, dict):
        raise MalformedInput(f"expected a JSON object, got {type(data).__name__}")
    return data


def _emit(document: dict, out_path: str | None) -> None:
    text = json.dumps(document) + "\n"
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
        return
    tmp = out_path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, out_path)


def _load_graph(path: str) -> DecompositionGraph:
    return validate_graph(DecompositionGraph.from_dict(_require_object(_read_json(path))))


def _load_descriptor(path: str, graph: DecompositionGraph) -> surface_mod.SurfaceWebDescriptor:
    data = _require_object(_read_json(path))
    if "graph" in data:
        embedded = DecompositionGraph.from_dict(data["graph"])
        if embedded != graph:
            raise MalformedInput("descriptor embeds a different graph than --graph")
    return surface_mod.SurfaceWebDescriptor(
        graph=graph,
        annuli=tuple(annulus_mod.AnnulusDescriptor.from_dict(a) for a in data["annuli"]),
        pants_shear=tuple(pants_mod.ShearVector.from_dict(x) for x in data["pants_shear"]),
    )


def _cmd_pants(args: argparse.Namespace) -> tuple[int, dict]:
    data = _require_object(_read_json(args.in_path))
    if args.action == "forward":
        return 0, pants_mod.forward(pants_mod.ShearVector.from_dict(data)).to_dict()
    if args.action == "invert":
        return 0, pants_mod.invert(pants_mod.PantsTuple.from_dict(data)).to_dict()
    # "check": the key set decides whether this is a cone or an image test.
    keys = set(data)
    if keys == set(pants_mod.SHEAR_FIELDS):
        ok = pants_mod.lambda_check(pants_mod.ShearVector.from_dict(data))
        return (0 if ok else 1), {"in_lambda": ok}
    if keys == set(pants_mod.TUPLE_FIELDS):
        ok = pants_mod.image_check(pants_mod.PantsTuple.from_dict(data))
        return (0 if ok else 1), {"in_image": ok}
    raise MalformedInput("expected the 8 shear keys or the 8 tuple keys")


def _cmd_annulus(args: argparse.Namespace) -> tuple[int, dict]:
    data = _require_object(_read_json(args.in_path))
    if args.action == "validate":
        return 0, annulus_mod.AnnulusDescriptor.from_dict(data).to_dict()
    twists = annulus_mod.TwistTuple.from_dict(data)
    return 0, annulus_mod.canonical_descriptor(twists).to_dict()


def _cmd_graph(args: argparse.Namespace) -> tuple[int, dict]:
    if args.action == "standard":
        return 0, standard_graph(args.genus).to_dict()
    graph = DecompositionGraph.from_dict(_require_object(_read_json(args.in_path)))
    return 0, validate_graph(graph).to_dict()


def _cmd_kappa(args: argparse.Namespace) -> tuple[int, dict]:
    graph = _load_graph(args.graph)
    descriptor = _load_descriptor(args.descriptor, graph)
    return 0, surface_mod.kappa(descriptor).to_dict()


def _cmd_theta(args: argparse.Namespace) -> tuple[int, dict]:
    graph = _load_graph(args.graph)
    coords = surface_mod.GlobalCoordinate.from_dict(_require_object(_read_json(args.coords)))
    violation = surface_mod.theta_violation(graph, coords)
    if violation is None:
        return 0, {"in_theta": True}
    return 1, {"in_theta": False, "violation": violation}


def _cmd_reconstruct(args: argparse.Namespace) -> tuple[int, dict]:
    graph = _load_graph(args.graph)
    coords = surface_mod.GlobalCoordinate.from_dict(_require_object(_read_json(args.coords)))
    return 0, surface_mod.reconstruct(graph, coords).to_dict()


def _cmd_torus(args: argparse.Namespace) -> tuple[int, dict]:
    data = _require_object(_read_json(args.in_path))
    c = surface_mod.TorusCoordinate.from_dict(data)
    c = surface_mod.torus_kappa(c.n1, c.n2, c.t1, c.t2)
    if args.action == "check":
        return 0, c.to_dict()
    return 0, surface_mod.torus_reconstruct(c).to_dict()


def _cmd_oracle(args: argparse.Namespace) -> tuple[int, dict]:
    if args.target == "pants":
        box = oracle_mod.BoxSpec(
            shear_bound=args.bound,
            n_bound=args.n_bound,
            t_bound=args.t_bound,
            h_bound=args.h_bound,
        )
        report = oracle_mod.verify_pants_image(box)
    elif args.target == "torus":
        bound = 1 if args.bound is None else args.bound
        report = oracle_mod.verify_torus_image(oracle_mod.BoxSpec(n_bound=bound, t_bound=bound))
    else:
        kwargs = {} if args.bound is None else {"n_bound": args.bound}
        report = oracle_mod.verify_genus2(args.samples, seed=args.seed, **kwargs)
    # elapsed_ms is dropped: CLI outputs must be byte-identical across runs.
    return 0, report.to_dict(include_timing=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl3webs",
        description="Exact coordinates for non-elliptic SL3-web basis elements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser, with_in: bool = True) -> None:
        if with_in:
            p.add_argument("--in", dest="in_path", default=None, metavar="F",
                           help="input JSON file ('-' or omitted: stdin)")
        p.add_argument("--out", dest="out_path", default=None, metavar="F",
                       help="output file (omitted: stdout), written atomically")

    p = sub.add_parser("pants", help="pants coordinate operations")
    p.add_argument("action", choices=["forward", "invert", "check"])
    add_io(p)
    p.set_defaults(func=_cmd_pants)

    p = sub.add_parser("annulus", help="annulus descriptor operations")
    p.add_argument("action", choices=["validate", "canonical"])
    add_io(p)
    p.set_defaults(func=_cmd_annulus)

    p = sub.add_parser("graph", help="pants decomposition graphs")
    p.add_argument("action", choices=["validate", "standard"])
    p.add_argument("--genus", type=int, default=2)
    add_io(p)
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("kappa", help="global coordinate of a descriptor")
    p.add_argument("--graph", required=True, metavar="F")
    p.add_argument("--descriptor", required=True, metavar="F")
    add_io(p, with_in=False)
    p.set_defaults(func=_cmd_kappa)

    p = sub.add_parser("theta", help="image monoid membership")
    p.add_argument("--graph", required=True, metavar="F")
    p.add_argument("--coords", required=True, metavar="F")
    add_io(p, with_in=False)
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("reconstruct", help="descriptor of a monoid member")
    p.add_argument("--graph", required=True, metavar="F")
    p.add_argument("--coords", required=True, metavar="F")
    add_io(p, with_in=False)
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("torus", help="torus coordinate operations")
    p.add_argument("action", choices=["check", "reconstruct"])
    add_io(p)
    p.set_defaults(func=_cmd_torus)

    p = sub.add_parser("oracle", help="exhaustive verification sweeps")
    p.add_argument("target", choices=["pants", "torus", "genus2"])
    p.add_argument("--bound", type=int, default=None,
                   help="shear bound (pants) or n/t bound (torus); pants default 1")
    p.add_argument("--n-bound", type=int, default=None)
    p.add_argument("--t-bound", type=int, default=None)
    p.add_argument("--h-bound", type=int, default=None)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    add_io(p, with_in=False)
    p.set_defaults(func=_cmd_oracle)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "oracle" and args.target == "pants" and args.bound is None \
            and args.n_bound is None:
        args.bound = 1
    try:
        code, document = args.func(args)
    except MalformedInput as exc:
        _emit({"error": "MalformedInput", "detail": str(exc)}, getattr(args, "out_path", None))
        return 2
    except (KeyError, TypeError, ValueError) as exc:
        _emit({"error": "MalformedInput", "detail": str(exc)}, getattr(args, "out_path", None))
        return 2
    except BoxTooLarge as exc:
        _emit(exc.payload(), getattr(args, "out_path", None))
        return 2
    except SL3WebsError as exc:
        _emit(exc.payload(), getattr(args, "out_path", None))
        return 1
    _emit(document, args.out_path)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
