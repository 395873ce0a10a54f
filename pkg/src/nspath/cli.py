"""Batch command-line front end.

Subcommands: ``solve`` (run a solver on an instance file), ``gen`` (emit
gadget/preprocessing instances), ``verify`` (check a path certificate).
JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 success/found,
1 I/O or parse error, 2 usage or infeasible algorithm choice, 3 not found /
verification failed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path as FsPath

from .certificate import VARIANT_NONDISC, VARIANT_NONSEP, PathCertificate, check_path
from .chordal import solve_chordal_nonsep
from .errors import ExplicitBudgetExceeded, NotChordal, NspathError
from .graph import Graph, bfs_distances, format_graph, is_chordal, parse_graph
from .nondisc import solve_nondisconnecting
from .oracle import brute_solve
from .reductions import (
    Instance,
    MccInstance,
    add_pendant,
    ball_contraction,
    mcc_gadget,
    or_composition,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_NOT_FOUND = 3


def _err(msg: str) -> None:
    print(f"nspath: {msg}", file=sys.stderr)


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph(fh.read())


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nspath",
        description="Shortest non-separating / non-disconnecting s-t paths.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance")
    p_solve.add_argument("--graph", required=True)
    p_solve.add_argument("--s", type=int, required=True)
    p_solve.add_argument("--t", type=int, required=True)
    p_solve.add_argument("--k", type=int, required=True)
    p_solve.add_argument("--variant", required=True,
                         choices=[VARIANT_NONSEP, VARIANT_NONDISC])
    p_solve.add_argument("--algo", default="auto",
                         choices=["auto", "brute", "repfam", "chordal",
                                  "contract-brute"])
    p_solve.add_argument("--seed", type=int, default=0)
    p_solve.add_argument("--threads", type=int, default=None,
                         help="worker cap for solver internals (default: all "
                              "cores); accepted for forward compatibility, "
                              "current solvers are single-threaded")

    p_gen = sub.add_parser("gen", help="generate instances")
    gen_sub = p_gen.add_subparsers(dest="construction", required=True)

    g_pend = gen_sub.add_parser("pendant")
    g_pend.add_argument("--graph", required=True)
    g_pend.add_argument("--s", type=int, required=True)
    g_pend.add_argument("--t", type=int, default=None)
    g_pend.add_argument("--out", default=None)

    g_mcc = gen_sub.add_parser("mcc")
    g_mcc.add_argument("--graph", required=True)
    g_mcc.add_argument("--parts", required=True,
                       help="parts separated by ';', vertex ids by ','")
    g_mcc.add_argument("--out", default=None)

    g_or = gen_sub.add_parser("orcomp")
    g_or.add_argument("--inputs", required=True,
                      help="comma-separated sidecar JSON files; each expects "
                           "the graph at the same stem with extension .el")
    g_or.add_argument("--out", default=None)

    g_ball = gen_sub.add_parser("ball")
    g_ball.add_argument("--graph", required=True)
    g_ball.add_argument("--s", type=int, required=True)
    g_ball.add_argument("--t", type=int, required=True)
    g_ball.add_argument("--k", type=int, required=True)
    g_ball.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="check a path certificate")
    p_verify.add_argument("--graph", required=True)
    p_verify.add_argument("--variant", required=True,
                          choices=[VARIANT_NONSEP, VARIANT_NONDISC])
    p_verify.add_argument("--path", required=True,
                          help="comma-separated vertex ids")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "solve":
        return cmd_solve(args)
    if args.command == "gen":
        return cmd_gen(args)
    return cmd_verify(args)


# --- solve -----------------------------------------------------------------


def cmd_solve(args) -> int:
    try:
        g = _load_graph(args.graph)
    except (OSError, NspathError) as exc:
        _err(f"cannot load graph: {exc}")
        return EXIT_IO
    if not (0 <= args.s < g.n and 0 <= args.t < g.n) or args.s == args.t:
        _err("invalid endpoints")
        return EXIT_USAGE
    if args.k < 0:
        _err("k must be non-negative")
        return EXIT_USAGE
    try:
        cert, algo = _dispatch(g, args)
    except (NspathError, ValueError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    found = cert is not None
    _emit({
        "found": found,
        "path": list(cert.vertices) if found else None,
        "length": cert.length if found else None,
        "algo": algo,
        "seed": args.seed,
    })
    return EXIT_OK if found else EXIT_NOT_FOUND


def _dispatch(g: Graph, args):
    algo = args.algo
    variant = args.variant
    if algo == "auto":
        algo = _pick_algo(g, args)
    if algo == "brute":
        inst = Instance(g, s=args.s, t=args.t, k=args.k, variant=variant)
        return brute_solve(inst), "brute"
    if algo == "repfam":
        if variant != VARIANT_NONDISC:
            raise ValueError("repfam solves the nondisc variant only")
        return solve_nondisconnecting(g, args.s, args.t, args.k,
                                      seed=args.seed), "repfam"
    if algo == "chordal":
        if variant != VARIANT_NONSEP:
            raise ValueError("chordal solves the nonsep variant only")
        dist = bfs_distances(g, args.s)[args.t]
        if math.isinf(dist) or args.k != int(dist):
            raise ValueError("chordal algorithm needs k == dist(s, t)")
        return solve_chordal_nonsep(g, args.s, args.t), "chordal"
    if algo == "contract-brute":
        if variant != VARIANT_NONSEP:
            raise ValueError("contract-brute solves the nonsep variant only")
        return _contract_brute(g, args), "contract-brute"
    raise ValueError(f"unknown algorithm {algo!r}")


def _pick_algo(g: Graph, args) -> str:
    if args.variant == VARIANT_NONDISC:
        return "repfam"
    dist = bfs_distances(g, args.s)[args.t]
    if not math.isinf(dist) and args.k == int(dist) and is_chordal(g):
        return "chordal"
    if args.k <= 12 or g.n <= 20:
        return "contract-brute"
    return "brute"


def _contract_brute(g: Graph, args):
    dist = bfs_distances(g, args.s)
    if math.isinf(dist[args.t]) or dist[args.t] > args.k:
        return None  # t outside the ball: trivially infeasible
    sub, mapping = ball_contraction(g, args.s, args.k)
    inst = Instance(sub, s=mapping[args.s], t=mapping[args.t], k=args.k,
                    variant=VARIANT_NONSEP)
    cert = brute_solve(inst)
    if cert is None:
        return None
    inverse = {}
    for old, new in enumerate(mapping):
        if dist[old] <= args.k:
            inverse[new] = old
    original = [inverse[v] for v in cert.vertices]
    out = PathCertificate.build(g, VARIANT_NONSEP, original,
                                algo="contract-brute", seed=args.seed)
    if not out.valid:
        raise RuntimeError("internal error: contracted certificate invalid")
    return out


# --- gen ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    try:
        if args.construction == "pendant":
            return _gen_pendant(args)
        if args.construction == "mcc":
            return _gen_mcc(args)
        if args.construction == "orcomp":
            return _gen_orcomp(args)
        return _gen_ball(args)
    except (OSError, NspathError) as exc:
        _err(str(exc))
        return EXIT_IO if isinstance(exc, OSError) else EXIT_USAGE
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE


def _out_prefix(args, kind: str) -> FsPath:
    if args.out:
        return FsPath(args.out)
    stem = FsPath(args.graph).stem if getattr(args, "graph", None) else kind
    return FsPath(f"{stem}_{kind}")


def _write_instance(prefix: FsPath, inst: Instance) -> int:
    graph_path = prefix.with_suffix(".el")
    sidecar_path = prefix.with_suffix(".json")
    graph_path.write_text(format_graph(inst.graph), encoding="ascii")
    sidecar = {"s": inst.s, "t": inst.t, "k": inst.k, "variant": inst.variant}
    sidecar_path.write_text(json.dumps(sidecar) + "\n", encoding="ascii")
    _emit({"graph": str(graph_path), "sidecar": str(sidecar_path)})
    return EXIT_OK


def _gen_pendant(args) -> int:
    g = _load_graph(args.graph)
    if g.n < 2:
        raise ValueError("graph too small for a pendant instance")
    extended, _ = add_pendant(g, args.s)
    t = args.t
    if t is None:
        t = g.n - 1 if args.s != g.n - 1 else g.n - 2
    inst = Instance(extended, s=args.s, t=t, k=g.n - 1, variant=VARIANT_NONSEP)
    return _write_instance(_out_prefix(args, "pendant"), inst)


def _gen_mcc(args) -> int:
    g = _load_graph(args.graph)
    parts = []
    for chunk in args.parts.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("empty part in --parts")
        parts.append(tuple(int(x) for x in chunk.split(",")))
    inst = mcc_gadget(MccInstance(g, tuple(parts)))
    return _write_instance(_out_prefix(args, "mcc"), inst)


def _gen_orcomp(args) -> int:
    instances = []
    for name in args.inputs.split(","):
        sidecar_path = FsPath(name.strip())
        meta = json.loads(sidecar_path.read_text(encoding="ascii"))
        g = _load_graph(str(sidecar_path.with_suffix(".el")))
        instances.append(Instance(g, s=int(meta["s"]), t=int(meta["t"]),
                                  k=int(meta["k"]), variant=str(meta["variant"])))
    composed = or_composition(instances)
    prefix = FsPath(args.out) if args.out else FsPath("orcomp")
    return _write_instance(prefix, composed)


def _gen_ball(args) -> int:
    g = _load_graph(args.graph)
    dist = bfs_distances(g, args.s)
    if not (0 <= args.t < g.n) or math.isinf(dist[args.t]) or dist[args.t] > args.k:
        raise ValueError("t must lie inside the radius-k ball of s")
    sub, mapping = ball_contraction(g, args.s, args.k)
    inst = Instance(sub, s=mapping[args.s], t=mapping[args.t], k=args.k,
                    variant=VARIANT_NONSEP)
    return _write_instance(_out_prefix(args, "ball"), inst)


# --- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    try:
        g = _load_graph(args.graph)
    except (OSError, NspathError) as exc:
        _err(f"cannot load graph: {exc}")
        return EXIT_IO
    try:
        vertices = [int(x) for x in args.path.split(",") if x.strip() != ""]
        ok = check_path(g, args.variant, vertices)
    except ValueError as exc:
        _emit({"valid": False, "error": str(exc)})
        return EXIT_USAGE
    _emit({"valid": ok, "variant": args.variant, "path": vertices,
           "length": len(vertices) - 1})
    return EXIT_OK if ok else EXIT_NOT_FOUND


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
