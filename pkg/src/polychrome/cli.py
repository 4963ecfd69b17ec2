"""Command-line entry point: ``polychrome <subcommand> ...``.

Instances are read as JSON from a file argument or stdin and every report is
JSON on stdout. Exit codes: 0 success, 1 verified negative answer (violation
found, no coloring exists, check failed), 2 usage or precondition error,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .abafree import (
    InvariantError,
    check_aba_free,
    check_abab_free,
    check_abab_free_unordered,
    check_abab_lower,
    find_aba_order,
)
from .coloring import (
    COLORERS,
    BalanceError,
    balanced_color,
    dual_epsilon_net,
    epsilon_net,
    epsilon_net_partition,
    generic_color,
    polychromatic_oracle,
    threshold,
)
from .families import hk_family, no_shallow_family, sharpness_family
from .geom import (
    ConvexChain,
    PointSet2D,
    build_bottomless,
    build_halfplanes,
    build_intervals,
    build_unbounded_convex,
)
from .hitting import HITTERS, min_shallowness_oracle
from .hypercore import (
    Coloring,
    HittingSet,
    OrderedHypergraph,
    PreconditionError,
    containment_free_indices,
    verify_hitting,
    verify_polychromatic,
)
from .pshp import (
    PshpRepresentation,
    SphereRepresentation,
    dual_representation,
    load_instance,
    polar,
    pushback,
    pushfront,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# io helpers


def _read_json(path: str | None):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"malformed JSON: {exc}") from exc


def _read_instance(path):
    obj = _read_json(path)
    if not isinstance(obj, dict):
        raise PreconditionError("instance JSON must be an object")
    return load_instance(obj)


def _as_class(inst, cls: str):
    """Coerce an instance to the type the class routines expect."""
    if cls == "aba":
        if isinstance(inst, OrderedHypergraph):
            return inst
        if isinstance(inst, PshpRepresentation) and all(s == "up" for s in inst.sides):
            return inst.base
        raise PreconditionError("class 'aba' needs a plain instance")
    if cls == "pshp":
        if isinstance(inst, OrderedHypergraph):
            return PshpRepresentation(inst, ("up",) * inst.m)
        if isinstance(inst, SphereRepresentation):
            return inst.to_pshp()
        return inst
    if isinstance(inst, OrderedHypergraph):
        return SphereRepresentation(inst, (), ("plain",) * inst.m)
    if isinstance(inst, PshpRepresentation):
        return inst.to_sphere()
    return inst


def _realized(inst) -> OrderedHypergraph:
    return inst if isinstance(inst, OrderedHypergraph) else inst.realize()


def _render_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key, val in obj.items():
            if isinstance(val, dict):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(val)}")
        return "\n".join(lines)
    return pad + json.dumps(obj)


def _emit(args, obj) -> None:
    text = _render_text(obj) if args.pretty else json.dumps(obj)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise PreconditionError(f"not an exact rational: {text!r}") from exc


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> int:
    inst = _read_instance(args.input)
    h = inst if isinstance(inst, OrderedHypergraph) else inst.base
    finder = {"aba": check_aba_free, "abab": check_abab_free, "abab-lower": check_abab_lower}[args.pattern]
    v = finder(h)
    _emit(args, {"pattern": args.pattern, "ok": v is None, "witness": v.to_json() if v else None})
    return EXIT_OK if v is None else EXIT_NEGATIVE


def cmd_order_search(args) -> int:
    h = _read_instance(args.input)
    if not isinstance(h, OrderedHypergraph):
        raise PreconditionError("order-search needs a plain instance")
    search = find_aba_order if args.pattern == "aba" else check_abab_free_unordered
    order = search(h, args.limit)
    _emit(args, {"pattern": args.pattern, "order": order})
    return EXIT_OK if order is not None else EXIT_NEGATIVE


def cmd_build(args) -> int:
    obj = _read_json(args.input)
    if not isinstance(obj, dict) or "points" not in obj:
        raise PreconditionError("geometry JSON needs a 'points' list")
    raw = obj["points"]
    if args.shape == "intervals":
        vals = [p[0] if isinstance(p, list) else p for p in raw]
        h = build_intervals(vals, drop_empty=True)
        _emit(args, h.to_json())
        return EXIT_OK
    ps = PointSet2D.from_json(obj)
    order = ps.x_order()
    if args.shape == "halfplanes":
        out = build_halfplanes(ps, args.side, args.drop_empty)
    elif args.shape == "bottomless":
        out = build_bottomless(ps, args.drop_empty, args.allow_equal_y)
    else:
        shape = obj.get("shape") or {}
        if "breakpoints" not in shape:
            raise PreconditionError("convex-chain needs shape.breakpoints")
        chain = ConvexChain(tuple(tuple(b) for b in shape["breakpoints"]))
        out = build_unbounded_convex(ps, chain, args.drop_empty)
    res = out.to_json()
    res["point_order"] = order
    _emit(args, res)
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.family == "sharpness":
        res = sharpness_family(args.k).to_json()
    elif args.family == "hk":
        h, meta = hk_family(args.k)
        res = h.to_json()
        res["tree"] = meta.to_json()
    else:
        ps, h = no_shallow_family(args.k)
        res = h.to_json()
        res["points"] = ps.to_json()["points"]
    _emit(args, res)
    return EXIT_OK


def cmd_transform(args) -> int:
    inst = _read_instance(args.input)
    if args.op == "pushback":
        rep, order = pushback(_as_class(inst, "sphere"), _need(args.count, "--count"))
        res = rep.to_json() | {"order": order}
    elif args.op == "pushfront":
        h = inst if isinstance(inst, OrderedHypergraph) else inst.base
        if isinstance(inst, OrderedHypergraph):
            out, order = pushfront(h, _need(args.edge, "--edge"))
            res = out.to_json() | {"order": order}
        else:
            _, order = pushfront(h, _need(args.edge, "--edge"))
            rep = _as_class(inst, "sphere").reorder(order)
            res = rep.to_json() | {"order": order}
    elif args.op == "dual":
        rep, order = dual_representation(inst)
        res = rep.to_json() | {"vertex_order": order}
    else:
        rep, order, src = polar(inst, _need(args.vertex, "--vertex"))
        res = rep.to_json() | {"vertex_order": order, "edge_source": src}
    _emit(args, res)
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise PreconditionError(f"this transform needs {flag}")
    return value


def _reduced(inst):
    real = _realized(inst)
    live = [i for i, e in enumerate(real.masks) if e]
    keep = [live[j] for j in containment_free_indices([real.masks[i] for i in live], real.n)]
    return inst.select(keep), keep


def cmd_hit(args) -> int:
    inst = _as_class(_read_instance(args.input), args.cls)
    kept = None
    if args.reduce:
        inst, kept = _reduced(inst)
    h = _realized(inst)
    if args.oracle:
        c, hs = min_shallowness_oracle(h)
        res = {"min_shallowness": c, "witness": hs.to_json()}
    else:
        bound, hitter = HITTERS[args.cls]
        hs = hitter(inst)
        res = hs.to_json() | {"bound": bound}
    if kept is not None:
        res["edges_kept"] = kept
    _emit(args, res)
    return EXIT_OK


def cmd_color(args) -> int:
    inst = _as_class(_read_instance(args.input), args.cls)
    c = HITTERS[args.cls][0]
    res: dict = {"class": args.cls, "threshold": threshold(c, args.k)}
    if args.balanced:
        try:
            col = balanced_color(inst, args.k, args.cls)
        except BalanceError as exc:
            res |= {"balanced": False, "witness": exc.report.witness, "coloring": exc.coloring.to_json()}
            _emit(args, res)
            return EXIT_NEGATIVE
        res |= {"balanced": True}
    elif args.trace:
        col, trace = generic_color(inst, args.k, args.cls)
        res["trace"] = trace.to_json()["rounds"]
    else:
        col = COLORERS[args.cls](inst, args.k)
    res |= col.to_json()
    _emit(args, res)
    return EXIT_OK


def cmd_oracle(args) -> int:
    h = _realized(_read_instance(args.input))
    if args.shallow:
        c, hs = min_shallowness_oracle(h)
        _emit(args, {"min_shallowness": c, "witness": hs.to_json()})
        return EXIT_OK
    if args.k is None or args.m is None:
        raise PreconditionError("oracle --poly needs -k and -m")
    r = polychromatic_oracle(h, args.k, args.m)
    res = r.to_json()
    if not r.exists:
        res["message"] = "no polychromatic coloring"
    _emit(args, res)
    return EXIT_OK if r.exists else EXIT_NEGATIVE


def cmd_epsnet(args) -> int:
    inst = _read_instance(args.input)
    eps = _frac(args.eps)
    if args.cls == "dual":
        net = dual_epsilon_net(_as_class(inst, "dual"), eps)
        _emit(args, {"eps": str(eps), "net": net, "size": len(net)})
        return EXIT_OK
    rep = _as_class(inst, "pshp")
    if args.partition:
        parts = epsilon_net_partition(rep, eps)
        _emit(args, {"eps": str(eps), "nets": parts, "sizes": [len(p) for p in parts]})
    else:
        net = epsilon_net(rep, eps)
        _emit(args, {"eps": str(eps), "net": net, "size": len(net)})
    return EXIT_OK


def cmd_verify(args) -> int:
    h = _realized(_read_instance(args.input))
    if args.what == "coloring":
        col = Coloring.from_json(_read_json(_need(args.coloring, "--coloring")))
        rep = verify_polychromatic(h, col, _need(args.m, "-m"))
    else:
        hs = HittingSet.from_json(_read_json(_need(args.hitting, "--hitting")))
        rep = verify_hitting(h, hs, _need(args.c, "-c"))
    _emit(args, rep.to_json())
    return EXIT_OK if rep else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indented text instead of one-line JSON")
    common.add_argument("--out", help="write the report to this file instead of stdout")

    p = _Parser(prog="polychrome", description="ABA-free hypergraphs, shallow hitting sets and polychromatic colorings")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("check", cmd_check, "test an ordered instance for a forbidden pattern")
    sp.add_argument("pattern", choices=["aba", "abab", "abab-lower"])
    sp.add_argument("input", nargs="?")

    sp = add("order-search", cmd_order_search, "search a vertex order avoiding a pattern")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--pattern", choices=["aba", "abab"], default="aba")
    sp.add_argument("--limit", type=int, default=10)

    sp = add("build", cmd_build, "build a hypergraph from points")
    sp.add_argument("shape", choices=["intervals", "halfplanes", "bottomless", "convex-chain"])
    sp.add_argument("input", nargs="?")
    sp.add_argument("--side", choices=["upper", "both"], default="upper")
    sp.add_argument("--drop-empty", action="store_true")
    sp.add_argument("--allow-equal-y", action="store_true")

    sp = add("generate", cmd_generate, "emit an explicit family")
    sp.add_argument("family", choices=["sharpness", "hk", "noshallow"])
    sp.add_argument("-k", type=int, required=True)

    sp = add("transform", cmd_transform, "reorder or dualise a representation")
    sp.add_argument("op", choices=["pushback", "pushfront", "dual", "polar"])
    sp.add_argument("input", nargs="?")
    sp.add_argument("--count", type=int, help="pushback: length of the prefix to move")
    sp.add_argument("--edge", type=int, help="pushfront: index of a minimal edge")
    sp.add_argument("--vertex", type=int, help="polar: vertex in no realised edge")

    classes = ["aba", "pshp", "dual", "sphere"]
    sp = add("hit", cmd_hit, "shallow hitting set")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--class", dest="cls", choices=classes, default="aba")
    sp.add_argument("--oracle", action="store_true", help="exact minimum shallowness instead")
    sp.add_argument("--reduce", action="store_true", help="drop empty edges and supersets first")

    sp = add("color", cmd_color, "polychromatic coloring")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--class", dest="cls", choices=classes, default="aba")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--balanced", action="store_true")
    sp.add_argument("--trace", action="store_true")

    sp = add("oracle", cmd_oracle, "exhaustive searches")
    sp.add_argument("input", nargs="?")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--poly", action="store_true")
    mode.add_argument("--shallow", action="store_true")
    sp.add_argument("-k", type=int)
    sp.add_argument("-m", type=int)

    sp = add("epsnet", cmd_epsnet, "epsilon-net from a polychromatic coloring")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--eps", required=True, help="exact rational, e.g. 1/3")
    sp.add_argument("--partition", action="store_true")
    sp.add_argument("--class", dest="cls", choices=["pshp", "dual"], default="pshp")

    sp = add("verify", cmd_verify, "verify a coloring or hitting set")
    sp.add_argument("what", choices=["coloring", "hitting"])
    sp.add_argument("input", nargs="?")
    sp.add_argument("--coloring")
    sp.add_argument("--hitting")
    sp.add_argument("-m", type=int)
    sp.add_argument("-c", type=int)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(json.dumps({"error": "precondition", "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(json.dumps({"error": "invariant", "message": str(exc)}), file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
