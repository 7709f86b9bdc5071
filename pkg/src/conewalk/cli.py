"""Command-line front end.

Subcommands expose each module plus a `verify` command running the
acceptance matrix.  Exit codes: 0 success/verified, 1 verification failure,
2 usage error, 3 resource cap exceeded.  JSON output is deterministic
(sorted keys, fixed separators).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import (bratteli, checks, free_realization, groups, growth, heis,
               partitions, polytope, szekeres, traces)
from .errors import InvalidArgumentError, ResourceCapError, VerificationError

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    group: str | None = None
    set_path: str | None = None
    depth: int | None = None
    report: str = "json"
    out: str | None = None
    element_cap: int = growth.DEFAULT_ELEMENT_CAP
    tolerance: float | None = None
    seed: int = 0


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ": "),
                      indent=1)


def _csv(rows: list, header: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _element_to_json(desc, x):
    if desc.kind == groups.FREE_GROUP_2:
        return x
    return list(x)


def _element_from_json(desc, v):
    if desc.kind == groups.FREE_GROUP_2:
        if not isinstance(v, str):
            raise InvalidArgumentError(f"expected a word string, got {v!r}")
        return v
    if not isinstance(v, list):
        raise InvalidArgumentError(f"expected a coordinate list, got {v!r}")
    return tuple(int(c) for c in v)


_DEFAULT_SETS = {
    "heisenberg": lambda: (groups.heisenberg(),
                           list(groups.heis_standard_support())),
    "zxc:3": lambda: (groups.z_times_finite(groups.cyclic_table(3)),
                      [(0, 0), (1, 0), (-1, 0), (0, 1)]),
    "zxc:4": lambda: (groups.z_times_finite(groups.cyclic_table(4)),
                      [(0, 0), (1, 0), (-1, 0), (0, 1)]),
}


def _resolve_group(name: str):
    if name in _DEFAULT_SETS:
        return _DEFAULT_SETS[name]()
    if name.startswith("free_abelian:"):
        return groups.free_abelian(int(name.split(":", 1)[1])), None
    if name == "free_group_2":
        return groups.free_group_2(), None
    if name == "zxs3":
        table = groups.symmetric3_table()
        return groups.z_times_finite(table), None
    raise InvalidArgumentError(f"unknown group {name!r}")


def _load_set(desc, path: str) -> list:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise InvalidArgumentError("set file must hold a JSON list")
    return [_element_from_json(desc, v) for v in data]


def _grown_ball(cfg: RunConfig):
    desc, elements = _resolve_group(cfg.group)
    if cfg.set_path:
        elements = _load_set(desc, cfg.set_path)
    if elements is None:
        raise InvalidArgumentError(
            f"group {cfg.group!r} has no default set; pass --set")
    aset = growth.AdmissibleSet.make(desc, elements)
    return growth.grow(aset, cfg.depth, element_cap=cfg.element_cap)


# --- subcommand handlers ------------------------------------------------------

def _cmd_balls(cfg: RunConfig, args) -> int:
    ball = _grown_ball(cfg)
    desc = ball.desc
    sizes = [ball.support_size(m) for m in range(cfg.depth + 1)]
    payload = {"group": cfg.group, "depth": cfg.depth, "sizes": sizes}
    levels = []
    for m in range(cfg.depth + 1):
        fresh = sorted(ball.gamma(m), key=lambda x: groups.sort_key(desc, x))
        levels.append([_element_to_json(desc, x) for x in fresh])
    payload["levels"] = levels
    if args.ratio is not None:
        payload["ratio_k"] = args.ratio
        payload["ratios"] = [str(q) for q in growth.ratio_stats(ball, args.ratio)]
    if args.census is not None:
        oracle = None
        if cfg.group == "heisenberg":
            oracle = lambda x: heis.tilde_l_exact(*x)
        count, status = growth.census(ball, args.census, oracle)
        payload["census_k"] = args.census
        payload["census"] = {"count": count, "status": status}
    if cfg.report == "csv":
        rows = [[m, len(levels[m]), sizes[m]] for m in range(cfg.depth + 1)]
        _emit(_csv(rows, ["m", "gamma_size", "support_size"]), cfg.out)
    else:
        _emit(_json(payload), cfg.out)
    return EXIT_OK


def _cmd_heis(cfg: RunConfig, args) -> int:
    if args.action == "interval":
        a, b, m = args.params
        iv = heis.s_interval(a, b, m)
        if iv.is_empty:
            _emit("empty", cfg.out)
        else:
            _emit(f"{iv.lo} {iv.hi}", cfg.out)
    elif args.action == "tildel":
        r, a, b = args.params
        _emit(str(heis.tilde_l_exact(r, a, b)), cfg.out)
    elif args.action == "gd":
        (m,) = args.params
        rep = heis.gd_set(m)
        payload = {
            "m": m, "gd_size": rep.gd_size, "gd_formula": rep.gd_formula,
            "symmetrized_size": rep.symmetrized_size,
            "symmetrized_formula": rep.symmetrized_formula,
            "gd": sorted(map(list, rep.gd)),
        }
        if cfg.report == "json":
            _emit(_json(payload), cfg.out)
        else:
            _emit(f"m={m} gd={rep.gd_size} (formula {rep.gd_formula}) "
                  f"symmetrized={rep.symmetrized_size} "
                  f"(formula {rep.symmetrized_formula})", cfg.out)
    elif args.action == "nonnoe":
        n, M = args.params
        rep = heis.nonnoetherian_witness(n, M)
        if cfg.report == "json":
            _emit(_json(checks._jsonable(rep)), cfg.out)
        else:
            _emit("true" if rep["pass"] else "false", cfg.out)
        return EXIT_OK if rep["pass"] else EXIT_VERIFICATION
    else:
        raise InvalidArgumentError(f"unknown heis action {args.action!r}")
    return EXIT_OK


def _cmd_partitions(cfg: RunConfig, args) -> int:
    partitions.PartitionTable.load()
    try:
        if args.action == "p3":
            r, a, b = args.params
            _emit(str(partitions.p3(r, a, b)), cfg.out)
        elif args.action == "slice":
            (m,) = args.params
            sl = partitions.coeff_oracle(m)
            rows = [[r, a, b, c] for (r, a, b), c in sorted(sl.coeffs.items())]
            if cfg.report == "csv":
                _emit(_csv(rows, ["r", "a", "b", "coeff"]), cfg.out)
            else:
                _emit(_json({"m": m, "coeffs": rows}), cfg.out)
        else:
            raise InvalidArgumentError(
                f"unknown partitions action {args.action!r}")
    finally:
        partitions.PartitionTable.save()
    return EXIT_OK


def _parse_trace_spec(text: str):
    kind, _, rest = text.partition(":")
    parts = [p for p in rest.split(",") if p] if rest else []
    if kind == "lower":
        r, b = (int(p) for p in parts)
        return traces.LowerDiscrete(r, b)
    if kind == "upper":
        c, d = (int(p) for p in parts)
        return traces.UpperDiscrete(c, d)
    if kind == "mult":
        (t,) = parts
        return traces.Multiplicative(Fraction(t))
    if kind == "faithful":
        x, y = (float(p) for p in parts)
        return traces.Faithful(x, y)
    raise InvalidArgumentError(f"unknown trace spec {text!r}")


def _parse_node(text: str):
    parts = [int(p) for p in text.split(",")]
    if len(parts) == 4:
        r, a, b, m = parts
        if m != a + b:
            raise InvalidArgumentError(
                f"node level {m} does not match a+b = {a + b}")
        parts = [r, a, b]
    if len(parts) != 3:
        raise InvalidArgumentError("node must be r,a,b or r,a,b,m")
    return tuple(parts)


def _cmd_trace(cfg: RunConfig, args) -> int:
    if args.action == "eval":
        spec = _parse_trace_spec(args.spec)
        node = _parse_node(args.node)
        value = traces.eval_trace(spec, node, k=args.k)
        _emit(str(value), cfg.out)
    elif args.action == "limits":
        smax = args.smax
        if smax < 10:
            raise InvalidArgumentError("need --smax >= 10")
        pairs = [(s * s, max(1, round(args.alpha * s)))
                 for s in range(10, smax + 1, 10)]
        rows = traces.limit_table(pairs, traces.DEFAULT_TEST_NODES)
        table = [[row["r"], row["k"], row["alpha"], row["t"],
                  row["sup_error"]] for row in rows]
        if cfg.report == "csv":
            _emit(_csv(table, ["r", "k", "alpha", "t", "sup_error"]), cfg.out)
        else:
            _emit(_json({"rows": table}), cfg.out)
    else:
        raise InvalidArgumentError(f"unknown trace action {args.action!r}")
    return EXIT_OK


def _cmd_szekeres(cfg: RunConfig, args) -> int:
    if args.action == "v":
        t = float(args.params[0])
        _emit(repr(szekeres.v_of(t)), cfg.out)
        return EXIT_OK
    if args.action == "compare":
        import math
        r, k = (int(p) for p in args.params)
        exact = math.log(partitions.p2(r, k))
        approx = szekeres.log_p_asymptotic(r, k)
        rel = abs(exact - approx) / abs(exact)
        threshold = cfg.tolerance if cfg.tolerance is not None else 0.05
        payload = {"r": r, "k": k, "log_p2": exact, "asymptotic": approx,
                   "rel_error": rel, "threshold": threshold,
                   "ok": rel < threshold}
        if cfg.report == "json":
            _emit(_json(payload), cfg.out)
        else:
            _emit(f"log p2 = {exact:.6f}  asymptotic = {approx:.6f}  "
                  f"rel error = {rel:.6f}", cfg.out)
        return EXIT_OK if payload["ok"] else EXIT_VERIFICATION
    raise InvalidArgumentError(f"unknown szekeres action {args.action!r}")


def _cmd_bratteli(cfg: RunConfig, args) -> int:
    if args.filter == "quadrant":
        desc = groups.heisenberg()
        aset = growth.AdmissibleSet.make(desc, groups.heis_quadrant_support())
        ball = growth.grow(aset, cfg.depth, element_cap=cfg.element_cap)
        coeffs = {(0, 1, 0): 1, (0, 0, 1): 1}
    else:
        ball = _grown_ball(cfg)
        desc = ball.desc
        coeffs = {s: 1 for s in ball.aset.elements}
    dg = bratteli.BratteliDiagram.from_growth(ball, coeffs, cfg.depth)
    levels = [[groups.canonical_key(desc, x) for x in lv] for lv in dg.levels]
    edges = []
    for m in range(dg.depth):
        for src in dg.levels[m]:
            for dst, mult in sorted(dg.out_edges[m].get(src, {}).items()):
                edges.append([groups.canonical_key(desc, src),
                              groups.canonical_key(desc, dst), mult])
    _emit(_json({"levels": levels, "edges": edges}), cfg.out)
    return EXIT_OK


def _cmd_polytope(cfg: RunConfig, args) -> int:
    if args.action == "a17":
        if not args.set:
            raise InvalidArgumentError("polytope a17 needs --set")
        points = _load_set(groups.free_abelian(3), args.set)
        dims = {len(p) for p in points}
        if len(dims) != 1:
            raise InvalidArgumentError("points must share one dimension")
        rep = polytope.a17_check(points)
        _emit(_json(checks._jsonable(rep)), cfg.out)
        return EXIT_OK if rep["pass"] else EXIT_VERIFICATION
    if args.action == "simplex":
        alpha = tuple(args.params)
        spec = polytope.right_simplex(alpha)
        rep = polytope.a17_check(spec.support)
        payload = {
            "alpha": list(alpha),
            "has_interior_point": spec.has_interior_point,
            "unique_interior": spec.unique_interior,
            "interior_points": sorted(map(list, spec.interior_points)),
            "support_size": len(spec.support),
            "a17": checks._jsonable(rep),
        }
        if cfg.report == "json":
            _emit(_json(payload), cfg.out)
        else:
            _emit(f"alpha={alpha} interior={spec.unique_interior} "
                  f"a17={'pass' if rep['pass'] else 'fail'}", cfg.out)
        return EXIT_OK if rep["pass"] else EXIT_VERIFICATION
    raise InvalidArgumentError(f"unknown polytope action {args.action!r}")


def _cmd_realize(cfg: RunConfig, args) -> int:
    with open(args.matrix) as fh:
        B = json.load(fh)
    spec = free_realization.build(B)
    depth = cfg.depth if cfg.depth is not None else 4
    if depth > free_realization.DEFAULT_DEPTH_CAP:
        raise ResourceCapError(
            f"depth {depth} exceeds cap {free_realization.DEFAULT_DEPTH_CAP}")
    ball = free_realization.grow_ball(spec, depth + 1,
                                      element_cap=cfg.element_cap)
    transitions = []
    isolations = []
    for n in range(1, depth + 1):
        matches, matrix = free_realization.check_transition(spec, n, ball)
        transitions.append({"n": n, "matches": matches,
                            "matrix": [list(row) for row in matrix]})
        isolations.append({"n": n,
                           "isolated": free_realization.check_isolation(
                               spec, n, ball)})
    payload = {
        "matrix": [list(row) for row in spec.matrix],
        "primitivity_exponent": spec.primitivity_exponent,
        "support": sorted(spec.support, key=lambda w: (len(w), w)),
        "transitions": transitions,
        "isolations": isolations,
        "node_first_levels": [
            list(free_realization.node_first_levels(spec, ball, n))
            for n in range(1, depth + 2)],
    }
    _emit(_json(payload), cfg.out)
    ok = (all(t["matches"] for t in transitions)
          and all(i["isolated"] for i in isolations))
    return EXIT_OK if ok else EXIT_VERIFICATION


def _cmd_verify(cfg: RunConfig, args) -> int:
    partitions.PartitionTable.load()
    try:
        reports = checks.run_suite(args.suite)
    except KeyError:
        sys.stderr.write(
            f"unknown suite {args.suite!r}; known: "
            f"{', '.join(sorted(checks.SUITES))} or a check id\n")
        return EXIT_USAGE
    finally:
        partitions.PartitionTable.save()
    _emit(_json(reports), cfg.out)
    failing = [rep["check_id"] for rep in reports if rep["status"] != "pass"]
    if failing:
        sys.stderr.write(f"first failing check: {failing[0]}\n")
        return EXIT_VERIFICATION
    return EXIT_OK


# --- parser -------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conewalk",
        description="Walk-support growth, weights, traces, and the "
                    "acceptance matrix.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, report_default="json"):
        p.add_argument("--report", choices=("json", "csv", "table"),
                       default=report_default)
        p.add_argument("--out", default=None)
        p.add_argument("--element-cap", type=int,
                       default=growth.DEFAULT_ELEMENT_CAP)
        p.add_argument("--tolerance", type=float, default=None)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("balls", help="grow S^0..S^M and report levels")
    p.add_argument("--group", required=True)
    p.add_argument("--set", dest="set_path", default=None)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--ratio", type=int, default=None)
    p.add_argument("--census", type=int, default=None)
    common(p)

    p = sub.add_parser("heis", help="Heisenberg-specific closed forms")
    p.add_argument("action",
                   choices=("interval", "tildel", "gd", "nonnoe"))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--json", action="store_true")
    common(p, report_default="table")

    p = sub.add_parser("partitions", help="partition counts and slices")
    p.add_argument("action", choices=("p3", "slice"))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--csv", action="store_true")
    common(p)

    p = sub.add_parser("trace", help="trace evaluation and limits")
    p.add_argument("action", choices=("eval", "limits"))
    p.add_argument("--spec", default=None)
    p.add_argument("--node", default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--smax", type=int, default=60)
    p.add_argument("--csv", action="store_true")
    common(p)

    p = sub.add_parser("szekeres", help="implicit-function asymptotics")
    p.add_argument("action", choices=("v", "compare"))
    p.add_argument("params", nargs="+")
    p.add_argument("--json", action="store_true")
    common(p, report_default="table")

    p = sub.add_parser("bratteli", help="build layered diagrams")
    p.add_argument("action", choices=("build",))
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--filter", choices=("quadrant", "ball"),
                   default="quadrant")
    p.add_argument("--group", default=None)
    p.add_argument("--set", dest="set_path", default=None)
    common(p)

    p = sub.add_parser("polytope", help="gauges and solidity checks")
    p.add_argument("action", choices=("a17", "simplex"))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--set", default=None)
    common(p)

    p = sub.add_parser("realize", help="0-1 matrix realization on F2")
    p.add_argument("--matrix", required=True)
    p.add_argument("--depth", type=int, default=4)
    common(p)

    p = sub.add_parser("verify", help="run the acceptance matrix")
    p.add_argument("--suite", default=None)
    common(p)
    return parser


_HANDLERS = {
    "balls": _cmd_balls,
    "heis": _cmd_heis,
    "partitions": _cmd_partitions,
    "trace": _cmd_trace,
    "szekeres": _cmd_szekeres,
    "bratteli": _cmd_bratteli,
    "polytope": _cmd_polytope,
    "realize": _cmd_realize,
    "verify": _cmd_verify,
}


def dispatch(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    depth = getattr(args, "depth", None)
    if depth is not None and depth < 0:
        sys.stderr.write("depth must be nonnegative\n")
        return EXIT_USAGE
    element_cap = getattr(args, "element_cap", growth.DEFAULT_ELEMENT_CAP)
    if element_cap <= 0:
        sys.stderr.write("element cap must be positive\n")
        return EXIT_USAGE
    if args.subcommand == "verify" and not getattr(args, "suite", None):
        sys.stderr.write("verify needs --suite <name>\n")
        return EXIT_USAGE
    if getattr(args, "json", False):
        report = "json"
    elif getattr(args, "csv", False):
        report = "csv"
    else:
        report = getattr(args, "report", "json")

    cfg = RunConfig(
        subcommand=args.subcommand,
        group=getattr(args, "group", None),
        set_path=getattr(args, "set_path", None),
        depth=depth,
        report=report,
        out=getattr(args, "out", None),
        element_cap=element_cap,
        tolerance=getattr(args, "tolerance", None),
        seed=getattr(args, "seed", 0),
    )
    try:
        return _HANDLERS[args.subcommand](cfg, args)
    except InvalidArgumentError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ResourceCapError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_RESOURCE
    except VerificationError as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        return EXIT_VERIFICATION
    except FileNotFoundError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
