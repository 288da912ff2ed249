"""Command-line interface.

Exit codes: 0 success, 1 counterexample or validation failure, 2 usage or
input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cluster import ClusterContext, classify, cluster_set, cluster_topology, decompose
from .errors import InputError, PreconditionError, ResourceError, SoftError
from .spacefile import SpaceBundle, fixture_names, fixture_path, parse_space_file

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _load(path: str) -> SpaceBundle:
    # a bare fixture name such as "example_4_7" resolves to the shipped file
    if not Path(path).exists() and "/" not in path and path.removesuffix(".json") in fixture_names():
        return parse_space_file(fixture_path(path))
    return parse_space_file(path)


def _context(bundle: SpaceBundle) -> ClusterContext:
    if bundle.topology is None or bundle.ideal is None:
        what = []
        if bundle.topology is None:
            what.append("topology")
        if bundle.ideal is None:
            what.append("ideal")
        raise PreconditionError("space file has no valid " + " or ".join(what))
    return ClusterContext(bundle.topology, bundle.ideal)


def _sample(bundle: SpaceBundle, path: str):
    from .harness.spaces import SpaceSample

    ctx = _context(bundle)
    return SpaceSample(bundle.carrier, ctx.topology, ctx.ideal, f"file {path}")


def cmd_validate(args) -> int:
    b = _load(args.file)
    tv, iv = b.topology_verdict, b.ideal_verdict
    lines = [
        f"carrier: parameters [{', '.join(b.carrier.parameters)}], "
        f"universe [{', '.join(b.carrier.universe)}], {b.carrier.cell_count} cells",
        f"sets: {len(b.sets)}",
        f"topology ({b.topology_source or 'absent'}): "
        + ("absent" if tv is None else ("VALID" if tv.valid else "INVALID") + f": {tv.describe()}"),
        f"ideal ({b.ideal_source or 'absent'}): "
        + ("absent" if iv is None else ("VALID" if iv.valid else "INVALID") + f": {iv.describe()}"),
    ]
    if b.topology is not None and b.topology_source == "subbase":
        lines.append(f"generated opens: {len(b.topology)}")
    data = {
        "valid": b.valid,
        "cells": b.carrier.cell_count,
        "sets": sorted(b.sets),
        "topology": None if tv is None else {
            "source": b.topology_source,
            "valid": tv.valid,
            "axiom": tv.axiom,
            "witness": [str(w) for w in tv.witness],
            "result": None if tv.result is None else str(tv.result),
            "opens": None if b.topology is None else len(b.topology),
        },
        "ideal": None if iv is None else {
            "source": b.ideal_source,
            "valid": iv.valid,
            "reason": iv.reason,
            "witness": [str(w) for w in iv.witness],
            "top": None if iv.top is None else str(iv.top),
        },
    }
    _emit(args, "\n".join(lines), data)
    return EXIT_OK if b.valid else EXIT_FAILED


def cmd_eval(args) -> int:
    from .expr import eval_expression

    b = _load(args.file)
    value = eval_expression(b, args.expr)
    _emit(args, str(value), {"expr": args.expr, "value": str(value)})
    return EXIT_OK


def cmd_cluster_topology(args) -> int:
    b = _load(args.file)
    ctx = _context(b)
    tc = cluster_topology(ctx)
    opens = [str(o) for o in tc.opens]
    if args.count:
        text = str(len(opens))
    else:
        text = f"{len(opens)} c-open soft sets"
        if args.list:
            text += "\n" + "\n".join(opens)
    data = {"count": len(opens), "finer_than_topology": True}
    if args.list:
        data["opens"] = opens
    _emit(args, text, data)
    return EXIT_OK


def cmd_decompose(args) -> int:
    b = _load(args.file)
    ctx = _context(b)
    r = b.resolve(args.set)
    cls = classify(ctx, r)
    c = cluster_set(ctx, r)
    try:
        d = decompose(ctx, r, args.kind)
    except PreconditionError as exc:
        _emit(args, f"cannot decompose {args.set}: {exc}",
              {"set": args.set, "kind": args.kind, "decomposed": False,
               "reason": str(exc), "c": str(c)})
        return EXIT_FAILED
    text = "\n".join([
        f"{args.set} = {r}",
        f"c({args.set}) = {c}",
        f"kind: {d.kind}",
        f"part1 = {d.part1}",
        f"part2 = {d.part2}  (ideal member)",
        f"c-closed={cls.c_closed} c-open={cls.c_open} c-crowded={cls.c_crowded} c-regular={cls.c_regular}",
    ])
    data = {
        "set": args.set, "kind": d.kind, "decomposed": True,
        "value": str(r), "c": str(c), "part1": str(d.part1), "part2": str(d.part2),
        "classification": {"c_closed": cls.c_closed, "c_open": cls.c_open,
                           "c_crowded": cls.c_crowded, "c_regular": cls.c_regular},
    }
    _emit(args, text, data)
    return EXIT_OK


def _law_list(text: str | None):
    if text is None:
        return None
    names = [n.strip() for n in text.split(",") if n.strip()]
    if not names:
        raise InputError("--laws needs at least one law name")
    return names


def cmd_check(args) -> int:
    from .harness import laws

    if args.random:
        if args.file is not None:
            raise InputError("check --random does not take a file")
        if args.cells is None or args.trials is None:
            raise InputError("check --random needs --cells and --trials")
        low = args.min_cells if args.min_cells is not None else args.cells
        scope = laws.Random(low, args.cells, args.trials, args.seed)
    else:
        if args.file is None:
            raise InputError("check needs a space file or --random")
        scope = laws.Single(_sample(_load(args.file), args.file), seed=args.seed)
    reports = laws.run_law_suite(scope, _law_list(args.laws), workers=args.workers)
    if args.format == "json":
        print(laws.render_json(reports))
    else:
        print(scope.describe())
        print(laws.render_text(reports))
    unexpected = [r for r in reports if r.expected and not r.holds]
    return EXIT_FAILED if unexpected else EXIT_OK


def cmd_falsify(args) -> int:
    from .harness import laws

    if args.exhaustive is not None and (args.seed is not None or args.trials is not None):
        raise InputError("use either --exhaustive or --seed/--trials, not both")
    if args.trials is not None or args.seed is not None:
        cells = args.cells if args.cells is not None else 6
        low = args.min_cells if args.min_cells is not None else cells
        scope = laws.Random(low, cells, args.trials or 1000, args.seed or 0)
    else:
        scope = laws.Exhaustive(args.exhaustive if args.exhaustive is not None else 3)
    result = laws.falsify(args.law, scope)
    if args.format == "json":
        print(json.dumps(result.to_dict(), indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(result.to_text())
    return EXIT_FAILED if result.found else EXIT_OK


def cmd_enumerate(args) -> int:
    from .harness.spaces import _preorder_topology_masks, carrier_shapes

    rows = []
    for p, x in carrier_shapes(args.cells, args.min_cells or 1):
        n = p * x
        if n > 4:
            raise ResourceError("enumeration is capped at 4 cells")
        topologies = len(_preorder_topology_masks(n))
        rows.append({"parameters": p, "elements": x, "cells": n,
                     "topologies": topologies, "spaces": topologies << n})
    total = sum(r["spaces"] for r in rows)
    lines = [f"{r['parameters']}x{r['elements']}: {r['topologies']} topologies, "
             f"{r['spaces']} (topology, ideal) pairs" for r in rows]
    lines.append(f"total: {total}")
    _emit(args, "\n".join(lines), {"shapes": rows, "total": total})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="softcluster",
        description="Finite soft topological spaces with soft ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[fmt], help="parse and validate a space file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("eval", parents=[fmt], help="evaluate an operator expression")
    p.add_argument("file")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("cluster-topology", parents=[fmt], help="build the cluster soft topology")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_cluster_topology)

    p = sub.add_parser("decompose", parents=[fmt], help="split a named set into a c-part and an ideal member")
    p.add_argument("file")
    p.add_argument("--set", required=True)
    p.add_argument("--kind", choices=("crowded", "regular", "closed"), required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check", parents=[fmt], help="run the law suite")
    p.add_argument("file", nargs="?")
    p.add_argument("--laws")
    p.add_argument("--random", action="store_true")
    p.add_argument("--cells", type=int)
    p.add_argument("--min-cells", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("falsify", parents=[fmt], help="search for a counterexample to one law")
    p.add_argument("--law", required=True)
    p.add_argument("--exhaustive", type=int, metavar="CELLS")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--cells", type=int)
    p.add_argument("--min-cells", type=int)
    p.set_defaults(func=cmd_falsify)

    p = sub.add_parser("enumerate", parents=[fmt], help="count topologies and spaces per carrier shape")
    p.add_argument("--cells", type=int, required=True)
    p.add_argument("--min-cells", type=int)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except SoftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
