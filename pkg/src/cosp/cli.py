"""Command line front end.

Exit protocol: 0 when the queried property holds, 1 when it fails (a
machine-readable witness or report goes to standard output), 2 on input
or usage errors.  All machine output is JSON on standard output; human
diagnostics go to standard error.  Identical input and flags produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import oracles
from .cographs import (
    PARALLEL,
    SERIES,
    Cotree,
    P4Witness,
    cotree,
    cotree_to_dot,
    cotree_to_graph,
    cotree_to_json,
    is_cograph,
    join_witness,
    non_neighbor_components,
    neighbor_split,
    parity_split_graph,
    select_universal_neighbor,
)
from .graphs import DisconnectedError, Graph, ParseError, format_graph, parse_graph
from .posets import CycleError, NWitness, Poset, format_poset, parse_poset
from .spdecomp import (
    NoEndpointError,
    endpoint_witness,
    is_nfree,
    linear_split_witness,
    sp_tree,
    sp_tree_to_dot,
    sp_tree_to_json,
    sp_tree_to_poset,
)

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_ERROR = 2


def _emit(obj: object) -> None:
    print(json.dumps(obj))


def _fail(message: str) -> int:
    print(message, file=sys.stderr)
    return EXIT_ERROR


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _relabel(ids, labels) -> list[int]:
    return [labels[i] for i in ids]


def _p4_json(w: P4Witness, labels) -> dict:
    return {"kind": "p4", "path": _relabel(w.path, labels)}


def _n_json(w: NWitness, labels) -> dict:
    return {"kind": "n", "quad": _relabel(w.quad, labels)}


def _tree_summary(t: Cotree) -> dict:
    series = parallel = 0
    depth = 0
    stack = [(t, 1)]
    while stack:
        node, d = stack.pop()
        depth = max(depth, d)
        if node.kind == SERIES:
            series += 1
        elif node.kind == PARALLEL:
            parallel += 1
        for child in node.children:
            stack.append((child, d + 1))
    return {"series": series, "parallel": parallel, "depth": depth}


def cmd_check(args) -> int:
    g, labels = parse_graph(_read_file(args.file))
    if g.order == 0:
        _emit({"cograph": True, "order": 0, "series": 0, "parallel": 0, "depth": 0})
        return EXIT_OK
    if args.property == "p4free":
        witness = oracles.brute_p4(g)
        result = cotree(g)
        if (witness is None) != isinstance(result, Cotree):
            raise RuntimeError("internal: path scan disagrees with the decomposition")
        if witness is not None:
            _emit(_p4_json(witness, labels))
            return EXIT_WITNESS
    else:
        result = cotree(g)
        if isinstance(result, P4Witness):
            _emit(_p4_json(result, labels))
            return EXIT_WITNESS
    summary = _tree_summary(result)
    _emit(
        {
            "cograph": True,
            "order": g.order,
            "series": summary["series"],
            "parallel": summary["parallel"],
            "depth": summary["depth"],
        }
    )
    return EXIT_OK


def cmd_cotree(args) -> int:
    g, labels = parse_graph(_read_file(args.file))
    if g.order == 0:
        return _fail("the decomposition needs at least one vertex")
    result = cotree(g)
    if isinstance(result, P4Witness):
        _emit(_p4_json(result, labels))
        return EXIT_WITNESS
    if args.dot:
        sys.stdout.write(cotree_to_dot(result, labels))
    else:
        _emit(cotree_to_json(result, labels))
    return EXIT_OK


def cmd_join(args) -> int:
    g, labels = parse_graph(_read_file(args.file))
    if g.order == 0:
        return _fail("the witness search needs at least one vertex")
    if not g.is_connected():
        return _fail("input graph is not connected")
    # Decide by the complement, not by the neighbor scan: on inputs that are
    # not P4-free the scan can surface a set that fails the join invariant.
    if len(g.co_components()) == 1:
        _emit({"witness": None, "reason": "complement connected"})
        msg = "no witness: complement connected"
        if g.order >= 2:
            msg += "; a finite connected graph of order two or more with "
            msg += "connected complement contains an induced four-vertex path"
        print(msg, file=sys.stderr)
        return EXIT_WITNESS
    w = join_witness(g)
    if w is None:
        raise RuntimeError("internal: split complement without a join witness")
    _emit(
        {
            "x": labels[w.x],
            "universal_neighbors": _relabel(w.universal_neighbors, labels),
            "split": [_relabel(side, labels) for side in w.split],
        }
    )
    return EXIT_OK


def cmd_poset(args) -> int:
    mode = "full" if args.full else "covers"
    p, labels = parse_poset(_read_file(args.file), mode=mode)
    if args.action == "nfree":
        decision = is_nfree(p, method="modules")
        w = oracles.brute_n(p)
        if decision != (w is None):
            raise RuntimeError("internal: module criterion disagrees with the quadruple scan")
        if w is not None:
            _emit(_n_json(w, labels))
            return EXIT_WITNESS
        _emit({"nfree": True})
        return EXIT_OK
    if args.action == "sptree":
        if p.order == 0:
            return _fail("the decomposition needs at least one element")
        result = sp_tree(p)
        if isinstance(result, NWitness):
            _emit(_n_json(result, labels))
            return EXIT_WITNESS
        if args.dot:
            sys.stdout.write(sp_tree_to_dot(result, labels))
        else:
            _emit(sp_tree_to_json(result, labels))
        return EXIT_OK
    if args.action == "linear-split":
        if p.order == 0:
            return _fail("the split search needs at least one element")
        w = linear_split_witness(p)
        if w is not None:
            _emit(
                {
                    "x": labels[w.x],
                    "lower": _relabel(w.lower, labels),
                    "middle": _relabel(w.middle, labels),
                    "upper": _relabel(w.upper, labels),
                }
            )
            return EXIT_OK
        nw = oracles.brute_n(p)
        if nw is not None:
            _emit(_n_json(nw, labels))
            return EXIT_WITNESS
        _emit({"linear_split": None})
        print("no element qualifies: the order is not a linear sum", file=sys.stderr)
        return EXIT_WITNESS
    if args.action == "endpoint":
        if args.x is None:
            return _fail("endpoint needs --x")
        try:
            x = labels.index(args.x)
        except ValueError:
            return _fail(f"element {args.x} does not occur in the input")
        try:
            w = endpoint_witness(p, x)
        except NoEndpointError as exc:
            nw = oracles.brute_n(p)
            if nw is not None:
                _emit(_n_json(nw, labels))
                return EXIT_WITNESS
            return _fail(f"{exc}; the order is not connected")
        _emit({"x": labels[w.x], "endpoint": labels[w.endpoint], "side": w.side})
        return EXIT_OK
    raise AssertionError(f"unhandled action {args.action!r}")


def cmd_gen(args) -> int:
    seed = args.seed
    kind = args.kind
    if args.offset and kind != "parity-split":
        return _fail("--offset only applies to parity-split")
    if kind in ("gnp", "poset"):
        if args.prob is None:
            return _fail(f"{kind} needs an edge probability argument")
        if not 0.0 <= args.prob <= 1.0:
            return _fail("edge probability must lie in [0, 1]")
    elif args.prob is not None:
        return _fail(f"{kind} takes no probability argument")
    if kind == "parity-split":
        if args.size < 1:
            return _fail("window size must be positive")
        sys.stdout.write(format_graph(parity_split_graph(args.size, args.offset)))
    elif kind == "cotree":
        if args.size < 1:
            return _fail("need at least one leaf")
        sys.stdout.write(format_graph(cotree_to_graph(oracles.rand_cotree(args.size, seed))))
    elif kind == "sptree":
        if args.size < 1:
            return _fail("need at least one leaf")
        sys.stdout.write(format_poset(sp_tree_to_poset(oracles.rand_sptree(args.size, seed))))
    elif kind == "gnp":
        sys.stdout.write(format_graph(oracles.rand_gnp(args.size, args.prob, seed)))
    elif kind == "poset":
        sys.stdout.write(format_poset(oracles.rand_poset(args.size, args.prob, seed)))
    else:
        raise AssertionError(f"unhandled kind {kind!r}")
    return EXIT_OK


# === oracle comparison sweeps ===


def _graph_payload(g: Graph) -> dict:
    return {"n": g.order, "edges": [list(e) for e in g.edges()]}


def _poset_payload(p: Poset) -> dict:
    return {"n": p.order, "relations": [list(r) for r in p.relations()]}


def check_graph_instance(g: Graph) -> str | None:
    """Compare every decomposition claim against the oracles on one graph.
    Returns a failure tag or None."""
    p4 = oracles.brute_p4(g)
    tree = cotree(g) if g.order else None
    recognized = g.order == 0 or isinstance(tree, Cotree)
    if recognized != (p4 is None):
        return "recognition disagrees with the path scan"
    if g.order <= oracles.MAX_DEF_CHECK and oracles.brute_cograph_def(g) != recognized:
        return "recognition disagrees with the defining property"
    if isinstance(tree, P4Witness) and not tree.validate(g):
        return "path certificate does not validate"
    if isinstance(tree, Cotree) and cotree_to_graph(tree) != g:
        return "decomposition tree does not rebuild its graph"
    if g.order == 0 or not g.is_connected():
        return None
    co_split = len(g.co_components()) > 1
    if recognized:
        w = join_witness(g)
        if (w is not None) != co_split:
            return "join witness existence disagrees with complement components"
        if w is not None and not w.validate(g):
            return "join witness does not validate"
        for x in range(g.order):
            for block in non_neighbor_components(g, x):
                if not g.is_module(block):
                    return "a non-neighbor block is not a module"
                split = neighbor_split(g, x, block)
                if not split.validate(g, x):
                    return "a neighbor split does not validate"
            if g.neighbors(x):
                if select_universal_neighbor(g, x) not in g.universal_neighbors(x):
                    return "selected neighbor is not universal"
    if g.order >= 4 and oracles.is_prime_graph(g) and p4 is None:
        return "a prime graph of order four or more has no induced path"
    return None


def check_poset_instance(p: Poset) -> str | None:
    """Compare every order-side claim against the oracles on one poset."""
    nw = oracles.brute_n(p)
    free = nw is None
    if is_nfree(p, method="modules") != free:
        return "module criterion disagrees with the quadruple scan"
    if is_nfree(p, method="brute") != free:
        return "brute route disagrees with the oracle scan"
    if p.order:
        tree = sp_tree(p)
        if isinstance(tree, NWitness):
            if free:
                return "decomposition found an N in an N-free order"
            if not tree.validate(p):
                return "N certificate does not validate"
        else:
            if not free:
                return "decomposition missed an N"
            if sp_tree_to_poset(tree) != p:
                return "decomposition tree does not rebuild its order"
    cg = p.comparability_graph()
    if p.order <= oracles.MAX_MODULE_ENUM:
        if oracles.is_prime_poset(p) != oracles.is_prime_graph(cg):
            return "order primality disagrees with comparability-graph primality"
    if free and p.order >= 1 and p.is_connected():
        w = linear_split_witness(p)
        inc_split = len(p.incomparability_graph().components()) > 1
        if (w is not None) != inc_split:
            return "linear split existence disagrees with incomparability components"
        if w is not None and not w.validate(p):
            return "linear split does not validate"
        for x in range(p.order):
            ew = endpoint_witness(p, x)
            cand = p.split_candidates(x)
            if ew.endpoint != x and ew.endpoint not in cand.lower + cand.upper:
                return "chain endpoint is not a split candidate"
    return None


def cmd_oracle_compare(args) -> int:
    if args.max_graph_n > oracles.MAX_ENUM_GRAPH:
        return _fail(f"graph enumeration limited to order {oracles.MAX_ENUM_GRAPH}")
    if args.max_poset_n > oracles.MAX_ENUM_POSET:
        return _fail(f"poset enumeration limited to order {oracles.MAX_ENUM_POSET}")
    if args.max_graph_n < 0 or args.max_poset_n < 0:
        return _fail("bounds must be non-negative")
    graphs_checked = 0
    for n in range(args.max_graph_n + 1):
        for g in oracles.enumerate_graphs(n):
            tag = check_graph_instance(g)
            graphs_checked += 1
            if tag is not None:
                _emit({"ok": False, "kind": "graph", "check": tag, "payload": _graph_payload(g)})
                return EXIT_WITNESS
        print(f"graphs on {n} vertices: ok", file=sys.stderr)
    posets_checked = 0
    for n in range(args.max_poset_n + 1):
        for p in oracles.enumerate_posets(n):
            tag = check_poset_instance(p)
            posets_checked += 1
            if tag is not None:
                _emit({"ok": False, "kind": "poset", "check": tag, "payload": _poset_payload(p)})
                return EXIT_WITNESS
        print(f"orders on {n} elements: ok", file=sys.stderr)
    _emit({"ok": True, "graphs_checked": graphs_checked, "posets_checked": posets_checked})
    return EXIT_OK


# === argument parsing ===


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosp",
        description="Cograph and series-parallel order decomposition with certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether a graph file is a cograph")
    p.add_argument("file")
    p.add_argument(
        "--property",
        choices=("cograph", "p4free"),
        default="cograph",
        help="decision route: decomposition (cograph) or brute-force path scan (p4free)",
    )
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("cotree", help="print the decomposition tree of a graph file")
    p.add_argument("file")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON tree (default)")
    fmt.add_argument("--dot", action="store_true", help="DOT graph")
    p.set_defaults(handler=cmd_cotree)

    p = sub.add_parser("join", help="find a complement-split witness of a connected graph")
    p.add_argument("file")
    p.set_defaults(handler=cmd_join)

    p = sub.add_parser("poset", help="order-side checks on a relation file")
    p.add_argument("file")
    p.add_argument(
        "action",
        choices=("nfree", "sptree", "linear-split", "endpoint"),
    )
    mode = p.add_mutually_exclusive_group()
    mode.add_argument(
        "--covers", action="store_true", help="close the input transitively (default)"
    )
    mode.add_argument(
        "--full", action="store_true", help="require the input to be its own closure"
    )
    p.add_argument("--x", type=int, default=None, help="element for the endpoint action")
    p.add_argument("--dot", action="store_true", help="DOT output for the sptree action")
    p.set_defaults(handler=cmd_poset)

    p = sub.add_parser("gen", help="emit a generated instance in the text formats")
    p.add_argument("kind", choices=("parity-split", "cotree", "sptree", "gnp", "poset"))
    p.add_argument("size", type=int)
    p.add_argument("prob", type=float, nargs="?", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--offset", type=int, default=0, help="window start for parity-split")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("oracle-compare", help="exhaustively compare engines against oracles")
    p.add_argument("--max-graph-n", type=int, default=5)
    p.add_argument("--max-poset-n", type=int, default=4)
    p.set_defaults(handler=cmd_oracle_compare)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        return _fail(str(exc))
    except CycleError as exc:
        return _fail(str(exc))
    except DisconnectedError as exc:
        return _fail(str(exc))
    except OSError as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
