"""Command-line front end.

Exit status: 0 on success, 1 on usage or resource errors, 2 when
``verify`` finds the prediction and the brute-force result disagree.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import autsearch, graphcore, theoremlab
from .cayley import BUDGET_ENV_VAR, build_cayley, default_budget
from .errors import CayleyAutError
from .perm import format_cycles
from .transposition import (
    TranspositionSet,
    complete_set,
    cycle_set,
    matching_set,
    parse_transpositions,
    path_set,
    spider_set,
    star_set,
)

EXIT_OK, EXIT_ERROR, EXIT_DISAGREE = 0, 1, 2

FAMILIES = ("star", "path", "cycle", "matching", "complete", "tree", "mbs", "bs")
_ALIASES = {"mbs": "cycle", "bs": "path"}
NAMED = ("petersen", "kneser", "odd", "hypercube", "octahedron", "cycle", "path",
         "complete", "star", "complete_bipartite", "complete_minus_edge", "empty")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def family_set(family: str, n: int) -> TranspositionSet:
    """Transposition set of a named family on n points.

    ``tree`` is the spider with legs 1, 2 and n-4 (asymmetric for n >= 7);
    ``matching`` needs an even n.  ``mbs`` and ``bs`` are aliases for
    ``cycle`` and ``path``.
    """
    family = _ALIASES.get(family, family)
    if family == "star":
        return star_set(n)
    if family == "path":
        return path_set(n)
    if family == "cycle":
        return cycle_set(n)
    if family == "matching":
        if n % 2:
            raise UsageError("matching needs an even number of points")
        return matching_set(n // 2)
    if family == "complete":
        return complete_set(n)
    if family == "tree":
        if n < 5:
            raise UsageError("tree family needs n >= 5")
        return spider_set(1, 2, n - 4)
    raise UsageError(f"unknown family {family!r}")


def _add_source(p: argparse.ArgumentParser, named: bool = False) -> None:
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--set", dest="tset", metavar="CYCLES",
                   help='explicit transposition set, e.g. "(1,2)(2,3)"')
    if named:
        p.add_argument("--named", choices=NAMED)
        p.add_argument("--params", type=int, nargs="*", default=None,
                       help="parameters for --named (default: --n when needed)")


def _add_common(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--budget-vertices", type=int, default=None,
                   help=f"vertex budget (default ${BUDGET_ENV_VAR} or 4000000)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cayleyaut", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomised drivers; core results never depend on it")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="construct a Cayley graph")
    _add_source(p)
    _add_common(p, ("text", "json", "dot"))

    p = sub.add_parser("aut", help="brute-force automorphism group")
    _add_source(p, named=True)
    _add_common(p)

    p = sub.add_parser("diameter", help="BFS diameter of a Cayley graph")
    _add_source(p)
    _add_common(p)
    p.add_argument("--levels", action="store_true", help="also report per-distance counts")

    p = sub.add_parser("census", help="4- and 6-cycle census through e, t, k")
    _add_source(p)
    _add_common(p)
    p.add_argument("--t", required=True, help='transposition, e.g. "(1,2)"')
    p.add_argument("--k", required=True)

    p = sub.add_parser("check-normal", help="is R(G) normal in Aut(Cay)?")
    _add_source(p)
    _add_common(p)

    p = sub.add_parser("predict", help="theorem-table prediction")
    _add_source(p)
    _add_common(p)

    p = sub.add_parser("verify", help="prediction vs brute force")
    _add_source(p)
    _add_common(p)

    p = sub.add_parser("named", help="build a named graph")
    _add_source(p, named=True)
    _add_common(p, ("text", "json", "dot"))
    return parser


def _transposition_source(args) -> TranspositionSet:
    has_family = args.family is not None
    has_set = args.tset is not None
    if getattr(args, "named", None) is not None:
        raise UsageError("--named cannot be combined with a transposition-set source")
    if has_family == has_set:
        raise UsageError("give exactly one of --family (with --n) or --set")
    if has_family:
        if args.n is None or args.n < 1:
            raise UsageError("--family needs a positive --n")
        return family_set(args.family, args.n)
    return parse_transpositions(args.tset, args.n)


def _named_graph(args) -> graphcore.SimpleGraph:
    if args.family is not None or args.tset is not None:
        raise UsageError("--named cannot be combined with --family or --set")
    params = args.params
    if params is None:
        params = [] if args.n is None else [args.n]
    return graphcore.build_named(args.named, *params)


def _budget(args) -> int:
    if args.budget_vertices is not None:
        if args.budget_vertices < 1:
            raise UsageError("--budget-vertices must be positive")
        return args.budget_vertices
    return default_budget()


def _emit(out, args, record: dict, text: str) -> None:
    if args.format == "json":
        out.write(json.dumps(record, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _cmd_build(args, out) -> int:
    g = build_cayley(_transposition_source(args), _budget(args))
    summary = g.summary()
    if args.format == "dot":
        out.write(g.to_dot())
        return EXIT_OK
    record = {"command": "build", "summary": summary}
    if args.format == "json":
        record["graph"] = json.loads(g.to_json())
    text = "\n".join(f"{k}: {v}" for k, v in summary.items())
    _emit(out, args, record, text)
    return EXIT_OK


def _cmd_aut(args, out) -> int:
    if getattr(args, "named", None) is not None:
        graph = _named_graph(args)
        source = args.named
        bound = args.budget_vertices or autsearch.DEFAULT_SEARCH_BOUND
        res = autsearch.automorphism_group(graph, bound=bound)
    else:
        s = _transposition_source(args)
        budget = _budget(args)
        g = build_cayley(s, budget)
        source = str(s)
        res = theoremlab.cayley_automorphisms(g, bound=budget)
    record = {"command": "aut", "source": source, "vertices": res.group.degree, **res.to_dict()}
    lines = [f"order: {res.order}",
             f"stabilizer_order: {res.stabilizer_order}",
             f"orbit_size: {res.orbit_size}",
             "generators:"] + [f"  {format_cycles(p)}" for p in res.group.generators]
    _emit(out, args, record, "\n".join(lines))
    return EXIT_OK


def _cmd_diameter(args, out) -> int:
    g = build_cayley(_transposition_source(args), _budget(args))
    d = g.diameter()
    record = {"command": "diameter", "source": str(g.base), "vertices": g.vertex_count, "diameter": d}
    text = str(d)
    if args.levels:
        counts = g.level_counts()
        record["level_counts"] = counts
        text += "\n" + "\n".join(f"{i}: {c}" for i, c in enumerate(counts))
    _emit(out, args, record, text)
    return EXIT_OK


def _parse_pair(text: str, n: int) -> tuple[int, int]:
    s = parse_transpositions(text, n)
    if len(s) != 1:
        raise UsageError(f"expected one transposition, got {text!r}")
    return s.sorted_pairs()[0]


def _cmd_census(args, out) -> int:
    s = _transposition_source(args)
    g = build_cayley(s, _budget(args))
    t, k = _parse_pair(args.t, s.n), _parse_pair(args.k, s.n)
    c = theoremlab.six_cycle_census(g, t, k)
    commute = not (set(t) & set(k))
    record = {"command": "census", "t": f"({t[0]},{t[1]})", "k": f"({k[0]},{k[1]})",
              "commute": commute, "four_cycles": c.four_cycles, "six_cycles": c.six_cycles,
              "distance3_vertices": c.distance3_vertices}
    text = (f"four_cycles: {c.four_cycles}\nsix_cycles: {c.six_cycles}\n"
            f"distance3_vertices: {c.distance3_vertices}")
    _emit(out, args, record, text)
    return EXIT_OK


def _cmd_check_normal(args, out) -> int:
    g = build_cayley(_transposition_source(args), _budget(args))
    aut = theoremlab.cayley_automorphisms(g)
    normal = theoremlab.check_normal(g, aut)
    record = {"command": "check-normal", "source": str(g.base), "normal": normal,
              "aut_order": str(aut.order)}
    _emit(out, args, record, f"normal: {str(normal).lower()}\naut_order: {aut.order}")
    return EXIT_OK


def _cmd_predict(args, out) -> int:
    pred = theoremlab.predict_aut(_transposition_source(args))
    record = {"command": "predict", **pred.to_dict()}
    text = "\n".join(f"{k}: {v}" for k, v in pred.to_dict().items())
    _emit(out, args, record, text)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    rep = theoremlab.verify_prediction(_transposition_source(args), _budget(args))
    record = {"command": "verify", **rep.to_dict()}
    predicted = rep.predicted.predicted_order
    verdict = "agree" if rep.agree else "DISAGREE"
    if rep.computed_only:
        verdict = "computed only (no prediction)"
    text = (f"{verdict}\nfamily: {rep.predicted.family}\n"
            f"orders: {predicted if predicted is not None else '?'}/{rep.computed_order}\n"
            f"normal: {rep.predicted.normal}/{rep.computed_normal}")
    _emit(out, args, record, text)
    return EXIT_OK if rep.agree else EXIT_DISAGREE


def _cmd_named(args, out) -> int:
    if args.named is None:
        raise UsageError("named needs --named")
    g = _named_graph(args)
    if args.format == "dot":
        out.write(g.to_dot(args.named))
        return EXIT_OK
    degrees = g.degrees()
    record = {"command": "named", "name": args.named, "vertices": g.vertex_count,
              "edges": g.edge_count, "regular": g.is_regular(),
              "graph": json.loads(g.to_json())}
    text = (f"name: {args.named}\nvertices: {g.vertex_count}\nedges: {g.edge_count}\n"
            f"degrees: {min(degrees, default=0)}..{max(degrees, default=0)}")
    _emit(out, args, record, text)
    return EXIT_OK


COMMANDS = {
    "build": _cmd_build,
    "aut": _cmd_aut,
    "diameter": _cmd_diameter,
    "census": _cmd_census,
    "check-normal": _cmd_check_normal,
    "predict": _cmd_predict,
    "verify": _cmd_verify,
    "named": _cmd_named,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.seed is not None:
            random.seed(args.seed)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_ERROR
    except (CayleyAutError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
