"""Command-line interface: ``cosetlab analyze|chessboard|transversal|counts|catalog``.

Exit codes: 0 success, 1 a verification failed, 2 bad input (parse errors,
subgroup/membership violations, index condition, closure cap).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Any

from . import catalog as cat
from .counting import full_count_report
from .errors import ClosureCapExceeded, CosetLabError, InvariantViolation
from .graph import (
    build_graph,
    components,
    double_cosets,
    verify_complete_bipartite,
    verify_double_coset_correspondence,
    verify_ratio,
    verify_tile_uniformity,
)
from .group import PermutationGroup, default_cap, index, subgroup
from .perm import format_cycles, parse_cycles, parse_generator_list
from .render import to_ascii, to_dot
from .transversals import (
    Transversal,
    TransversalKind,
    extendable_transversal,
    hall_matching_transversal,
    left_right_transversal,
    left_transversal,
    right_transversal,
    verify_transversal,
)

CHECK_NAMES = ("complete_bipartite", "ratio_law", "double_coset_correspondence", "tile_uniformity")


class UsageError(CosetLabError, ValueError):
    pass


@dataclass
class AnalysisReport:
    group_order: int
    h_order: int
    k_order: int
    h_index: int
    k_index: int
    chessboards: list[dict[str, Any]]
    checks: dict[str, bool]
    transversal: dict[str, Any] | None = None
    counts: list[dict[str, Any]] | None = None
    violations: dict[str, list[str]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        for key in ("transversal", "counts"):
            if d[key] is None:
                del d[key]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> AnalysisReport:
        return cls(**{k: d.get(k) for k in ("group_order", "h_order", "k_order", "h_index",
                                            "k_index", "chessboards", "checks", "transversal",
                                            "counts")},
                   violations=d.get("violations", {}))


# ---------------------------------------------------------------------------
# input resolution

def _load_group(args) -> PermutationGroup:
    cap = args.cap if args.cap is not None else default_cap()
    if args.group and args.family:
        raise UsageError("use either --group or --family, not both")
    if args.group:
        return cat.load_group_file(args.group, cap=cap)
    if not args.family:
        raise UsageError("a group is required: --group FILE or --family NAME --n N")
    G = cat.catalog_group(_catalog_spec(args))
    if G.order > cap:
        raise ClosureCapExceeded(f"group of order {G.order} exceeds cap {cap}")
    return G


def _catalog_spec(args) -> cat.CatalogSpec:
    fam = args.family
    if fam == "quaternion8":
        return cat.CatalogSpec("quaternion8")
    if fam == "direct_product":
        if not args.factors:
            raise UsageError("direct_product needs --factors, e.g. cyclic:2,symmetric:3")
        return cat.CatalogSpec("direct_product",
                               factors=tuple(cat.parse_factor(f) for f in args.factors.split(",")))
    if args.n is None:
        raise UsageError(f"--family {fam} needs --n")
    return cat.CatalogSpec(fam, (args.n,))


def _subgroups(args, G: PermutationGroup, need_h: bool = True):
    if args.h is None:
        if need_h:
            raise UsageError("--h is required")
        return None, None
    H = subgroup(G, parse_generator_list(args.h, G.degree))
    K = H if args.k is None else subgroup(G, parse_generator_list(args.k, G.degree))
    return H, K


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands

def _board_dict(graph, b) -> dict[str, Any]:
    return {
        "s": b.s,
        "t": b.t,
        "double_coset_rep": format_cycles(b.double_coset_rep),
        "double_coset_size": b.double_coset_size,
        "tile_size": b.tile_size,
        "left_reps": [format_cycles(graph.left_vertices[i].representative) for i in b.left_indices],
        "right_reps": [format_cycles(graph.right_vertices[j].representative) for j in b.right_indices],
    }


def _transversal_dict(T: Transversal, report, extension=None) -> dict[str, Any]:
    d = {"kind": T.kind.value, "elements": T.cycles(), "verified": report.passed}
    if extension is not None:
        d["extension"] = [format_cycles(p) for p in extension]
    if report.violations:
        d["violations"] = list(report.violations)
    return d


def analyze(G, H, K, with_transversal: bool = False, with_counts: bool = False) -> AnalysisReport:
    graph = build_graph(G, H, K)
    boards = components(graph)
    reports = [
        verify_complete_bipartite(graph),
        verify_ratio(graph),
        verify_double_coset_correspondence(graph, double_cosets(G, H, K)),
        verify_tile_uniformity(graph),
    ]
    rep = AnalysisReport(
        group_order=G.order,
        h_order=H.order,
        k_order=K.order,
        h_index=index(G, H),
        k_index=index(G, K),
        chessboards=[_board_dict(graph, b) for b in boards],
        checks={r.name: r.passed for r in reports},
        violations={r.name: r.violations for r in reports if r.violations},
    )
    if with_transversal:
        if rep.h_index <= rep.k_index:
            T, ext = extendable_transversal(G, H, K)
            rep.transversal = _transversal_dict(T, verify_transversal(G, H, K, T), ext)
        else:
            T = left_transversal(G, H)
            rep.transversal = _transversal_dict(T, verify_transversal(G, H, K, T))
    if with_counts:
        rep.counts = []
        for b in boards:
            c = full_count_report(G, H, K, b.double_coset_rep)
            d = asdict(c)
            d["g"] = format_cycles(c.g)
            d["chessboard_t"] = b.t
            rep.counts.append(d)
    return rep


def cmd_analyze(args) -> int:
    G = _load_group(args)
    H, K = _subgroups(args, G)
    rep = analyze(G, H, K, args.with_transversal, args.with_counts)
    if args.format == "json":
        _emit(args, rep.to_json())
    elif args.format == "text":
        lines = [f"|G| = {rep.group_order}, |H| = {rep.h_order}, |K| = {rep.k_order}, "
                 f"|G:H| = {rep.h_index}, |G:K| = {rep.k_index}"]
        for b in rep.chessboards:
            lines.append(f"  K_{{{b['s']},{b['t']}}}  rep {b['double_coset_rep']}  "
                         f"size {b['double_coset_size']}  tile {b['tile_size']}")
        for name, ok in rep.checks.items():
            lines.append(f"{name}: {'PASS' if ok else 'FAIL'}")
            for v in rep.violations.get(name, []):
                lines.append(f"    {v}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        raise UsageError(f"analyze supports --format json|text, not {args.format}")
    return 0 if rep.passed else 1


def cmd_chessboard(args) -> int:
    G = _load_group(args)
    H, K = _subgroups(args, G)
    graph = build_graph(G, H, K)
    boards = components(graph)
    fmt = args.format or "ascii"
    if fmt == "ascii":
        _emit(args, to_ascii(graph, boards, cells=args.cells))
    elif fmt == "dot":
        _emit(args, to_dot(graph, boards))
    else:
        raise UsageError(f"chessboard supports --format ascii|dot, not {fmt}")
    return 0


def cmd_transversal(args) -> int:
    G = _load_group(args)
    H, K = _subgroups(args, G)
    mode = args.mode
    extension = None
    if mode == "left":
        T = left_transversal(G, H)
        report = verify_transversal(G, H, None, T)
    elif mode == "right":
        T = right_transversal(G, K)
        report = verify_transversal(G, K, K, T)
    elif mode == "left-right":
        T = left_right_transversal(G, H)
        report = verify_transversal(G, H, None, T)
    elif mode == "hall":
        T = hall_matching_transversal(G, H)
        report = verify_transversal(G, H, None, T)
    elif mode == "extendable":
        T, extension = extendable_transversal(G, H, K)
        report = verify_transversal(G, H, K, T)
        full = Transversal(T.elements + tuple(extension), TransversalKind.RIGHT, T.k_index, T.k_index)
        rfull = verify_transversal(G, K, K, full)
        if not rfull.passed:
            report.fail("T plus extension is not a right transversal: " + "; ".join(rfull.violations))
    else:
        raise UsageError(f"unknown mode {mode!r}")
    d = _transversal_dict(T, report, extension)
    if args.format == "json":
        _emit(args, json.dumps(d, indent=2) + "\n")
    else:
        lines = [f"{d['kind']} transversal ({len(T)} elements): {' '.join(d['elements'])}"]
        if extension is not None:
            lines.append(f"extension ({len(extension)} elements): {' '.join(d['extension']) or '-'}")
        lines.append(f"verified: {'yes' if report.passed else 'NO'}")
        lines += [f"    {v}" for v in report.violations]
        _emit(args, "\n".join(lines) + "\n")
    return 0 if report.passed else 1


def cmd_counts(args) -> int:
    G = _load_group(args)
    H, K = _subgroups(args, G)
    g = parse_cycles(args.g, G.degree) if args.g else G.identity
    c = full_count_report(G, H, K, g)
    d = asdict(c)
    d["g"] = format_cycles(g)
    if args.format == "json":
        _emit(args, json.dumps(d, indent=2) + "\n")
    else:
        _emit(args, "".join(f"{k}: {v}\n" for k, v in d.items()))
    return 0


def cmd_catalog(args) -> int:
    if not args.family:
        rows = ["family         parameter        order"]
        rows += ["cyclic         --n N            N",
                 "dihedral       --n N            2N",
                 f"symmetric      --n N (<= {cat.MAX_SYMMETRIC})   N!",
                 f"alternating    --n N (<= {cat.MAX_SYMMETRIC})   N!/2",
                 "quaternion8    -                8",
                 "direct_product --factors A:n,B:m  product"]
        _emit(args, "\n".join(rows) + "\n")
        return 0
    spec = _catalog_spec(args)
    G = cat.catalog_group(spec)
    if args.format == "json":
        d = {"family": spec.family, "name": str(spec), "order": G.order, "degree": G.degree,
             "generators": [format_cycles(g) for g in G.generators]}
        _emit(args, json.dumps(d, indent=2) + "\n")
    else:
        _emit(args, f"# {spec} of order {G.order}\n" + cat.format_group_text(G))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", metavar="FILE", help="group file (degree/gen lines)")
    common.add_argument("--family", choices=cat.FAMILIES, help="catalog group family")
    common.add_argument("--n", type=int, help="catalog family parameter")
    common.add_argument("--factors", help="direct_product factors, e.g. cyclic:2,symmetric:3")
    common.add_argument("--h", help='generators of H, e.g. "(1 2)(3 4), (1 3)"')
    common.add_argument("--k", help="generators of K (defaults to --h)")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    common.add_argument("--cap", type=int, help="closure cap (default $COSETLAB_CAP or 1000000)")

    p = argparse.ArgumentParser(prog="cosetlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="chessboards and structure checks")
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.add_argument("--with-transversal", action="store_true")
    a.add_argument("--with-counts", action="store_true")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("chessboard", parents=[common], help="ASCII or DOT rendering")
    c.add_argument("--format", choices=("ascii", "dot"), default="ascii")
    c.add_argument("--cells", choices=("size", "reps"), default="size")
    c.set_defaults(func=cmd_chessboard)

    t = sub.add_parser("transversal", parents=[common], help="construct and verify a transversal")
    t.add_argument("--mode", choices=("left", "right", "left-right", "extendable", "hall"),
                   default="left-right")
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.set_defaults(func=cmd_transversal)

    n = sub.add_parser("counts", parents=[common], help="right cosets of K meeting gH")
    n.add_argument("--g", help="element g in cycle notation (default identity)")
    n.add_argument("--format", choices=("text", "json"), default="text")
    n.set_defaults(func=cmd_counts)

    g = sub.add_parser("catalog", parents=[common], help="list or print catalog groups")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except InvariantViolation as e:
        print(f"cosetlab: internal check failed: {e}", file=sys.stderr)
        return 1
    except (CosetLabError, ValueError, OSError) as e:
        print(f"cosetlab: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
