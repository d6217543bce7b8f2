"""Text renderings of a coset graph: Graphviz DOT and ASCII chessboards."""

from __future__ import annotations

from .graph import Chessboard, CosetGraph, chessboard_tiles, components
from .perm import format_cycles

__all__ = ["to_dot", "to_ascii"]


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: CosetGraph, boards: list[Chessboard] | None = None) -> str:
    """One ``cluster_<i>`` subgraph per chessboard; left nodes ``L_<cycles>``, right ``R_<cycles>``."""
    if boards is None:
        boards = components(graph)
    lines = ["graph coset_intersection {", "  rankdir=LR;", "  node [shape=box];"]
    for n, b in enumerate(boards):
        lines.append(f"  subgraph cluster_{n} {{")
        lines.append(f"    label={_q(f'K_{{{b.s},{b.t}}} rep {format_cycles(b.double_coset_rep)} tile {b.tile_size}')};")
        for i in b.left_indices:
            lines.append(f"    {_q('L_' + format_cycles(graph.left_vertices[i].representative))};")
        for j in b.right_indices:
            lines.append(f"    {_q('R_' + format_cycles(graph.right_vertices[j].representative))} [shape=ellipse];")
        lines.append("  }")
    for i, adj in enumerate(graph.adjacency):
        a = _q("L_" + format_cycles(graph.left_vertices[i].representative))
        for j in adj:
            lines.append(f"  {a} -- {_q('R_' + format_cycles(graph.right_vertices[j].representative))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_ascii(graph: CosetGraph, boards: list[Chessboard] | None = None, cells: str = "size") -> str:
    """Grid per chessboard, rows = right cosets of K, columns = left cosets of H.

    ``cells="size"`` prints each tile's cardinality, ``cells="reps"`` its
    smallest element in cycle notation.
    """
    if cells not in ("size", "reps"):
        raise ValueError(f"cells must be 'size' or 'reps', not {cells!r}")
    if boards is None:
        boards = components(graph)
    out = []
    for n, b in enumerate(boards):
        tiles = chessboard_tiles(b, graph)
        cols = [format_cycles(graph.left_vertices[i].representative) + "H" for i in b.left_indices]
        rows = ["K" + format_cycles(graph.right_vertices[j].representative) for j in b.right_indices]
        body = [[str(len(t)) if cells == "size" else format_cycles(min(t)) for t in r] for r in tiles]
        w0 = max(len(r) for r in rows)
        widths = [max(len(cols[c]), *(len(body[r][c]) for r in range(len(rows)))) for c in range(len(cols))]
        sep = "+" + "-" * (w0 + 2) + "+" + "+".join("-" * (w + 2) for w in widths) + "+"
        out.append(f"chessboard {n}: {b.t} rows x {b.s} columns, double coset "
                   f"K{format_cycles(b.double_coset_rep)}H of size {b.double_coset_size}, "
                   f"tile size {b.tile_size}")
        out.append(sep)
        out.append("| " + " " * w0 + " | " + " | ".join(c.ljust(w) for c, w in zip(cols, widths)) + " |")
        out.append(sep)
        for label, r in zip(rows, body):
            out.append("| " + label.ljust(w0) + " | " + " | ".join(x.ljust(w) for x, w in zip(r, widths)) + " |")
        out.append(sep)
        out.append("")
    return "\n".join(out)
