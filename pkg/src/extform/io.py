"""Matrix and identifier serialization with exact rationals as "p/q" strings."""
from __future__ import annotations

import csv
import io as _io
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .catalog import ClauseSet, Graph, WeightedGraph
from .errors import ShapeError
from .rational import Matrix, fmt_rational, parse_rational, to_matrix


def label(x: Any) -> str:
    """Short deterministic label for a solution or instance payload."""
    if isinstance(x, Graph):
        return "E{" + ",".join(f"{u}-{v}" for u, v in x.edges) + "}"
    if isinstance(x, WeightedGraph):
        return "W{" + ",".join(f"{u}-{v}:{fmt_rational(w)}" for (u, v), w in zip(x.base.edges, x.weights)) + "}"
    if isinstance(x, ClauseSet):
        parts = [str(c) if w == 1 else f"{fmt_rational(w)}*({c})" for c, w in zip(x.clauses, x.weights)]
        return "L{" + "; ".join(parts) + "}"
    if isinstance(x, tuple) and all(isinstance(v, int) for v in x):
        return "".join(map(str, x)) if all(0 <= v <= 9 for v in x) else ",".join(map(str, x))
    return repr(x)


def matrix_to_json(entries: Sequence[Sequence], rows: Sequence[str] | None = None,
                   cols: Sequence[str] | None = None, **extra) -> str:
    doc = {
        "rows": list(rows) if rows is not None else [str(i) for i in range(len(entries))],
        "cols": list(cols) if cols is not None else [str(j) for j in range(len(entries[0]) if entries else 0)],
        "entries": [[fmt_rational(v) for v in r] for r in entries],
    }
    doc.update(extra)
    return json.dumps(doc, indent=1, sort_keys=True)


def matrix_to_csv(entries: Sequence[Sequence], rows: Sequence[str] | None = None,
                  cols: Sequence[str] | None = None) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if cols is not None:
        w.writerow([""] + list(cols))
    for i, r in enumerate(entries):
        cells = [fmt_rational(v) for v in r]
        w.writerow(([rows[i]] if rows is not None else []) + cells)
    return buf.getvalue()


def parse_matrix_json(text: str) -> tuple[Matrix, list[str], list[str]]:
    doc = json.loads(text)
    if isinstance(doc, list):
        doc = {"entries": doc}
    M = to_matrix([[parse_rational(v) for v in r] for r in doc["entries"]])
    rows = [str(r) for r in doc.get("rows", range(len(M)))]
    cols = [str(c) for c in doc.get("cols", range(len(M[0]) if M else 0))]
    if len(rows) != len(M) or (M and len(cols) != len(M[0])):
        raise ShapeError("row/col labels do not match entries")
    return M, rows, cols


def parse_matrix_csv(text: str) -> Matrix:
    """CSV cells are "p/q" literals.

    An empty top-left cell marks a labelled matrix (header row plus label
    column), which is how labelled matrices are written. Otherwise a header
    row or label column is skipped if it does not parse.
    """
    raw = [r for r in csv.reader(_io.StringIO(text)) if r]
    if raw and raw[0] and raw[0][0] == "":
        return to_matrix([[parse_rational(c) for c in r[1:]] for r in raw[1:]])

    def ok(cell):
        try:
            parse_rational(cell)
            return True
        except ValueError:
            return False

    if raw and not all(ok(c) for c in raw[0][1:] or raw[0]):
        raw = raw[1:]
    if raw and not ok(raw[0][0]):
        raw = [r[1:] for r in raw]
    return to_matrix([[parse_rational(c) for c in r] for r in raw])


def load_matrix(path: str | Path) -> Matrix:
    p = Path(path)
    text = p.read_text()
    if p.suffix.lower() == ".csv":
        return parse_matrix_csv(text)
    return parse_matrix_json(text)[0]


def rationals_to_json(v: Sequence) -> list[str]:
    return [fmt_rational(x) for x in v]


def graph_from_json(doc: dict) -> Graph:
    """``{"n": 3, "edges": [[1,2],[2,3]]}``."""
    return Graph.on(int(doc["n"]), [tuple(e) for e in doc["edges"]])


def clause_from_json(doc: dict):
    """``{"op": "xor", "vars": [1, 2], "b": 1}`` or ``{"op": "or", "lits": [[1, 0], [2, 1]]}``."""
    from .catalog import Clause, lit_clause, table_clause

    op = doc["op"]
    if op == "xor":
        return Clause("xor", tuple(sorted(int(v) for v in doc["vars"])), (int(doc["b"]),))
    if op in ("or", "and"):
        return lit_clause(op, [(int(v), int(neg)) for v, neg in doc["lits"]])
    if op == "table":
        vars_ = tuple(int(v) for v in doc["vars"])
        bits = [int(b) for b in doc["table"]]

        def fn(a):
            idx = 0
            for v in vars_:
                idx = 2 * idx + a[v]
            return bits[idx]

        return table_clause(fn, vars_)
    raise ValueError(f"unknown clause op {op!r}")


def clause_set_from_json(doc: dict) -> ClauseSet:
    """``{"clauses": [{..., "weight": "1/2"}, ...]}``; weights default to 1."""
    pairs = [(clause_from_json(c), parse_rational(c.get("weight", 1))) for c in doc["clauses"]]
    return ClauseSet.weighted(pairs)
