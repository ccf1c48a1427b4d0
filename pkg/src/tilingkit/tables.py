"""Reference tables for the counting families, rebuilt from the formulas.

Each table id names a fixed rectangular grid.  Cells the source table
leaves blank are still computed here but flagged as extrapolated, so the
published region can be compared cell for cell while the full rectangle
stays available.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import compstats as cs
from .sequences import a, a_s, fibonacci_k_conv


@dataclass(frozen=True)
class TableDoc:
    """A rendered table: values, the populated-region mask, and labels."""

    table_id: str
    title: str
    row_symbol: str
    col_symbol: str
    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]
    cells: tuple[tuple[int, ...], ...]
    populated: tuple[tuple[bool, ...], ...]

    def to_doc(self) -> dict:
        return {
            "schema": 1,
            "table": self.table_id,
            "title": self.title,
            "rows": {"symbol": self.row_symbol, "labels": list(self.row_labels)},
            "cols": {"symbol": self.col_symbol, "labels": list(self.col_labels)},
            "cells": [list(row) for row in self.cells],
            "extrapolated": [
                [not flag for flag in row] for row in self.populated
            ],
        }


@dataclass(frozen=True)
class _TableSpec:
    title: str
    row_symbol: str
    col_symbol: str
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Callable[[int, int], int]
    populated: Callable[[int, int], bool]


_SPECS: dict[str, _TableSpec] = {
    "T1": _TableSpec(
        title="two-toned tiling counts a(r,n)",
        row_symbol="r",
        col_symbol="n",
        rows=tuple(range(6)),
        cols=tuple(range(6)),
        value=lambda r, n: a(r, n),
        populated=lambda r, n: True,
    ),
    "T_as2": _TableSpec(
        title="cumulative sums a_s(2,n)",
        row_symbol="s",
        col_symbol="n",
        rows=tuple(range(9)),
        cols=tuple(range(5)),
        value=lambda s, n: a_s(s, 2, n),
        populated=lambda s, n: True,
    ),
    "T_diag": _TableSpec(
        title="diagonal values a_r(r,n)",
        row_symbol="r",
        col_symbol="n",
        rows=tuple(range(7)),
        cols=tuple(range(7)),
        value=lambda r, n: a_s(r, r, n),
        populated=lambda r, n: r + n <= 6,
    ),
    "T_F3": _TableSpec(
        title="3-step Fibonacci convolutions F(n,3,j)",
        row_symbol="j",
        col_symbol="n",
        rows=tuple(range(9)),
        cols=tuple(range(1, 10)),
        value=lambda j, n: fibonacci_k_conv(n, 3, j),
        populated=lambda j, n: j + n <= 9,
    ),
    "T_m": _TableSpec(
        title="palindromic tiling counts m(r,n)",
        row_symbol="r",
        col_symbol="n",
        rows=tuple(range(9)),
        cols=tuple(range(10)),
        value=lambda r, n: cs.m_pal(r, n),
        populated=lambda r, n: True,
    ),
}

TABLE_IDS = tuple(_SPECS)

# Cells highlighted in the diagonal table; they read off one of the
# constant-sum diagonals that also appear in the negatively indexed
# Fibonacci expansions.
T_DIAG_HIGHLIGHT = ((0, 3), (1, 2), (2, 1), (3, 0))


def build_table(table_id: str) -> TableDoc:
    """Compute the named table; raises ``KeyError`` for unknown ids."""
    spec = _SPECS[table_id]
    cells = tuple(
        tuple(spec.value(r, c) for c in spec.cols) for r in spec.rows
    )
    populated = tuple(
        tuple(spec.populated(r, c) for c in spec.cols) for r in spec.rows
    )
    return TableDoc(
        table_id=table_id,
        title=spec.title,
        row_symbol=spec.row_symbol,
        col_symbol=spec.col_symbol,
        row_labels=spec.rows,
        col_labels=spec.cols,
        cells=cells,
        populated=populated,
    )


def render_pretty(doc: TableDoc) -> str:
    """Fixed-width text rendering; extrapolated cells carry a ``*`` suffix."""
    header = [f"{doc.row_symbol}\\{doc.col_symbol}"] + [
        str(c) for c in doc.col_labels
    ]
    body: list[list[str]] = []
    any_extrapolated = False
    for label, row, mask in zip(doc.row_labels, doc.cells, doc.populated):
        rendered = []
        for value, pop in zip(row, mask):
            if pop:
                rendered.append(str(value))
            else:
                rendered.append(f"{value}*")
                any_extrapolated = True
        body.append([str(label)] + rendered)
    widths = [
        max(len(line[i]) for line in [header] + body)
        for i in range(len(header))
    ]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths))
             for line in [header] + body]
    out = f"{doc.table_id}: {doc.title}\n" + "\n".join(lines)
    if any_extrapolated:
        out += "\n(* extrapolated: computed beyond the published region)"
    return out + "\n"


def render_csv(doc: TableDoc) -> str:
    header = [f"{doc.row_symbol}/{doc.col_symbol}"] + [
        str(c) for c in doc.col_labels
    ]
    lines = [",".join(header)]
    for label, row in zip(doc.row_labels, doc.cells):
        lines.append(",".join([str(label)] + [str(v) for v in row]))
    return "\n".join(lines) + "\n"
