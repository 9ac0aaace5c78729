"""Text renderings of partitioned tableaux: ascii, latex and plain dicts.

Half-integers render as exact strings ("3/2", "-1/2", "4") everywhere;
no value ever passes through a float.
"""

from __future__ import annotations

from .tableau import Cell, PartitionedTableau


def _cell_text(cell: Cell, content: str) -> str:
    if content == "signs":
        return cell.sign
    if content == "entries":
        return str(cell.entry)
    return f"{cell.sign}{cell.entry}"


def ascii_tableau(
    t: PartitionedTableau, content: str = "auto", show_blocks: bool = False
) -> str:
    """Grid of cell texts, columns padded to equal width.

    content is "signs", "entries" or "auto" (entries when present).  With
    show_blocks each row is followed by a line of block indices.
    """
    if content == "auto":
        content = "entries" if t.has_entries else "signs"
    rows = t.rows()
    texts = [[_cell_text(c, content) for c in row] for row in rows]
    blocks = [[str(c.block) for c in row] for row in rows]
    ncols = max(len(row) for row in texts)
    widths = [
        max(
            max((len(row[i]) for row in texts if len(row) > i), default=1),
            max((len(row[i]) for row in blocks if len(row) > i), default=1)
            if show_blocks
            else 1,
        )
        for i in range(ncols)
    ]
    lines = []
    for text_row, block_row in zip(texts, blocks):
        lines.append(" ".join(s.rjust(widths[i]) for i, s in enumerate(text_row)))
        if show_blocks:
            lines.append(" ".join(s.rjust(widths[i]) for i, s in enumerate(block_row)))
    return "\n".join(lines)


def latex_tableau(t: PartitionedTableau, content: str = "auto") -> str:
    """Array-environment body: cells joined by ' & ', rows by ' \\\\'."""
    if content == "auto":
        content = "entries" if t.has_entries else "signs"
    body = []
    for row in t.rows():
        body.append(" & ".join(_cell_text(c, content) for c in row) + r" \\")
    return "\n".join(body)


def tableau_to_dict(t: PartitionedTableau) -> dict:
    """Lossless dump with stable key order."""
    return {
        "shape": list(t.shape),
        "blocks": t.r,
        "cells": [
            {
                "row": c.row,
                "col": c.col,
                "sign": c.sign,
                "entry": str(c.entry) if c.entry is not None else None,
                "block": c.block,
            }
            for c in t.cells
        ],
    }
