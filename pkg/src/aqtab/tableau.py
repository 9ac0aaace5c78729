"""Signed tableaux, quasitableaux and their block partitions.

build_signed_tableau realises the stepwise construction attached to a
parabolic datum: the first pair fills a column, every later pair adds at
most one sign to each row end (alternating, top to bottom, skipping a
row when the demanded sign has run out), leftover signs open new rows,
and rows are re-sorted to decreasing length after every step.  Cells
remember the step that placed them; that labelling is the block
partition every other module consumes.

Equal-length rows may trade places during a later step's re-sort, so
entries are attached to a block's cells in their *final* top-to-bottom
order, which is what makes each block a difference-one skew column.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import groupby

from .core import HalfInt, LambdaParam, ParabolicDatum, validate_input
from .errors import (
    BlockOutOfRangeError,
    InputError,
    InternalContradictionError,
    MissingSignsError,
)
from .ranges import infinitesimal_character

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True, slots=True)
class Cell:
    """One box: 1-based position, optional sign and entry, owning block."""

    row: int
    col: int
    sign: str | None
    entry: HalfInt | None
    block: int


@dataclass(frozen=True, slots=True)
class PartitionedTableau:
    """A Young diagram whose cells carry signs and/or entries plus a block index.

    Structural invariants (checked at construction): positions are unique
    and left-justified, row lengths weakly decrease, signs are all present
    or all absent and alternate within rows, entries are all present or
    all absent, each block touches a row at most once.  Validity of the
    partition itself (prefix unions of blocks are Young diagrams,
    difference-one entries) is row-order dependent and checked via
    :meth:`partition_violation`; the builders assert it.
    """

    cells: tuple[Cell, ...]
    r: int

    def __init__(self, cells, r: int) -> None:
        cells = tuple(sorted(cells, key=lambda c: (c.row, c.col)))
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "r", r)
        self._check_structure()

    def _check_structure(self) -> None:
        if self.r < 1:
            raise InputError("need at least one block")
        seen = set()
        rows: dict[int, list[Cell]] = {}
        for c in self.cells:
            if c.row < 1 or c.col < 1:
                raise InputError(f"cell position ({c.row},{c.col}) out of range")
            if (c.row, c.col) in seen:
                raise InputError(f"duplicate cell at ({c.row},{c.col})")
            if not 1 <= c.block <= self.r:
                raise InputError(f"block index {c.block} outside 1..{self.r}")
            seen.add((c.row, c.col))
            rows.setdefault(c.row, []).append(c)
        if not rows:
            raise InputError("empty tableau")
        if sorted(rows) != list(range(1, len(rows) + 1)):
            raise InputError("row indices must be 1..k without gaps")
        lengths = []
        for idx in range(1, len(rows) + 1):
            row = rows[idx]
            if [c.col for c in row] != list(range(1, len(row) + 1)):
                raise InputError(f"row {idx} is not left-justified")
            lengths.append(len(row))
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise InputError("row lengths must weakly decrease")

        signs = [c.sign for c in self.cells]
        if any(s is not None for s in signs):
            if any(s is None for s in signs):
                raise InputError("signs must be present on all cells or none")
            if any(s not in (PLUS, MINUS) for s in signs):
                raise InputError("signs must be '+' or '-'")
            for idx in range(1, len(rows) + 1):
                row = rows[idx]
                for a, b in zip(row, row[1:]):
                    if a.sign == b.sign:
                        raise InputError(f"signs do not alternate in row {idx}")
        entries = [c.entry for c in self.cells]
        if any(e is not None for e in entries) and any(e is None for e in entries):
            raise InputError("entries must be present on all cells or none")
        for block, group in groupby(
            sorted(self.cells, key=lambda c: (c.block, c.row)), key=lambda c: c.block
        ):
            rows_touched = [c.row for c in group]
            if len(rows_touched) != len(set(rows_touched)):
                raise InputError(f"block {block} occupies a row twice")

    # -- basic geometry ------------------------------------------------

    @property
    def shape(self) -> tuple[int, ...]:
        lengths: dict[int, int] = {}
        for c in self.cells:
            lengths[c.row] = max(lengths.get(c.row, 0), c.col)
        return tuple(lengths[i] for i in range(1, len(lengths) + 1))

    @property
    def has_signs(self) -> bool:
        return self.cells[0].sign is not None

    @property
    def has_entries(self) -> bool:
        return self.cells[0].entry is not None

    @property
    def kind(self) -> str:
        if self.has_signs and self.has_entries:
            return "Both"
        return "SignedOnly" if self.has_signs else "EntriesOnly"

    def rows(self) -> tuple[tuple[Cell, ...], ...]:
        out: list[list[Cell]] = [[] for _ in self.shape]
        for c in self.cells:
            out[c.row - 1].append(c)
        return tuple(tuple(sorted(row, key=lambda c: c.col)) for row in out)

    def block_cells(self, j: int) -> tuple[Cell, ...]:
        """Cells of block j in top-to-bottom order."""
        if not 1 <= j <= self.r:
            raise BlockOutOfRangeError(f"block index {j} outside 1..{self.r}")
        return tuple(sorted((c for c in self.cells if c.block == j), key=lambda c: c.row))

    def row_sign_strings(self) -> tuple[str, ...]:
        if not self.has_signs:
            raise MissingSignsError("tableau carries no signs")
        return tuple("".join(c.sign for c in row) for row in self.rows())

    def row_entries(self) -> tuple[tuple[HalfInt, ...], ...]:
        from .errors import MissingEntriesError

        if not self.has_entries:
            raise MissingEntriesError("tableau carries no entries")
        return tuple(tuple(c.entry for c in row) for row in self.rows())

    # -- partition validity --------------------------------------------

    def partition_violation(self) -> str | None:
        """None if every prefix union of blocks is a Young diagram in place
        and every block's entries step down by exactly one; else a reason."""
        rows = self.rows()
        for row_idx, row in enumerate(rows, start=1):
            blocks = [c.block for c in row]
            if any(a > b for a, b in zip(blocks, blocks[1:])):
                return f"blocks decrease along row {row_idx}"
        for j in range(1, self.r + 1):
            lengths = [sum(1 for c in row if c.block <= j) for row in rows]
            if any(a < b for a, b in zip(lengths, lengths[1:])):
                return f"prefix union of blocks 1..{j} is not a Young diagram"
        if self.has_entries:
            for j in range(1, self.r + 1):
                cells = self.block_cells(j)
                for a, b in zip(cells, cells[1:]):
                    if a.entry.doubled - b.entry.doubled != 2:
                        return f"block {j} entries do not decrease by one"
        return None


def build_signed_tableau(
    datum: ParabolicDatum, *, first_column: str = "plus-first"
) -> PartitionedTableau:
    """Signed tableau attached to the datum, blocks labelled by placement step.

    first_column chooses the order of the initial column ("plus-first" or
    "minus-first"); the two results are equivalent and canonicalize to the
    same form, which is verified by tests rather than assumed.
    """
    if first_column not in ("plus-first", "minus-first"):
        raise InputError(f"unknown first_column {first_column!r}")
    rows: list[list[tuple[str, int]]] = []
    for step, (p_j, q_j) in enumerate(datum.pairs, start=1):
        if step == 1:
            column = [PLUS] * p_j + [MINUS] * q_j
            if first_column == "minus-first":
                column.reverse()
            rows = [[(s, 1)] for s in column]
        else:
            plus_left, minus_left = p_j, q_j
            for row in rows:
                if plus_left == 0 and minus_left == 0:
                    break
                demanded = MINUS if row[-1][0] == PLUS else PLUS
                if demanded == PLUS and plus_left > 0:
                    row.append((PLUS, step))
                    plus_left -= 1
                elif demanded == MINUS and minus_left > 0:
                    row.append((MINUS, step))
                    minus_left -= 1
                # else: demanded sign ran out, skip this row
            rows.extend([(PLUS, step)] for _ in range(plus_left))
            rows.extend([(MINUS, step)] for _ in range(minus_left))
        rows.sort(key=len, reverse=True)  # stable: release order kept among equals
    cells = [
        Cell(row=i, col=k, sign=sign, entry=None, block=block)
        for i, row in enumerate(rows, start=1)
        for k, (sign, block) in enumerate(row, start=1)
    ]
    t = PartitionedTableau(cells, r=datum.r)
    _assert_partition(t)
    for j, (p_j, q_j) in enumerate(datum.pairs, start=1):
        placed = t.block_cells(j)
        if sum(1 for c in placed if c.sign == PLUS) != p_j or sum(
            1 for c in placed if c.sign == MINUS
        ) != q_j:
            raise InternalContradictionError(f"sign counts wrong in block {j}")
    return t


def _assert_partition(t: PartitionedTableau) -> None:
    reason = t.partition_violation()
    if reason is not None:
        raise InternalContradictionError(f"construction broke its partition: {reason}")


def build_quasitableau(
    datum: ParabolicDatum,
    lam: LambdaParam,
    *,
    signed: PartitionedTableau | None = None,
) -> PartitionedTableau:
    """Quasitableau for (datum, lambda): nu block j fills block j top to bottom.

    Runs in any range; whether the result is an antitableau is a separate
    question (combinatorics.is_antitableau).  A prebuilt signed tableau
    for the same datum may be passed to skip reconstruction.
    """
    validate_input(datum, lam)
    if signed is None:
        signed = build_signed_tableau(datum)
    nu = infinitesimal_character(datum, lam)
    entry_at: dict[tuple[int, int], HalfInt] = {}
    for j in range(1, datum.r + 1):
        block_values = nu.block(datum, j)
        cells = signed.block_cells(j)
        if len(cells) != len(block_values):
            raise InternalContradictionError(f"block {j} size mismatch")
        for cell, value in zip(cells, block_values):
            entry_at[(cell.row, cell.col)] = value
    filled = [replace(c, entry=entry_at[(c.row, c.col)]) for c in signed.cells]
    t = PartitionedTableau(filled, r=datum.r)
    _assert_partition(t)
    return t


def canonicalize(t: PartitionedTableau) -> PartitionedTableau:
    """Normal form for equality tests: rows sorted by length descending,
    then sign string ('+' before '-'), then entry sequence, then blocks.

    Two tableaux represent the same signed tableau (resp. quasitableau
    with partition) exactly when their canonical forms are equal.
    """

    def key(row: tuple[Cell, ...]):
        return (
            -len(row),
            tuple(c.sign or "" for c in row),
            tuple(c.entry.doubled if c.entry is not None else 0 for c in row),
            tuple(c.block for c in row),
        )

    ordered = sorted(t.rows(), key=key)
    cells = [
        replace(c, row=i, col=k)
        for i, row in enumerate(ordered, start=1)
        for k, c in enumerate(row, start=1)
    ]
    return PartitionedTableau(cells, r=t.r)


def check_q_consistent(
    t: PartitionedTableau, datum: ParabolicDatum
) -> tuple[bool, str | None]:
    """Does the block partition look like the stepwise construction for datum?

    Checks, for every block j: (1) the block carries exactly p_j pluses and
    q_j minuses; (2) whenever a row holding earlier blocks was passed over
    while block j continued below it, every row end of the prefix tableau
    from the first such row down to the last row block j touches shows the
    same sign.  Returns (ok, reason-for-first-violation).
    """
    if not t.has_signs:
        raise MissingSignsError("q-consistency is a signed-tableau property")
    if t.r != datum.r:
        return False, f"tableau has {t.r} blocks, datum has {datum.r}"
    rows = t.rows()
    for j, (p_j, q_j) in enumerate(datum.pairs, start=1):
        block = t.block_cells(j)
        pluses = sum(1 for c in block if c.sign == PLUS)
        minuses = len(block) - pluses
        if (pluses, minuses) != (p_j, q_j):
            return (
                False,
                f"block {j} has ({pluses},{minuses}) signs, expected ({p_j},{q_j})",
            )
    for j in range(2, datum.r + 1):
        # rows of the prefix tableau S^j, in display order
        prefix_rows = [
            (idx, [c for c in row if c.block <= j])
            for idx, row in enumerate(rows, start=1)
        ]
        prefix_rows = [(idx, row) for idx, row in prefix_rows if row]
        touched = [
            pos
            for pos, (_, row) in enumerate(prefix_rows)
            if any(c.block == j for c in row)
        ]
        if not touched:
            continue
        last_touched = touched[-1]
        skipped = [
            pos
            for pos, (_, row) in enumerate(prefix_rows)
            if pos < last_touched
            and any(c.block < j for c in row)
            and not any(c.block == j for c in row)
        ]
        if not skipped:
            continue
        first_skipped = skipped[0]
        end_signs = {
            prefix_rows[pos][1][-1].sign
            for pos in range(first_skipped, last_touched + 1)
        }
        if len(end_signs) > 1:
            return (
                False,
                f"block {j}: mixed row-end signs below the first skipped row",
            )
    return True, None
