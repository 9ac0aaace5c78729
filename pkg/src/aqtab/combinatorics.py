"""Overlap, singularity, shared-value counts and the antitableau test.

overlap_by_definition walks the tableau geometry; overlap_by_formula is
the closed form min(p_i, q_{i+1}) + min(p_{i+1}, q_i).  The two agree on
construction-consistent partitions, which the oracle module verifies
exhaustively; the formula carries no guarantee for other partitions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LambdaParam, ParabolicDatum, validate_input
from .errors import BlockOutOfRangeError, MissingEntriesError
from .ranges import infinitesimal_character
from .tableau import PartitionedTableau


def _check_adjacent_index(i: int, r: int) -> None:
    if not 1 <= i <= r - 1:
        raise BlockOutOfRangeError(f"adjacent-block index {i} outside 1..{r - 1}")


def overlap_by_definition(t: PartitionedTableau, i: int) -> int:
    """Largest m such that the bottom m cells of block i sit strictly left
    of the top m cells of block i+1, cell by cell; 0 if none works."""
    _check_adjacent_index(i, t.r)
    upper = t.block_cells(i)
    lower = t.block_cells(i + 1)
    k = len(upper)
    for m in range(min(k, len(lower)), 0, -1):
        if all(upper[k - m + u].col < lower[u].col for u in range(m)):
            return m
    return 0


def overlap_by_formula(datum: ParabolicDatum, i: int) -> int:
    """Closed form of the overlap of adjacent blocks i, i+1."""
    _check_adjacent_index(i, datum.r)
    (p_i, q_i), (p_next, q_next) = datum.pairs[i - 1], datum.pairs[i]
    return min(p_i, q_next) + min(p_next, q_i)


def singularity(t: PartitionedTableau, i: int) -> int:
    """Number of equal-entry pairs between adjacent blocks i and i+1.

    Counted pair by pair so the value is meaningful in any range, not
    just where it coincides with the shared-value table.
    """
    _check_adjacent_index(i, t.r)
    if not t.has_entries:
        raise MissingEntriesError("singularity needs entries")
    upper = t.block_cells(i)
    lower = t.block_cells(i + 1)
    return sum(1 for a in upper for b in lower if a.entry == b.entry)


@dataclass(frozen=True, slots=True)
class SharedValueTable:
    """Counts of nu-values shared between blocks.

    adjacent[i-1] is the count for blocks (i, i+1); pairs maps every
    ordered pair (i, j), i < j, to its count.
    """

    adjacent: tuple[int, ...]
    pairs: dict[tuple[int, int], int]

    def pair(self, i: int, j: int) -> int:
        return self.pairs[(i, j)]


def block_value_sets(datum: ParabolicDatum, lam: LambdaParam) -> list[frozenset[int]]:
    """The doubled nu-values of each block, as sets (blocks never repeat
    a value internally)."""
    nu = infinitesimal_character(datum, lam)
    return [frozenset(h.doubled for h in block) for block in nu.blocks(datum)]


def shared_value_table(datum: ParabolicDatum, lam: LambdaParam) -> SharedValueTable:
    """Shared-value counts for every block pair, by set intersection."""
    validate_input(datum, lam)
    sets = block_value_sets(datum, lam)
    pairs = {
        (i, j): len(sets[i - 1] & sets[j - 1])
        for i in range(1, datum.r + 1)
        for j in range(i + 1, datum.r + 1)
    }
    adjacent = tuple(pairs[(i, i + 1)] for i in range(1, datum.r))
    return SharedValueTable(adjacent=adjacent, pairs=pairs)


def is_antitableau(t: PartitionedTableau) -> bool:
    """Entries weakly decrease along rows and strictly decrease down columns."""
    if not t.has_entries:
        raise MissingEntriesError("antitableau test needs entries")
    rows = t.rows()
    for row in rows:
        for a, b in zip(row, row[1:]):
            if not a.entry >= b.entry:
                return False
    for col in range(1, t.shape[0] + 1):
        column = [row[col - 1] for row in rows if len(row) >= col]
        for a, b in zip(column, column[1:]):
            if not a.entry > b.entry:
                return False
    return True
