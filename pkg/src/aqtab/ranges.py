"""Infinitesimal-character weights and the positivity ladder.

The classification works on the weight nu = lambda + rho, block by block:
good and weakly good compare a block's last coordinate against the next
blocks' first coordinates, fair and weakly fair compare endpoint sums,
nice requires both endpoint comparisons, and mediocre is their
disjunction.  Everything is evaluated for every ordered pair of blocks,
so a single-block datum is vacuously in every range.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import HalfInt, LambdaParam, ParabolicDatum, Weight, validate_input


def rho(n: int) -> Weight:
    """Half-sum of positive roots: ((n-1)/2, (n-3)/2, ..., -(n-1)/2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return Weight(HalfInt(n - 1 - 2 * t) for t in range(n))


def infinitesimal_character(datum: ParabolicDatum, lam: LambdaParam) -> Weight:
    """nu = lambda (expanded to blocks) + rho(n)."""
    validate_input(datum, lam)
    expanded: list[int] = []
    for value, size in zip(lam.values, datum.block_sizes):
        expanded.extend([value] * size)
    return Weight(
        HalfInt(2 * v + r.doubled) for v, r in zip(expanded, rho(datum.n).coords)
    )


@dataclass(frozen=True, slots=True)
class RangeClass:
    """The full boolean vector of range predicates.

    fair and nice are incomparable strengthenings of weakly fair, so the
    vector carries more information than any single label.
    """

    is_good: bool
    is_weakly_good: bool
    is_nice: bool
    is_fair: bool
    is_weakly_fair: bool
    is_mediocre: bool

    @property
    def label(self) -> str:
        """Strongest satisfied label, in ladder order."""
        for name, flag in (
            ("Good", self.is_good),
            ("WeaklyGood", self.is_weakly_good),
            ("Nice", self.is_nice),
            ("Fair", self.is_fair),
            ("WeaklyFair", self.is_weakly_fair),
            ("Mediocre", self.is_mediocre),
        ):
            if flag:
                return name
        return "None"

    def to_dict(self) -> dict:
        return {
            "good": self.is_good,
            "weakly_good": self.is_weakly_good,
            "nice": self.is_nice,
            "fair": self.is_fair,
            "weakly_fair": self.is_weakly_fair,
            "mediocre": self.is_mediocre,
            "label": self.label,
        }


def classify(datum: ParabolicDatum, lam: LambdaParam) -> RangeClass:
    """Evaluate every range predicate over all block pairs i < j."""
    nu = infinitesimal_character(datum, lam)
    blocks = list(nu.blocks(datum))
    firsts = [b[0] for b in blocks]
    lasts = [b[-1] for b in blocks]

    good = weakly_good = nice = fair = weakly_fair = mediocre = True
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            good &= lasts[i] > firsts[j]
            weakly_good &= lasts[i] >= firsts[j]
            top_ok = firsts[i] >= firsts[j]
            bottom_ok = lasts[i] >= lasts[j]
            nice &= top_ok and bottom_ok
            mediocre &= top_ok or bottom_ok
            sum_i = firsts[i] + lasts[i]
            sum_j = firsts[j] + lasts[j]
            fair &= sum_i > sum_j
            weakly_fair &= sum_i >= sum_j
    return RangeClass(good, weakly_good, nice, fair, weakly_fair, mediocre)


def nice_gap_check(datum: ParabolicDatum, lam: LambdaParam) -> bool:
    """Nice range via adjacent gaps: lambda_{i+1} - lambda_i <= min(n_i, n_{i+1})."""
    validate_input(datum, lam)
    sizes = datum.block_sizes
    values = lam.values
    return all(
        values[i + 1] - values[i] <= min(sizes[i], sizes[i + 1])
        for i in range(datum.r - 1)
    )
