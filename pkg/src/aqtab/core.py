"""Exact arithmetic and the shared parameter types.

All numeric data flows through :class:`HalfInt`, which stores twice the
mathematical value as a plain int, so every comparison in the library is
exact.  The parameter types are immutable value objects; they validate
their own invariants at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import (
    BlockOutOfRangeError,
    EmptyDatumError,
    InputError,
    LengthMismatchError,
    ZeroPairError,
)


@dataclass(frozen=True, order=True, slots=True)
class HalfInt:
    """A half-integer stored as its doubled value.

    ``HalfInt(3)`` is the number 3/2; use :meth:`from_int` for whole
    numbers.  Ordering compares the doubled values, hence is exact.
    """

    doubled: int

    def __post_init__(self) -> None:
        if not isinstance(self.doubled, int) or isinstance(self.doubled, bool):
            raise InputError(f"doubled value must be an int, got {self.doubled!r}")

    @classmethod
    def from_int(cls, value: int) -> "HalfInt":
        return cls(2 * value)

    @property
    def is_integral(self) -> bool:
        return self.doubled % 2 == 0

    def __add__(self, other: "HalfInt | int") -> "HalfInt":
        if isinstance(other, HalfInt):
            return HalfInt(self.doubled + other.doubled)
        if isinstance(other, int):
            return HalfInt(self.doubled + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: "HalfInt | int") -> "HalfInt":
        if isinstance(other, HalfInt):
            return HalfInt(self.doubled - other.doubled)
        if isinstance(other, int):
            return HalfInt(self.doubled - 2 * other)
        return NotImplemented

    def __rsub__(self, other: "HalfInt | int") -> "HalfInt":
        if isinstance(other, int):
            return HalfInt(2 * other - self.doubled)
        return NotImplemented

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """Inverse of str(): accepts ``"3"``, ``"-2"`` or ``"5/2"``."""
        text = text.strip()
        if text.endswith("/2"):
            return cls(int(text[:-2]))
        return cls.from_int(int(text))


def _as_int(value: object, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True, slots=True)
class ParabolicDatum:
    """Ordered (p_i, q_i) pairs fixing a theta-stable parabolic up to K-conjugacy."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs) -> None:
        normalised = []
        for pair in pairs:
            p, q = pair
            p = _as_int(p, "p_i")
            q = _as_int(q, "q_i")
            if p < 0 or q < 0:
                raise InputError(f"pair ({p},{q}) has a negative entry")
            if p == 0 and q == 0:
                raise ZeroPairError("pairs (0,0) are not allowed")
            normalised.append((p, q))
        if not normalised:
            raise EmptyDatumError("at least one (p,q) pair is required")
        object.__setattr__(self, "pairs", tuple(normalised))

    @property
    def r(self) -> int:
        return len(self.pairs)

    @property
    def p(self) -> int:
        return sum(p for p, _ in self.pairs)

    @property
    def q(self) -> int:
        return sum(q for _, q in self.pairs)

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(p + q for p, q in self.pairs)

    @property
    def offsets(self) -> tuple[int, ...]:
        """offsets[i-1] = number of coordinates before block i (1-based blocks)."""
        out, acc = [], 0
        for size in self.block_sizes:
            out.append(acc)
            acc += size
        return tuple(out)


@dataclass(frozen=True, slots=True)
class LambdaParam:
    """One integer per block: the differential of the 1-dimensional character."""

    values: tuple[int, ...]

    def __init__(self, values) -> None:
        object.__setattr__(
            self, "values", tuple(_as_int(v, "lambda_i") for v in values)
        )

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True, slots=True)
class Weight:
    """A length-n vector of half-integers with block slicing."""

    coords: tuple[HalfInt, ...]

    def __init__(self, coords) -> None:
        coords = tuple(coords)
        if not all(isinstance(c, HalfInt) for c in coords):
            raise InputError("weight coordinates must be HalfInt")
        object.__setattr__(self, "coords", coords)

    def __len__(self) -> int:
        return len(self.coords)

    def block(self, datum: ParabolicDatum, i: int) -> tuple[HalfInt, ...]:
        """Coordinates of block i (1-based) under the datum's block sizes."""
        if not 1 <= i <= datum.r:
            raise BlockOutOfRangeError(f"block index {i} outside 1..{datum.r}")
        start = datum.offsets[i - 1]
        return self.coords[start : start + datum.block_sizes[i - 1]]

    def blocks(self, datum: ParabolicDatum) -> Iterator[tuple[HalfInt, ...]]:
        for i in range(1, datum.r + 1):
            yield self.block(datum, i)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def validate_input(datum: ParabolicDatum, lam: LambdaParam) -> tuple[ParabolicDatum, LambdaParam]:
    """Check the cross invariants of a (datum, lambda) pair and hand it back.

    The constructors already enforce the per-type invariants; the only
    cross check is that lambda supplies one value per pair.
    """
    if len(lam.values) != datum.r:
        raise LengthMismatchError(
            f"lambda has {len(lam.values)} values for {datum.r} pairs"
        )
    return datum, lam
