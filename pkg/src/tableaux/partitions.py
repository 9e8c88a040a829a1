"""Integer partitions, Young-diagram geometry, hooks, and exact counting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator


class NotWeaklyDecreasingError(ValueError):
    """Part sequence is not weakly decreasing after zero removal."""


class InvalidBoxError(ValueError):
    """Box coordinate falls outside the diagram."""


class NotContainedError(ValueError):
    """Inner shape of a skew pair does not fit inside the outer one."""


class GuardExceededError(ValueError):
    """Operation would exceed its configured size guard."""


Box = tuple[int, int]  # (row, col), 0-based, English notation: row 0 on top


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers.

    Zeros are stripped on construction, so every value is canonical and
    the empty sequence is the empty partition. Instances are immutable
    and hashable.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for p in parts:
            if not isinstance(p, int):
                raise TypeError(f"parts must be integers, got {p!r}")
            if p < 0:
                raise ValueError(f"parts must be nonnegative, got {p}")
        cleaned = tuple(p for p in parts if p > 0)
        if any(cleaned[i] < cleaned[i + 1] for i in range(len(cleaned) - 1)):
            raise NotWeaklyDecreasingError(
                f"{list(parts)} is not weakly decreasing after zero removal"
            )
        object.__setattr__(self, "parts", cleaned)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return format_partition(self)

    @property
    def size(self) -> int:
        """Total number of boxes."""
        return sum(self.parts)

    @property
    def nrows(self) -> int:
        return len(self.parts)

    def part(self, row: int) -> int:
        """Length of ``row``, with rows past the bottom counting as 0."""
        return self.parts[row] if 0 <= row < len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        """True iff ``other``'s diagram fits inside this one, row by row."""
        return all(q <= self.part(r) for r, q in enumerate(other.parts))

    def conjugate(self) -> "Partition":
        """Transpose of the diagram: column lengths become row lengths."""
        if not self.parts:
            return self
        width = self.parts[0]
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(width)))

    def boxes(self) -> Iterator[Box]:
        """Box coordinates in row-reading order."""
        for r, length in enumerate(self.parts):
            for c in range(length):
                yield (r, c)

    def hook_length(self, row: int, col: int) -> int:
        """Boxes to the right in the row, plus below in the column, plus the box itself."""
        if not (0 <= row < len(self.parts) and 0 <= col < self.parts[row]):
            raise InvalidBoxError(f"box ({row}, {col}) is not in {self}")
        arm = self.parts[row] - col
        leg = sum(1 for p in self.parts[row + 1 :] if p > col)
        return arm + leg

    def hooks(self) -> Iterator[int]:
        """All hook lengths, in row-reading box order."""
        conj = self.conjugate().parts
        for r, length in enumerate(self.parts):
            for c in range(length):
                yield (length - c) + (conj[c] - r - 1)

    def as_skew(self) -> "SkewShape":
        return SkewShape(self, EMPTY)


EMPTY = Partition(())


@dataclass(frozen=True)
class SkewShape:
    """Boxes of ``outer`` not in ``inner``, the inner diagram top-left justified."""

    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise NotContainedError(f"{self.inner} is not contained in {self.outer}")

    def __str__(self):
        if self.inner.parts:
            return f"{self.outer}/{self.inner}"
        return str(self.outer)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def nrows(self) -> int:
        return self.outer.nrows

    def row_span(self, row: int) -> tuple[int, int]:
        """Half-open column range of the boxes present in ``row``."""
        return self.inner.part(row), self.outer.part(row)

    def has_box(self, row: int, col: int) -> bool:
        return 0 <= row < self.outer.nrows and self.inner.part(row) <= col < self.outer.part(row)

    def boxes(self) -> Iterator[Box]:
        """Box coordinates in row-reading order (top to bottom, left to right)."""
        for r in range(self.outer.nrows):
            lo, hi = self.row_span(r)
            for c in range(lo, hi):
                yield (r, c)


def count_standard_tableaux(shape: Partition, *, max_size: int = 100) -> int:
    """Number of standard fillings of ``shape``, via the hook-length product.

    Accumulates |shape|! / prod(hooks) one exact factor at a time so
    intermediates stay small. The quotient is always an integer; a
    leftover denominator means the hook computation is broken and raises
    rather than returning garbage.
    """
    if shape.size > max_size:
        raise GuardExceededError(f"{shape} has {shape.size} boxes; counting guard is {max_size}")
    acc = Fraction(1)
    for k, hook in zip(range(1, shape.size + 1), shape.hooks()):
        acc *= Fraction(k, hook)
    if acc.denominator != 1:
        raise ArithmeticError(f"hook product does not divide {shape.size}! for {shape}")
    return acc.numerator


def partitions_of(n: int) -> Iterator[Partition]:
    """Every partition of ``n`` exactly once, in reverse-lexicographic order.

    The order is fixed and documented because CLI output and golden
    tests depend on it: ``(n)`` first, all-ones last, tuple comparison
    descending in between.
    """
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if n == 0:
        yield EMPTY
        return
    parts = [n]
    while True:
        yield Partition(tuple(parts))
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        rem = len(parts) - i  # trailing ones, plus one unit taken from parts[i]
        parts = parts[:i] + [parts[i] - 1]
        cap = parts[-1]
        while rem > 0:
            take = min(cap, rem)
            parts.append(take)
            rem -= take


def parse_partition(text: str) -> Partition:
    """Parse the bracket format used everywhere: ``[4,2,1]``; ``[]`` is empty.

    Whitespace around brackets, commas, and numbers is ignored; it never
    separates parts, so ``[4 2]`` is rejected rather than silently
    reinterpreted.
    """
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ValueError(f"expected bracketed parts like [4,2,1], got {text!r}")
    body = stripped[1:-1]
    if not body.strip():
        return EMPTY
    try:
        parts = tuple(int(chunk) for chunk in body.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None
    return Partition(parts)


def format_partition(shape: Partition) -> str:
    """Inverse of :func:`parse_partition`."""
    return "[" + ",".join(str(p) for p in shape.parts) + "]"
