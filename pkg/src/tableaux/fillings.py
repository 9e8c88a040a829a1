"""Fillings of straight and skew shapes: validation, enumeration, weights."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .partitions import GuardExceededError, Partition, SkewShape


class EntryExceedsBoundError(ValueError):
    """Filling holds an entry above the requested variable bound."""


@dataclass(frozen=True)
class Filling:
    """One positive integer per box of a (possibly skew) shape.

    ``rows[r]`` lists the entries of row ``r`` left to right, covering
    only the boxes actually present, so its length is
    ``outer[r] - inner[r]``. Straight shapes are the ``inner = empty``
    case.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        outer, inner = self.shape.outer, self.shape.inner
        if len(rows) != outer.nrows:
            raise ValueError(f"expected {outer.nrows} rows for {self.shape}, got {len(rows)}")
        for r, row in enumerate(rows):
            want = outer.part(r) - inner.part(r)
            if len(row) != want:
                raise ValueError(f"row {r} of {self.shape} needs {want} entries, got {len(row)}")
            for v in row:
                if not isinstance(v, int) or v < 1:
                    raise ValueError(f"entries must be positive integers, got {v!r}")

    @classmethod
    def from_rows(
        cls, rows: Iterable[Iterable[int]], inner: Partition | Iterable[int] = ()
    ) -> "Filling":
        """Build a filling from per-row entry lists, inferring the outer shape."""
        inner_p = inner if isinstance(inner, Partition) else Partition(tuple(inner))
        rows_t = tuple(tuple(row) for row in rows)
        outer = Partition(tuple(inner_p.part(r) + len(row) for r, row in enumerate(rows_t)))
        return cls(SkewShape(outer, inner_p), rows_t)

    def __str__(self):
        return self.to_ascii()

    def entry(self, row: int, col: int) -> int:
        """Entry at absolute coordinate (row, col); the box must be present."""
        return self.rows[row][col - self.shape.inner.part(row)]

    def is_semistandard(self) -> bool:
        """Rows weakly increase left to right; columns strictly increase downward."""
        for row in self.rows:
            for a, b in zip(row, row[1:]):
                if a > b:
                    return False
        shape = self.shape
        for r, c in shape.boxes():
            if shape.has_box(r - 1, c) and self.entry(r - 1, c) >= self.entry(r, c):
                return False
        return True

    def is_standard(self) -> bool:
        """Semistandard and using each of 1..n exactly once."""
        entries = sorted(v for row in self.rows for v in row)
        return entries == list(range(1, self.shape.size + 1)) and self.is_semistandard()

    def weight(self, bound: int) -> tuple[int, ...]:
        """Multiplicity vector of width ``bound``: slot i-1 counts the i's."""
        counts = [0] * bound
        for row in self.rows:
            for v in row:
                if v > bound:
                    raise EntryExceedsBoundError(f"entry {v} exceeds bound {bound}")
                counts[v - 1] += 1
        return tuple(counts)

    def to_ascii(self) -> str:
        """One line per row, entries space-separated, inner boxes drawn as ``.``."""
        lines = []
        for r, row in enumerate(self.rows):
            cells = ["."] * self.shape.inner.part(r) + [str(v) for v in row]
            lines.append(" ".join(cells))
        return "\n".join(lines)


def _as_skew(shape: Partition | SkewShape) -> SkewShape:
    return shape if isinstance(shape, SkewShape) else shape.as_skew()


def enumerate_ssyt(shape: Partition | SkewShape, bound: int) -> Iterator[Filling]:
    """All semistandard fillings of ``shape`` with entries in 1..bound.

    Backtracks over boxes in row-reading order with per-box lower bounds
    (left neighbor, upper neighbor plus one), so fillings arrive in
    lexicographic order of their reading word, the iterator is lazy, and
    memory stays proportional to the number of boxes.
    """
    if bound < 1:
        raise ValueError(f"entry bound must be at least 1, got {bound}")
    skew = _as_skew(shape)
    boxes = list(skew.boxes())
    inner = skew.inner
    grid = [[0] * (hi - lo) for lo, hi in (skew.row_span(r) for r in range(skew.nrows))]

    def fill(k: int) -> Iterator[Filling]:
        if k == len(boxes):
            yield Filling(skew, tuple(tuple(row) for row in grid))
            return
        r, c = boxes[k]
        off = inner.part(r)
        low = 1
        if c > off:
            low = grid[r][c - 1 - off]
        if skew.has_box(r - 1, c):
            low = max(low, grid[r - 1][c - inner.part(r - 1)] + 1)
        for v in range(low, bound + 1):
            grid[r][c - off] = v
            yield from fill(k + 1)

    return fill(0)


def enumerate_syt(shape: Partition, *, max_boxes: int = 24) -> Iterator[Filling]:
    """All standard fillings of a straight shape, lexicographic by reading word.

    Same reading-order backtracking as :func:`enumerate_ssyt`, with each
    value used exactly once and entries capped by how many larger values
    the boxes to the right and below still need.
    """
    if shape.size > max_boxes:
        raise GuardExceededError(f"{shape} has {shape.size} boxes; enumeration guard is {max_boxes}")
    n = shape.size
    boxes = list(shape.boxes())
    conj = shape.conjugate().parts
    grid = [[0] * p for p in shape.parts]
    used = [False] * (n + 1)

    def fill(k: int) -> Iterator[Filling]:
        if k == n:
            yield Filling(shape.as_skew(), tuple(tuple(row) for row in grid))
            return
        r, c = boxes[k]
        low = 1 if c == 0 else grid[r][c - 1] + 1
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        high = n - (shape.parts[r] - 1 - c) - (conj[c] - 1 - r)
        for v in range(low, high + 1):
            if used[v]:
                continue
            used[v] = True
            grid[r][c] = v
            yield from fill(k + 1)
            used[v] = False

    return fill(0)


def bender_knuth(filling: Filling, index: int) -> Filling:
    """Involution swapping the multiplicities of ``index`` and ``index + 1``.

    An entry equal to ``index`` is free when no ``index + 1`` sits
    directly below it; an ``index + 1`` is free when no ``index`` sits
    directly above. Within each row the free small entries form a run
    immediately followed by the free large ones; a run of ``a`` small
    and ``b`` large becomes ``b`` small and ``a`` large. Everything else
    stays put, so applying the operation twice returns the input.
    """
    if index < 1:
        raise ValueError(f"index must be at least 1, got {index}")
    if not filling.is_semistandard():
        raise ValueError("operation is only defined on semistandard fillings")
    small, large = index, index + 1
    shape = filling.shape
    new_rows = [list(row) for row in filling.rows]
    for r, row in enumerate(filling.rows):
        off = shape.inner.part(r)
        free_small = []
        free_large = []
        for j, v in enumerate(row):
            c = off + j
            if v == small:
                if not (shape.has_box(r + 1, c) and filling.entry(r + 1, c) == large):
                    free_small.append(j)
            elif v == large:
                if not (shape.has_box(r - 1, c) and filling.entry(r - 1, c) == small):
                    free_large.append(j)
        slots = free_small + free_large  # small entries sit left of large ones
        flip = len(free_large)
        for pos, j in enumerate(slots):
            new_rows[r][j] = small if pos < flip else large
    return Filling(shape, tuple(tuple(row) for row in new_rows))
