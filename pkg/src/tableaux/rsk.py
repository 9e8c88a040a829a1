"""The Schensted correspondence: row insertion, the bijection, and its inverse."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from .fillings import Filling
from .partitions import Partition


class MalformedPairError(ValueError):
    """Tableau pair is not two straight standard tableaux of equal shape."""


@dataclass(frozen=True)
class Permutation:
    """One-line notation: ``images[i-1]`` is where ``i`` is sent."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return format_permutation(self)

    @property
    def n(self) -> int:
        return len(self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))


def _as_permutation(perm: "Permutation | Sequence[int]") -> Permutation:
    return perm if isinstance(perm, Permutation) else Permutation(tuple(perm))


@dataclass(frozen=True)
class RskPair:
    """Same-shape pair of standard tableaux: (insertion, recording)."""

    insertion: Filling
    recording: Filling

    def __post_init__(self):
        if self.insertion.shape != self.recording.shape or self.insertion.shape.inner.parts:
            raise MalformedPairError("need two straight tableaux of equal shape")
        if not (self.insertion.is_standard() and self.recording.is_standard()):
            raise MalformedPairError("both tableaux must be standard")

    @property
    def shape(self) -> Partition:
        return self.insertion.shape.outer


def row_insert(tableau: Filling, value: int) -> tuple[Filling, tuple[int, int]]:
    """Bump ``value`` into the first row and cascade displacements downward.

    In each row the incoming value replaces the leftmost strictly larger
    entry, which is then inserted into the next row; when nothing is
    larger it lands in a new box at the end of the row. Requires a
    tableau with distinct entries and ``value`` not among them. Returns
    the grown tableau and the coordinate of the created box.
    """
    rows = [list(row) for row in tableau.rows]
    v = value
    for r, row in enumerate(rows):
        idx = bisect_left(row, v)
        if idx == len(row):
            row.append(v)
            return Filling.from_rows(rows), (r, len(row) - 1)
        row[idx], v = v, row[idx]
    rows.append([v])
    return Filling.from_rows(rows), (len(rows) - 1, 0)


def rsk(perm: Permutation | Sequence[int]) -> RskPair:
    """Insert the one-line word left to right; record where each box appears.

    Step i row-inserts the i-th value into the insertion tableau and
    writes i into the recording tableau at the coordinate of the box the
    insertion created, so the two always share a shape.
    """
    perm = _as_permutation(perm)
    insertion = Filling.from_rows(())
    recording_rows: list[list[int]] = []
    for step, value in enumerate(perm.images, start=1):
        insertion, (r, _) = row_insert(insertion, value)
        if r == len(recording_rows):
            recording_rows.append([])
        recording_rows[r].append(step)
    return RskPair(insertion, Filling.from_rows(recording_rows))


def rsk_trace(perm: Permutation | Sequence[int]) -> list[tuple[Filling, Filling]]:
    """(insertion, recording) snapshots after 0, 1, ..., n insertions."""
    perm = _as_permutation(perm)
    insertion = Filling.from_rows(())
    recording_rows: list[list[int]] = []
    steps = [(insertion, insertion)]
    for step, value in enumerate(perm.images, start=1):
        insertion, (r, _) = row_insert(insertion, value)
        if r == len(recording_rows):
            recording_rows.append([])
        recording_rows[r].append(step)
        steps.append((insertion, Filling.from_rows(recording_rows)))
    return steps


def inverse_rsk(pair: RskPair) -> Permutation:
    """Recover the unique permutation the pair came from, by reverse bumping.

    For k = n down to 1: the box holding k in the recording tableau is
    the corner created at step k; eject the insertion entry there and
    bump it upward, each row passing along its rightmost entry smaller
    than the incoming one. Whatever leaves row 0 was the value inserted
    at step k.
    """
    t_rows = [list(row) for row in pair.insertion.rows]
    u_rows = [list(row) for row in pair.recording.rows]
    n = pair.shape.size
    images = [0] * n
    for step in range(n, 0, -1):
        r = next(i for i, row in enumerate(u_rows) if row and row[-1] == step)
        u_rows[r].pop()
        v = t_rows[r].pop()
        for q in range(r - 1, -1, -1):
            row = t_rows[q]
            j = bisect_left(row, v) - 1  # rightmost entry below v; exists in valid pairs
            row[j], v = v, row[j]
        images[step - 1] = v
        while t_rows and not t_rows[-1]:
            t_rows.pop()
            u_rows.pop()
    return Permutation(tuple(images))


def lis_length(perm: Permutation | Sequence[int]) -> int:
    """Longest increasing subsequence length, by patience-sorting pile counts.

    Deliberately shares nothing with the insertion machinery so the
    first-row-length law can be checked against an independent route.
    """
    perm = _as_permutation(perm)
    pile_tops: list[int] = []
    for v in perm.images:
        idx = bisect_left(pile_tops, v)
        if idx == len(pile_tops):
            pile_tops.append(v)
        else:
            pile_tops[idx] = v
    return len(pile_tops)


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation: digits glued together, or comma-separated."""
    compact = "".join(text.split())
    if not compact:
        return Permutation(())
    if "," in compact:
        try:
            values = tuple(int(chunk) for chunk in compact.split(","))
        except ValueError:
            raise ValueError(f"bad one-line notation: {text!r}") from None
    else:
        if not compact.isdigit():
            raise ValueError(f"bad one-line notation: {text!r}")
        values = tuple(int(ch) for ch in compact)
    return Permutation(values)


def format_permutation(perm: Permutation) -> str:
    """One-line notation: no separators up to n = 9, commas beyond."""
    if perm.n <= 9:
        return "".join(str(v) for v in perm.images)
    return ",".join(str(v) for v in perm.images)
