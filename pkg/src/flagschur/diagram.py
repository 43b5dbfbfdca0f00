"""Permutations, box diagrams and the combinatorics of descents.

A diagram is stored as a sorted tuple of columns, each column a strictly
increasing tuple of row indices.  Empty columns are dropped, so two diagrams
that differ only by column order or empty columns compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, NotADescent

Column = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation ``w(1), ..., w(n)``."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",") if t.strip()))
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.word)
        return ",".join(str(v) for v in self.word)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """``(self * other)(i) = self(other(i))``."""
        return Permutation(tuple(self.word[other.word[i] - 1] for i in range(self.n)))

    def times_s(self, k: int) -> "Permutation":
        """Right multiplication by the simple transposition ``s_k``."""
        w = list(self.word)
        w[k - 1], w[k] = w[k], w[k - 1]
        return Permutation(tuple(w))

    def length(self) -> int:
        w = self.word
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def descents(self) -> set[int]:
        return permutation_descents(self)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.word, start=1))


def permutation_descents(w: Permutation) -> set[int]:
    word = w.word
    return {k for k in range(1, len(word)) if word[k - 1] > word[k]}


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


def _canonical_columns(columns: Iterable[Iterable[int]]) -> tuple[Column, ...]:
    out = []
    for col in columns:
        col = tuple(int(r) for r in col)
        if any(r < 1 for r in col):
            raise ValueError(f"row indices must be positive: {col}")
        if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
            srt = tuple(sorted(set(col)))
            if len(srt) != len(col):
                raise ValueError(f"column repeats a row: {col}")
            col = srt
        if col:
            out.append(col)
    return tuple(sorted(out))


@dataclass(frozen=True)
class Diagram:
    """A finite multiset of columns of boxes, kept in canonical order."""

    columns: tuple[Column, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "columns", _canonical_columns(self.columns))

    @classmethod
    def from_boxes(cls, boxes: Iterable[tuple[int, int]]) -> "Diagram":
        by_col: dict[int, list[int]] = {}
        for i, j in boxes:
            by_col.setdefault(j, []).append(i)
        return cls(tuple(tuple(sorted(rows)) for rows in by_col.values()))

    def __len__(self) -> int:
        return sum(len(c) for c in self.columns)

    def __bool__(self) -> bool:
        return bool(self.columns)

    @property
    def size(self) -> int:
        return len(self)

    @property
    def ncols(self) -> int:
        return len(self.columns)

    @property
    def max_row(self) -> int:
        return max((c[-1] for c in self.columns), default=0)

    def boxes(self) -> list[tuple[int, int]]:
        return [(i, j) for j, col in enumerate(self.columns, start=1) for i in col]

    def __str__(self) -> str:
        return "[" + ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.columns) + "]"

    def to_text(self) -> str:
        """Column-list text, e.g. ``2,3;2,3,5;3``."""
        return ";".join(",".join(map(str, c)) for c in self.columns)

    def to_grid(self) -> str:
        rows = self.max_row
        lines = []
        for i in range(1, rows + 1):
            lines.append("".join("#" if i in col else "." for col in self.columns))
        return "\n".join(lines)


@dataclass(frozen=True)
class DescentWitness:
    k: int
    column_index: int  # 0-based position in canonical order
    border_cell: tuple[int, int]  # (row, 1-based column)


@dataclass(frozen=True)
class Classification:
    clear: bool
    transparent: bool
    translucent: bool


def rothe_diagram(w: Permutation) -> Diagram:
    winv = w.inverse()
    n = w.n
    boxes = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if j < w(i) and i < winv(j)]
    return Diagram.from_boxes(boxes)


def column_is_k_full(col: Column, k: int) -> bool:
    return k not in col or (k + 1) in col


def is_k_full(D: Diagram, k: int) -> bool:
    return all(column_is_k_full(c, k) for c in D.columns)


def _witness_ok(D: Diagram, idx: int, k: int) -> bool:
    wcol = D.columns[idx]
    if wcol[-1] != k:
        return False
    wset = set(wcol)
    for j, col in enumerate(D.columns):
        if j == idx or column_is_k_full(col, k):
            continue
        if not all(r in wset for r in col if r <= k + 1):
            return False
    return True


def descent_witness(D: Diagram, k: int) -> DescentWitness | None:
    found = [idx for idx, col in enumerate(D.columns) if col[-1] == k and _witness_ok(D, idx, k)]
    if not found:
        return None
    # witnesses must agree as sets, otherwise s_k D would depend on the choice
    first = D.columns[found[0]]
    if any(D.columns[i] != first for i in found[1:]):
        raise AssertionError(f"descent witnesses at {k} differ in {D}")
    return DescentWitness(k, found[0], (k, found[0] + 1))


@lru_cache(maxsize=None)
def _descents(D: Diagram) -> tuple[DescentWitness, ...]:
    ks = sorted({c[-1] for c in D.columns})
    out = []
    for k in ks:
        wit = descent_witness(D, k)
        if wit is not None:
            out.append(wit)
    return tuple(out)


def diagram_descents(D: Diagram) -> list[DescentWitness]:
    """Descents of ``D`` with their leftmost witness columns, sorted by ``k``."""
    return list(_descents(D))


def descent_set(D: Diagram) -> list[int]:
    return [w.k for w in _descents(D)]


def _swap_rows(col: Iterable[int], k: int) -> Column:
    return tuple(sorted(k + 1 if r == k else k if r == k + 1 else r for r in col))


@lru_cache(maxsize=None)
def apply_s_k(D: Diagram, k: int) -> Diagram:
    """Delete the border cell of the descent at ``k`` and swap rows ``k``, ``k+1``."""
    wit = descent_witness(D, k)
    if wit is None:
        raise NotADescent(f"{D} has no descent at {k}")
    cols = list(D.columns)
    cols[wit.column_index] = cols[wit.column_index][:-1]
    return Diagram(tuple(_swap_rows(c, k) for c in cols))


def is_clear(D: Diagram) -> bool:
    des = set(descent_set(D))
    return all(k in des or is_k_full(D, k) for k in range(1, D.max_row + 1))


@lru_cache(maxsize=None)
def is_transparent(D: Diagram) -> bool:
    if not D:
        return True
    if not is_clear(D):
        return False
    return all(is_transparent(apply_s_k(D, k)) for k in descent_set(D))


@lru_cache(maxsize=None)
def is_translucent(D: Diagram) -> bool:
    if D.ncols <= 1:
        return True
    if not is_clear(D):
        return False
    return all(is_translucent(apply_s_k(D, k)) for k in descent_set(D))


def classify(D: Diagram) -> Classification:
    return Classification(is_clear(D), is_transparent(D), is_translucent(D))


@lru_cache(maxsize=None)
def count_reduced_words(D: Diagram) -> int:
    if not D:
        return 1
    return sum(count_reduced_words(apply_s_k(D, k)) for k in descent_set(D))


@lru_cache(maxsize=None)
def _reduced_words(D: Diagram) -> tuple[tuple[int, ...], ...]:
    if not D:
        return ((),)
    out = []
    for k in descent_set(D):
        for word in _reduced_words(apply_s_k(D, k)):
            out.append(word + (k,))
    return tuple(out)


def reduced_words(D: Diagram, cap: int | None = None) -> list[tuple[int, ...]]:
    """All words ``(i_1, ..., i_l)`` with ``s_{i_1} ... s_{i_l} D`` empty.

    The last letter is the first operator applied to ``D``.  ``cap`` bounds the
    number of words; exceeding it raises :class:`CapExceeded` before any
    enumeration happens.
    """
    if cap is not None:
        total = count_reduced_words(D)
        if total > cap:
            raise CapExceeded(f"{total} reduced words exceed cap {cap}")
    return sorted(_reduced_words(D))


def repeat_columns(D: Diagram, m: int) -> Diagram:
    if m < 1:
        raise ValueError("repeat count must be positive")
    return Diagram(tuple(c for c in D.columns for _ in range(m)))


def permutation_reduced_words(w: Permutation) -> list[tuple[int, ...]]:
    """Reduced words of ``w`` with ``w = s_{i_1} ... s_{i_l}``."""
    if w.is_identity():
        return [()]
    out = []
    for k in sorted(w.descents()):
        for word in permutation_reduced_words(w.times_s(k)):
            out.append(word + (k,))
    return sorted(out)


def from_rows(rows: Sequence[str]) -> Diagram:
    """Build a diagram from grid lines, row 1 first, ``#`` marking a box."""
    boxes = [(i, j) for i, line in enumerate(rows, start=1) for j, ch in enumerate(line, start=1) if ch == "#"]
    return Diagram.from_boxes(boxes)
