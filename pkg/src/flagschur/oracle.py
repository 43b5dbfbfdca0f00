"""Brute-force characters from products of minors.

The module ``E^D`` is realized as the span of the products of minors
``Delta_tau`` inside the polynomial ring in matrix entries ``z_ij``, where the
flag is encoded by setting ``z_ij = 0`` whenever ``j`` exceeds the bound for
row ``i``.  The character is the weight-graded rank of that span.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, Sequence

from .characters import CharacterResult
from .diagram import Column, Diagram
from .errors import TooLarge
from .linalg import rank
from .poly import Polynomial, RankSequence

DEFAULT_MAX_FILLINGS = 20_000
DEFAULT_MAX_TERMS = 10**6

# exponents of one variable in a product of minors never exceed the column count
_BITS = 8
_MASK = (1 << _BITS) - 1


@dataclass(frozen=True)
class FlagBound:
    """Largest admissible column index for each row ``1..nrows``."""

    bounds: tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        b = tuple(int(v) for v in self.bounds)
        if any(v < 0 for v in b) or any(b[i] > b[i + 1] for i in range(len(b) - 1)):
            raise ValueError(f"flag bounds must be nonnegative and weakly increasing: {b}")
        object.__setattr__(self, "bounds", b)

    @property
    def nrows(self) -> int:
        return len(self.bounds)

    @property
    def width(self) -> int:
        return max(self.bounds, default=0)

    def __call__(self, i: int) -> int:
        if i <= 0:
            return 0
        if i > len(self.bounds):
            raise ValueError(f"row {i} outside flag with {self.nrows} rows")
        return self.bounds[i - 1]

    def twist(self, k: int) -> "FlagBound":
        """The flag pulled back along the index operator: row ``i`` gets the
        bound of row ``i`` if ``i < k`` and of row ``i - 1`` otherwise."""
        return FlagBound(tuple(self(i if i < k else i - 1) for i in range(1, self.nrows + 1)),
                         f"{self.label}.twist({k})")

    @classmethod
    def standard(cls, n: int) -> "FlagBound":
        return cls(tuple(range(1, n + 1)), f"standard({n})")

    @classmethod
    def r_k(cls, n: int, k: int) -> "FlagBound":
        return cls.standard(n).twist(k)

    @classmethod
    def partial(cls, d: RankSequence | Sequence[int]) -> "FlagBound":
        d = d if isinstance(d, RankSequence) else RankSequence(tuple(d))
        return cls(d.d, f"partial{d.d}")

    @classmethod
    def partial_twisted(cls, d: RankSequence | Sequence[int], k: int) -> "FlagBound":
        return cls.partial(d).twist(k)

    @classmethod
    def unflagged(cls, n: int, nrows: int | None = None) -> "FlagBound":
        return cls((n,) * (nrows if nrows is not None else n), f"unflagged({n})")


Filling = tuple[tuple[int, ...], ...]


def column_fillings(col: Column, fb: FlagBound) -> Iterator[tuple[int, ...]]:
    """Strictly increasing entry tuples with entry ``i`` at most ``fb(col[i])``."""
    if not col:
        yield ()
        return
    caps = [fb(r) for r in col]

    def rec(pos: int, lo: int, acc: tuple[int, ...]):
        if pos == len(caps):
            yield acc
            return
        for v in range(lo, caps[pos] + 1):
            yield from rec(pos + 1, v + 1, acc + (v,))

    yield from rec(0, 1, ())


def count_column_fillings(col: Column, fb: FlagBound) -> int:
    return sum(1 for _ in column_fillings(col, fb))


def enumerate_fillings(D: Diagram, fb: FlagBound) -> list[Filling]:
    """All column-strict flagged fillings, lexicographically ordered."""
    if D.max_row > fb.nrows:
        raise ValueError(f"diagram {D} has rows beyond the flag ({fb.nrows} rows)")
    per_col = [list(column_fillings(c, fb)) for c in D.columns]
    return sorted(product(*per_col))


def filling_weight(tau: Filling) -> tuple[int, ...]:
    counts: dict[int, int] = defaultdict(int)
    for b in tau:
        for v in b:
            counts[v] += 1
    n = max(counts, default=0)
    return tuple(counts.get(i, 0) for i in range(1, n + 1))


class ZPolynomial:
    """Sparse integer polynomial in matrix entries ``z_ij``.

    A monomial is a packed integer holding one ``_BITS``-wide exponent per
    variable ``z_ij`` (slot ``(i - 1) * width + (j - 1)``), so multiplying
    monomials is integer addition.
    """

    __slots__ = ("terms", "width")

    def __init__(self, terms: dict[int, int], width: int):
        self.terms = terms
        self.width = width

    @classmethod
    def variable(cls, i: int, j: int, width: int) -> "ZPolynomial":
        return cls({1 << (_BITS * ((i - 1) * width + (j - 1))): 1}, width)

    @classmethod
    def one(cls, width: int) -> "ZPolynomial":
        return cls({0: 1}, width)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, ZPolynomial) and self.width == other.width and self.terms == other.terms

    def __add__(self, other: "ZPolynomial") -> "ZPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return ZPolynomial(out, self.width)

    def scale(self, c: int) -> "ZPolynomial":
        return ZPolynomial({m: v * c for m, v in self.terms.items()} if c else {}, self.width)

    def __mul__(self, other: "ZPolynomial") -> "ZPolynomial":
        return ZPolynomial(_mul_terms(self.terms, other.terms, None), self.width)

    def monomial_exponents(self, mono: int) -> dict[tuple[int, int], int]:
        out = {}
        slot = 0
        while mono:
            e = mono & _MASK
            if e:
                i, j = divmod(slot, self.width)
                out[(i + 1, j + 1)] = e
            mono >>= _BITS
            slot += 1
        return out

    def monomial_weight(self, mono: int) -> tuple[int, ...]:
        """Torus weight of a monomial: ``z_ij`` has weight ``x_j``."""
        counts: dict[int, int] = defaultdict(int)
        for (_, j), e in self.monomial_exponents(mono).items():
            counts[j] += e
        n = max(counts, default=0)
        return tuple(counts.get(j, 0) for j in range(1, n + 1))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items()):
            ex = self.monomial_exponents(mono)
            body = "*".join(f"z{i}{j}" if e == 1 else f"z{i}{j}^{e}" for (i, j), e in sorted(ex.items()))
            parts.append(f"{c}*{body}" if body else str(c))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ZPolynomial({self.to_text()!r})"


def _mul_terms(a: dict[int, int], b: dict[int, int], max_terms: int | None) -> dict[int, int]:
    out: dict[int, int] = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = m1 + m2
            out[m] = out.get(m, 0) + c1 * c2
        if max_terms is not None and len(out) > max_terms:
            raise TooLarge(f"expansion exceeds {max_terms} terms")
    return {m: c for m, c in out.items() if c}


def minor_terms(rows: Sequence[int], cols: Sequence[int], fb: FlagBound, width: int) -> dict[int, int]:
    """Expand the minor on ``rows`` x ``cols`` with ``z_ij = 0`` for ``j > fb(i)``."""
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise ValueError("minor must be square")
    return dict(_minor_terms(rows, cols, tuple(fb(r) for r in rows), width))


@lru_cache(maxsize=1 << 16)
def _minor_terms(rows: tuple[int, ...], cols: tuple[int, ...], caps: tuple[int, ...], width: int):
    r = len(rows)
    if r == 0:
        return ((0, 1),)
    slots = [[1 << (_BITS * ((i - 1) * width + (j - 1))) if j <= cap else 0 for j in cols]
             for i, cap in zip(rows, caps)]

    memo: dict[tuple[int, int], dict[int, int]] = {}

    def expand(pos: int, used: int) -> dict[int, int]:
        # Laplace expansion along row ``pos`` over the unused columns
        if pos == r:
            return {0: 1}
        key = (pos, used)
        if key in memo:
            return memo[key]
        out: dict[int, int] = {}
        sign = 1
        for c in range(r):
            if used >> c & 1:
                continue
            mono = slots[pos][c]
            if mono:
                for m, v in expand(pos + 1, used | (1 << c)).items():
                    t = m + mono
                    out[t] = out.get(t, 0) + sign * v
            sign = -sign
        memo[key] = out = {m: v for m, v in out.items() if v}
        return out

    return tuple(expand(0, 0).items())


def expand_delta(D: Diagram, tau: Filling, fb: FlagBound, max_terms: int | None = DEFAULT_MAX_TERMS,
                 width: int | None = None) -> ZPolynomial:
    """``Delta_tau``: the product over columns of the minors on rows ``a`` and columns ``b``."""
    if width is None:
        width = max(fb.width, max((max(b) for b in tau if b), default=0), 1)
    terms: dict[int, int] = {0: 1}
    for col, b in zip(D.columns, tau):
        if len(col) != len(b):
            raise ValueError(f"filling {b} does not match column {col}")
        if b and any(b[0] > fb(r) for r in col[:1]):
            # first row of the minor vanishes identically
            return ZPolynomial({}, width)
        m = minor_terms(col, b, fb, width)
        if not m:
            return ZPolynomial({}, width)
        terms = _mul_terms(terms, m, max_terms)
    return ZPolynomial(terms, width)


def _weight_monomial(w: tuple[int, ...]) -> Polynomial:
    return Polynomial.monomial(w)


def character_oracle(D: Diagram, fb: FlagBound | None = None, *,
                     max_fillings: int = DEFAULT_MAX_FILLINGS,
                     max_terms: int = DEFAULT_MAX_TERMS,
                     check_weights: bool = False,
                     modular: bool = True) -> CharacterResult:
    """Character as the sum over weights of ``rank(span of Delta_tau) * x^weight``."""
    if fb is None:
        fb = FlagBound.standard(max(D.max_row, 1))
    char = _oracle_poly(D, fb, max_fillings, max_terms, check_weights, modular)
    return CharacterResult(char, "oracle", D)


@lru_cache(maxsize=None)
def _oracle_poly(D: Diagram, fb: FlagBound, max_fillings: int, max_terms: int,
                 check_weights: bool, modular: bool) -> Polynomial:
    count = 1
    for c in D.columns:
        count *= count_column_fillings(c, fb)
        if count > max_fillings:
            raise TooLarge(f"{D} has more than {max_fillings} fillings under {fb.label or fb.bounds}")
    if count == 0:
        return Polynomial.zero()
    fillings = enumerate_fillings(D, fb)
    classes: dict[tuple[int, ...], list[Filling]] = defaultdict(list)
    for tau in fillings:
        classes[filling_weight(tau)].append(tau)
    width = max(fb.width, 1)
    terms: dict[tuple[int, ...], int] = {}
    for w in sorted(classes):
        group = classes[w]
        if len(group) == 1 and not check_weights:
            # a single flagged product of minors is never zero
            terms[w] = 1
            continue
        cols: dict[int, int] = {}
        rows = []
        for tau in group:
            z = expand_delta(D, tau, fb, max_terms, width)
            if check_weights:
                for mono in z.terms:
                    if z.monomial_weight(mono) != w:
                        raise AssertionError(f"Delta{tau} is not a weight vector of weight {w}")
            rows.append({cols.setdefault(m, len(cols)): c for m, c in z.terms.items()})
        r = rank(rows, len(cols), modular=modular)
        if r:
            terms[w] = r
    return Polynomial(terms)


def kernel_character(D: Diagram, k: int, base_fb: FlagBound | None = None, **caps) -> Polynomial:
    """Character of the kernel of the projection from the flag twisted at
    ``k+1`` to the flag twisted at ``k``."""
    if base_fb is None:
        base_fb = FlagBound.standard(max(D.max_row, 1))
    upper = character_oracle(D, base_fb.twist(k + 1), **caps).character
    lower = character_oracle(D, base_fb.twist(k), **caps).character
    diff = upper - lower
    if any(c < 0 for _, c in diff.items()):
        raise AssertionError(f"kernel character of {D} at k={k} has a negative coefficient: {diff}")
    return diff


Term = tuple[int, Diagram, Filling]


def check_exchange_identity(terms: Iterable[Term], fb: FlagBound) -> bool:
    """True iff the signed sum of the expanded products of minors vanishes."""
    terms = list(terms)
    width = max([fb.width] + [v for _, _, tau in terms for b in tau for v in b] + [1])
    total = ZPolynomial({}, width)
    for sign, D, tau in terms:
        total = total + expand_delta(D, tau, fb, None, width).scale(sign)
    return not total


def ordered_term(sign: int, columns: Sequence[Sequence[int]], entries: Sequence[Sequence[int]]) -> Term:
    """Build a term from columns and entries as drawn (any order, entries not
    necessarily sorted), folding the sort permutation into the sign."""
    pairs = []
    for col, ent in zip(columns, entries):
        col, ent = tuple(col), tuple(ent)
        if len(col) != len(ent):
            raise ValueError("column and entries differ in length")
        if len(set(ent)) != len(ent):
            return (0, Diagram(tuple(columns)), ())
        order = sorted(range(len(ent)), key=lambda i: ent[i])
        inv = sum(1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j])
        sign *= -1 if inv % 2 else 1
        pairs.append((tuple(sorted(col)), tuple(sorted(ent))))
    pairs.sort()
    D = Diagram(tuple(c for c, _ in pairs))
    return (sign, D, tuple(e for _, e in pairs))


class KernelCase(Enum):
    ISO = "iso"
    WEDGE2 = "wedge2"
    LINEAR = "linear"


@dataclass(frozen=True)
class KernelPrediction:
    case: KernelCase
    dimension: int
    lemma_dimension: int  # C(c_k, t) * dim R_{k+1}E^{a'} taken literally
    product_form: bool  # True when no row of the column lies below k+1


def partial_flag_kernel_case(a: Column, k: int, d: RankSequence) -> KernelPrediction:
    """Predict the kernel of the twisted projection for a single column.

    The case split follows whether ``k`` and ``k+1`` lie in the column.  When
    rows below ``k+1`` are present, the block entries in rows ``k``/``k+1``
    bound those rows from below, so the dimension is counted with that
    coupling rather than as a bare product.
    """
    a = tuple(sorted(a))
    if k not in a:
        return KernelPrediction(KernelCase.ISO, 0, 0, True)
    twisted = FlagBound.partial(RankSequence(tuple(d.rank(i) for i in range(1, max(len(d), a[-1]) + 1)))).twist(k + 1)
    top = (k, k + 1) if k + 1 in a else (k,)
    case = KernelCase.WEDGE2 if len(top) == 2 else KernelCase.LINEAR
    above = tuple(r for r in a if r < k)
    below = tuple(r for r in a if r > k + 1)
    c_k = d.block(k)
    rest = above + below
    lemma = comb(c_k, len(top)) * count_column_fillings(rest, twisted)

    block = range(d.rank(k - 1) + 1, d.rank(k) + 1)
    dim_above = count_column_fillings(above, twisted)
    coupled = 0
    for vals in combinations(block, len(top)):
        floor = vals[-1]
        coupled += sum(1 for f in column_fillings(below, twisted) if not f or f[0] > floor)
    return KernelPrediction(case, dim_above * coupled, lemma, not below)


def oracle_enabled_numba() -> bool:
    from ._kernels import HAVE_NUMBA

    return HAVE_NUMBA and os.environ.get("FLAGSCHUR_NUMBA", "1") not in ("0", "false", "no", "off")
