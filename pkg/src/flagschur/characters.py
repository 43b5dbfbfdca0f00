"""Characters of flagged Schur modules from the descent recursion, from reduced
words, and classical Schubert polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable

from .diagram import (
    Column,
    Diagram,
    Permutation,
    apply_s_k,
    descent_set,
    is_clear,
    is_translucent,
    is_transparent,
    reduced_words,
    rothe_diagram,
)
from .errors import NotClear, NotTranslucent, NotTransparent
from .poly import Polynomial, bergeron_sottile, divided_difference, zeta

METHODS = ("recursion", "reduced_words", "divided_difference", "oracle")


@dataclass(frozen=True)
class CharacterResult:
    character: Polynomial
    method: str
    diagram: Diagram

    @property
    def dimension(self) -> int:
        return sum(c for _, c in self.character.items())


def single_column_character(a: Column, n: int | None = None) -> Polynomial:
    """Sum of ``x_{b_1} ... x_{b_r}`` over strictly increasing ``b`` with ``b_i <= a_i``."""
    a = tuple(a)
    if n is not None and a and a[-1] > n:
        raise ValueError(f"column {a} does not fit in {n} rows")
    terms: dict[tuple[int, ...], int] = {}
    top = a[-1] if a else 0
    for b in combinations(range(1, top + 1), len(a)):
        if all(bi <= ai for bi, ai in zip(b, a)):
            e = [0] * (b[-1] if b else 0)
            for bi in b:
                e[bi - 1] = 1
            terms[tuple(e)] = 1
    return Polynomial(terms)


def _descent_sum(D: Diagram, char_of: Callable[[Diagram], Polynomial]) -> Polynomial:
    total = Polynomial.zero()
    for k in descent_set(D):
        total = total + Polynomial.var(k) * bergeron_sottile(char_of(apply_s_k(D, k)), k + 1)
    return total


@lru_cache(maxsize=None)
def _recursive(D: Diagram) -> Polynomial:
    if D.ncols <= 1:
        return single_column_character(D.columns[0] if D.columns else ())
    return zeta(_descent_sum(D, _recursive))


def character_recursive(D: Diagram) -> CharacterResult:
    """Character of a translucent diagram from the descent recursion."""
    if not is_translucent(D):
        raise NotTranslucent(f"{D} is not translucent; use the oracle")
    return CharacterResult(_recursive(D), "recursion", D)


def _word_value(word: tuple[int, ...]) -> Polynomial:
    f = Polynomial.one()
    for i in word:
        f = zeta(Polynomial.var(i) * bergeron_sottile(f, i + 1))
    return f


def character_via_reduced_words(D: Diagram, cap: int | None = 10**6) -> CharacterResult:
    if not is_transparent(D):
        raise NotTransparent(f"{D} is not transparent")
    total = Polynomial.zero()
    for word in reduced_words(D, cap=cap):
        total = total + _word_value(word)
    return CharacterResult(total, "reduced_words", D)


def staircase(n: int) -> Polynomial:
    return Polynomial.monomial(tuple(range(n - 1, -1, -1)))


def schubert_divided_difference(w: Permutation, choose: Callable[[list[int]], int] = min) -> Polynomial:
    """Schubert polynomial by divided differences from the staircase monomial.

    ``choose`` picks which available descent to strip next; the default takes
    the smallest, giving the lexicographically first path.
    """
    n = w.n
    f = staircase(n)
    # w0 = w * v with lengths adding; peel right descents off v
    v = w.inverse().compose(Permutation.longest(n))
    while not v.is_identity():
        k = choose(sorted(v.descents()))
        f = divided_difference(f, k)
        v = v.times_s(k)
    return f


@lru_cache(maxsize=None)
def _nst(w: Permutation) -> Polynomial:
    if w.is_identity():
        return Polynomial.one()
    total = Polynomial.zero()
    for k in sorted(w.descents()):
        total = total + Polynomial.var(k) * bergeron_sottile(_nst(w.times_s(k)), k + 1)
    return zeta(total)


def schubert_nst(w: Permutation) -> Polynomial:
    """Schubert polynomial from the increasing recursion with base ``S_id = 1``."""
    return _nst(w)


def schubert_rothe(w: Permutation) -> Polynomial:
    return character_recursive(rothe_diagram(w)).character


def recursion_rhs(D: Diagram, char_of: Callable[[Diagram], Polynomial]) -> Polynomial:
    """``R_1(S_D) + sum_k x_k R_{k+1}(S_{s_k D})`` with characters from ``char_of``."""
    return bergeron_sottile(char_of(D), 1) + _descent_sum(D, char_of)


def verify_recursion_identity(D: Diagram, char_of: Callable[[Diagram], Polynomial]) -> bool:
    if not is_clear(D):
        raise NotClear(f"{D} is not clear")
    return char_of(D) == recursion_rhs(D, char_of)
