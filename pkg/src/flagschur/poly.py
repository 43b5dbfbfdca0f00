"""Exact sparse polynomials in ``x_1, x_2, ...`` and the operators acting on them.

Terms map a dense exponent tuple (trailing zeros trimmed) to a nonzero Python
int.  Everything here is exact; there is no floating point anywhere.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .errors import InternalError, NonzeroConstantTerm

Exponent = tuple[int, ...]


def _trim(exp: Iterable[int]) -> Exponent:
    exp = list(exp)
    while exp and exp[-1] == 0:
        exp.pop()
    return tuple(exp)


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    e = _trim(exp)
                    if any(v < 0 for v in e):
                        raise ValueError(f"negative exponent {exp}")
                    clean[e] = clean.get(e, 0) + int(c)
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> "Polynomial":
        # caller guarantees trimmed exponents and no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({(): 1})

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({(): int(c)} if c else {})

    @classmethod
    def var(cls, i: int) -> "Polynomial":
        if i < 1:
            raise ValueError("variables are x_1, x_2, ...")
        return cls._raw({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1) -> "Polynomial":
        return cls({tuple(exp): coeff})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @property
    def nvars(self) -> int:
        return max((len(e) for e in self._terms), default=0)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def coefficient(self, exp: Iterable[int]) -> int:
        return self._terms.get(_trim(exp), 0)

    # arithmetic

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            if not other:
                return Polynomial.zero()
            return Polynomial._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                if len(e1) < len(e2):
                    e = tuple(a + b for a, b in zip(e1 + (0,) * (len(e2) - len(e1)), e2))
                else:
                    e = tuple(a + b for a, b in zip(e1, e2 + (0,) * (len(e1) - len(e2))))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_indices(self, target: Callable[[int], int]) -> "Polynomial":
        """Apply ``x_i -> x_{target(i)}``, with ``target(i) == 0`` meaning ``x_i -> 0``."""
        out: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            new: list[int] = []
            dead = False
            for i, a in enumerate(e, start=1):
                if not a:
                    continue
                t = target(i)
                if t == 0:
                    dead = True
                    break
                if t > len(new):
                    new.extend([0] * (t - len(new)))
                new[t - 1] += a
            if dead:
                continue
            key = _trim(new)
            out[key] = out.get(key, 0) + c
        return Polynomial._raw({e: c for e, c in out.items() if c})

    def swap(self, k: int) -> "Polynomial":
        """Exchange ``x_k`` and ``x_{k+1}``."""
        return self.substitute_indices(lambda i: k + 1 if i == k else k if i == k + 1 else i)

    def evaluate(self, values: Mapping[int, int] | Iterable[int]) -> int:
        if not isinstance(values, Mapping):
            values = {i: v for i, v in enumerate(values, start=1)}
        total = 0
        for e, c in self._terms.items():
            term = c
            for i, a in enumerate(e, start=1):
                if a:
                    term *= values[i] ** a
            total += term
        return total

    # canonical forms

    def sorted_terms(self, nvars: int | None = None) -> list[tuple[Exponent, int]]:
        """Terms in graded lex order: higher degree first, then lex descending."""
        n = max(self.nvars, nvars or 0)
        padded = [(e + (0,) * (n - len(e)), c) for e, c in self._terms.items()]
        padded.sort(key=lambda t: (-sum(t[0]), tuple(-a for a in t[0])))
        return padded

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e, start=1) if a)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    def to_json_terms(self, nvars: int | None = None) -> list[dict]:
        return [{"exp": list(e), "coeff": c} for e, c in self.sorted_terms(nvars)]

    def to_json(self, nvars: int | None = None) -> str:
        return json.dumps(self.to_json_terms(nvars), separators=(",", ":"))

    @classmethod
    def from_json_terms(cls, terms: Iterable[Mapping]) -> "Polynomial":
        out: dict[Exponent, int] = {}
        for t in terms:
            e = _trim(t["exp"])
            out[e] = out.get(e, 0) + int(t["coeff"])
        return cls(out)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls.from_json_terms(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse sums of terms like ``2*x1^2*x3 - x2 + 4``."""
        s = text.replace(" ", "").replace("**", "^")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        out: dict[Exponent, int] = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            coeff = 1
            exp: dict[int, int] = {}
            for factor in body.split("*"):
                m = re.fullmatch(r"x_?\{?(\d+)\}?(?:\^(\d+))?", factor)
                if m:
                    i, a = int(m.group(1)), int(m.group(2) or 1)
                    exp[i] = exp.get(i, 0) + a
                elif factor.isdigit():
                    coeff *= int(factor)
                else:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
            n = max(exp, default=0)
            e = _trim(exp.get(i, 0) for i in range(1, n + 1))
            out[e] = out.get(e, 0) + (coeff if sign == "+" else -coeff)
        return cls(out)


def x(i: int) -> Polynomial:
    return Polynomial.var(i)


def varpi(i: int) -> Polynomial:
    """``x_1 + ... + x_i``."""
    return sum((Polynomial.var(j) for j in range(1, i + 1)), Polynomial.zero())


def evaluate_all_ones(f: Polynomial) -> int:
    return sum(c for _, c in f.items())


# Bergeron-Sottile operators and friends


def bs_index(k: int, i: int) -> int:
    """The operator on indices: ``i`` if ``i < k`` else ``i - 1``."""
    return i if i < k else i - 1


def bergeron_sottile(f: Polynomial, k: int) -> Polynomial:
    """``x_i -> x_i (i<k), 0 (i=k), x_{i-1} (i>k)``."""
    if k < 1:
        raise ValueError("k must be positive")
    return f.substitute_indices(lambda i: i if i < k else 0 if i == k else i - 1)


def zeta(f: Polynomial) -> Polynomial:
    """``f + R_1 f + R_1^2 f + ...``, defined only on polynomials without constant term."""
    if f.constant_term():
        raise NonzeroConstantTerm("zeta diverges on a nonzero constant term")
    total = Polynomial.zero()
    g = f
    while g:
        total = total + g
        g = bergeron_sottile(g, 1)
    return total


def _divide_by_binomial(g: Polynomial, k: int) -> Polynomial:
    """Exact quotient of ``g`` by ``x_k - x_{k+1}``."""
    rem = dict(g.items())
    quotient: dict[Exponent, int] = {}
    idx = k - 1
    while rem:
        # leading term in x_k: largest x_k-degree, ties broken deterministically
        e = max(rem, key=lambda t: (t[idx] if len(t) > idx else 0, t))
        c = rem[e]
        a = e[idx] if len(e) > idx else 0
        if a == 0:
            raise InternalError(f"division by x_{k} - x_{k + 1} left remainder")
        q = list(e) + [0] * max(0, k + 1 - len(e))
        q[idx] -= 1
        qe = _trim(q)
        quotient[qe] = quotient.get(qe, 0) + c
        # subtract c * q * (x_k - x_{k+1})
        for shift, sgn in ((idx, 1), (idx + 1, -1)):
            t = list(q)
            t[shift] += 1
            te = _trim(t)
            v = rem.get(te, 0) - sgn * c
            if v:
                rem[te] = v
            else:
                rem.pop(te, None)
    return Polynomial({e: c for e, c in quotient.items() if c})


def divided_difference(f: Polynomial, k: int) -> Polynomial:
    if k < 1:
        raise ValueError("k must be positive")
    return _divide_by_binomial(f - f.swap(k), k)


def _divide_by_variable(g: Polynomial, k: int) -> Polynomial:
    out: dict[Exponent, int] = {}
    for e, c in g.items():
        if len(e) < k or e[k - 1] == 0:
            raise InternalError(f"term {e} not divisible by x_{k}")
        t = list(e)
        t[k - 1] -= 1
        out[_trim(t)] = c
    return Polynomial._raw(out)


def trimming(f: Polynomial, k: int) -> Polynomial:
    """``(R_{k+1} f - R_k f) / x_k``."""
    return _divide_by_variable(bergeron_sottile(f, k + 1) - bergeron_sottile(f, k), k)


@dataclass(frozen=True)
class RankSequence:
    """Ranks ``d_1 < d_2 < ...`` of a partial flag (``d_0 = 0`` implicit)."""

    d: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(v) for v in self.d)
        if not d or d[0] < 1 or any(d[i] >= d[i + 1] for i in range(len(d) - 1)):
            raise ValueError(f"rank sequence must be strictly increasing and positive: {d}")
        object.__setattr__(self, "d", d)

    @classmethod
    def parse(cls, text: str) -> "RankSequence":
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))

    @classmethod
    def standard(cls, n: int) -> "RankSequence":
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.d)

    def rank(self, i: int) -> int:
        """``d_i``; beyond the stored ranks the sequence continues in steps of one."""
        if i <= 0:
            return 0
        if i <= len(self.d):
            return self.d[i - 1]
        return self.d[-1] + (i - len(self.d))

    def block(self, i: int) -> int:
        """``c_i = d_i - d_{i-1}``."""
        return self.rank(i) - self.rank(i - 1)


def bergeron_sottile_partial(f: Polynomial, k: int, d: RankSequence) -> Polynomial:
    """The partial-flag operator with the substitution exactly as printed:
    ``x_i -> x_i`` for ``i < d_k``, ``0`` for ``d_k <= i < d_{k+1}``,
    ``x_{i - c_{k+1}}`` for ``i >= d_{k+1}``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    lo, hi, shift = d.rank(k), d.rank(k + 1), d.block(k + 1)
    return f.substitute_indices(lambda i: i if i < lo else 0 if i < hi else i - shift)
