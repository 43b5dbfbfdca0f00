"""Acceptance suite: eight criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are printed
even under output capture.
"""

import json
import random
import time
from itertools import combinations
from pathlib import Path

import pytest

from flagschur.characters import (
    character_recursive,
    character_via_reduced_words,
    schubert_divided_difference,
    schubert_nst,
    single_column_character,
    verify_recursion_identity,
)
from flagschur.diagram import (
    Diagram,
    Permutation,
    all_permutations,
    apply_s_k,
    classify,
    is_clear,
    repeat_columns,
    rothe_diagram,
)
from flagschur.oracle import (
    FlagBound,
    KernelCase,
    character_oracle,
    check_exchange_identity,
    kernel_character,
    ordered_term,
    partial_flag_kernel_case,
)
from flagschur.poly import (
    Polynomial,
    RankSequence,
    bergeron_sottile,
    bergeron_sottile_partial,
    divided_difference,
    trimming,
)
from flagschur.sweep import CheckConfig, enumerate_box, kernel_lemma_findings, trimming_findings

from strategies import random_polynomial

GOLDEN = json.loads((Path(__file__).parent / "golden" / "characters.json").read_text())


@pytest.fixture
def verdict(capsys):
    def emit(n: int, title: str, problems: list, elapsed: float, limit: float | None = None, note: str = ""):
        slow = limit is not None and elapsed >= limit
        ok = not problems and not slow
        parts = [f"criterion {n} {'PASS' if ok else 'FAIL'}: {title} ({elapsed:.1f}s"
                 + (f" of {limit:.0f}s" if limit else "") + ")"]
        if note:
            parts.append(note)
        if problems:
            parts.append(f"{len(problems)} problem(s): " + "; ".join(_short(p) for p in problems[:6]))
        if slow:
            parts.append("time limit exceeded")
        with capsys.disabled():
            print("\n" + " | ".join(parts))
        assert not problems, problems[:6]
        assert not slow, f"{elapsed:.1f}s >= {limit}s"

    return emit


def _short(p) -> str:
    text = str(p)
    return text if len(text) <= 160 else text[:120] + " ... " + text[text.rfind("["):]


def _oracle(Dg):
    return character_oracle(Dg).character


def sweep_box():
    """4x4 box: at most 4 columns, 3 distinct, each repeated at most twice."""
    return list(enumerate_box(4, 4, max_multiplicity=2, max_distinct=3))


def test_criterion_1_golden_characters(verdict):
    t = time.perf_counter()
    problems = []
    for vec in GOLDEN[:3]:
        Dg = Diagram(tuple(tuple(c) for c in vec["diagram"]))
        want = Polynomial.from_json_terms(vec["character"])
        got = {"recursion": character_recursive(Dg).character, "oracle": _oracle(Dg)}
        if classify(Dg).transparent:
            got["reduced_words"] = character_via_reduced_words(Dg).character
        for method, f in got.items():
            if f != want:
                problems.append(f"{vec['name']} by {method}")
        if sum(c for _, c in want.items()) != vec["dimension"]:
            problems.append(f"{vec['name']} dimension")
    verdict(1, "golden characters by recursion, reduced words and oracle", problems,
            time.perf_counter() - t, 10)


def test_criterion_2_schubert_consistency(verdict):
    t = time.perf_counter()
    problems = []
    perms = list(all_permutations(5))
    for w in perms:
        Dw = rothe_diagram(w)
        nst = schubert_nst(w)
        for name, f in (("dd", schubert_divided_difference(w)),
                        ("recursion", character_recursive(Dw).character),
                        ("oracle", _oracle(Dw))):
            if f != nst:
                problems.append(f"{w} {name}")
    verdict(2, f"S_5 nst = dd = recursion = oracle on {len(perms)} permutations", problems,
            time.perf_counter() - t, 300)


def test_criterion_3_kernel_lemmas(verdict):
    t = time.perf_counter()
    cfg = CheckConfig()
    box = sweep_box()
    problems = [f for Dg in box for k in range(1, 5) for f in kernel_lemma_findings(Dg, k, cfg)]
    verdict(3, f"kernel lemmas on {len(box)} diagrams, k <= 4", problems, time.perf_counter() - t, 900)


def test_criterion_4_recursion_identity(verdict):
    t = time.perf_counter()
    clear = [Dg for Dg in sweep_box() if is_clear(Dg)]
    two = repeat_columns(rothe_diagram(Permutation.parse("21453")), 2)
    problems = [] if two in clear and not classify(two).translucent else ["2*D(21453) missing from sweep"]
    problems += [str(Dg) for Dg in clear if not verify_recursion_identity(Dg, _oracle)]
    opaque = sum(not classify(Dg).translucent for Dg in clear)
    verdict(4, f"recursion identity on {len(clear)} clear diagrams ({opaque} not translucent)", problems,
            time.perf_counter() - t)


def test_criterion_5_trimming_and_divided_differences(verdict):
    t = time.perf_counter()
    cfg = CheckConfig()
    problems = [f for Dg in sweep_box() for k in range(1, 5) for f in trimming_findings(Dg, k, cfg)]
    for w in all_permutations(5):
        f = _oracle(rothe_diagram(w))
        for k in range(1, 5):
            want = _oracle(rothe_diagram(w.times_s(k))) if k in w.descents() else Polynomial.zero()
            if divided_difference(f, k) != want:
                problems.append(f"dd-law {w} k={k}")
    for Dg in (repeat_columns(rothe_diagram(Permutation.parse("21453")), 2), Diagram(((1,), (2,)))):
        if divided_difference(_oracle(Dg), 1) == _oracle(apply_s_k(Dg, 1)):
            problems.append(f"negative control {Dg} holds")
    verdict(5, "trimming law on the sweep, dd law on S_5, negative controls", problems,
            time.perf_counter() - t)


def test_criterion_6_exchange_identities(verdict):
    t = time.perf_counter()
    c3 = [(1, 2, 3), (1, 2, 3)]
    sylvester = [ordered_term(1, c3, [(2, 3, 4), (1, 2, 5)]), ordered_term(1, c3, [(2, 4, 5), (1, 2, 3)]),
                 ordered_term(-1, c3, [(2, 3, 5), (1, 2, 4)])]
    cols = [(1, 2), (1, 3), (2, 3)]
    cubic = [ordered_term(s, cols, e) for s, e in [
        (1, [(1, 2), (1, 3), (1, 4)]), (1, [(1, 3), (1, 4), (1, 2)]), (1, [(1, 4), (1, 2), (1, 3)]),
        (-1, [(1, 4), (1, 3), (1, 2)]), (-1, [(1, 3), (1, 2), (1, 4)]), (-1, [(1, 2), (1, 4), (1, 3)])]]
    problems = []
    if not check_exchange_identity(sylvester, FlagBound.unflagged(5)):
        problems.append("sylvester")
    if not check_exchange_identity(cubic, FlagBound.unflagged(4)):
        problems.append("cubic")
    verdict(6, "Sylvester and cubic relations expand to zero", problems, time.perf_counter() - t, 1)


RANKS = [(1, 2, 3, 4), (1, 3, 4, 5), (2, 3, 5, 6), (1, 2, 5, 6)]


def _partial_base(d: RankSequence, rows: int) -> FlagBound:
    return FlagBound.partial(tuple(d.rank(i) for i in range(1, max(len(d), rows) + 1)))


def test_criterion_7_partial_flags(verdict):
    t = time.perf_counter()
    problems = []
    seen = set()
    printed_mismatch = 0
    cases = 0
    for dt in RANKS:
        d = RankSequence(dt)
        for r in range(1, 5):
            for a in combinations(range(1, 5), r):
                base = _partial_base(d, 5)
                for k in range(1, 5):
                    pred = partial_flag_kernel_case(a, k, d)
                    seen.add(pred.case)
                    dim = sum(c for _, c in kernel_character(Diagram((a,)), k, base).items())
                    cases += 1
                    if dim != pred.dimension:
                        problems.append(f"a={a} k={k} d={dt}: oracle {dim}, classifier {pred.dimension}")
                    twisted = character_oracle(Diagram((a,)), base.twist(k)).character
                    if bergeron_sottile_partial(character_oracle(Diagram((a,)), base).character, k, d) != twisted:
                        printed_mismatch += 1
    if seen != set(KernelCase):
        problems.append(f"cases exercised: {sorted(c.value for c in seen)}")
    d = RankSequence((1, 2, 5, 6, 7))
    dim = sum(c for _, c in kernel_character(Diagram(((3, 4),)), 3, _partial_base(d, 5)).items())
    if dim != 3 or partial_flag_kernel_case((3, 4), 3, d).dimension != 3:
        problems.append(f"a={{3,4}} d=(1,2,5,6,7) k=3 kernel {dim}")
    sym2 = character_oracle(Diagram(((1,), (1,))), FlagBound.partial((2, 3)))
    if sym2.dimension != 3 or sym2.character != Polynomial.parse("x1^2 + x1*x2 + x2^2"):
        problems.append(f"Sym2 example gave {sym2.character}")
    note = (f"{cases} single-column cases; printed R^d_k substitution differs from the twisted-flag "
            f"oracle character in {printed_mismatch} of them (reported, not patched)")
    verdict(7, "partial-flag kernel classifier vs oracle", problems, time.perf_counter() - t, note=note)


def _ssyt_schur(shape, n):
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    total: dict[tuple[int, ...], int] = {}

    def fill(pos, t):
        if pos == len(cells):
            e = [0] * n
            for v in t.values():
                e[v - 1] += 1
            key = tuple(e)
            total[key] = total.get(key, 0) + 1
            return
        i, j = cells[pos]
        lo = max(t.get((i, j - 1), 1), t.get((i - 1, j), 0) + 1)
        for v in range(lo, n + 1):
            t[(i, j)] = v
            fill(pos + 1, t)
        t.pop((i, j), None)

    fill(0, {})
    return Polynomial(total)


def test_criterion_8_property_suites(verdict):
    t = time.perf_counter()
    problems = []
    rng = random.Random(8)
    R, dd = bergeron_sottile, divided_difference
    npoly = 1000
    for _ in range(npoly):
        f = random_polynomial(rng)
        k = rng.randint(1, 6)
        if R(R(f, k), k) != R(R(f, k + 1), k):
            problems.append(f"R_k^2 on {f}")
        if dd(dd(f, k), k):
            problems.append(f"d_k^2 on {f}")
        if dd(dd(dd(f, k), k + 1), k) != dd(dd(dd(f, k + 1), k), k + 1):
            problems.append(f"braid on {f}")
        j = k + rng.randint(2, 4)
        if dd(dd(f, k), j) != dd(dd(f, j), k):
            problems.append(f"commutation on {f}")
        if trimming(f, k) != R(dd(f, k), k + 1):
            problems.append(f"trimming on {f}")
    ncols = 0
    for r in range(0, 7):
        for a in combinations(range(1, 7), r):
            ncols += 1
            if character_oracle(Diagram((a,)), FlagBound.standard(6)).character != single_column_character(a):
                problems.append(f"column {a}")
    shapes = [(a, b, c) for a in range(1, 4) for b in range(0, a + 1) for c in range(0, b + 1)]
    for shape in shapes:
        lam = tuple(p for p in shape if p)
        Dg = Diagram(tuple(tuple(i + 1 for i, p in enumerate(lam) if p > j) for j in range(lam[0])))
        if character_oracle(Dg, FlagBound.unflagged(4, nrows=len(lam))).character != _ssyt_schur(lam, 4):
            problems.append(f"schur {lam}")
    note = f"{npoly} random polynomials, {ncols} columns, {len(shapes)} shapes in (3,3,3)"
    verdict(8, "operator algebra, single columns, unflagged Schur", problems, time.perf_counter() - t, note=note)
