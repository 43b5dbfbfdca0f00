import json
from pathlib import Path

import pytest

from flagschur.characters import (
    character_recursive,
    character_via_reduced_words,
    schubert_divided_difference,
)
from flagschur.cli import main
from flagschur.diagram import Diagram, Permutation, classify, rothe_diagram
from flagschur.oracle import character_oracle
from flagschur.poly import Polynomial

GOLDEN = Path(__file__).parent / "golden"
VECTORS = json.loads((GOLDEN / "characters.json").read_text())


@pytest.mark.parametrize("vec", VECTORS, ids=[v["name"] for v in VECTORS])
def test_golden_character(vec):
    Dg = Diagram(tuple(tuple(c) for c in vec["diagram"]))
    want = Polynomial.from_json_terms(vec["character"])
    assert want == Polynomial.parse(vec["text"])
    assert len(want) == vec["terms"]
    assert sum(c for _, c in want.items()) == vec["dimension"]
    assert character_recursive(Dg).character == want
    assert character_oracle(Dg).character == want
    if classify(Dg).transparent:
        assert character_via_reduced_words(Dg).character == want
    if "permutation" in vec:
        w = Permutation.parse(vec["permutation"])
        assert rothe_diagram(w) == Dg
        assert schubert_divided_difference(w) == want


def test_golden_cli_json(capsys):
    assert main(["char", "--rothe", "146253", "--format", "json"]) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN / "char_146253.json").read_text()
