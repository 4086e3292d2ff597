import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ilmc.agap import SliceGraph
from ilmc.kripke import (
    KripkeModel, LogicClass, ModelFormatError, dump_model, parse_model,
    pseudo_transitive_closure, reflexive_closure, transitive_closure, validate,
)


def squaring_closure(rel):
    R = np.array(rel, dtype=bool)
    while True:
        nxt = R | ((R.astype(int) @ R.astype(int)) > 0)
        if (nxt == R).all():
            return R
        R = nxt


matrices = st.integers(1, 8).flatmap(
    lambda n: st.lists(st.booleans(), min_size=n * n, max_size=n * n).map(
        lambda bits: np.array(bits, dtype=bool).reshape(n, n)))


@given(matrices)
def test_closure_matches_iterated_squaring(rel):
    got = transitive_closure(rel)
    assert (got == squaring_closure(rel)).all()
    assert (transitive_closure(got) == got).all()


@given(matrices)
def test_reflexive_closure_adds_diagonal_only(rel):
    got = reflexive_closure(rel)
    assert np.diag(got).all()
    off = ~np.eye(len(rel), dtype=bool)
    assert (got[off] == rel[off]).all()
    if validate(KripkeModel(tuple(map(str, range(len(rel)))), rel)).transitive:
        assert validate(KripkeModel(tuple(map(str, range(len(rel)))), got)).transitive


def test_closure_examples():
    rel = np.zeros((3, 3), bool)
    rel[0, 1] = rel[1, 2] = True
    assert transitive_closure(rel)[0, 2]
    assert (reflexive_closure(np.zeros((3, 3), bool)) == np.eye(3, dtype=bool)).all()


def test_validate_examples():
    one = KripkeModel.from_edges(["s"], [])
    assert validate(one, LogicClass.FPL).admissible
    loop = KripkeModel.from_edges(["s"], [("s", "s")])
    rep = validate(loop, LogicClass.FPL)
    assert rep.failures == ["irreflexive"]
    assert rep.counterexamples["irreflexive"] == ("s", "s")
    ab = KripkeModel.from_edges(["a", "b"], [("a", "b")])
    rep = validate(ab, LogicClass.KC)
    assert "directed" in rep.failures and "reflexive" in rep.failures


def test_validate_transitivity_witness_is_a_real_path():
    m = KripkeModel.from_edges("abc", [("a", "b"), ("b", "c")])
    a, b, c = validate(m).counterexamples["transitive"]
    assert (a, b, c) == ("a", "b", "c")


def test_validate_monotonicity():
    m = KripkeModel.from_edges("ab", [("a", "b")], {"p": ["a"]})
    rep = validate(m, LogicClass.BPL)
    assert rep.failures == ["monotone"]
    assert rep.counterexamples["monotone"] == ("p", "a", "b")
    # modal classes do not care about the valuation
    assert validate(m, LogicClass.K4).admissible


def test_every_random_model_is_admissible():
    from ilmc.generators import random_model
    rng = random.Random(7)
    for logic in LogicClass:
        for _ in range(30):
            m = random_model(rng, logic, rng.randint(1, 9))
            assert validate(m, logic).admissible, (logic, dump_model(m))


@pytest.mark.parametrize("text, logic", [
    ("S4.2", LogicClass.S42), ("s42", LogicClass.S42), ("prl", LogicClass.PrL), (" IPC ", LogicClass.IPC)])
def test_logic_parse(text, logic):
    assert LogicClass.parse(text) is logic


def test_logic_parse_unknown():
    with pytest.raises(ValueError):
        LogicClass.parse("S5")


def test_companions():
    assert LogicClass.KC.companion is LogicClass.S42
    assert LogicClass.FPL.companion is LogicClass.PrL


def test_pseudo_transitive_closure():
    two = SliceGraph((("s",), ("x", "t")), frozenset({("s", "x"), ("s", "t")}))
    R = pseudo_transitive_closure(two)
    assert R.sum() == 2
    g = SliceGraph((("a",), ("b",), ("c",), ("d",)),
                   frozenset({("a", "b"), ("b", "c"), ("c", "d")}))
    R = pseudo_transitive_closure(g)
    m = KripkeModel(g.nodes, R)
    assert validate(m, LogicClass.FPL).admissible
    E = np.zeros_like(R)
    for u, v in g.edges:
        E[g.index[u], g.index[v]] = True
    assert (R | transitive_closure(E) == R).all()


def test_pseudo_transitive_closure_rejects_invalid():
    bad = SliceGraph((("a", "b"), ("c",)), frozenset({("a", "b")}))
    with pytest.raises(ValueError):
        pseudo_transitive_closure(bad)


def test_model_text_roundtrip():
    text = "states: s0 s1 top\nedge: s0 s1\nedge: s1 top\nval p: s1 top\n"
    m = parse_model(text)
    assert dump_model(m) == text
    assert parse_model(dump_model(m)) == m


@pytest.mark.parametrize("text", [
    "", "edge: a b", "states: a\nedge: a b", "states: a\nval p: b",
    "states: a a", "states: a\nfoo: a", "states: a\nedge a a", "states: a\nedge: a",
])
def test_model_format_errors(text):
    with pytest.raises(ModelFormatError):
        parse_model(text)


def test_model_constructor_errors():
    with pytest.raises(ValueError):
        KripkeModel((), np.zeros((0, 0)))
    with pytest.raises(ValueError):
        KripkeModel(("a",), np.zeros((2, 2)))
    with pytest.raises(ValueError):
        KripkeModel(("a",), np.zeros((1, 1)), {"p": {3}})
