import random

import pytest
from hypothesis import given, strategies as st

from ilmc.fastcheck import (
    OMEGA, FormulaIndex, check_fpl0, check_prl0, dag_model, formula_index, linear_model,
    longest_path_instance, lp, lp_all, visser_alpha,
)
from ilmc.formula import BOT, TOP, Box, Impl, Var, parse_int, parse_modal
from ilmc.generators import random_int_formula, random_modal_formula, random_model
from ilmc.kripke import KripkeModel, LogicClass
from ilmc.semantics import AdmissibilityError, eval_int, eval_modal


def test_index_examples():
    assert formula_index(BOT) == 0
    assert formula_index(Impl(BOT, BOT)) is not None and formula_index(Impl(BOT, BOT)).is_omega
    assert formula_index(parse_int("(false -> false) -> false")) == 1
    assert formula_index(TOP) == OMEGA
    assert str(OMEGA) == "omega"


def test_index_ordering():
    assert FormulaIndex(3) < OMEGA and not OMEGA < FormulaIndex(10**9)
    assert FormulaIndex(2) < 3 and FormulaIndex(2) == 2
    assert OMEGA.exceeds(10**9) and not FormulaIndex(2).exceeds(2)
    with pytest.raises(ValueError):
        FormulaIndex(-1)


def test_index_errors():
    with pytest.raises(ValueError):
        formula_index(Var("p"))
    with pytest.raises(TypeError):
        formula_index(Box(BOT))


@pytest.mark.parametrize("i", range(11))
def test_alpha_has_its_own_index(i):
    assert formula_index(visser_alpha(i)) == i


@pytest.mark.parametrize("n", range(11))
def test_linear_model_longest_paths(n):
    model = linear_model(n)
    assert all(lp(model, str(k)) == k for k in range(n + 1))
    # alpha_i holds exactly where the longest path is shorter than i
    for i in range(n + 2):
        a = visser_alpha(i)
        table = eval_int(model, a)
        assert all(table.holds(a, str(k)) == (k < i) for k in range(n + 1))


def test_lp_examples():
    assert lp(KripkeModel.from_edges(["a"], []), "a") == 0
    chain = dag_model({"a": ["b"], "b": ["c"]})
    assert lp(chain, "a") == 2
    assert lp_all(chain) == {"a": 2, "b": 1, "c": 0}


def test_lp_rejects_cycles():
    loop = KripkeModel.from_edges("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        lp(loop, "a")
    with pytest.raises(ValueError):
        dag_model({"a": ["b"], "b": ["a"]})
    with pytest.raises(KeyError):
        lp(linear_model(1), "7")


def test_fast_checker_examples():
    lone = KripkeModel.from_edges(["s"], [])
    assert not check_fpl0(BOT, lone, "s")
    assert check_fpl0(Impl(TOP, BOT), lone, "s")
    assert check_prl0(Box(BOT), lone, "s")
    two = KripkeModel.from_edges("ab", [("a", "b")])
    assert not check_prl0(Box(BOT), two, "a")


def test_fast_checkers_reject_bad_input():
    loop = KripkeModel.from_edges(["s"], [("s", "s")])
    with pytest.raises(AdmissibilityError):
        check_fpl0(BOT, loop, "s")
    with pytest.raises(AdmissibilityError):
        check_prl0(BOT, loop, "s")
    with pytest.raises(ValueError):
        check_prl0(parse_modal("[]p"), KripkeModel.from_edges(["s"], []), "s")


def test_fast_checkers_agree_with_labelling():
    rng = random.Random(21)
    for _ in range(300):
        m = random_model(rng, LogicClass.FPL, rng.randint(1, 12), variables=())
        phi = random_int_formula(rng, rng.randint(1, 40), variables=())
        table = eval_int(m, phi)
        assert all(check_fpl0(phi, m, s) == table.holds(phi, s) for s in m.states)
        psi = random_modal_formula(rng, rng.randint(1, 40))
        table = eval_modal(m, psi)
        assert all(check_prl0(psi, m, s) == table.holds(psi, s) for s in m.states)


@given(st.integers(0, 5), st.integers(0, 4))
def test_longest_path_instance(length, n):
    graph = {i: [i + 1] for i in range(length)} or {0: []}
    model = dag_model(graph)
    upper, lower = longest_path_instance(graph, 0, n)
    ok = eval_int(model, upper).holds(upper, "0") and not eval_int(model, lower).holds(lower, "0")
    assert ok == (length == n)


def test_longest_path_instance_isolated():
    upper, lower = longest_path_instance({"v": []}, "v", 0)
    assert upper == visser_alpha(1) and lower == BOT
