"""Checkers for the per-slice and per-state claims the constructions rely on.

Each returns a list of violations, empty when the claim holds.
"""

from ilmc.kripke import KripkeModel, transitive_closure
from ilmc.reductions import (
    bpl_betas, fpl_yardsticks, generic_formulas, generic_model, kc_psi, rybakov_frames,
    s42_delta, to_fpl1_impl, to_kc_impl, to_s42_one_var,
)
from ilmc.fastcheck import visser_alpha
from ilmc.formula import Impl, Or
from ilmc.semantics import eval_int, eval_modal


def kc_claims(inst):
    out = to_kc_impl(inst)
    g, m = inst.graph, inst.graph.m
    psi = kc_psi(m)
    bad = []
    for i in range(1, m + 1):
        table = eval_int(out.model, psi[i])
        for w in g.from_slice(i + 1):
            if not table.holds(psi[i], w):
                bad.append(("upper", i, w))
    for i in range(1, m):
        a, b = eval_int(out.model, psi[i]), eval_int(out.model, psi[i + 1])
        for w in g.slices[i - 1]:
            if a.holds(psi[i], w) == b.holds(psi[i + 1], w):
                bad.append(("complement", i, w))
    return bad


def fpl_claims(inst):
    out = to_fpl1_impl(inst)
    g = inst.graph
    alpha = fpl_yardsticks(g.m)
    bad = []
    for i, a in alpha.items():
        table = eval_int(out.model, a)
        for w in g.nodes:
            if table.holds(a, w) != (g.slice_of[w] >= i + 1):
                bad.append(("yardstick", i, w))
    return bad


def s42_claims(inst, repaired=False, shift=0):
    """``x |= delta_i <=> x in V_{<=i+shift}`` for every ``x`` in ``V_{<=m}``."""
    out = to_s42_one_var(inst, repaired)
    g = inst.graph
    bad = []
    for i, d in s42_delta(g.m, repaired).items():
        table = eval_modal(out.model, d)
        for x in g.nodes:
            if table.holds(d, x) != (g.slice_of[x] <= i + shift):
                bad.append(("delta", i, x))
    return bad


def rybakov_model():
    states, edges = rybakov_frames()
    m = KripkeModel.from_edges(states, edges)
    return m.with_relation(transitive_closure(m.rel))


def fig5_annotations():
    """(state, formula, expected truth) triples from the figure of the three frames."""
    a = visser_alpha
    return [
        ("a_3^1", Impl(a(3), a(2)), True),
        ("a_3^1", Or(Impl(a(2), a(1)), a(3)), False),
        ("a_4^2", Impl(a(4), a(3)), True),
        ("a_4^2", Or(Impl(a(3), a(2)), a(4)), False),
        ("a_5^3", Impl(a(4), a(3)), False),
        ("a_5^3", Impl(a(3), a(2)), False),
    ]


def fig5_claims():
    model = rybakov_model()
    bad = []
    for state, phi, want in fig5_annotations():
        if eval_int(model, phi).holds(phi, state) != want:
            bad.append((state, phi, want))
    return bad


def beta_claims(out, target):
    """In a to_bpl0 output, beta1 fails exactly off the target and beta2 fails on all of V."""
    beta1, beta2 = bpl_betas()
    t1, t2 = eval_int(out.model, beta1), eval_int(out.model, beta2)
    bad = []
    for w in out.model.states:
        if "_" in w:
            continue
        if t1.holds(beta1, w) != (w == target):
            bad.append(("beta1", w))
        if t2.holds(beta2, w):
            bad.append(("beta2", w))
    return bad


def refuters(model, phi):
    table = eval_int(model, phi)
    return {s for s in model.states if not table.holds(phi, s)}


def seers(model, target):
    j = model.index(target)
    return {s for i, s in enumerate(model.states) if model.rel[i, j]}


def maxref_claims(height, repaired=False):
    """Refuters of every alpha_i^k / beta_i^k are exactly the states seeing a_i^k / b_i^k."""
    gm = generic_model(height).model
    bad = []
    for k, (alpha, beta) in generic_formulas(height, repaired).items():
        for name, family in (("a", alpha), ("b", beta)):
            for i, phi in family.items():
                if refuters(gm, phi) != seers(gm, f"{name}{i}^{k}"):
                    bad.append((f"{name}{i}^{k}",))
    return bad


def fig6_claims(repaired=False):
    """Each labelled point of the top of the generic model is the unique maximal
    refuter of its formula: d_i of delta_i, e_i of epsilon_i, a_i^1 / b_i^1."""
    from ilmc.formula import And, Var
    p, q = Var("p"), Var("q")
    d1, d2 = Impl(p, q), Impl(q, p)
    d3 = Impl(And(d1, d2), Or(p, q)) if repaired else Or(p, q)
    e = {1: Impl(d2, Or(d1, d3)), 2: Impl(d3, Or(d1, d2)), 3: Impl(d1, Or(d2, d3))}
    e[4] = Impl(And(And(e[1], e[2]), e[3]), Or(Or(d1, d2), d3))
    gm = generic_model(1).model
    labelled = {"d1": d1, "d2": d2, "d3": d3, **{f"e{i}": f for i, f in e.items()}}
    alpha, beta = generic_formulas(1, repaired)[1]
    labelled.update({f"a{i}^1": f for i, f in alpha.items()})
    labelled.update({f"b{i}^1": f for i, f in beta.items()})
    return [(s,) for s, phi in labelled.items() if refuters(gm, phi) != seers(gm, s)]
