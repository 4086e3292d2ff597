"""Reductions between model-checking problems.

Every reduction returns an :class:`McInstance` together with the polarity
that relates its answer to the source answer.  The sliced AGAP reductions
take an :class:`~ilmc.agap.AgapInstance` over a :class:`~ilmc.agap.SliceGraph`
with source in ``V_1`` and target in ``V_m``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .agap import AgapInstance, SliceGraph
from .fastcheck import visser_alpha
from .formula import (
    BOT, TOP, And, Bot, Box, Formula, Impl, Or, Var, analyze, diamond, m_and,
    neg, parse_int, parse_modal, render, subformulas, substitute, variables,
)
from .kripke import (
    KripkeModel, LogicClass, ModelFormatError, dump_model, parse_model,
    pseudo_transitive_closure, reflexive_closure, transitive_closure, validate,
)
from .semantics import AdmissibilityError, check
from .translate import gt_prime

__all__ = [
    "Polarity", "McInstance", "InstanceFormatError",
    "to_k0", "to_kc_impl", "to_fpl1_impl", "to_bpl0", "to_s42_one_var",
    "ipc_to_kc2", "chain_to_modal",
    "kc_psi", "kc_valuation", "fpl_yardsticks", "fpl_psi", "bpl_theta", "bpl_psi",
    "bpl_betas", "rybakov_frames", "s42_eta", "s42_delta", "s42_lambda",
    "GenericModel", "generic_model", "generic_sizes", "generic_formulas", "encode_pair",
    "dump_instance", "parse_instance", "read_instance", "write_instance",
]


class Polarity(enum.Enum):
    SAME = "same"
    COMPLEMENT = "complement"

    def apply(self, answer: bool) -> bool:
        return answer if self is Polarity.SAME else not answer


@dataclass(frozen=True, eq=False)
class McInstance:
    """Is ``formula`` satisfied at ``state`` of ``model`` in ``logic``?

    ``polarity`` records how the answer relates to the instance this one was
    reduced from; hand-written instances use ``SAME``.
    """

    formula: Formula
    model: KripkeModel
    state: str
    logic: LogicClass
    polarity: Polarity = Polarity.SAME

    def __post_init__(self):
        self.model.index(self.state)

    def answer(self) -> bool:
        return check(self)

    def expected(self, source_answer: bool) -> bool:
        """The answer this instance must have if the source answered ``source_answer``."""
        return self.polarity.apply(source_answer)

    def __eq__(self, other):
        if not isinstance(other, McInstance):
            return NotImplemented
        return (self.formula == other.formula and self.model == other.model
                and self.state == other.state and self.logic is other.logic
                and self.polarity is other.polarity)

    __hash__ = None


# ---------------------------------------------------------------- helpers

def _sliced(inst: AgapInstance) -> SliceGraph:
    g = inst.graph
    if not isinstance(g, SliceGraph):
        raise TypeError("expected an instance over a slice graph")
    problem = inst.check()
    if problem:
        raise ValueError(f"invalid sliced instance: {problem}")
    return g


def _fresh(existing: Iterable[str], added: Iterable[str]) -> None:
    clash = sorted(set(existing) & set(added))
    if clash:
        raise ValueError(f"state name {clash[0]!r} collides with a state added by the reduction")


def _grow(rel: np.ndarray, extra: int) -> np.ndarray:
    n = rel.shape[0]
    out = np.zeros((n + extra, n + extra), dtype=bool)
    out[:n, :n] = rel
    return out


# ---------------------------------------------------------------- K, no variables

def to_k0(inst: AgapInstance) -> McInstance:
    """Variable-free K formula refuted at ``s`` exactly when ``apath(s, t)``.

    The model is ``E`` plus a loop at ``t``; ``[](false -> false)`` is true
    precisely at states without successors, which after the loop excludes
    ``t``.
    """
    g = _sliced(inst)
    idx = g.index
    rel = np.zeros((len(g.nodes), len(g.nodes)), dtype=bool)
    for u, v in g.edges:
        rel[idx[u], idx[v]] = True
    rel[idx[inst.target], idx[inst.target]] = True
    model = KripkeModel(g.nodes, rel)
    dead = Box(Impl(BOT, BOT))
    phi: Formula = Box(Impl(dead, Box(Impl(dead, BOT))))
    for _ in range(g.m - 2):
        phi = Box(Impl(phi, BOT))
    return McInstance(phi, model, inst.source, LogicClass.K, Polarity.COMPLEMENT)


# ---------------------------------------------------------------- KC, implicational

def kc_psi(m: int) -> dict[int, Formula]:
    """``psi_m = a_m -> a_{m+1}`` and ``psi_j = psi_{j+1} -> a_j``."""
    a = {i: Var(f"a{i}") for i in range(1, m + 2)}
    psi = {m: Impl(a[m], a[m + 1])}
    for j in range(m - 1, 0, -1):
        psi[j] = Impl(psi[j + 1], a[j])
    return psi


def kc_valuation(g: SliceGraph, t: str) -> dict[str, set[str]]:
    m = g.m
    val = {f"a{i}": set(g.from_slice(i + 1)) | {"top"} for i in range(1, m)}
    val[f"a{m}"] = {t, "top"}
    val[f"a{m + 1}"] = {"top"}
    return val


def to_kc_impl(inst: AgapInstance) -> McInstance:
    g = _sliced(inst)
    _fresh(g.nodes, ["top"])
    n = len(g.nodes)
    rel = _grow(pseudo_transitive_closure(g), 1)
    rel[:, n] = True
    rel = reflexive_closure(rel)
    states = g.nodes + ("top",)
    index = {s: i for i, s in enumerate(states)}
    val = {k: frozenset(index[s] for s in v) for k, v in kc_valuation(g, inst.target).items()}
    model = KripkeModel(states, rel, val)
    return McInstance(kc_psi(g.m)[1], model, inst.source, LogicClass.KC, Polarity.SAME)


# ---------------------------------------------------------------- FPL, one variable

def fpl_yardsticks(m: int) -> dict[int, Formula]:
    """``alpha_m = false`` and ``alpha_i = true -> alpha_{i+1}``."""
    alpha = {m: BOT}
    for i in range(m - 1, 0, -1):
        alpha[i] = Impl(TOP, alpha[i + 1])
    return alpha


def fpl_psi(m: int) -> dict[int, Formula]:
    alpha = fpl_yardsticks(m)
    psi: dict[int, Formula] = {m: Var("p")}
    for i in range(m - 1, 0, -1):
        psi[i] = Impl(psi[i + 1], alpha[i + 1])
    return psi


def to_fpl1_impl(inst: AgapInstance) -> McInstance:
    g = _sliced(inst)
    val = {"p": frozenset({g.index[inst.target]})}
    model = KripkeModel(g.nodes, pseudo_transitive_closure(g), val)
    return McInstance(fpl_psi(g.m)[1], model, inst.source, LogicClass.FPL, Polarity.COMPLEMENT)


# ---------------------------------------------------------------- BPL, no variables

def bpl_theta(m: int) -> dict[int, Formula]:
    theta: dict[int, Formula] = {m: Var("p2")}
    for i in range(m - 1, 0, -1):
        theta[i] = Impl(TOP, theta[i + 1])
    return theta


def bpl_psi(m: int) -> dict[int, Formula]:
    """The two-variable formulas ``psi_i`` before ``p1``, ``p2`` are replaced."""
    theta = bpl_theta(m)
    psi: dict[int, Formula] = {m: Var("p1")}
    for i in range(m - 1, 0, -1):
        psi[i] = Impl(psi[i + 1], theta[i + 1])
    return psi


def bpl_betas() -> tuple[Formula, Formula]:
    """Variable-free stand-ins for ``p1`` and ``p2``."""
    a = visser_alpha
    beta1 = Impl(Impl(a(3), a(2)), Or(Impl(a(2), a(1)), a(3)))
    beta2 = Impl(Impl(a(4), a(3)), Or(Impl(a(3), a(2)), a(4)))
    return beta1, beta2


def rybakov_frames() -> tuple[list[str], list[tuple[str, str]]]:
    """States and edges of the three frames ``F_1, F_2, F_3``.

    ``F_k`` has ``b_k`` with a loop, and ``a_1^k .. a_{k+2}^k`` where each
    ``a_i^k`` sees every ``a_j^k`` with ``j < i`` and the top one also sees
    ``b_k``.
    """
    states: list[str] = []
    edges: list[tuple[str, str]] = []
    for k in (1, 2, 3):
        b = f"b_{k}"
        a = [f"a_{i}^{k}" for i in range(1, k + 3)]
        states += [b] + a
        edges.append((b, b))
        edges.append((a[-1], b))
        edges += [(a[i], a[j]) for i in range(len(a)) for j in range(i)]
    return states, edges


def to_bpl0(inst: AgapInstance) -> McInstance:
    g = _sliced(inst)
    extra, frame_edges = rybakov_frames()
    _fresh(g.nodes, extra)
    states = g.nodes + tuple(extra)
    index = {s: i for i, s in enumerate(states)}
    n = len(g.nodes)
    rel = _grow(pseudo_transitive_closure(g), len(extra))
    for u, v in frame_edges:
        rel[index[u], index[v]] = True
    t = index[inst.target]
    rel[[i for i in range(n) if i != t], index["a_3^1"]] = True
    rel[:n, index["a_4^2"]] = True
    rel[:n, index["a_5^3"]] = True
    model = KripkeModel(states, transitive_closure(rel))
    beta1, beta2 = bpl_betas()
    phi = substitute(bpl_psi(g.m)[1], {"p1": beta1, "p2": beta2})
    return McInstance(phi, model, inst.source, LogicClass.BPL, Polarity.COMPLEMENT)


# ---------------------------------------------------------------- S4.2, one variable

def s42_eta() -> Formula:
    a = Var("a")
    return m_and(neg(a), diamond(m_and(a, diamond(neg(a)))))


def s42_delta(m: int, repaired: bool = False) -> dict[int, Formula]:
    """Slice bounds ``delta_i``.

    With ``repaired`` the chain must end next to ``u``, the only state
    satisfying ``~a & ~eta``: ``delta_m = <>(~a & ~eta)``.  The plain
    ``<>~eta`` also holds along the ``t1``/``t2`` cycle, which every state
    below ``V_m`` sees, so it bounds nothing.
    """
    a = Var("a")
    eta = s42_eta()
    last = m_and(neg(a), neg(eta)) if repaired else neg(eta)
    delta: dict[int, Formula] = {m: diamond(last)}
    for i in range(m - 1, 0, -1):
        lit = neg(a) if i % 2 == 0 else a
        delta[i] = diamond(m_and(lit, delta[i + 1]))
    return delta


def s42_lambda(m: int, repaired: bool = False) -> dict[int, Formula]:
    a = Var("a")
    delta = s42_delta(m, repaired)
    lam: dict[int, Formula] = {m: m_and(a, diamond(s42_eta()))}
    for i in range(m - 1, 0, -1):
        if i % 2:
            lam[i] = m_and(neg(a), diamond(m_and(delta[i + 1], lam[i + 1])))
        else:
            guard = m_and(neg(a), delta[i + 1]) if repaired else delta[i + 1]
            lam[i] = m_and(a, Box(Impl(guard, lam[i + 1])))
    return lam


def to_s42_one_var(inst: AgapInstance, repaired: bool = False) -> McInstance:
    """One-variable S4.2 instance with the same answer as ``inst``.

    The default follows the published construction, which is not sound.
    ``repaired=True`` fixes two things: ``delta_m`` (see :func:`s42_delta`)
    and, for even ``i``, the box in ``lambda_i``, which now ranges over
    ``~a & delta_{i+1}``.  Without the ``~a`` the state itself, a successor
    by reflexivity, forces ``lambda_{i+1}`` where it can never hold.
    """
    g = _sliced(inst)
    extra = ["u", "t1", "t2", "top"]
    _fresh(g.nodes, extra)
    m = g.m
    states = g.nodes + tuple(extra)
    index = {s: i for i, s in enumerate(states)}
    u, t1, t2, top = (index[s] for s in extra)
    t = index[inst.target]
    rel = _grow(pseudo_transitive_closure(g), len(extra))
    last = [index[v] for v in g.slices[-1]]
    rel[last, u] = True
    rel[t, [t1, t2]] = True
    rel[[u, t1, t2], top] = True
    rel[t1, t2] = rel[t2, t1] = True
    early = [index[v] for v in g.upto(m - 1)]
    rel[np.ix_(early, [u, t1, t2])] = True
    rel[:len(g.nodes), top] = True
    rel = reflexive_closure(rel)
    even = [index[v] for i in range(2, m + 1, 2) for v in g.slices[i - 1]]
    model = KripkeModel(states, rel, {"a": frozenset(even + [top, t2])})
    return McInstance(s42_lambda(m, repaired)[1], model, inst.source, LogicClass.S42, Polarity.SAME)


# ---------------------------------------------------------------- IPC to KC, two variables

@lru_cache(maxsize=None)
def generic_sizes(levels: int) -> tuple[int, ...]:
    """``(n_1, .., n_levels)`` with ``n_1 = 3`` and ``n_{k+1} = (n_k - 1)^2``."""
    sizes = [3]
    while len(sizes) < levels:
        sizes.append((sizes[-1] - 1) ** 2)
    return tuple(sizes)


def encode_pair(i: int, j: int, nk: int) -> int:
    """Index at level ``k + 1`` of the pair ``(i, j)`` with ``2 <= i, j <= n_k``."""
    if not (2 <= i <= nk and 2 <= j <= nk):
        raise ValueError(f"pair ({i},{j}) out of range for n_k = {nk}")
    return (j - 1) + (nk - 1) * (i - 2)


def _pairs(nk: int) -> list[tuple[int, int, int]]:
    return [(encode_pair(i, j, nk), i, j) for i in range(2, nk + 1) for j in range(2, nk + 1)]


@lru_cache(maxsize=None)
def generic_formulas(levels: int, repaired: bool = False
                     ) -> dict[int, tuple[dict[int, Formula], dict[int, Formula]]]:
    """Level ``k`` maps to ``(alpha^k, beta^k)``, each indexed ``1 .. n_k``.

    With the published ``delta_3 = p | q`` the formula ``epsilon_2`` is
    intuitionistically valid (``p`` persists, so ``p`` forces ``q -> p``),
    and every variable-free state refutes ``delta_3``, so neither ``e2`` nor
    ``d3`` is a unique maximal refuting state.  ``repaired`` uses
    ``delta_3 = (delta_1 & delta_2) -> (p | q)``, refuted exactly at the
    states that see ``d3``.
    """
    p, q = Var("p"), Var("q")
    d1, d2 = Impl(p, q), Impl(q, p)
    d3 = Impl(And(d1, d2), Or(p, q)) if repaired else Or(p, q)
    e1 = Impl(d2, Or(d1, d3))
    e2 = Impl(d3, Or(d1, d2))
    e3 = Impl(d1, Or(d2, d3))
    e4 = Impl(And(And(e1, e2), e3), Or(Or(d1, d2), d3))
    alpha = {1: Impl(And(e1, e2), Or(e3, e4)),
             2: Impl(And(e1, e3), Or(e2, e4)),
             3: Impl(And(e1, e4), Or(e2, e3))}
    beta = {1: Impl(And(e2, e3), Or(e1, e4)),
            2: Impl(And(e2, e4), Or(e1, e3)),
            3: Impl(And(e3, e4), Or(e1, e2))}
    out = {1: (alpha, beta)}
    sizes = generic_sizes(levels)
    for k in range(1, levels):
        a, b = out[k]
        na, nb = {}, {}
        for s, i, j in _pairs(sizes[k - 1]):
            na[s] = Impl(a[1], Or(Or(b[1], a[i]), b[j]))
            nb[s] = Impl(b[1], Or(Or(a[1], a[i]), b[j]))
        out[k + 1] = (na, nb)
    return out


_W0 = ["c", "d1", "d2", "d3", "e1", "e2", "e3", "e4"]
_TOP_EDGES = [
    ("d1", "c"), ("d2", "c"), ("d3", "c"),
    ("e1", "d1"), ("e1", "d3"), ("e2", "d1"), ("e2", "d2"),
    ("e3", "d2"), ("e3", "d3"), ("e4", "d1"), ("e4", "d2"), ("e4", "d3"),
    ("b3^1", "e1"), ("b3^1", "e2"), ("b2^1", "e1"), ("b2^1", "e3"),
    ("b1^1", "e1"), ("b1^1", "e4"),
    ("a3^1", "e2"), ("a3^1", "e3"), ("a2^1", "e2"), ("a2^1", "e4"),
    ("a1^1", "e3"), ("a1^1", "e4"),
]


@dataclass(frozen=True, eq=False)
class GenericModel:
    """Levels ``W_0 .. W_t`` of the two-variable KC model.

    ``levels[k]`` lists the state names of ``W_k``; level ``k >= 1`` holds
    ``a{i}^{k}`` and ``b{i}^{k}`` for ``i = 1 .. n_k``.
    """

    height: int
    levels: tuple[tuple[str, ...], ...]
    model: KripkeModel

    @property
    def sizes(self) -> tuple[int, ...]:
        return generic_sizes(self.height)


def _level_names(k: int, nk: int) -> tuple[str, ...]:
    return tuple(f"a{i}^{k}" for i in range(1, nk + 1)) + tuple(f"b{i}^{k}" for i in range(1, nk + 1))


@lru_cache(maxsize=None)
def generic_model(height: int) -> GenericModel:
    if height < 1:
        raise ValueError("the generic model needs at least one level")
    sizes = generic_sizes(height)
    levels = [tuple(_W0)] + [_level_names(k, sizes[k - 1]) for k in range(1, height + 1)]
    states = tuple(s for lv in levels for s in lv)
    index = {s: i for i, s in enumerate(states)}
    rel = np.zeros((len(states), len(states)), dtype=bool)

    base = [index[s] for s in levels[0] + levels[1]]
    top = np.zeros_like(rel)
    for u, v in _TOP_EDGES:
        top[index[u], index[v]] = True
    top = reflexive_closure(transitive_closure(top[np.ix_(base, base)]))
    rel[np.ix_(base, base)] = top

    for k in range(1, height):
        for s, i, j in _pairs(sizes[k - 1]):
            a, b = index[f"a{s}^{k + 1}"], index[f"b{s}^{k + 1}"]
            rel[a, [index[f"b1^{k}"], index[f"a{i}^{k}"], index[f"b{j}^{k}"]]] = True
            rel[b, [index[f"a1^{k}"], index[f"a{i}^{k}"], index[f"b{j}^{k}"]]] = True
    for k in range(2, height + 1):
        upper = [index[s] for s in levels[k]]
        lower = [index[s] for lv in levels[:k - 1] for s in lv]
        rel[np.ix_(upper, lower)] = True
    rel = reflexive_closure(rel)
    val = {"p": frozenset({index["c"], index["d1"]}), "q": frozenset({index["c"], index["d2"]})}
    return GenericModel(height, tuple(levels), KripkeModel(states, rel, val))


def _replace_leaves(phi: Formula, mapping: dict[Formula, Formula]) -> Formula:
    memo: dict[Formula, Formula] = {}
    for node in subformulas(phi):
        if node in mapping:
            memo[node] = mapping[node]
        elif isinstance(node, (And, Or, Impl)):
            memo[node] = type(node)(memo[node.left], memo[node.right])
        else:
            memo[node] = node
    return memo[phi]


def ipc_to_kc2(inst: McInstance, repaired: bool = False) -> McInstance:
    """Implicational IPC instance to a two-variable KC instance.

    Variables, sorted by name, become ``alpha_i^k | beta_i^k``.  The default
    follows the published construction, which is not sound: ``false`` is
    left alone although every original state sees ``c``, where all
    replacements hold, and the level-1 formulas are broken (see
    :func:`generic_formulas`).  ``repaired=True`` fixes both; ``false``
    becomes ``alpha_{m+1}^k | beta_{m+1}^k``, which every generic state
    satisfies and every original state refutes.
    """
    report = validate(inst.model, LogicClass.IPC)
    if not report.admissible:
        raise AdmissibilityError(
            f"model is not admissible for IPC: fails {', '.join(report.failures)}", report)
    if not analyze(inst.formula).implicational:
        raise ValueError("ipc_to_kc2 takes implicational formulas")
    names = sorted(variables(inst.formula))
    m = len(names)
    k = 2
    while generic_sizes(k)[k - 1] <= m:
        k += 1
    gm = generic_model(k)
    alpha, beta = generic_formulas(k, repaired)[k]

    mapping: dict[Formula, Formula] = {Var(v): Or(alpha[i], beta[i]) for i, v in enumerate(names, 1)}
    if repaired:
        mapping[BOT] = Or(alpha[m + 1], beta[m + 1])
    phi = _replace_leaves(inst.formula, mapping)

    src = inst.model
    generic = gm.model
    _fresh(src.states, generic.states)
    n, g = len(src), len(generic)
    states = src.states + generic.states
    rel = np.zeros((n + g, n + g), dtype=bool)
    rel[:n, :n] = src.rel
    rel[n:, n:] = generic.rel
    gidx = {s: n + i for i, s in enumerate(generic.states)}
    for i, v in enumerate(names, 1):
        outside = [w for w in range(n) if w not in src.truth_set(v)]
        rel[outside, gidx[f"a{i}^{k}"]] = True
        rel[outside, gidx[f"b{i}^{k}"]] = True
    rel[:n, gidx[f"a{m + 1}^{k}"]] = True
    rel[:n, gidx[f"b{m + 1}^{k}"]] = True
    lower = [gidx[s] for lv in gm.levels[:k] for s in lv]
    rel[:n, lower] = True
    rel = reflexive_closure(rel)
    val = {v: frozenset(n + i for i in idx) for v, idx in generic.valuation.items()}
    model = KripkeModel(states, rel, val)
    return McInstance(phi, model, inst.state, LogicClass.KC, Polarity.SAME)


def chain_to_modal(inst: McInstance) -> McInstance:
    """Move an intuitionistic instance to the modal companion via ``gt_prime``."""
    if not inst.logic.intuitionistic:
        raise ValueError(f"{inst.logic.value} is not an intuitionistic logic")
    return McInstance(gt_prime(inst.formula), inst.model, inst.state,
                      inst.logic.companion, inst.polarity)


# ---------------------------------------------------------------- bundles

class InstanceFormatError(ValueError):
    pass


_HEADER_KEYS = ("logic", "state", "polarity", "formula", "expected")


def dump_instance(inst: McInstance, expected: Optional[bool] = None) -> str:
    """Single-file bundle: header lines followed by the model lines."""
    lines = [f"logic: {inst.logic.value}", f"state: {inst.state}",
             f"polarity: {inst.polarity.value}", f"formula: {render(inst.formula)}"]
    if expected is not None:
        lines.append(f"expected: {'sat' if expected else 'unsat'}")
    return "\n".join(lines) + "\n" + dump_model(inst.model)


def parse_instance(text: str) -> tuple[McInstance, Optional[bool]]:
    """Inverse of :func:`dump_instance`; returns the instance and the optional expectation."""
    header: dict[str, str] = {}
    body: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        key, sep, rest = raw.partition(":")
        key = key.strip()
        if sep and key in _HEADER_KEYS:
            if key in header:
                raise InstanceFormatError(f"line {lineno}: duplicate {key!r}")
            header[key] = rest.strip()
        else:
            body.append(raw)
    for key in ("logic", "state", "formula"):
        if key not in header:
            raise InstanceFormatError(f"missing {key!r} line")
    try:
        logic = LogicClass.parse(header["logic"])
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from None
    try:
        polarity = Polarity(header.get("polarity", "same"))
    except ValueError:
        raise InstanceFormatError(f"unknown polarity {header['polarity']!r}") from None
    parser = parse_int if logic.intuitionistic else parse_modal
    formula = parser(header["formula"])
    model = parse_model("\n".join(body))
    expected = None
    if "expected" in header:
        word = header["expected"].lower()
        if word not in ("sat", "unsat"):
            raise InstanceFormatError(f"expected must be sat or unsat, got {word!r}")
        expected = word == "sat"
    try:
        inst = McInstance(formula, model, header["state"], logic, polarity)
    except KeyError as exc:
        raise InstanceFormatError(str(exc.args[0])) from None
    return inst, expected


def write_instance(inst: McInstance, path, expected: Optional[bool] = None) -> None:
    """Write a bundle file, or into ``path/`` as ``instance.txt`` plus ``model.txt`` when
    ``path`` is an existing directory."""
    path = Path(path)
    if path.is_dir():
        head = dump_instance(inst, expected).split("states:", 1)[0]
        (path / "instance.txt").write_text(head)
        (path / "model.txt").write_text(dump_model(inst.model))
    else:
        path.write_text(dump_instance(inst, expected))


def read_instance(path) -> tuple[McInstance, Optional[bool]]:
    path = Path(path)
    if path.is_dir():
        text = (path / "instance.txt").read_text() + (path / "model.txt").read_text()
    else:
        text = path.read_text()
    return parse_instance(text)
