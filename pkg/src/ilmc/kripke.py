"""Finite Kripke models, frame conditions per logic, and relation closures."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Mapping, Optional

import numpy as np

if TYPE_CHECKING:
    from .agap import SliceGraph

__all__ = [
    "LogicClass", "KripkeModel", "FrameReport", "ModelFormatError",
    "validate", "transitive_closure", "reflexive_closure",
    "pseudo_transitive_closure", "parse_model", "dump_model",
]


class LogicClass(enum.Enum):
    BPL = "BPL"
    IPC = "IPC"
    KC = "KC"
    FPL = "FPL"
    K = "K"
    K4 = "K4"
    S4 = "S4"
    S42 = "S42"
    PrL = "PrL"

    @property
    def intuitionistic(self) -> bool:
        return self in _INTUITIONISTIC

    @property
    def requirements(self) -> frozenset[str]:
        return _REQUIREMENTS[self]

    @property
    def companion(self) -> "LogicClass":
        """Modal companion of an intuitionistic class."""
        return _COMPANION[self]

    @classmethod
    def parse(cls, text: str) -> "LogicClass":
        key = text.strip().replace(".", "")
        for member in cls:
            if member.value.lower() == key.lower():
                return member
        raise ValueError(f"unknown logic class {text!r}")


_INTUITIONISTIC = frozenset({LogicClass.BPL, LogicClass.IPC, LogicClass.KC, LogicClass.FPL})
_REQUIREMENTS = {
    LogicClass.K: frozenset(),
    LogicClass.BPL: frozenset({"transitive", "monotone"}),
    LogicClass.K4: frozenset({"transitive"}),
    LogicClass.IPC: frozenset({"transitive", "reflexive", "monotone"}),
    LogicClass.S4: frozenset({"transitive", "reflexive"}),
    LogicClass.KC: frozenset({"transitive", "reflexive", "directed", "monotone"}),
    LogicClass.S42: frozenset({"transitive", "reflexive", "directed"}),
    LogicClass.FPL: frozenset({"transitive", "irreflexive", "monotone"}),
    LogicClass.PrL: frozenset({"transitive", "irreflexive"}),
}
_COMPANION = {
    LogicClass.BPL: LogicClass.K4,
    LogicClass.IPC: LogicClass.S4,
    LogicClass.KC: LogicClass.S42,
    LogicClass.FPL: LogicClass.PrL,
}


def _frozen(mat) -> np.ndarray:
    out = np.array(mat, dtype=bool)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class KripkeModel:
    """A finite model ``(U, R, xi)``.

    ``rel[i, j]`` is true when state ``i`` sees state ``j``.  The valuation
    maps variable names to sets of state indices; variables that are not
    listed are false everywhere.
    """

    states: tuple[str, ...]
    rel: np.ndarray
    valuation: Mapping[str, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self):
        states = tuple(self.states)
        if not states:
            raise ValueError("a Kripke model needs at least one state")
        if len(set(states)) != len(states):
            raise ValueError("state names must be unique")
        rel = _frozen(self.rel)
        if rel.shape != (len(states), len(states)):
            raise ValueError(f"relation has shape {rel.shape}, expected {(len(states),) * 2}")
        val = {}
        for var, idx in self.valuation.items():
            idx = frozenset(int(i) for i in idx)
            if any(not 0 <= i < len(states) for i in idx):
                raise ValueError(f"valuation of {var!r} refers to a missing state")
            val[var] = idx
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "rel", rel)
        object.__setattr__(self, "valuation", val)
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(states)})

    @classmethod
    def from_edges(cls, states: Iterable[str], edges: Iterable[tuple[str, str]],
                   valuation: Optional[Mapping[str, Iterable[str]]] = None) -> "KripkeModel":
        states = tuple(states)
        index = {s: i for i, s in enumerate(states)}
        rel = np.zeros((len(states), len(states)), dtype=bool)
        for a, b in edges:
            rel[index[a], index[b]] = True
        val = {v: frozenset(index[s] for s in names) for v, names in (valuation or {}).items()}
        return cls(states, rel, val)

    def __len__(self) -> int:
        return len(self.states)

    def index(self, state: str) -> int:
        try:
            return self._index[state]
        except KeyError:
            raise KeyError(f"unknown state {state!r}") from None

    def truth_set(self, var: str) -> frozenset[int]:
        return self.valuation.get(var, frozenset())

    def successors(self, state: str) -> list[str]:
        row = self.rel[self.index(state)]
        return [self.states[j] for j in np.flatnonzero(row)]

    def edges(self) -> list[tuple[str, str]]:
        return [(self.states[i], self.states[j]) for i, j in zip(*np.nonzero(self.rel))]

    def with_relation(self, rel) -> "KripkeModel":
        return KripkeModel(self.states, rel, self.valuation)

    def __eq__(self, other):
        if not isinstance(other, KripkeModel):
            return NotImplemented
        return (self.states == other.states and np.array_equal(self.rel, other.rel)
                and {k: v for k, v in self.valuation.items() if v}
                == {k: v for k, v in other.valuation.items() if v})

    __hash__ = None


# ---------------------------------------------------------------- validation

@dataclass(frozen=True)
class FrameReport:
    transitive: bool
    reflexive: bool
    irreflexive: bool
    directed: bool
    monotone: bool
    counterexamples: Mapping[str, tuple] = field(default_factory=dict)
    logic: Optional[LogicClass] = None

    @property
    def failures(self) -> list[str]:
        if self.logic is None:
            return []
        return sorted(p for p in self.logic.requirements if not getattr(self, p))

    @property
    def admissible(self) -> bool:
        return not self.failures

    def describe(self) -> str:
        lines = []
        for prop in ("transitive", "reflexive", "irreflexive", "directed", "monotone"):
            ok = getattr(self, prop)
            line = f"{prop}: {'yes' if ok else 'no'}"
            if not ok:
                line += " " + _fmt_witness(self.counterexamples[prop])
            lines.append(line)
        if self.logic is not None:
            verdict = "admissible" if self.admissible else "not admissible"
            lines.append(f"{self.logic.value}: {verdict}")
        return "\n".join(lines)


def _fmt_witness(w: tuple) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def _first(mask: np.ndarray) -> Optional[tuple[int, ...]]:
    hits = np.argwhere(mask)
    return tuple(int(x) for x in hits[0]) if len(hits) else None


def validate(model: KripkeModel, logic: Optional[LogicClass] = None) -> FrameReport:
    """Check every frame property and report the first counterexample of each failure.

    The report is admissible for ``logic`` when all properties that class
    requires hold.
    """
    R = model.rel
    names = model.states
    cex: dict[str, tuple] = {}

    # (a, c) with a R b R c but not a R c
    two_step = (R.astype(np.int64) @ R.astype(np.int64)) > 0
    bad = _first(two_step & ~R)
    if bad is not None:
        a, c = bad
        b = int(np.flatnonzero(R[a] & R[:, c])[0])
        cex["transitive"] = (names[a], names[b], names[c])

    diag = np.diag(R)
    if not diag.all():
        cex["reflexive"] = (names[int(np.flatnonzero(~diag)[0])],) * 2
    if diag.any():
        cex["irreflexive"] = (names[int(np.flatnonzero(diag)[0])],) * 2

    common = (R.astype(np.int64) @ R.T.astype(np.int64)) > 0
    bad = _first(~common)
    if bad is not None:
        cex["directed"] = (names[bad[0]], names[bad[1]])

    for var in sorted(model.valuation):
        vec = np.zeros(len(names), dtype=bool)
        vec[list(model.valuation[var])] = True
        bad = _first(vec[:, None] & R & ~vec[None, :])
        if bad is not None:
            cex["monotone"] = (var, names[bad[0]], names[bad[1]])
            break

    return FrameReport(
        transitive="transitive" not in cex,
        reflexive="reflexive" not in cex,
        irreflexive="irreflexive" not in cex,
        directed="directed" not in cex,
        monotone="monotone" not in cex,
        counterexamples=cex,
        logic=logic,
    )


# ---------------------------------------------------------------- closures

def transitive_closure(rel) -> np.ndarray:
    """Warshall's algorithm, one vectorised row update per pivot."""
    R = np.array(rel, dtype=bool)
    if R.ndim != 2 or R.shape[0] != R.shape[1]:
        raise ValueError("relation must be a square matrix")
    for k in range(R.shape[0]):
        R |= np.outer(R[:, k], R[k, :])
    return R


def reflexive_closure(rel) -> np.ndarray:
    R = np.array(rel, dtype=bool)
    np.fill_diagonal(R, True)
    return R


def pseudo_transitive_closure(g: "SliceGraph") -> np.ndarray:
    """``E`` plus every edge from slice ``i`` to a slice ``>= i + 2``.

    Rows and columns follow ``g.nodes`` (slices concatenated in order).
    """
    from .agap import validate_slice_graph

    problem = validate_slice_graph(g)
    if problem is not None:
        raise ValueError(f"invalid slice graph: {problem}")
    index = g.index
    n = len(g.nodes)
    R = np.zeros((n, n), dtype=bool)
    for u, v in g.edges:
        R[index[u], index[v]] = True
    level = np.array([g.slice_of[v] for v in g.nodes])
    R |= level[None, :] >= level[:, None] + 2
    return R


# ---------------------------------------------------------------- text format

class ModelFormatError(ValueError):
    pass


def parse_model(text: str) -> KripkeModel:
    """Read the line format::

        states: s0 s1 top
        edge: s0 s1
        val p: s1 top
    """
    states: Optional[list[str]] = None
    edges: list[tuple[str, str]] = []
    val: dict[str, set[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ModelFormatError(f"line {lineno}: missing ':'")
        head, items = head.strip(), rest.split()
        if head == "states":
            if states is not None:
                raise ModelFormatError(f"line {lineno}: duplicate states line")
            states = items
        elif head == "edge":
            if len(items) != 2:
                raise ModelFormatError(f"line {lineno}: an edge line needs exactly two states")
            edges.append((items[0], items[1]))
        elif head.startswith("val ") or head.startswith("val\t"):
            var = head[3:].strip()
            val.setdefault(var, set()).update(items)
        else:
            raise ModelFormatError(f"line {lineno}: unknown directive {head!r}")
    if not states:
        raise ModelFormatError("missing or empty 'states:' line")
    known = set(states)
    for a, b in edges:
        for s in (a, b):
            if s not in known:
                raise ModelFormatError(f"edge mentions unknown state {s!r}")
    for var, names in val.items():
        for s in names:
            if s not in known:
                raise ModelFormatError(f"valuation of {var!r} mentions unknown state {s!r}")
    try:
        return KripkeModel.from_edges(states, edges, val)
    except ValueError as exc:
        raise ModelFormatError(str(exc)) from None


def dump_model(model: KripkeModel) -> str:
    lines = ["states: " + " ".join(model.states)]
    lines += [f"edge: {a} {b}" for a, b in model.edges()]
    for var in sorted(model.valuation):
        members = [model.states[i] for i in sorted(model.valuation[var])]
        if members:
            lines.append(f"val {var}: " + " ".join(members))
    return "\n".join(lines) + "\n"
