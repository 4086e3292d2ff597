"""Bottom-up labelling evaluators for both satisfaction relations.

Each evaluator computes, for every distinct subformula, the set of states
satisfying it.  Implication and box inspect each (state, successor) pair
once per subformula, so the cost is O(|phi| * |U|^2).
"""

from __future__ import annotations

import contextlib
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .formula import And, Bot, Box, Formula, Impl, Or, Var, is_intuitionistic, is_modal, subformulas
from .kripke import KripkeModel, LogicClass, validate

__all__ = [
    "AdmissibilityError", "SatTable", "OpCounter", "eval_int", "eval_modal", "check",
    "monotonicity_audit", "MonotonicityLog",
]


class AdmissibilityError(ValueError):
    """The model does not meet the frame conditions of the requested logic."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


@dataclass
class OpCounter:
    """Counts (subformula, state, successor) inspections."""

    successor_checks: int = 0
    nodes: int = 0


class SatTable(Mapping):
    """Maps each subformula to the frozenset of state indices satisfying it."""

    def __init__(self, model: KripkeModel, vectors: dict[Formula, np.ndarray]):
        self.model = model
        self._vectors = vectors

    def __getitem__(self, phi: Formula) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self._vectors[phi]))

    def __iter__(self) -> Iterator[Formula]:
        return iter(self._vectors)

    def __len__(self) -> int:
        return len(self._vectors)

    def vector(self, phi: Formula) -> np.ndarray:
        return self._vectors[phi]

    def holds(self, phi: Formula, state: str) -> bool:
        return bool(self._vectors[phi][self.model.index(state)])

    def names(self, phi: Formula) -> frozenset[str]:
        return frozenset(self.model.states[i] for i in np.flatnonzero(self._vectors[phi]))


# ---------------------------------------------------------------- audit

@dataclass(eq=False)
class MonotonicityLog:
    evaluations: int = 0
    subformulas: int = 0
    violations: list = field(default_factory=list)


_audits: list[MonotonicityLog] = []


@contextlib.contextmanager
def monotonicity_audit():
    """While active, every ``eval_int`` checks that all satisfying sets are upward closed."""
    log = MonotonicityLog()
    _audits.append(log)
    try:
        yield log
    finally:
        _audits.remove(log)


def _audit(model: KripkeModel, vectors: dict[Formula, np.ndarray]) -> None:
    R = model.rel
    bad = []
    for phi, vec in vectors.items():
        if (vec[:, None] & R & ~vec[None, :]).any():
            bad.append((phi, model))
    for log in _audits:
        log.evaluations += 1
        log.subformulas += len(vectors)
        log.violations.extend(bad)


# ---------------------------------------------------------------- evaluators

def _valuation_vector(model: KripkeModel, name: str) -> np.ndarray:
    vec = np.zeros(len(model), dtype=bool)
    idx = list(model.truth_set(name))
    if idx:
        vec[idx] = True
    return vec


def eval_int(model: KripkeModel, phi: Formula, ops: Optional[OpCounter] = None,
             check_frame: bool = True) -> SatTable:
    """Intuitionistic satisfaction.

    ``a -> b`` holds at ``s`` when every successor of ``s`` that satisfies
    ``a`` satisfies ``b``.  Only R-successors count, so on frames that are
    not reflexive the state itself is not inspected.
    """
    if check_frame:
        report = validate(model, LogicClass.BPL)
        if not report.admissible:
            raise AdmissibilityError(
                f"model is not intuitionistic: fails {', '.join(report.failures)}", report)
    R = model.rel
    n = len(model)
    out: dict[Formula, np.ndarray] = {}
    for node in subformulas(phi):
        if isinstance(node, Bot):
            vec = np.zeros(n, dtype=bool)
        elif isinstance(node, Var):
            vec = _valuation_vector(model, node.name)
        elif isinstance(node, And):
            vec = out[node.left] & out[node.right]
        elif isinstance(node, Or):
            vec = out[node.left] | out[node.right]
        elif isinstance(node, Impl):
            bad = out[node.left] & ~out[node.right]
            vec = ~(R & bad[None, :]).any(axis=1)
            if ops is not None:
                ops.successor_checks += int(R.sum())
        else:
            raise TypeError(f"{type(node).__name__} is not an intuitionistic connective")
        if ops is not None:
            ops.nodes += 1
        out[node] = vec
    if _audits:
        _audit(model, out)
    return SatTable(model, out)


def eval_modal(model: KripkeModel, phi: Formula, ops: Optional[OpCounter] = None) -> SatTable:
    """Modal satisfaction: material implication, box over all successors."""
    R = model.rel
    n = len(model)
    out: dict[Formula, np.ndarray] = {}
    for node in subformulas(phi):
        if isinstance(node, Bot):
            vec = np.zeros(n, dtype=bool)
        elif isinstance(node, Var):
            vec = _valuation_vector(model, node.name)
        elif isinstance(node, Impl):
            vec = ~out[node.left] | out[node.right]
        elif isinstance(node, Box):
            vec = ~(R & ~out[node.child][None, :]).any(axis=1)
            if ops is not None:
                ops.successor_checks += int(R.sum())
        else:
            raise TypeError(f"{type(node).__name__} is not a modal connective")
        if ops is not None:
            ops.nodes += 1
        out[node] = vec
    return SatTable(model, out)


def check(inst) -> bool:
    """Decide an instance: is ``inst.formula`` satisfied at ``inst.state``?

    ``inst`` is anything with ``formula``, ``model``, ``state`` and
    ``logic`` attributes (normally a ``reductions.McInstance``).
    """
    logic: LogicClass = inst.logic
    model: KripkeModel = inst.model
    idx = model.index(inst.state)
    report = validate(model, logic)
    if not report.admissible:
        raise AdmissibilityError(
            f"model is not admissible for {logic.value}: fails {', '.join(report.failures)}",
            report)
    if logic.intuitionistic:
        if not is_intuitionistic(inst.formula):
            raise TypeError("box in a formula checked in an intuitionistic logic")
        table = eval_int(model, inst.formula, check_frame=False)
    else:
        if not is_modal(inst.formula):
            raise TypeError("intuitionistic connective in a formula checked in a modal logic")
        table = eval_modal(model, inst.formula)
    return bool(table.vector(inst.formula)[idx])
