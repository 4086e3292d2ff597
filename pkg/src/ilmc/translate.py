"""Goedel-Tarski style translations from intuitionistic to modal formulas."""

from __future__ import annotations

from .formula import And, Bot, Box, Formula, Impl, Or, Var, m_and, m_or, subformulas

__all__ = ["gt", "gt_prime"]


def _translate(phi: Formula, atom) -> Formula:
    memo: dict[Formula, Formula] = {}
    for node in subformulas(phi):
        if isinstance(node, Bot):
            memo[node] = node
        elif isinstance(node, Var):
            memo[node] = atom(node)
        elif isinstance(node, And):
            memo[node] = m_and(memo[node.left], memo[node.right])
        elif isinstance(node, Or):
            memo[node] = m_or(memo[node.left], memo[node.right])
        elif isinstance(node, Impl):
            memo[node] = Box(Impl(memo[node.left], memo[node.right]))
        else:
            raise TypeError("gt is defined on intuitionistic formulas only")
    return memo[phi]


def gt(phi: Formula) -> Formula:
    """Validity-preserving translation; variables become ``p & []p``."""
    return _translate(phi, lambda v: m_and(v, Box(v)))


def gt_prime(phi: Formula) -> Formula:
    """Like :func:`gt` but leaves variables alone.

    Preserves satisfaction at every state of an intuitionistic model and
    sends implicational formulas to strictly implicational ones.
    """
    return _translate(phi, lambda v: v)
