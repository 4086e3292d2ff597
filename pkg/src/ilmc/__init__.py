"""Model checking for intuitionistic logics and their modal companions."""

from .agap import AgapInstance, AlternatingGraph, Kind, SliceGraph, agap_to_asagap, apath
from .fastcheck import OMEGA, FormulaIndex, check_fpl0, check_prl0, formula_index, lp
from .formula import (
    BOT, TOP, And, Bot, Box, Impl, Or, Var, analyze, parse_int, parse_modal, render,
)
from .kripke import KripkeModel, LogicClass, validate
from .reductions import (
    McInstance, Polarity, chain_to_modal, ipc_to_kc2, to_bpl0, to_fpl1_impl, to_k0,
    to_kc_impl, to_s42_one_var,
)
from .semantics import AdmissibilityError, check, eval_int, eval_modal
from .translate import gt, gt_prime

__all__ = [
    "AgapInstance", "AlternatingGraph", "Kind", "SliceGraph", "agap_to_asagap", "apath",
    "OMEGA", "FormulaIndex", "check_fpl0", "check_prl0", "formula_index", "lp",
    "BOT", "TOP", "And", "Bot", "Box", "Impl", "Or", "Var", "analyze", "parse_int",
    "parse_modal", "render", "KripkeModel", "LogicClass", "validate",
    "McInstance", "Polarity", "chain_to_modal", "ipc_to_kc2", "to_bpl0", "to_fpl1_impl",
    "to_k0", "to_kc_impl", "to_s42_one_var",
    "AdmissibilityError", "check", "eval_int", "eval_modal", "gt", "gt_prime",
]
