"""Seeded differential testing of reductions, translations and fast checkers.

Every case draws from its own ``random.Random`` seeded with
``"{seed}:{suite}:{case}"``, so a report does not depend on the order in
which suites or cases run.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .agap import dump_graph
from .fastcheck import check_fpl0, check_prl0
from .formula import render
from .generators import (
    random_int_formula, random_ipc_instance, random_modal_formula, random_model,
    random_slice_instance,
)
from .kripke import LogicClass, validate
from .reductions import (
    McInstance, chain_to_modal, dump_instance, ipc_to_kc2, to_bpl0, to_fpl1_impl, to_k0,
    to_kc_impl, to_s42_one_var,
)
from .semantics import check, eval_int, eval_modal
from .translate import gt_prime

__all__ = ["DiffTestConfig", "SuiteResult", "AGAP_REDUCTIONS", "SUITES", "run", "format_report"]

AGAP_REDUCTIONS: dict[str, Callable] = {
    "k0": to_k0,
    "kc-impl": to_kc_impl,
    "fpl1": to_fpl1_impl,
    "bpl0": to_bpl0,
    "s42-1": to_s42_one_var,
}
SUITES = tuple(AGAP_REDUCTIONS) + ("kc2", "gtp", "fpl0", "prl0")


@dataclass(frozen=True)
class DiffTestConfig:
    seed: int = 0
    cases: int = 200
    max_nodes: int = 5
    max_slices: int = 6
    max_formula_size: int = 30
    generators: tuple[str, ...] = SUITES
    repaired: bool = False

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.cases < 1:
            raise ValueError("cases must be at least 1")
        if self.max_slices < 2:
            raise ValueError("max_slices must be at least 2")
        if self.max_nodes < 1 or self.max_formula_size < 1:
            raise ValueError("max_nodes and max_formula_size must be positive")
        unknown = sorted(set(self.generators) - set(SUITES))
        if unknown:
            raise ValueError(f"unknown generator {unknown[0]!r}; choose from {', '.join(SUITES)}")


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: Optional[dict] = None
    failures: list[int] = field(default_factory=list)


def _case_rng(cfg: DiffTestConfig, suite: str, case: int) -> random.Random:
    return random.Random(f"{cfg.seed}:{suite}:{case}")


def _agap_case(cfg, name, rng):
    src = random_slice_instance(rng, cfg.max_slices, cfg.max_nodes)
    truth = src.answer()
    f = AGAP_REDUCTIONS[name]
    out = f(src, cfg.repaired) if name == "s42-1" else f(src)
    expected = out.expected(truth)
    results = [(out, expected)]
    if out.logic.intuitionistic:
        results.append((chain_to_modal(out), expected))
    for inst, exp in results:
        if not validate(inst.model, inst.logic).admissible or check(inst) != exp:
            return False, {"source": dump_graph(src), "bundle": dump_instance(inst, exp)}
    return True, None


def _kc2_case(cfg, rng):
    src = random_ipc_instance(rng, max_states=min(cfg.max_nodes + 1, 6),
                              max_size=cfg.max_formula_size)
    truth = check(src)
    out = ipc_to_kc2(src, cfg.repaired)
    if not validate(out.model, LogicClass.KC).admissible or check(out) != truth:
        return False, {"source": dump_instance(src, truth), "bundle": dump_instance(out, truth)}
    return True, None


def _gtp_case(cfg, rng):
    logic = rng.choice([LogicClass.BPL, LogicClass.IPC, LogicClass.KC, LogicClass.FPL])
    model = random_model(rng, logic, rng.randint(1, cfg.max_nodes * 2))
    phi = random_int_formula(rng, rng.randint(1, cfg.max_formula_size))
    left = eval_int(model, phi).vector(phi)
    psi = gt_prime(phi)
    right = eval_modal(model, psi).vector(psi)
    if (left != right).any():
        state = model.states[int((left != right).argmax())]
        inst = McInstance(phi, model, state, logic)
        return False, {"bundle": dump_instance(inst, bool(left[model.index(state)])),
                       "translation": render(psi)}
    return True, None


def _fast_case(cfg, rng, logic):
    model = random_model(rng, logic, rng.randint(1, cfg.max_nodes * 2), variables=())
    size = rng.randint(1, cfg.max_formula_size)
    if logic is LogicClass.FPL:
        phi = random_int_formula(rng, size, variables=())
        naive, fast = eval_int(model, phi), check_fpl0
    else:
        phi = random_modal_formula(rng, size)
        naive, fast = eval_modal(model, phi), check_prl0
    for state in model.states:
        truth = naive.holds(phi, state)
        if fast(phi, model, state) != truth:
            return False, {"bundle": dump_instance(McInstance(phi, model, state, logic), truth)}
    return True, None


def _run_case(cfg: DiffTestConfig, suite: str, rng: random.Random):
    if suite in AGAP_REDUCTIONS:
        return _agap_case(cfg, suite, rng)
    if suite == "kc2":
        return _kc2_case(cfg, rng)
    if suite == "gtp":
        return _gtp_case(cfg, rng)
    return _fast_case(cfg, rng, LogicClass.FPL if suite == "fpl0" else LogicClass.PrL)


def run(cfg: DiffTestConfig) -> list[SuiteResult]:
    results = []
    for suite in SUITES:
        if suite not in cfg.generators:
            continue
        res = SuiteResult(suite)
        for case in range(cfg.cases):
            ok, detail = _run_case(cfg, suite, _case_rng(cfg, suite, case))
            if ok:
                res.passed += 1
            else:
                res.failed += 1
                res.failures.append(case)
                if res.first_failure is None:
                    res.first_failure = {"case": case, **detail}
        results.append(res)
    return results


def format_report(cfg: DiffTestConfig, results: Sequence[SuiteResult], fmt: str = "text") -> str:
    if fmt == "jsonl":
        lines = [json.dumps({"seed": cfg.seed, "cases": cfg.cases, "repaired": cfg.repaired},
                            sort_keys=True)]
        for r in results:
            lines.append(json.dumps({"suite": r.name, "passed": r.passed, "failed": r.failed,
                                     "first_failure": r.first_failure}, sort_keys=True))
        return "\n".join(lines) + "\n"
    lines = [f"difftest seed={cfg.seed} cases={cfg.cases}"
             + (" repaired" if cfg.repaired else "")]
    for r in results:
        lines.append(f"{r.name:8} passed {r.passed:5}  failed {r.failed:5}")
    for r in results:
        if r.first_failure:
            lines.append(f"\n# first failure in {r.name}, case {r.first_failure['case']}")
            for key in ("source", "translation", "bundle"):
                if key in r.first_failure:
                    lines.append(f"## {key}")
                    lines.append(r.first_failure[key].rstrip("\n"))
    return "\n".join(lines) + "\n"
