"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
The published constructions are what is measured; where they fail, the
line says so and an ``info`` line reports the repaired variants.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import claims  # noqa: E402
from ilmc.fastcheck import check_fpl0, check_prl0, formula_index, visser_alpha  # noqa: E402
from ilmc.generators import (  # noqa: E402
    enumerate_slice_instances, random_int_formula, random_ipc_instance, random_modal_formula,
    random_model, random_slice_instance,
)
from ilmc.kripke import LogicClass, validate  # noqa: E402
from ilmc.reductions import (  # noqa: E402
    chain_to_modal, generic_model, generic_sizes, ipc_to_kc2, to_bpl0, to_fpl1_impl, to_k0,
    to_kc_impl, to_s42_one_var,
)
from ilmc.semantics import check, eval_int, eval_modal, monotonicity_audit  # noqa: E402
from ilmc.translate import gt_prime  # noqa: E402

GENERATORS = {
    "to_k0": to_k0,
    "to_kc_impl": to_kc_impl,
    "to_fpl1_impl": to_fpl1_impl,
    "to_bpl0": to_bpl0,
    "to_s42_one_var": to_s42_one_var,
}
INT_LOGICS = [LogicClass.BPL, LogicClass.IPC, LogicClass.KC, LogicClass.FPL]


class Outcome:
    def __init__(self, number, title, limit=None):
        self.number, self.title, self.limit = number, title, limit
        self.problems: list[str] = []
        self.info: list[str] = []
        self.summary = ""
        self._start = time.perf_counter()
        self.elapsed = 0.0

    def stop(self):
        self.elapsed = time.perf_counter() - self._start
        if self.limit is not None and self.elapsed >= self.limit:
            self.problems.append(f"took {self.elapsed:.1f}s, limit {self.limit}s")
        return self

    @property
    def ok(self):
        return not self.problems

    def lines(self):
        status = "PASS" if self.ok else "FAIL"
        detail = "; ".join([self.summary] + self.problems) if self.summary else "; ".join(self.problems)
        out = [f"{status} criterion {self.number}: {self.title} ({detail}; {self.elapsed:.1f}s)"]
        out += [f"    info: {line}" for line in self.info]
        return out


def _agrees(out, truth):
    return validate(out.model, out.logic).admissible and check(out) == out.expected(truth)


def _soundness(instances, with_chain):
    """Failure counts per generator, plus counts for the repaired S4.2 variant."""
    bad = {name: 0 for name in GENERATORS}
    repaired = 0
    total = 0
    for inst in instances:
        total += 1
        truth = inst.answer()
        for name, f in GENERATORS.items():
            out = f(inst)
            outs = [out, chain_to_modal(out)] if with_chain and out.logic.intuitionistic else [out]
            if not all(_agrees(o, truth) for o in outs):
                bad[name] += 1
        if not _agrees(to_s42_one_var(inst, repaired=True), truth):
            repaired += 1
    return total, bad, repaired


def _report_soundness(res, total, bad, repaired):
    res.summary = f"{total} instances x {len(GENERATORS)} generators"
    for name, n in bad.items():
        if n:
            res.problems.append(f"{name} disagrees on {n}/{total}")
    if bad["to_s42_one_var"]:
        res.info.append(f"to_s42_one_var(repaired=True) disagrees on {repaired}/{total}")


def criterion_1():
    res = Outcome(1, "reduction soundness, exhaustive", limit=60)
    _report_soundness(res, *_soundness(enumerate_slice_instances(6, (2, 4)), with_chain=False))
    return res.stop()


def _random_slices():
    rng = random.Random(20240601)
    return [random_slice_instance(rng, max_slices=6, max_width=5) for _ in range(200)]


def criterion_2():
    res = Outcome(2, "reduction soundness, randomized", limit=120)
    _report_soundness(res, *_soundness(_random_slices(), with_chain=True))
    return res.stop()


def criterion_3():
    res = Outcome(3, "per-slice claims")
    counts = {"kc": 0, "fpl": 0, "s42": 0, "s42 repaired": 0, "s42 repaired shifted": 0}
    instances = _random_slices()
    for inst in instances:
        counts["kc"] += bool(claims.kc_claims(inst))
        counts["fpl"] += bool(claims.fpl_claims(inst))
        counts["s42"] += bool(claims.s42_claims(inst))
        counts["s42 repaired"] += bool(claims.s42_claims(inst, repaired=True))
        counts["s42 repaired shifted"] += bool(claims.s42_claims(inst, repaired=True, shift=1))
    res.summary = f"{len(instances)} instances"
    for key in ("kc", "fpl", "s42"):
        if counts[key]:
            res.problems.append(f"{key} claim violated on {counts[key]}/{len(instances)}")
    res.info.append(f"repaired delta_i vs V_<=i: violated on {counts['s42 repaired']}/{len(instances)}")
    res.info.append(f"repaired delta_i vs V_<=i+1: violated on "
                    f"{counts['s42 repaired shifted']}/{len(instances)}")
    return res.stop()


def criterion_4():
    res = Outcome(4, "Goedel-Tarski preservation", limit=30)
    rng = random.Random(4)
    bad = 0
    for _ in range(1000):
        m = random_model(rng, rng.choice(INT_LOGICS), rng.randint(1, 10))
        phi = random_int_formula(rng, rng.randint(1, 30))
        psi = gt_prime(phi)
        bad += bool((eval_int(m, phi).vector(phi) != eval_modal(m, psi).vector(psi)).any())
    res.summary = "1000 pairs"
    if bad:
        res.problems.append(f"{bad} disagreements")
    return res.stop()


def criterion_5():
    res = Outcome(5, "fast-checker equivalence", limit=30)
    rng = random.Random(5)
    bad_f = bad_p = 0
    for _ in range(500):
        m = random_model(rng, LogicClass.FPL, rng.randint(1, 12), variables=())
        phi = random_int_formula(rng, rng.randint(1, 40), variables=())
        t = eval_int(m, phi)
        bad_f += any(check_fpl0(phi, m, s) != t.holds(phi, s) for s in m.states)
    for _ in range(500):
        m = random_model(rng, LogicClass.PrL, rng.randint(1, 12), variables=())
        phi = random_modal_formula(rng, rng.randint(1, 40))
        t = eval_modal(m, phi)
        bad_p += any(check_prl0(phi, m, s) != t.holds(phi, s) for s in m.states)
    res.summary = "500 FPL_0 + 500 PrL_0 cases"
    if bad_f:
        res.problems.append(f"check_fpl0 differs on {bad_f}")
    if bad_p:
        res.problems.append(f"check_prl0 differs on {bad_p}")
    return res.stop()


def criterion_6():
    res = Outcome(6, "formula index soundness")
    rng = random.Random(6)
    bad = 0
    for _ in range(500):
        phi = random_int_formula(rng, rng.randint(1, 40), variables=())
        alpha = visser_alpha(formula_index(phi))
        for _ in range(20):
            m = random_model(rng, LogicClass.FPL, rng.randint(1, 10), variables=())
            if (eval_int(m, phi).vector(phi) != eval_int(m, alpha).vector(alpha)).any():
                bad += 1
                break
    res.summary = "500 formulas x 20 models"
    if bad:
        res.problems.append(f"{bad} formulas differ from their alpha")
    return res.stop()


def _kc2_pipeline(repaired):
    rng = random.Random(7)
    wrong = invalid = 0
    for _ in range(100):
        inst = random_ipc_instance(rng, max_vars=4, max_states=6)
        out = ipc_to_kc2(inst, repaired)
        invalid += not validate(out.model, LogicClass.KC).admissible
        wrong += check(out) != check(inst)
    return wrong, invalid


def criterion_7():
    res = Outcome(7, "two-variable KC pipeline", limit=120)
    wrong, invalid = _kc2_pipeline(repaired=False)
    maxref = {k: len(claims.maxref_claims(k)) for k in (1, 2, 3)}
    res.summary = "100 instances, levels 1..3"
    if wrong:
        res.problems.append(f"answer changes on {wrong}/100")
    if invalid:
        res.problems.append(f"output not KC on {invalid}/100")
    for k, n in maxref.items():
        if n:
            res.problems.append(f"maximal-refuter claim fails for {n} formulas at level {k}")
    wrong_r, invalid_r = _kc2_pipeline(repaired=True)
    maxref_r = sum(len(claims.maxref_claims(k, repaired=True)) for k in (1, 2, 3))
    res.info.append(f"repaired: answer changes on {wrong_r}/100, not KC on {invalid_r}/100, "
                    f"maximal-refuter failures {maxref_r}")
    return res.stop()


def criterion_8():
    res = Outcome(8, "structural constants")
    rng = random.Random(8)
    extra = {len(to_bpl0(inst).model) - len(inst.graph.nodes)
             for inst in (random_slice_instance(rng) for _ in range(50))}
    if extra != {15}:
        res.problems.append(f"to_bpl0 adds {sorted(extra)} states")
    if generic_sizes(3) != (3, 4, 9):
        res.problems.append(f"level sizes {generic_sizes(3)}")
    if [len(generic_model(k).levels[k]) for k in (1, 2, 3)] != [6, 8, 18]:
        res.problems.append("generic model levels have the wrong size")
    fig5 = claims.fig5_claims()
    if fig5:
        res.problems.append(f"{len(fig5)} frame annotations wrong")
    fig6 = claims.fig6_claims()
    if fig6:
        res.problems.append("generic-model top annotations wrong at " + ",".join(s for (s,) in fig6))
    res.summary = f"15 extra states, sizes 3/4/9, {len(claims.fig5_annotations())} frame annotations"
    res.info.append(f"repaired top annotations wrong at {len(claims.fig6_claims(repaired=True))} points")
    return res.stop()


def criterion_9(log):
    res = Outcome(9, "monotonicity invariant")
    res.summary = f"{log.evaluations} evaluations, {log.subformulas} satisfying sets"
    if log.violations:
        res.problems.append(f"{len(log.violations)} sets not upward closed")
    if not log.evaluations:
        res.problems.append("no evaluations were audited")
    return res.stop()


# ---------------------------------------------------------------- pytest

def _emit(capsys, res):
    with capsys.disabled():
        print()
        print("\n".join(res.lines()))
    assert res.ok, res.lines()[0]


@pytest.mark.parametrize("criterion", [criterion_1, criterion_2, criterion_3, criterion_4,
                                       criterion_5, criterion_6, criterion_7, criterion_8],
                         ids=[f"criterion_{i}" for i in range(1, 9)])
def test_criterion(criterion, capsys):
    _emit(capsys, criterion())


def test_criterion_9(capsys):
    from conftest import SESSION
    _emit(capsys, criterion_9(SESSION["log"]))


if __name__ == "__main__":
    results = []
    with monotonicity_audit() as log:
        for fn in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                   criterion_6, criterion_7, criterion_8):
            res = fn()
            results.append(res)
            print("\n".join(res.lines()), flush=True)
    res = criterion_9(log)
    results.append(res)
    print("\n".join(res.lines()))
    sys.exit(0 if all(r.ok for r in results) else 1)
