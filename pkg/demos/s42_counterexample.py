"""The smallest slice graph on which the published one-variable S4.2
construction gives the wrong answer, and what the repaired one does.

    python3 demos/s42_counterexample.py
"""

from ilmc import AgapInstance, SliceGraph, check
from ilmc.formula import render
from ilmc.reductions import s42_delta, s42_eta, to_s42_one_var
from ilmc.semantics import eval_modal

# s reaches only x, so the target t is out of reach
inst = AgapInstance(SliceGraph((("s",), ("t", "x")), frozenset({("s", "x")})), "s", "t")
print("apath(s, t) =", inst.answer())

for repaired in (False, True):
    out = to_s42_one_var(inst, repaired)
    label = "repaired " if repaired else "published"
    print(f"\n{label}: check = {check(out)}")
    eta = s42_eta()
    print("  eta holds at", sorted(eval_modal(out.model, eta).names(eta)))
    for i, d in sorted(s42_delta(2, repaired).items()):
        where = sorted(eval_modal(out.model, d).names(d))
        print(f"  delta_{i} holds at {where}")

print("\nThe published delta_2 = <>~eta is true everywhere: every state sees the")
print("t1/t2 pair, and t2 refutes eta.  Hence delta_1 bounds nothing and the")
print("existential step at s may jump straight to t2.")
print("\nrepaired delta_2 =", render(s42_delta(2, True)[2]))
