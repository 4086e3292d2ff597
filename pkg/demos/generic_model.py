"""Maximal refuting states in the two-variable KC model.

Compares the published level-1 formulas with the repaired ones and shows a
one-state IPC instance whose answer the published translation flips.

    python3 demos/generic_model.py
"""

from ilmc import KripkeModel, LogicClass, check, parse_int
from ilmc.reductions import McInstance, generic_formulas, generic_model, ipc_to_kc2
from ilmc.semantics import eval_int

gm = generic_model(1).model


def seers(name):
    j = gm.index(name)
    return {s for i, s in enumerate(gm.states) if gm.rel[i, j]}


for repaired in (False, True):
    print("repaired" if repaired else "published")
    alpha, beta = generic_formulas(1, repaired)[1]
    for name, phi in [(f"a{i}^1", f) for i, f in alpha.items()] + [(f"b{i}^1", f) for i, f in beta.items()]:
        t = eval_int(gm, phi)
        refuters = {s for s in gm.states if not t.holds(phi, s)}
        mark = "ok " if refuters == seers(name) else "BAD"
        print(f"  {mark} {name}: refuted at {sorted(refuters)}")

w = KripkeModel.from_edges(["w"], [("w", "w")])
inst = McInstance(parse_int("v1 -> false"), w, "w", LogicClass.IPC)
print("\n~v1 at a reflexive point with v1 false:", check(inst))
print("  published translation:", check(ipc_to_kc2(inst)))
print("  repaired translation: ", check(ipc_to_kc2(inst, repaired=True)))
