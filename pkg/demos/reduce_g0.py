"""Push the two-slice graph G0 through every AGAP reduction.

    python3 demos/reduce_g0.py
"""

from ilmc import AgapInstance, SliceGraph, check, render
from ilmc.reductions import chain_to_modal, to_bpl0, to_fpl1_impl, to_k0, to_kc_impl, to_s42_one_var

g0 = AgapInstance(SliceGraph((("s",), ("x", "t")), frozenset({("s", "x"), ("s", "t")})), "s", "t")
print("apath(s, t) =", g0.answer())
print()

for f in (to_k0, to_kc_impl, to_fpl1_impl, to_bpl0, to_s42_one_var):
    out = f(g0)
    text = render(out.formula)
    if len(text) > 70:
        text = text[:67] + "..."
    print(f"{f.__name__:15} {out.logic.value:4} {out.polarity.value:10} "
          f"{len(out.model):2} states  check={check(out)!s:5}  {text}")
    if out.logic.intuitionistic:
        modal = chain_to_modal(out)
        print(f"{'  + companion':15} {modal.logic.value:4} {'':10} {'':9}  check={check(modal)}")
