"""
Sublattices under the Veinott order
===================================

``S <=v T`` when every ``s ∧ t`` lies in ``S`` and every ``s ∨ t`` lies in
``T``.  On the sublattices of a distributive lattice this order is a complete
lattice; on the pentagon it is not, and the failure is easy to see.
"""

from veinott import analyze, catalog, enumerate_sl, is_distributive, veinott_leq, veinott_lower_bounds
from veinott.sublattices import veinott_down_set

N = catalog.n5()
print("pentagon has", len(enumerate_sl(N)), "sublattices")

de, abce = N.eset("de"), N.eset("abce")
print("below de:  ", ", ".join(N.fmt(s) for s in veinott_down_set(N, de)))
print("below abce:", ", ".join(N.fmt(s) for s in veinott_down_set(N, abce)))

lbs, maximal = veinott_lower_bounds(N, [de, abce])
print("common lower bounds:", ", ".join(N.fmt(s) for s in lbs))
print("maximal ones:       ", ", ".join(N.fmt(s) for s in maximal))
print("ab <=v ac:", veinott_leq(N, N.eset("ab"), N.eset("ac")), " ac <=v ab:", veinott_leq(N, N.eset("ac"), N.eset("ab")))

# %%
# Two incomparable maximal lower bounds mean no greatest one.  The same
# search over all small lattices lines up with distributivity.
for n in range(1, 8):
    lats = list(catalog.all_lattices(n))
    sl_lattice = sum(analyze(L).is_lattice for L in lats)
    distributive = sum(is_distributive(L) for L in lats)
    print(f"{n} elements: {len(lats):2d} lattices, {sl_lattice:2d} with SL a lattice, {distributive:2d} distributive")

# %%
M = catalog.m3()
v = analyze(M)
print("diamond:", v.failure.kind, "fails for", " / ".join(M.fmt(s) for s in v.failure.pair),
      "with maximal lower bounds", ", ".join(M.fmt(s) for s in v.failure.bounds))
