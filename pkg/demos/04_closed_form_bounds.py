"""
Closed-form meets and joins of sublattices
==========================================

On a distributive lattice the Veinott meet of a family can be written down
directly: take the Moore closure ``U`` of the union, and keep each ``x`` in
``U`` whose down-part ``U ∩ ↓x`` lies below every member.  The join is the
same construction in the order dual.  Here it is checked against an
exhaustive search over all sublattices.
"""

import itertools

from veinott import (
    bottom_shift,
    catalog,
    enumerate_sl,
    veinott_glb_bruteforce,
    veinott_glb_formula,
    veinott_lub_bruteforce,
    veinott_lub_formula,
)
from veinott.sublattices import veinott_lower_bounds

B = catalog.boolean(2)
F = [B.eset(["bot", "p"]), B.eset(["bot", "q"])]
print("glb of {bot,p}, {bot,q}:", B.fmt(veinott_glb_formula(B, F)))
print("lub of {p,top}, {q,top}:", B.fmt(veinott_lub_formula(B, [B.eset(["p", "top"]), B.eset(["q", "top"])])))

# %%
L = catalog.divisor(12)
sl = enumerate_sl(L)
pairs = list(itertools.combinations(sl, 2))
same = sum(
    veinott_glb_formula(L, f) == veinott_glb_bruteforce(L, f) and veinott_lub_formula(L, f) == veinott_lub_bruteforce(L, f)
    for f in pairs
)
print(f"divisors of 12: {len(sl)} sublattices, formula agrees on {same}/{len(pairs)} pairs")

# %%
# Joining every element of a lower bound with the meet of the family's
# bottoms gives another lower bound, contained in the meet.
A, C = L.eset(["2", "4"]), L.eset(["3", "6", "12"])
G = veinott_glb_formula(L, [A, C])
for Z in veinott_lower_bounds(L, [A, C])[0][:6]:
    print(f"Z = {L.fmt(Z):12s} shifted = {L.fmt(bottom_shift(L, Z, [A, C])):12s} inside {L.fmt(G)}")

# %%
# In the truncated D lattice the chain of sets {top, a0..ai} has its largest
# member as meet.
D = catalog.d_lattice(3)
fam = catalog.d_family(D)
print("D(3) family meet:", D.fmt(veinott_glb_bruteforce(D, fam)))
