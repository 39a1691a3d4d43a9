"""
Implication, subtraction and frames
===================================

On a finite lattice the residual ``x -> y`` is the join of every ``z`` with
``x ∧ z <= y``.  It is a genuine Heyting implication exactly when the lattice
is distributive; otherwise ``check_residuation`` returns a witness.
"""

from veinott import catalog, check_residuation, implication, subtraction

B = catalog.boolean(2)
print("p -> q   =", B.labels[implication(B, "p", "q")])
print("top - p  =", B.labels[subtraction(B, "top", "p")])

# implication table on the Boolean algebra with two atoms
print("      " + " ".join(f"{y:>4s}" for y in B.labels))
for x in B.labels:
    print(f"{x:>5s} " + " ".join(f"{B.labels[implication(B, x, y)]:>4s}" for y in B.labels))

# %%
# On the pentagon the candidate d -> c is e, but d ∧ e = d is not below c.
N = catalog.n5()
r = check_residuation(N)
x, Y = r.frame_witness
print("pentagon is a frame:", r.is_frame)
print(f"frame law fails for x = {N.labels[x]}, Y = {N.fmt(N.eset(list(Y)))}")

# %%
for spec in ["chain:5", "boolean:3", "m3", "random:7:5"]:
    L = catalog.build(spec)
    r = check_residuation(L)
    print(f"{spec:12s} frame={r.is_frame!s:5s} coframe={r.is_coframe}")
