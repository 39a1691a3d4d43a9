"""
Building and inspecting finite lattices
=======================================

A lattice is given by its elements and cover pairs ``(lower, upper)``.
Construction validates the order and fills the meet and join tables.
"""

from veinott import catalog, check_poset, find_forbidden_sublattice, from_covers, is_distributive
from veinott.lattice import atoms, dual, is_isomorphic, meet, join, moore_closure

# the pentagon: a < b < e and a < c < d < e
N5 = from_covers("abcde", [("a", "b"), ("a", "c"), ("c", "d"), ("b", "e"), ("d", "e")])
print("b meet c =", N5.labels[meet(N5, "b", "c")])
print("b join c =", N5.labels[join(N5, "b", "c")])
print("atoms:", N5.fmt(atoms(N5)))

# meets of all nonempty subsets of {b, d}
print("Moore closure of bd:", N5.fmt(moore_closure(N5, N5.eset("bd"))))

# a poset with two maximal elements is rejected, naming the offending pair
report = check_poset("abc", [("a", "b"), ("a", "c")])
print(report)

# %%
# Distributivity fails exactly when a pentagon or diamond sits inside.
for spec in ["n5", "m3", "boolean:3", "divisor:36", "product:chain:1*n5", "d:2"]:
    L = catalog.build(spec)
    w = find_forbidden_sublattice(L)
    found = "none" if w is None else f"{w.kind} on {' '.join(L.labels[i] for i in w.elements)}"
    print(f"{spec:20s} size {L.n:2d}  distributive={is_distributive(L)!s:5s}  forbidden: {found}")

# %%
# The pentagon is self-dual.  A square with an extra top is not: its dual
# has the extra element at the bottom instead.
print("dual(N5) ~ N5:", is_isomorphic(dual(N5), N5))
square_plus = from_covers("01234", [("0", "1"), ("0", "2"), ("1", "3"), ("2", "3"), ("3", "4")])
print("square with extra top self-dual:", is_isomorphic(dual(square_plus), square_plus))
