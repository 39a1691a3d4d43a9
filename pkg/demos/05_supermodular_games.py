"""
Supermodular games
==================

Two players choose from lattice strategy spaces.  When payoffs are
supermodular with increasing differences, iterating least (greatest) best
responses from the bottom (top) reaches the least (greatest) equilibrium,
and best-response sets move up in the Veinott order as the opponent does.
"""

from veinott import catalog, random_supermodular_game, solve
from veinott.games import SupermodularGame, best_response, check_supermodular, coordination_game, matching_pennies
from veinott.sublattices import veinott_leq

C = catalog.chain(1)
r = solve(coordination_game(C))
print("coordination equilibria:", r.equilibria, "least", r.least, "greatest", r.greatest)
print("matching pennies:", check_supermodular(matching_pennies(C)))

# %%
G = random_supermodular_game(catalog.chain(3), catalog.boolean(2), seed=21)
r = solve(G)
print("equilibria:", [(G.s1.labels[x], G.s2.labels[y]) for x, y in r.equilibria])
print("least", r.least, "greatest", r.greatest, "iterations", r.iterations)
brs = [best_response(G, 1, y) for y in range(G.s2.n)]
print("player 1 best responses:", [G.s1.fmt(b) for b in brs])
print("monotone:", all(
    veinott_leq(G.s1, brs[y], brs[y2]) for y in range(G.s2.n) for y2 in range(G.s2.n) if G.s2.leq_table[y][y2]
))

# %%
# The equilibria always form a lattice in their own order, but on a product
# strategy space they need not be closed under componentwise meet and join.
B = catalog.boolean(2)
G = SupermodularGame.from_tables(B, C, [[2, 0]] * 4, [[1, 0], [1, 0], [1, 1], [0, 2]])
r = solve(G)
print("equilibria:", [(B.labels[x], C.labels[y]) for x, y in r.equilibria])
print("complete lattice:", r.is_complete_lattice, " closed under meet/join:", r.is_sublattice)
