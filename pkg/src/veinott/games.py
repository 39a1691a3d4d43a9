"""Two-player games whose strategy spaces are finite lattices.

Payoffs are exact :class:`~fractions.Fraction` tables indexed
``[player-1 strategy][player-2 strategy]``, so argmax ties are exact sets.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .lattice import ElementSet, Lattice, join_set, meet_set

Payoff = tuple[tuple[Fraction, ...], ...]


class NotSupermodularError(ValueError):
    pass


@dataclass(frozen=True)
class SupermodularGame:
    s1: Lattice
    s2: Lattice
    u1: Payoff
    u2: Payoff

    def __post_init__(self):
        for name, table in (("u1", self.u1), ("u2", self.u2)):
            if len(table) != self.s1.n or any(len(row) != self.s2.n for row in table):
                raise ValueError(f"{name} must be a {self.s1.n}x{self.s2.n} table")

    @classmethod
    def from_tables(cls, s1: Lattice, s2: Lattice, u1: Sequence[Sequence], u2: Sequence[Sequence]) -> SupermodularGame:
        def conv(t):
            return tuple(tuple(Fraction(v) for v in row) for row in t)

        return cls(s1, s2, conv(u1), conv(u2))

    def strategies(self, player: int) -> Lattice:
        return self.s1 if player == 1 else self.s2

    def payoff(self, player: int, own: int, other: int) -> Fraction:
        """Payoff of ``player`` playing ``own`` against ``other``."""
        if player == 1:
            return self.u1[own][other]
        return self.u2[other][own]


@dataclass(frozen=True)
class SupermodularityReport:
    """``witness`` is ``(player, law, strategies)`` for the first violated inequality."""

    ok: bool
    witness: Optional[tuple[int, str, tuple[int, ...]]] = None

    def __bool__(self) -> bool:
        return self.ok


def check_supermodular(G: SupermodularGame) -> SupermodularityReport:
    """Supermodularity in the own strategy and increasing differences across players."""
    for player in (1, 2):
        own, other = G.strategies(player), G.strategies(3 - player)
        u = lambda x, y: G.payoff(player, x, y)
        for y in range(other.n):
            for x in range(own.n):
                for x2 in range(x + 1, own.n):
                    hi, lo = own.join_table[x][x2], own.meet_table[x][x2]
                    if u(hi, y) + u(lo, y) < u(x, y) + u(x2, y):
                        return SupermodularityReport(False, (player, "supermodular", (x, x2, y)))
        for x in range(own.n):
            for x2 in range(own.n):
                if x == x2 or not own.leq_table[x][x2]:
                    continue
                for y in range(other.n):
                    for y2 in range(other.n):
                        if y == y2 or not other.leq_table[y][y2]:
                            continue
                        if u(x2, y2) - u(x, y2) < u(x2, y) - u(x, y):
                            return SupermodularityReport(False, (player, "increasing differences", (x, x2, y, y2)))
    return SupermodularityReport(True)


def best_response(G: SupermodularGame, player: int, opponent_strategy: int) -> ElementSet:
    """The set of payoff-maximising strategies of ``player``."""
    own = G.strategies(player)
    values = [G.payoff(player, x, opponent_strategy) for x in range(own.n)]
    best = max(values)
    return ElementSet.of(own.n, (x for x, v in enumerate(values) if v == best))


@dataclass(frozen=True)
class EquilibriumReport:
    equilibria: tuple[tuple[int, int], ...]
    least: tuple[int, int]
    greatest: tuple[int, int]
    is_complete_lattice: bool
    is_sublattice: bool
    iterations: tuple[int, int] = (0, 0)


def equilibria(G: SupermodularGame) -> list[tuple[int, int]]:
    """All pure Nash equilibria by exhaustive scan, in index order."""
    br1 = [best_response(G, 1, y) for y in range(G.s2.n)]
    br2 = [best_response(G, 2, x) for x in range(G.s1.n)]
    return [(x, y) for x in range(G.s1.n) for y in range(G.s2.n) if x in br1[y] and y in br2[x]]


def componentwise_extremes(G: SupermodularGame, pairs: Sequence[tuple[int, int]]):
    """The componentwise least and greatest members of ``pairs`` (``None`` where absent)."""
    if not pairs:
        return None, None
    lo = (meet_set(G.s1, [p[0] for p in pairs]), meet_set(G.s2, [p[1] for p in pairs]))
    hi = (join_set(G.s1, [p[0] for p in pairs]), join_set(G.s2, [p[1] for p in pairs]))
    present = set(pairs)
    return (lo if lo in present else None), (hi if hi in present else None)


def closed_under_meet_join(G: SupermodularGame, pairs: Sequence[tuple[int, int]]) -> bool:
    present = set(pairs)
    M1, J1, M2, J2 = G.s1.meet_table, G.s1.join_table, G.s2.meet_table, G.s2.join_table
    for x, y in pairs:
        for x2, y2 in pairs:
            if (M1[x][x2], M2[y][y2]) not in present or (J1[x][x2], J2[y][y2]) not in present:
                return False
    return True


def forms_lattice(G: SupermodularGame, pairs: Sequence[tuple[int, int]]) -> bool:
    """Whether ``pairs`` is a lattice in the componentwise order it inherits.

    This can hold without closure under componentwise meet and join.
    """
    if not pairs:
        return False
    le1, le2 = G.s1.leq_table, G.s2.leq_table
    m = len(pairs)
    below = [
        sum(1 << i for i, (a, b) in enumerate(pairs) if le1[a][x] and le2[b][y])
        for x, y in pairs
    ]
    above = [0] * m
    for j in range(m):
        for i in range(m):
            if below[j] >> i & 1:
                above[i] |= 1 << j

    def has_extremum(bound, rows):
        return any(rows[k] & bound == bound for k in range(m) if bound >> k & 1)

    return all(
        has_extremum(below[i] & below[j], below) and has_extremum(above[i] & above[j], above)
        for i in range(m)
        for j in range(i + 1, m)
    )


def _iterate(G: SupermodularGame, start: tuple[int, int], pick) -> tuple[tuple[int, int], int]:
    x, y = start
    limit = G.s1.n + G.s2.n + 1
    for step in range(limit):
        nx = pick(G.s1, best_response(G, 1, y))
        ny = pick(G.s2, best_response(G, 2, x))
        if (nx, ny) == (x, y):
            return (x, y), step
        x, y = nx, ny
    raise AssertionError("best-response iteration did not converge")


def solve(G: SupermodularGame) -> EquilibriumReport:
    """Extremal equilibria by iterating least (greatest) best responses from the
    bottom (top) profile, plus the full equilibrium set by exhaustive scan.
    """
    report = check_supermodular(G)
    if not report:
        raise NotSupermodularError(f"game is not supermodular: {report.witness}")
    least, k1 = _iterate(G, (G.s1.bottom, G.s2.bottom), meet_set)
    greatest, k2 = _iterate(G, (G.s1.top, G.s2.top), join_set)
    eq = equilibria(G)
    return EquilibriumReport(tuple(eq), least, greatest, forms_lattice(G, eq), closed_under_meet_join(G, eq), (k1, k2))


# -- sample games -------------------------------------------------------------


def coordination_game(L: Lattice) -> SupermodularGame:
    """Both players earn 1 when they pick the same strategy, 0 otherwise."""
    table = [[1 if x == y else 0 for y in range(L.n)] for x in range(L.n)]
    return SupermodularGame.from_tables(L, L, table, table)


def matching_pennies(L: Lattice) -> SupermodularGame:
    table = [[1 if x == y else -1 for y in range(L.n)] for x in range(L.n)]
    return SupermodularGame.from_tables(L, L, table, [[-v for v in row] for row in table])


def constant_game(s1: Lattice, s2: Lattice, value=0) -> SupermodularGame:
    table = [[value] * s2.n for _ in range(s1.n)]
    return SupermodularGame.from_tables(s1, s2, table, table)


def _random_payoff(rng: _random.Random, own: Lattice, other: Lattice) -> list[list[int]]:
    # filter indicators [p <= x] are supermodular; for join-irreducible p on a
    # distributive lattice they are modular, so those weights may be negative
    lower_covers = [0] * own.n
    for x, y in own.covers:
        lower_covers[y] += 1
    own_w = [rng.randint(-4, 4) if lower_covers[p] == 1 else rng.randint(0, 2) for p in range(own.n)]
    opp_w = [rng.randint(-3, 3) for _ in range(other.n)]
    cross = [(rng.randrange(own.n), rng.randrange(other.n), rng.randint(0, 4)) for _ in range(4)]
    table = []
    for x in range(own.n):
        row = []
        for y in range(other.n):
            v = opp_w[y]
            v += sum(w for p, w in enumerate(own_w) if own.leq_table[p][x])
            v += sum(w for p, q, w in cross if own.leq_table[p][x] and other.leq_table[q][y])
            row.append(v)
        table.append(row)
    return table


def random_supermodular_game(s1: Lattice, s2: Lattice, seed: int) -> SupermodularGame:
    """A seeded random game that passes :func:`check_supermodular`."""
    rng = _random.Random(seed)
    for _ in range(1000):
        u1 = _random_payoff(rng, s1, s2)
        u2_t = _random_payoff(rng, s2, s1)
        u2 = [[u2_t[y][x] for y in range(s2.n)] for x in range(s1.n)]
        G = SupermodularGame.from_tables(s1, s2, u1, u2)
        if check_supermodular(G):
            return G
    raise RuntimeError("could not draw a supermodular game")
