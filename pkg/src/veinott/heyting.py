"""Heyting implication, co-Heyting subtraction and the frame/coframe laws."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .lattice import Lattice, dual, join_set, meet_set


@dataclass(frozen=True)
class ResiduationReport:
    is_frame: bool
    is_coframe: bool
    frame_witness: Optional[tuple[int, tuple[int, ...]]] = None
    coframe_witness: Optional[tuple[int, tuple[int, ...]]] = None


def implication(L: Lattice, x, y) -> int:
    """Candidate residual ``x → y``: the join of ``{z | x∧z ≤ y}``.

    Total on every lattice; it is a true Heyting implication only when
    :func:`check_residuation` reports a frame.
    """
    x, y = L.index(x), L.index(y)
    row, le = L.meet_table[x], L.leq_table
    return join_set(L, [z for z in range(L.n) if le[row[z]][y]])


def subtraction(L: Lattice, x, y) -> int:
    """Candidate dual residual ``x − y``: the meet of ``{z | x ≤ y∨z}``."""
    x, y = L.index(x), L.index(y)
    row, le = L.join_table[y], L.leq_table
    return meet_set(L, [z for z in range(L.n) if le[x][row[z]]])


def _frame_violation(L: Lattice) -> Optional[tuple[int, tuple[int, ...]]]:
    # x∧(y∨z) = (x∧y)∨(x∧z) is checked as residuation of x∧- against x→-
    M, le = L.meet_table, L.leq_table
    for x in range(L.n):
        for y in range(L.n):
            r = implication(L, x, y)
            below = tuple(z for z in range(L.n) if le[M[x][z]][y])
            # a join of residual candidates escaping ↓y is exactly a frame-law failure
            if not le[M[x][r]][y] or any(le[z][r] != le[M[x][z]][y] for z in range(L.n)):
                return x, below
    return None


def check_residuation(L: Lattice) -> ResiduationReport:
    """Check whether ``L`` is a frame (complete Heyting algebra) and a coframe.

    A frame witness ``(x, Y)`` is a genuine violation of
    ``x ∧ ⋁Y = ⋁{x∧y | y∈Y}``; a coframe witness is the dual.
    """
    fw = _frame_violation(L)
    cw = _frame_violation(dual(L))
    return ResiduationReport(fw is None, cw is None, fw, cw)


def frame_law_holds(L: Lattice, x: int, Y: tuple[int, ...]) -> bool:
    """``x ∧ ⋁Y == ⋁{x∧y}`` with the empty join read as bottom."""
    if not Y:
        return True
    return L.meet_table[x][join_set(L, Y)] == join_set(L, [L.meet_table[x][y] for y in Y])


def coframe_law_holds(L: Lattice, x: int, Y: tuple[int, ...]) -> bool:
    return frame_law_holds(dual(L), x, Y)
