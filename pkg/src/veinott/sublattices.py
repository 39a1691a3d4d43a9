"""Sublattices of a finite lattice under the Veinott (strong set) order.

``S ≤v T`` holds when ``s∧t ∈ S`` and ``s∨t ∈ T`` for every ``s ∈ S`` and
``t ∈ T``.  On nonempty sublattices this is a partial order with ``{top}`` as
its greatest element; the poset is a lattice exactly when the underlying
finite lattice is distributive.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .lattice import (
    ElementSet,
    Lattice,
    _saturate,
    bit_indices,
    dual,
    find_forbidden_sublattice,
    is_distributive,
    iter_bits,
    meet_set,
    moore_closure,
)

DEFAULT_CAP = 50_000


def default_cap() -> int:
    """The enumeration cap, overridable through ``VEINOTT_CAP``."""
    return int(os.environ.get("VEINOTT_CAP", DEFAULT_CAP))


class CapExceeded(RuntimeError):
    """Sublattice enumeration passed its cap."""

    def __init__(self, cap: int, found: int):
        super().__init__(f"more than {cap} sublattices (stopped after {found})")
        self.cap = cap
        self.found = found


class NotDistributiveError(ValueError):
    """A closed-form construction was asked for on a non-distributive lattice."""


Family = Sequence[ElementSet]


def is_sublattice(L: Lattice, S: ElementSet) -> bool:
    if not S:
        return False
    memo = L._cache.setdefault("is_sl", {})
    hit = memo.get(S.bits)
    if hit is None:
        hit = memo[S.bits] = _leq_bits(L, S.bits, S.bits)
    return hit


def _close_bits(L: Lattice, bits: int) -> int:
    while True:
        closed = _saturate(L.join_table, _saturate(L.meet_table, bits))
        if closed == bits:
            return bits
        bits = closed


def sublattice_closure(L: Lattice, S: ElementSet) -> ElementSet:
    """Smallest sublattice containing ``S``."""
    if not S:
        raise ValueError("sublattice closure of an empty set")
    return ElementSet(_close_bits(L, S.bits), L.n)


def enumerate_sl(L: Lattice, cap: Optional[int] = None) -> list[ElementSet]:
    """All nonempty sublattices, sorted by carrier bit pattern.

    Breadth-first from the singletons: every known sublattice is extended by
    one outside element and re-closed.  Raises :class:`CapExceeded` as soon as
    more than ``cap`` distinct sublattices turn up.
    """
    cap = default_cap() if cap is None else cap
    key = ("sl", cap)
    if key in L._cache:
        return list(L._cache[key])
    full = (1 << L.n) - 1
    seen = {1 << x for x in range(L.n)}
    if len(seen) > cap:
        raise CapExceeded(cap, len(seen))
    queue = deque(seen)
    while queue:
        bits = queue.popleft()
        for x in iter_bits(full & ~bits):
            grown = _close_bits(L, bits | 1 << x)
            if grown not in seen:
                seen.add(grown)
                if len(seen) > cap:
                    raise CapExceeded(cap, len(seen))
                queue.append(grown)
    out = [ElementSet(b, L.n) for b in sorted(seen)]
    L._cache[key] = tuple(out)
    return out


def _leq_bits(L: Lattice, s_bits: int, t_bits: int) -> bool:
    meets, join_ok = L.images(t_bits)
    return _leq_rows(meets, join_ok, s_bits)


def _leq_rows(meets: list[int], join_ok: int, s_bits: int) -> bool:
    if s_bits & ~join_ok:
        return False
    not_s = ~s_bits
    bits = s_bits
    while bits:
        low = bits & -bits
        if meets[low.bit_length() - 1] & not_s:
            return False
        bits ^= low
    return True


def veinott_leq(L: Lattice, S: ElementSet, T: ElementSet) -> bool:
    """``S ≤v T``: every ``s∧t`` lies in ``S`` and every ``s∨t`` lies in ``T``."""
    if S.n != L.n or T.n != L.n:
        raise ValueError("element sets do not belong to this lattice")
    return _leq_bits(L, S.bits, T.bits)


class SLPoset:
    """``SL(L)`` with its Veinott order precomputed as bit rows.

    Sublattices are numbered along a linear extension of ``≤v`` (by size of
    their down-set), so the maximum of any set of sublattices, when it
    exists, is its highest-numbered member.
    """

    def __init__(self, L: Lattice, universe: Optional[Iterable[ElementSet]] = None, cap: Optional[int] = None):
        self.lattice = L
        canonical = list(universe) if universe is not None else enumerate_sl(L, cap)
        m = len(canonical)
        down = [0] * m
        for j, T in enumerate(canonical):
            row = 0
            for i, S in enumerate(canonical):
                if _leq_bits(L, S.bits, T.bits):
                    row |= 1 << i
            down[j] = row
        size = [d.bit_count() for d in down]
        order = sorted(range(m), key=lambda j: (size[j], canonical[j].bits))
        pos = [0] * m
        for new, old in enumerate(order):
            pos[old] = new

        def renumber(row):
            out = 0
            for i in iter_bits(row):
                out |= 1 << pos[i]
            return out

        self.members: list[ElementSet] = [canonical[old] for old in order]
        self.down: list[int] = [renumber(down[old]) for old in order]
        up = [0] * m
        for j, row in enumerate(self.down):
            for i in iter_bits(row):
                up[i] |= 1 << j
        self.up: list[int] = up
        self.index: dict[int, int] = {S.bits: i for i, S in enumerate(self.members)}

    def __len__(self) -> int:
        return len(self.members)

    def position(self, S: ElementSet) -> int:
        try:
            return self.index[S.bits]
        except KeyError:
            raise ValueError(f"{self.lattice.fmt(S)} is not a sublattice") from None

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def lower_bound_bits(self, family: Iterable[int]) -> int:
        bits = (1 << len(self.members)) - 1
        for j in family:
            bits &= self.down[j]
        return bits

    def upper_bound_bits(self, family: Iterable[int]) -> int:
        bits = (1 << len(self.members)) - 1
        for j in family:
            bits &= self.up[j]
        return bits

    def glb(self, family: Iterable[int]) -> Optional[int]:
        lb = self.lower_bound_bits(family)
        if not lb:
            return None
        c = lb.bit_length() - 1
        return c if self.down[c] & lb == lb else None

    def lub(self, family: Iterable[int]) -> Optional[int]:
        ub = self.upper_bound_bits(family)
        if not ub:
            return None
        c = (ub & -ub).bit_length() - 1
        return c if self.up[c] & ub == ub else None

    def maximal(self, bits: int) -> list[int]:
        """Members of ``bits`` with no strictly greater member in ``bits``."""
        return [i for i in iter_bits(bits) if self.up[i] & bits == 1 << i]

    def minimal(self, bits: int) -> list[int]:
        return [i for i in iter_bits(bits) if self.down[i] & bits == 1 << i]

    def sets(self, bits: int) -> list[ElementSet]:
        return sorted((self.members[i] for i in iter_bits(bits)), key=lambda s: s.bits)

    @cached_property
    def top_position(self) -> int:
        return self.position(ElementSet(1 << self.lattice.top, self.lattice.n))


def sl_poset(L: Lattice, cap: Optional[int] = None) -> SLPoset:
    """Cached :class:`SLPoset` of ``L``."""
    cap = default_cap() if cap is None else cap
    key = ("slposet", cap)
    if key not in L._cache:
        L._cache[key] = SLPoset(L, cap=cap)
    return L._cache[key]


def veinott_down_set(L: Lattice, S: ElementSet, universe: Optional[Iterable[ElementSet]] = None) -> list[ElementSet]:
    """All sublattices ``U`` with ``U ≤v S``, in canonical order."""
    universe = enumerate_sl(L) if universe is None else universe
    return sorted((U for U in universe if veinott_leq(L, U, S)), key=lambda s: s.bits)


def veinott_lower_bounds(L: Lattice, family: Family, universe: Optional[Iterable[ElementSet]] = None):
    """Common ``≤v`` lower bounds of ``family`` within ``universe``, plus the maximal ones.

    Both lists are in canonical (bit-pattern) order.
    """
    universe = enumerate_sl(L) if universe is None else list(universe)
    lbs = [U for U in universe if all(veinott_leq(L, U, A) for A in family)]
    maximal = [U for U in lbs if not any(V != U and veinott_leq(L, U, V) for V in lbs)]
    key = lambda s: s.bits
    return sorted(lbs, key=key), sorted(maximal, key=key)


def veinott_upper_bounds(L: Lattice, family: Family, universe: Optional[Iterable[ElementSet]] = None):
    universe = enumerate_sl(L) if universe is None else list(universe)
    ubs = [U for U in universe if all(veinott_leq(L, A, U) for A in family)]
    minimal = [U for U in ubs if not any(V != U and veinott_leq(L, V, U) for V in ubs)]
    key = lambda s: s.bits
    return sorted(ubs, key=key), sorted(minimal, key=key)


def _check_family(L: Lattice, family: Family) -> None:
    if not family:
        raise ValueError("empty family")
    for A in family:
        if A.n != L.n or not is_sublattice(L, A):
            raise ValueError(f"{L.fmt(A)} is not a sublattice")


def veinott_glb_bruteforce(L: Lattice, family: Family, cap: Optional[int] = None) -> Optional[ElementSet]:
    """The ``≤v`` greatest lower bound found by scanning all of ``SL(L)``, or ``None``."""
    _check_family(L, family)
    P = sl_poset(L, cap)
    g = P.glb(P.position(A) for A in family)
    return None if g is None else P.members[g]


def veinott_lub_bruteforce(L: Lattice, family: Family, cap: Optional[int] = None) -> Optional[ElementSet]:
    _check_family(L, family)
    P = sl_poset(L, cap)
    g = P.lub(P.position(A) for A in family)
    return None if g is None else P.members[g]


def _require_distributive(L: Lattice) -> None:
    if not is_distributive(L):
        raise NotDistributiveError(
            "closed-form Veinott bounds need a distributive lattice; use the brute-force search instead"
        )


def veinott_glb_formula(L: Lattice, family: Family) -> ElementSet:
    """Closed-form ``≤v`` meet of a family of sublattices of a distributive lattice.

    With ``U`` the Moore closure of the union of the family, the meet is the
    set of ``x ∈ U`` such that ``U ∩ ↓x ≤v A`` for every member ``A``.
    """
    _require_distributive(L)
    _check_family(L, family)
    union = 0
    for A in family:
        union |= A.bits
    U = moore_closure(L, ElementSet(union, L.n)).bits
    rows = [L.images(A.bits) for A in family]
    down = L.down_bits
    G = 0
    for x in bit_indices(U):
        below = U & down[x]
        if all(_leq_rows(meets, join_ok, below) for meets, join_ok in rows):
            G |= 1 << x
    return ElementSet(G, L.n)


def veinott_lub_formula(L: Lattice, family: Family) -> ElementSet:
    """``≤v`` join of a family, as the closed-form meet in the order dual."""
    _require_distributive(L)
    return veinott_glb_formula(dual(L), family)


def bottom_shift(L: Lattice, Z: ElementSet, family: Family) -> ElementSet:
    """``{z ∨ b | z ∈ Z}`` where ``b`` is the meet of all members of the family.

    ``Z`` must be a common lower bound of the family.  The result is again a
    lower bound, lies above ``Z`` and inside the closed-form meet.
    """
    _require_distributive(L)
    _check_family(L, family)
    if not is_sublattice(L, Z):
        raise ValueError(f"{L.fmt(Z)} is not a sublattice")
    if not all(veinott_leq(L, Z, A) for A in family):
        raise ValueError(f"{L.fmt(Z)} is not a lower bound of the family")
    b = meet_set(L, [meet_set(L, A) for A in family])
    row = L.join_table[b]
    return ElementSet.of(L.n, {row[z] for z in Z})


# -- whole-poset analysis -----------------------------------------------------


@dataclass(frozen=True)
class VeinottFailure:
    """A pair of sublattices without a ``≤v`` meet (``kind='glb'``) or join (``'lub'``).

    ``bounds`` are the maximal lower bounds, or minimal upper bounds.
    """

    kind: str
    pair: tuple[ElementSet, ElementSet]
    bounds: tuple[ElementSet, ...]


@dataclass(frozen=True)
class VeinottVerdict:
    is_lattice: bool
    sl_size: int
    failure: Optional[VeinottFailure] = None


def forbidden_pair(L: Lattice) -> Optional[tuple[str, tuple[ElementSet, ElementSet]]]:
    """The pair whose ``≤v`` meet fails to exist because of a pentagon or diamond.

    For a pentagon ``a < c < d < e``, ``a < b < e`` this is ``(de, abce)``;
    for a diamond with middle elements ``b, c, d`` it is ``(be, ce)``.
    """
    w = find_forbidden_sublattice(L)
    if w is None:
        return None
    a, b, c, d, e = w.elements
    if w.kind == "N5":
        return "glb", (L.eset([d, e]), L.eset([a, b, c, e]))
    return "glb", (L.eset([b, e]), L.eset([c, e]))


def analyze(L: Lattice, cap: Optional[int] = None) -> VeinottVerdict:
    """Decide by exhaustive search whether ``(SL(L), ≤v)`` is a lattice.

    Every pair is checked for a meet and a join.  When the search fails and
    ``L`` contains a pentagon or diamond, the reported witness is the
    corresponding canonical pair; otherwise it is the first failing pair in
    canonical order.
    """
    P = sl_poset(L, cap)
    m = len(P)
    canon = sorted(range(m), key=lambda i: P.members[i].bits)
    first: Optional[VeinottFailure] = None
    ok = True
    for kind in ("glb", "lub"):
        for a_pos, i in enumerate(canon):
            for j in canon[a_pos + 1 :]:
                found = P.glb((i, j)) if kind == "glb" else P.lub((i, j))
                if found is None:
                    ok = False
                    if first is None:
                        first = _failure(P, kind, i, j)
                    break
            if not ok:
                break
        if not ok:
            break
    if ok:
        return VeinottVerdict(True, m)
    pinned = forbidden_pair(L)
    if pinned is not None:
        kind, (S, T) = pinned
        i, j = P.position(S), P.position(T)
        if P.glb((i, j)) is None:
            first = _failure(P, kind, i, j)
    return VeinottVerdict(False, m, first)


def _failure(P: SLPoset, kind: str, i: int, j: int) -> VeinottFailure:
    if kind == "glb":
        bounds = P.maximal(P.lower_bound_bits((i, j)))
    else:
        bounds = P.minimal(P.upper_bound_bits((i, j)))
    key = lambda s: s.bits
    return VeinottFailure(
        kind,
        (P.members[i], P.members[j]),
        tuple(sorted((P.members[k] for k in bounds), key=key)),
    )
