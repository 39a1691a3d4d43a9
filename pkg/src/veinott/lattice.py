"""Finite lattices given by a Hasse diagram.

Elements are integers ``0..n-1``; the user-facing names live in
``Lattice.labels``.  Subsets of a lattice are :class:`ElementSet` bit vectors
over that indexing, so intersections, unions and hashing are single integer
operations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

DEFAULT_MAX_SIZE = 64


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``bits`` in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@lru_cache(maxsize=1 << 16)
def bit_indices(bits: int) -> tuple[int, ...]:
    """Memoized tuple form of :func:`iter_bits` for hot loops over small sets."""
    return tuple(iter_bits(bits))


@dataclass(frozen=True)
class ElementSet:
    """An immutable set of element indices of one lattice, stored as a bit vector.

    ``<=`` and ``<`` are subset tests, as for ``frozenset``.  Sort with
    ``key=lambda s: s.bits`` for the canonical bit-pattern order.
    """

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> ElementSet:
        bits = 0
        for i in members:
            if not 0 <= i < n:
                raise IndexError(f"element {i} out of range for n={n}")
            bits |= 1 << i
        return cls(bits, n)

    @classmethod
    def empty(cls, n: int) -> ElementSet:
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> ElementSet:
        return cls((1 << n) - 1, n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, i: object) -> bool:
        return isinstance(i, (int, np.integer)) and 0 <= i < self.n and bool(self.bits >> int(i) & 1)

    def _check(self, other: ElementSet) -> None:
        if not isinstance(other, ElementSet):
            raise TypeError(f"expected ElementSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError("element sets over lattices of different size")

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.bits & other.bits, self.n)

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.bits | other.bits, self.n)

    def __sub__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.bits & ~other.bits, self.n)

    def __le__(self, other: ElementSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: ElementSet) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: ElementSet) -> bool:
        return other <= self

    def __gt__(self, other: ElementSet) -> bool:
        return other < self

    def add(self, i: int) -> ElementSet:
        return ElementSet.of(self.n, [*self, i])

    def __repr__(self) -> str:
        return f"ElementSet({sorted(self)}, n={self.n})"


@dataclass(frozen=True)
class PosetReport:
    """Outcome of validating a Hasse diagram as a lattice."""

    is_lattice: bool
    failing_pair: Optional[tuple[str, str]] = None
    reason: str = ""


class LatticeError(ValueError):
    """The given relation is not a lattice; ``report`` says why."""

    def __init__(self, report: PosetReport):
        super().__init__(report.reason)
        self.report = report


@dataclass(frozen=True, eq=False)
class Lattice:
    """An immutable finite lattice with precomputed order, meet and join tables.

    Build one with :func:`from_covers` (or the generators in
    :mod:`veinott.catalog`); the constructor trusts its arguments.
    """

    labels: tuple[str, ...]
    leq_table: tuple[tuple[bool, ...], ...]
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.leq_table == other.leq_table
            and self.meet_table == other.meet_table
            and self.join_table == other.join_table
            and self.bottom == other.bottom
            and self.top == other.top
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.leq_table))

    def __repr__(self) -> str:
        return f"Lattice(n={self.n}, labels={list(self.labels)})"

    # -- element access ---------------------------------------------------

    def index(self, x: int | str) -> int:
        """Resolve a label or an index to an index."""
        if isinstance(x, str):
            try:
                return self._label_index[x]
            except KeyError:
                raise KeyError(f"unknown element {x!r}") from None
        i = int(x)
        if not 0 <= i < self.n:
            raise IndexError(f"element {i} out of range for n={self.n}")
        return i

    @property
    def _label_index(self) -> dict[str, int]:
        if "label_index" not in self._cache:
            self._cache["label_index"] = {s: i for i, s in enumerate(self.labels)}
        return self._cache["label_index"]

    def elements(self) -> range:
        return range(self.n)

    def eset(self, members: Iterable[int | str] | str = ()) -> ElementSet:
        """Build an :class:`ElementSet` from labels or indices.

        A plain string is read as a sequence of single-character labels, so
        ``L.eset("abce")`` works on lattices whose labels are letters.
        """
        if isinstance(members, str):
            members = list(members)
        return ElementSet.of(self.n, (self.index(x) for x in members))

    def full_set(self) -> ElementSet:
        return ElementSet.full(self.n)

    def fmt(self, s: ElementSet | int) -> str:
        """Human-readable rendering: ``abce`` for one-letter labels, ``{x,y}`` otherwise."""
        if isinstance(s, ElementSet):
            names = [self.labels[i] for i in s]
            if all(len(x) == 1 for x in self.labels):
                return "".join(names) if names else "{}"
            return "{" + ",".join(names) + "}"
        return self.labels[s]

    # -- precomputed bit rows ---------------------------------------------

    @property
    def down_bits(self) -> tuple[int, ...]:
        if "down" not in self._cache:
            self._cache["down"] = tuple(
                sum(1 << y for y in range(self.n) if self.leq_table[y][x]) for x in range(self.n)
            )
        return self._cache["down"]

    @property
    def up_bits(self) -> tuple[int, ...]:
        if "up" not in self._cache:
            self._cache["up"] = tuple(
                sum(1 << y for y in range(self.n) if self.leq_table[x][y]) for x in range(self.n)
            )
        return self._cache["up"]

    def images(self, t_bits: int) -> tuple[list[int], int]:
        """For ``T`` given as bits: per element s the bit set ``{s∧t | t∈T}``,
        and the bit set of all s with ``s∨t ∈ T`` for every t in T.

        Memoized per ``T``; this is the inner loop of the Veinott order.
        """
        memo = self._cache.setdefault("images", {})
        hit = memo.get(t_bits)
        if hit is None:
            ts = list(iter_bits(t_bits))
            meets, join_ok = [], 0
            outside = ~t_bits
            for s in range(self.n):
                mrow, jrow = self.meet_table[s], self.join_table[s]
                m = j = 0
                for t in ts:
                    m |= 1 << mrow[t]
                    j |= 1 << jrow[t]
                meets.append(m)
                if not j & outside:
                    join_ok |= 1 << s
            hit = (meets, join_ok)
            memo[t_bits] = hit
        return hit

    # -- structure --------------------------------------------------------

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Pairs ``(x, y)`` with ``y`` covering ``x``, sorted by index."""
        if "covers" not in self._cache:
            out = []
            for x in range(self.n):
                for y in range(self.n):
                    if x != y and self.leq_table[x][y]:
                        between = self.up_bits[x] & self.down_bits[y] & ~(1 << x | 1 << y)
                        if not between:
                            out.append((x, y))
            self._cache["covers"] = tuple(out)
        return self._cache["covers"]

    @property
    def heights(self) -> tuple[int, ...]:
        """Length of the longest chain from bottom to each element."""
        if "heights" not in self._cache:
            order = sorted(range(self.n), key=lambda x: self.down_bits[x].bit_count())
            h = [0] * self.n
            for y in order:
                for x, z in self.covers:
                    if z == y:
                        h[y] = max(h[y], h[x] + 1)
            self._cache["heights"] = tuple(h)
        return self._cache["heights"]


# -- construction -------------------------------------------------------------


def _validate_labels(labels: Sequence[str], covers: Iterable[tuple[str, str]]):
    labels = [str(x) for x in labels]
    seen = set()
    for x in labels:
        if x in seen:
            raise ValueError(f"duplicate label {x!r}")
        seen.add(x)
    if not labels:
        raise ValueError("a lattice needs at least one element")
    idx = {x: i for i, x in enumerate(labels)}
    pairs = []
    for pair in covers:
        if len(pair) != 2:
            raise ValueError(f"cover {pair!r} is not a pair")
        lo, hi = pair
        for x in (lo, hi):
            if x not in idx:
                raise ValueError(f"cover {pair!r} references unknown label {x!r}")
        pairs.append((idx[lo], idx[hi]))
    return labels, pairs


def _order_matrix(n: int, pairs: Iterable[tuple[int, int]]) -> np.ndarray:
    rel = np.eye(n, dtype=bool)
    for lo, hi in pairs:
        rel[lo, hi] = True
    for k in range(n):
        rel |= rel[:, k : k + 1] & rel[k : k + 1, :]
    return rel


def _extremal_bound(bound: int, rows: Sequence[int]) -> Optional[int]:
    # the bound set has an extremum z iff rows[z] == bound
    for z in iter_bits(bound):
        if rows[z] == bound:
            return z
    return None


def _build(labels, rel):
    n = len(labels)
    for i in range(n):
        for j in range(i + 1, n):
            if rel[i, j] and rel[j, i]:
                return PosetReport(False, (labels[i], labels[j]), f"cycle: {labels[i]} and {labels[j]} are mutually below each other"), None
    down = [sum(1 << y for y in range(n) if rel[y, x]) for x in range(n)]
    up = [sum(1 << y for y in range(n) if rel[x, y]) for x in range(n)]
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        meet[i][i] = join[i][i] = i
        for j in range(i + 1, n):
            m = _extremal_bound(down[i] & down[j], down)
            if m is None:
                return PosetReport(False, (labels[i], labels[j]), f"pair ({labels[i]}, {labels[j]}) has no meet"), None
            jn = _extremal_bound(up[i] & up[j], up)
            if jn is None:
                return PosetReport(False, (labels[i], labels[j]), f"pair ({labels[i]}, {labels[j]}) has no join"), None
            meet[i][j] = meet[j][i] = m
            join[i][j] = join[j][i] = jn
    bottom = reduce(lambda a, b: meet[a][b], range(n))
    top = reduce(lambda a, b: join[a][b], range(n))
    lat = Lattice(
        labels=tuple(labels),
        leq_table=tuple(tuple(bool(v) for v in row) for row in rel),
        meet_table=tuple(tuple(r) for r in meet),
        join_table=tuple(tuple(r) for r in join),
        bottom=bottom,
        top=top,
    )
    return PosetReport(True, None, "lattice"), lat


def check_poset(labels: Sequence[str], covers: Iterable[tuple[str, str]], max_size: int = DEFAULT_MAX_SIZE) -> PosetReport:
    """Validate a Hasse diagram without raising on non-lattices.

    Malformed input (duplicate or unknown labels) still raises ``ValueError``.
    """
    return _from_covers(labels, covers, max_size)[0]


def _from_covers(labels, covers, max_size):
    labels, pairs = _validate_labels(labels, covers)
    if len(labels) > max_size:
        raise ValueError(f"{len(labels)} elements exceeds max_size={max_size}")
    return _build(labels, _order_matrix(len(labels), pairs))


def from_covers(labels: Sequence[str], covers: Iterable[tuple[str, str]], max_size: int = DEFAULT_MAX_SIZE) -> Lattice:
    """Build a lattice from element names and cover pairs ``(lower, upper)``.

    The order is the reflexive-transitive closure of ``covers``, so any
    generating set of order pairs is accepted.  Raises :class:`LatticeError`
    carrying a :class:`PosetReport` for the first failing pair in index order.
    """
    report, lat = _from_covers(labels, covers, max_size)
    if lat is None:
        raise LatticeError(report)
    return lat


# -- order queries ------------------------------------------------------------


def leq(L: Lattice, x, y) -> bool:
    return L.leq_table[L.index(x)][L.index(y)]


def meet(L: Lattice, x, y) -> int:
    return L.meet_table[L.index(x)][L.index(y)]


def join(L: Lattice, x, y) -> int:
    return L.join_table[L.index(x)][L.index(y)]


def meet_set(L: Lattice, S: ElementSet | Iterable[int]) -> int:
    items = list(S)
    if not items:
        raise ValueError("meet of an empty set")
    return reduce(lambda a, b: L.meet_table[a][b], items)


def join_set(L: Lattice, S: ElementSet | Iterable[int]) -> int:
    items = list(S)
    if not items:
        raise ValueError("join of an empty set")
    return reduce(lambda a, b: L.join_table[a][b], items)


def down_set(L: Lattice, x) -> ElementSet:
    return ElementSet(L.down_bits[L.index(x)], L.n)


def up_set(L: Lattice, x) -> ElementSet:
    return ElementSet(L.up_bits[L.index(x)], L.n)


def lower_bounds(L: Lattice, S: ElementSet) -> ElementSet:
    """Common lower bounds; the empty set has every element as a lower bound."""
    bits = (1 << L.n) - 1
    for s in S:
        bits &= L.down_bits[s]
    return ElementSet(bits, L.n)


def upper_bounds(L: Lattice, S: ElementSet) -> ElementSet:
    bits = (1 << L.n) - 1
    for s in S:
        bits &= L.up_bits[s]
    return ElementSet(bits, L.n)


def _saturate(table, bits: int) -> int:
    frontier = bits
    while frontier:
        new = 0
        members = bit_indices(bits)
        for x in bit_indices(frontier):
            row = table[x]
            for y in members:
                new |= 1 << row[y]
        frontier = new & ~bits
        bits |= frontier
    return bits


def moore_closure(L: Lattice, S: ElementSet) -> ElementSet:
    """Meets of all nonempty subsets of ``S``, by binary-meet saturation."""
    if not S:
        raise ValueError("Moore closure of an empty set")
    return ElementSet(_saturate(L.meet_table, S.bits), L.n)


def join_closure(L: Lattice, S: ElementSet) -> ElementSet:
    if not S:
        raise ValueError("join closure of an empty set")
    return ElementSet(_saturate(L.join_table, S.bits), L.n)


# -- global properties --------------------------------------------------------


def distributivity_violation(L: Lattice) -> Optional[tuple[int, int, int]]:
    """First triple ``(x, y, z)`` with ``x∧(y∨z) != (x∧y)∨(x∧z)``, if any."""
    M, J = L.meet_table, L.join_table
    for x in range(L.n):
        mx = M[x]
        for y in range(L.n):
            for z in range(y + 1, L.n):
                if mx[J[y][z]] != J[mx[y]][mx[z]]:
                    return x, y, z
    return None


def is_distributive(L: Lattice) -> bool:
    if "distributive" not in L._cache:
        L._cache["distributive"] = distributivity_violation(L) is None
    return L._cache["distributive"]


@dataclass(frozen=True)
class ForbiddenSublattice:
    """A pentagon or diamond sublattice.

    ``elements`` is ``(bottom, b, c, d, top)``; for ``N5`` the chain is
    ``c < d`` with ``b`` on the other side, for ``M3`` ``b, c, d`` are the
    three middle elements.
    """

    kind: str
    elements: tuple[int, int, int, int, int]


def find_forbidden_sublattice(L: Lattice) -> Optional[ForbiddenSublattice]:
    """Find an N5 or M3 sublattice; ``None`` exactly when ``L`` is distributive.

    Pentagons are searched first.
    """
    M, J, le = L.meet_table, L.join_table, L.leq_table
    n = L.n
    for c in range(n):
        for d in range(n):
            if c == d or not le[c][d]:
                continue
            for b in range(n):
                if M[b][c] == M[b][d] and J[b][c] == J[b][d]:
                    return ForbiddenSublattice("N5", (M[b][c], b, c, d, J[b][c]))
    for x, y, z in itertools.combinations(range(n), 3):
        o = M[x][y]
        i = J[x][y]
        if M[x][z] == o and M[y][z] == o and J[x][z] == i and J[y][z] == i:
            return ForbiddenSublattice("M3", (o, x, y, z, i))
    return None


def atoms(L: Lattice) -> ElementSet:
    return ElementSet.of(L.n, (y for x, y in L.covers if x == L.bottom))


def is_atomic(L: Lattice) -> bool:
    """Every element other than bottom dominates an atom (vacuous on one element)."""
    at = atoms(L).bits
    return all(L.down_bits[x] & at for x in range(L.n) if x != L.bottom)


def dual(L: Lattice) -> Lattice:
    """The order dual on the same labels and indices.

    Memoized both ways, so ``dual(dual(L)) is L``.
    """
    D = L._cache.get("dual")
    if D is None:
        n = L.n
        D = Lattice(
            labels=L.labels,
            leq_table=tuple(tuple(L.leq_table[j][i] for j in range(n)) for i in range(n)),
            meet_table=L.join_table,
            join_table=L.meet_table,
            bottom=L.top,
            top=L.bottom,
        )
        D._cache["dual"] = L
        L._cache["dual"] = D
    return D


def isomorphism(L1: Lattice, L2: Lattice) -> Optional[tuple[int, ...]]:
    """An order isomorphism ``L1 -> L2`` as a tuple of images, or ``None``."""
    if L1.n != L2.n or len(L1.covers) != len(L2.covers):
        return None
    n = L1.n

    def signature(L, x):
        return (L.down_bits[x].bit_count(), L.up_bits[x].bit_count(), L.heights[x])

    sig1 = [signature(L1, x) for x in range(n)]
    sig2 = [signature(L2, x) for x in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    order = sorted(range(n), key=lambda x: L1.down_bits[x].bit_count())
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        x = order[k]
        for y in range(n):
            if used[y] or sig2[y] != sig1[x]:
                continue
            ok = True
            for x2 in order[:k]:
                y2 = image[x2]
                if L1.leq_table[x][x2] != L2.leq_table[y][y2] or L1.leq_table[x2][x] != L2.leq_table[y2][y]:
                    ok = False
                    break
            if ok:
                image[x], used[y] = y, True
                if extend(k + 1):
                    return True
                image[x], used[y] = -1, False
        return False

    return tuple(image) if extend(0) else None


def is_isomorphic(L1: Lattice, L2: Lattice) -> bool:
    return isomorphism(L1, L2) is not None
