"""Named lattices: pentagon, diamond, chains, Boolean algebras, divisor
lattices, products, the truncated ``D`` lattice and random lattices.

Every generator goes through :func:`~veinott.lattice.from_covers`, so each
catalog lattice is validated on construction.
"""

from __future__ import annotations

import itertools
import random as _random
from dataclasses import dataclass
from typing import Iterator, Optional

from .lattice import DEFAULT_MAX_SIZE, ElementSet, Lattice, from_covers, isomorphism

KINDS = ("n5", "m3", "chain", "boolean", "divisor", "product", "d_lattice", "random")

MAX_DIVISOR = 10**6


@dataclass(frozen=True)
class CatalogSpec:
    """Which lattice to build.

    ``parameter`` is the size for ``chain``/``boolean``/``divisor``/``d_lattice``,
    a pair of specs for ``product`` and ``(seed, size)`` for ``random``.
    """

    kind: str
    parameter: object = None

    def __str__(self) -> str:
        if self.kind in ("n5", "m3"):
            return self.kind
        if self.kind == "product":
            a, b = self.parameter
            return f"product:{a}*{b}"
        if self.kind == "random":
            seed, size = self.parameter
            return f"random:{size}:{seed}"
        name = "d" if self.kind == "d_lattice" else self.kind
        return f"{name}:{self.parameter}"


def n5() -> Lattice:
    """The pentagon ``a < b < e``, ``a < c < d < e``."""
    return from_covers("abcde", [("a", "b"), ("a", "c"), ("c", "d"), ("b", "e"), ("d", "e")])


def m3() -> Lattice:
    """The diamond: bottom ``a``, middle ``b, c, d``, top ``e``."""
    return from_covers("abcde", [("a", "b"), ("a", "c"), ("a", "d"), ("b", "e"), ("c", "e"), ("d", "e")])


def chain(n: int) -> Lattice:
    """``0 < 1 < ... < n`` (``n + 1`` elements)."""
    if n < 0:
        raise ValueError("chain length must be non-negative")
    labels = [str(i) for i in range(n + 1)]
    return from_covers(labels, list(zip(labels, labels[1:])))


_ATOM_NAMES = "pqrstuvwxyz"


def boolean(n: int) -> Lattice:
    """Subsets of ``n`` atoms named ``p, q, r, ...``; ``bot`` and ``top`` at the ends."""
    if not 0 <= n <= len(_ATOM_NAMES):
        raise ValueError(f"boolean algebra needs 0 <= n <= {len(_ATOM_NAMES)} atoms")
    masks = sorted(range(1 << n), key=lambda m: (m.bit_count(), m))

    def name(m):
        if m == 0:
            return "bot"
        if m == (1 << n) - 1:
            return "top"
        return "".join(_ATOM_NAMES[i] for i in range(n) if m >> i & 1)

    if n == 0:
        return from_covers(["bot"], [])
    covers = [(name(m), name(m | 1 << i)) for m in masks for i in range(n) if not m >> i & 1]
    return from_covers([name(m) for m in masks], covers, max_size=max(DEFAULT_MAX_SIZE, 1 << n))


def divisor(n: int) -> Lattice:
    """Divisors of ``n`` ordered by divisibility."""
    if not 1 <= n <= MAX_DIVISOR:
        raise ValueError(f"divisor lattice needs 1 <= n <= {MAX_DIVISOR}")
    divs = [d for d in range(1, n + 1) if n % d == 0]
    covers = [(str(d), str(d * p)) for d in divs for p in _primes(n) if n % (d * p) == 0]
    return from_covers([str(d) for d in divs], covers, max_size=max(DEFAULT_MAX_SIZE, len(divs)))


def _primes(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def product(A: Lattice, B: Lattice) -> Lattice:
    """Componentwise order on ``A × B``; element ``(x, y)`` is labelled ``x.y``."""
    labels = [f"{a}.{b}" for a in A.labels for b in B.labels]
    covers = []
    for x, y in A.covers:
        for b in B.labels:
            covers.append((f"{A.labels[x]}.{b}", f"{A.labels[y]}.{b}"))
    for x, y in B.covers:
        for a in A.labels:
            covers.append((f"{a}.{B.labels[x]}", f"{a}.{B.labels[y]}"))
    return from_covers(labels, covers, max_size=max(DEFAULT_MAX_SIZE, len(labels)))


def pair_index(A: Lattice, B: Lattice, x: int, y: int) -> int:
    """Index of ``(x, y)`` in ``product(A, B)``."""
    return x * B.n + y


def d_lattice(n: int) -> Lattice:
    """Finite truncation of the lattice ``D``.

    Elements ``top, b, a0..an, b0..bn, aw, bot`` with covers
    ``top > a0``, ``top > b``, ``b > b0``, ``ai > a(i+1)``, ``ai > bi``,
    ``bi > b(i+1)``, ``an > aw``, ``bn > bot`` and ``aw > bot``.
    """
    if n < 0:
        raise ValueError("d_lattice needs n >= 0")
    a = [f"a{i}" for i in range(n + 1)]
    b = [f"b{i}" for i in range(n + 1)]
    labels = ["top", "b", *a, *b, "aw", "bot"]
    covers = [("a0", "top"), ("b", "top"), ("b0", "b")]
    for i in range(n + 1):
        covers.append((b[i], a[i]))
        if i < n:
            covers.append((a[i + 1], a[i]))
            covers.append((b[i + 1], b[i]))
    covers += [("aw", a[n]), ("bot", b[n]), ("bot", "aw")]
    return from_covers(labels, covers)


def d_family(L: Lattice) -> list[ElementSet]:
    """The chain of sublattices ``X_i = {top, a0, ..., ai}`` for ``i = 0..n``."""
    try:
        L.index("aw")
        n = max(int(x[1:]) for x in L.labels if x[0] == "a" and x[1:].isdigit())
    except (KeyError, ValueError):
        raise ValueError("d_family needs a lattice built by d_lattice") from None
    if L != d_lattice(n):
        raise ValueError("d_family needs a lattice built by d_lattice")
    return [L.eset(["top", *(f"a{j}" for j in range(i + 1))]) for i in range(n + 1)]


def random_lattice(seed: int, size: int, density: float = 0.35) -> Lattice:
    """Dedekind-MacNeille completion of a seeded random poset on ``size`` points.

    The result has at least ``size`` elements; elements that are principal
    ideals keep the point's name ``pK``, the rest are named ``cK``.
    """
    if size < 1:
        raise ValueError("random lattice needs size >= 1")
    rng = _random.Random(seed)
    full = (1 << size) - 1
    down = [1 << i for i in range(size)]
    for j in range(size):
        for i in range(j):
            if rng.random() < density:
                down[j] |= 1 << i
    for k in range(size):
        for j in range(size):
            if down[j] >> k & 1:
                down[j] |= down[k]
    # cuts = intersections of principal ideals (plus the whole poset)
    cuts = {full}
    frontier = set(down)
    while frontier:
        cuts |= frontier
        frontier = {c & d for c in cuts for d in down} - cuts
    ordered = sorted(cuts, key=lambda c: (c.bit_count(), c))
    principal = {d: i for i, d in enumerate(down)}
    labels, extra = [], 0
    for c in ordered:
        if c in principal:
            labels.append(f"p{principal[c]}")
        else:
            labels.append(f"c{extra}")
            extra += 1
    covers = [
        (labels[i], labels[j])
        for i, c in enumerate(ordered)
        for j, d in enumerate(ordered)
        if i != j and c & ~d == 0
    ]
    return from_covers(labels, covers, max_size=max(DEFAULT_MAX_SIZE, len(labels)))


def build(spec: CatalogSpec | str) -> Lattice:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    kind, p = spec.kind, spec.parameter
    if kind == "n5":
        return n5()
    if kind == "m3":
        return m3()
    if kind == "chain":
        return chain(int(p))
    if kind == "boolean":
        return boolean(int(p))
    if kind == "divisor":
        return divisor(int(p))
    if kind == "d_lattice":
        return d_lattice(int(p))
    if kind == "product":
        a, b = p
        return product(build(a), build(b))
    if kind == "random":
        seed, size = p
        return random_lattice(int(seed), int(size))
    raise ValueError(f"unknown catalog kind {kind!r}")


def parse_spec(text: str, seed: int = 0) -> CatalogSpec:
    """Parse ``n5``, ``m3``, ``chain:4``, ``boolean:2``, ``divisor:12``, ``d:3``,
    ``random:6[:seed]`` or ``product:<spec>*<spec>``.
    """
    text = text.strip()
    kind, _, rest = text.partition(":")
    kind = kind.lower()
    try:
        if kind in ("n5", "m3") and not rest:
            return CatalogSpec(kind)
        if kind == "product":
            left, sep, right = rest.partition("*")
            if not sep:
                raise ValueError
            return CatalogSpec("product", (parse_spec(left, seed), parse_spec(right, seed)))
        if kind == "random":
            size, _, s = rest.partition(":")
            return CatalogSpec("random", (int(s) if s else seed, int(size)))
        if kind in ("chain", "boolean", "divisor", "d", "d_lattice"):
            value = int(rest)
            if value < 0:
                raise ValueError
            return CatalogSpec("d_lattice" if kind == "d" else kind, value)
    except ValueError:
        pass
    raise ValueError(f"not a catalog spec: {text!r}")


def standard_catalog() -> list[tuple[str, Lattice]]:
    """The named lattices used by the test and acceptance suites."""
    specs = [
        "n5", "m3",
        "chain:0", "chain:1", "chain:2", "chain:3", "chain:4", "chain:5", "chain:6",
        "boolean:1", "boolean:2", "boolean:3",
        "divisor:12", "divisor:18", "divisor:30", "divisor:36",
        "product:chain:1*chain:2", "product:chain:2*chain:2", "product:chain:1*n5", "product:chain:1*m3",
        "d:1", "d:2", "d:3",
        "random:5:1", "random:5:2", "random:6:3", "random:6:4", "random:7:5",
    ]
    return [(s, build(s)) for s in specs]


# -- exhaustive small lattices ------------------------------------------------


def _canonical_key(n: int, le: list[int]) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sum(1 << perm[j] for j in range(n) if le[i] >> j & 1) for i in sorted(range(n), key=lambda i: perm[i]))
        if best is None or key < best:
            best = key
    return best


def all_lattices(size: int) -> Iterator[Lattice]:
    """Every lattice with ``size`` elements, one per isomorphism class.

    Inner elements (everything but bottom and top) range over naturally
    labelled posets, deduplicated by a brute-force canonical form, so this is
    meant for ``size <= 8``.
    """
    if size < 1:
        raise ValueError("size must be positive")
    if size == 1:
        yield from_covers(["0"], [])
        return
    k = size - 2
    pairs = list(itertools.combinations(range(k), 2))
    seen: set[tuple] = set()
    for mask in range(1 << len(pairs)):
        up = [1 << i for i in range(k)]  # up[i]: elements above-or-equal i
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                up[i] |= 1 << j
        if not _transitive(k, up):
            continue
        key = _canonical_key(k, up)
        if key in seen:
            continue
        seen.add(key)
        labels = [str(i) for i in range(size)]
        covers = [(str(i + 1), str(j + 1)) for i, j in pairs if up[i] >> j & 1]
        covers += [("0", str(i + 1)) for i in range(k)] + [(str(i + 1), str(size - 1)) for i in range(k)]
        if k == 0:
            covers.append(("0", "1"))
        try:
            yield from_covers(labels, covers)
        except ValueError:
            continue


def _transitive(k: int, up: list[int]) -> bool:
    for i in range(k):
        for j in range(k):
            if up[i] >> j & 1 and up[j] & ~up[i]:
                return False
    return True


def find_isomorphic(L: Lattice, candidates: list[Lattice]) -> Optional[int]:
    for i, C in enumerate(candidates):
        if isomorphism(L, C) is not None:
            return i
    return None
