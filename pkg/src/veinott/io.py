"""Lattice and game documents (JSON), machine-readable reports and DOT export.

A lattice document is ``{"elements": [...], "covers": [[lower, upper], ...]}``.
A game document is ``{"player1": <lattice>, "player2": <lattice>,
"u1": [[...]], "u2": [[...]]}`` with rows indexed by player-1 strategies,
columns by player-2 strategies, and entries written as ``"p/q"`` strings
(plain integers are accepted on input).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .games import EquilibriumReport, SupermodularGame
from .heyting import ResiduationReport
from .lattice import ElementSet, Lattice, PosetReport, from_covers
from .sublattices import SLPoset, VeinottVerdict


class DocumentError(ValueError):
    """A lattice or game document is malformed."""


def lattice_to_doc(L: Lattice) -> dict[str, Any]:
    covers = sorted([L.labels[x], L.labels[y]] for x, y in L.covers)
    return {"elements": list(L.labels), "covers": covers}


def lattice_from_doc(doc: Any) -> Lattice:
    if not isinstance(doc, dict) or "elements" not in doc or "covers" not in doc:
        raise DocumentError("lattice document needs 'elements' and 'covers'")
    elements, covers = doc["elements"], doc["covers"]
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise DocumentError("'elements' must be a list of names")
    if not isinstance(covers, list) or not all(isinstance(c, list) and len(c) == 2 for c in covers):
        raise DocumentError("'covers' must be a list of [lower, upper] pairs")
    return from_covers(elements, [tuple(c) for c in covers], max_size=max(64, len(elements)))


def dumps_lattice(L: Lattice) -> str:
    return json.dumps(lattice_to_doc(L), indent=2) + "\n"


def loads_lattice(text: str) -> Lattice:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not JSON: {e}") from None
    return lattice_from_doc(doc)


def _fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_fraction(v: Any) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise DocumentError(f"payoff {v!r} is not an integer or 'p/q' string")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"payoff {v!r} is not a rational") from None


def game_to_doc(G: SupermodularGame) -> dict[str, Any]:
    return {
        "player1": lattice_to_doc(G.s1),
        "player2": lattice_to_doc(G.s2),
        "u1": [[_fraction_str(v) for v in row] for row in G.u1],
        "u2": [[_fraction_str(v) for v in row] for row in G.u2],
    }


def game_from_doc(doc: Any) -> SupermodularGame:
    if not isinstance(doc, dict) or not {"player1", "player2", "u1", "u2"} <= doc.keys():
        raise DocumentError("game document needs 'player1', 'player2', 'u1' and 'u2'")
    s1, s2 = lattice_from_doc(doc["player1"]), lattice_from_doc(doc["player2"])
    tables = []
    for name in ("u1", "u2"):
        t = doc[name]
        if not isinstance(t, list) or len(t) != s1.n or any(not isinstance(r, list) or len(r) != s2.n for r in t):
            raise DocumentError(f"{name} must be a {s1.n}x{s2.n} matrix")
        tables.append(tuple(tuple(_parse_fraction(v) for v in row) for row in t))
    return SupermodularGame(s1, s2, *tables)


def dumps_game(G: SupermodularGame) -> str:
    return json.dumps(game_to_doc(G), indent=2) + "\n"


def loads_game(text: str) -> SupermodularGame:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not JSON: {e}") from None
    return game_from_doc(doc)


# -- reports ------------------------------------------------------------------


def names(L: Lattice, S: ElementSet) -> list[str]:
    return [L.labels[i] for i in S]


def verdict_to_doc(L: Lattice, v: VeinottVerdict) -> dict[str, Any]:
    doc: dict[str, Any] = {"is_lattice": v.is_lattice, "sl_size": v.sl_size, "failure": None}
    if v.failure is not None:
        f = v.failure
        doc["failure"] = {
            "kind": f.kind,
            "pair": [names(L, f.pair[0]), names(L, f.pair[1])],
            "bounds": [names(L, s) for s in f.bounds],
        }
    return doc


def poset_report_to_doc(r: PosetReport) -> dict[str, Any]:
    return {"is_lattice": r.is_lattice, "failing_pair": list(r.failing_pair) if r.failing_pair else None, "reason": r.reason}


def residuation_to_doc(L: Lattice, r: ResiduationReport) -> dict[str, Any]:
    def wit(w):
        if w is None:
            return None
        x, Y = w
        return {"x": L.labels[x], "Y": [L.labels[y] for y in Y]}

    return {
        "is_frame": r.is_frame,
        "is_coframe": r.is_coframe,
        "frame_witness": wit(r.frame_witness),
        "coframe_witness": wit(r.coframe_witness),
    }


def equilibria_to_doc(G: SupermodularGame, r: EquilibriumReport) -> dict[str, Any]:
    pair = lambda p: [G.s1.labels[p[0]], G.s2.labels[p[1]]]
    return {
        "equilibria": [pair(p) for p in r.equilibria],
        "least": pair(r.least),
        "greatest": pair(r.greatest),
        "is_complete_lattice": r.is_complete_lattice,
        "is_sublattice": r.is_sublattice,
    }


# -- DOT ----------------------------------------------------------------------


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(L: Lattice, name: str = "lattice") -> str:
    """Hasse diagram with one rank per order-theoretic height, bottom first."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    by_height: dict[int, list[int]] = {}
    for x in range(L.n):
        by_height.setdefault(L.heights[x], []).append(x)
    for h in sorted(by_height):
        members = " ".join(_quote(L.labels[x]) for x in by_height[h])
        lines.append(f"  {{ rank=same; {members} }}")
    for x, y in L.covers:
        lines.append(f"  {_quote(L.labels[x])} -> {_quote(L.labels[y])} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def sl_dot(L: Lattice, P: SLPoset, name: str = "veinott") -> str:
    """Hasse diagram of ``(SL(L), ≤v)``."""
    m = len(P)
    height = [0] * m
    for j in range(m):  # members are numbered along a linear extension
        for i in range(j):
            if P.leq(i, j):
                height[j] = max(height[j], height[i] + 1)
    label = [L.fmt(S) for S in P.members]
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for h in sorted(set(height)):
        members = " ".join(_quote(label[i]) for i in range(m) if height[i] == h)
        lines.append(f"  {{ rank=same; {members} }}")
    for j in range(m):
        strict_below = P.down[j] & ~(1 << j)
        for i in range(m):
            if strict_below >> i & 1:
                between = strict_below & P.up[i] & ~(1 << i)
                if not between:
                    lines.append(f"  {_quote(label[i])} -> {_quote(label[j])} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_family(L: Lattice, text: str) -> list[ElementSet]:
    """Parse ``'{a,b};{c,d}'`` into element sets."""
    family = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not (chunk.startswith("{") and chunk.endswith("}")):
            raise DocumentError(f"family member {chunk!r} must be written {{x,y,...}}")
        inner = chunk[1:-1].strip()
        items = [x.strip() for x in inner.split(",")] if inner else []
        try:
            family.append(L.eset(items))
        except KeyError as e:
            raise DocumentError(str(e)) from None
    if not family:
        raise DocumentError("empty family")
    return family


def format_set(L: Lattice, S: Optional[ElementSet]) -> str:
    if S is None:
        return "none"
    return "{" + ",".join(names(L, S)) + "}"
