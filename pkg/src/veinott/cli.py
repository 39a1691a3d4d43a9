"""Command-line front end.

Exit status: 0 on success, 1 when an analysis refuses its input (closed-form
bounds on a non-distributive lattice, a game that is not supermodular, or a
failed self-test), 2 on input errors and exhausted enumeration caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import catalog, io
from .games import NotSupermodularError, solve
from .heyting import check_residuation
from .lattice import Lattice, LatticeError, atoms, check_poset, find_forbidden_sublattice, is_atomic, is_distributive
from .sublattices import (
    CapExceeded,
    NotDistributiveError,
    analyze,
    default_cap,
    sl_poset,
    veinott_down_set,
    veinott_glb_bruteforce,
    veinott_glb_formula,
    veinott_leq,
    veinott_lower_bounds,
    veinott_lub_bruteforce,
    veinott_lub_formula,
)

VERBS = ("check", "sl", "glb", "lub", "counterexample", "game", "export")


class InputError(Exception):
    pass


class Refusal(Exception):
    pass


def load_lattice(source: str, seed: int) -> Lattice:
    """A lattice from a JSON document path or a catalog spec such as ``boolean:2``."""
    if os.path.exists(source):
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {source}: {e}") from None
        try:
            return io.loads_lattice(text)
        except LatticeError:
            raise
        except ValueError as e:
            raise InputError(f"{source}: {e}") from None
    try:
        return catalog.build(catalog.parse_spec(source, seed))
    except ValueError as e:
        raise InputError(f"{source!r} is neither a readable file nor a catalog spec ({e})") from None


# -- verbs --------------------------------------------------------------------


def cmd_check(args) -> tuple[int, dict, str]:
    try:
        L = load_lattice(args.source, args.seed)
    except LatticeError as e:
        return 0, {"poset": io.poset_report_to_doc(e.report)}, f"not a lattice: {e.report.reason}\n"
    report = check_poset(L.labels, [(L.labels[x], L.labels[y]) for x, y in L.covers], max_size=L.n)
    w = find_forbidden_sublattice(L)
    res = check_residuation(L)
    at = atoms(L)
    doc = {
        "poset": io.poset_report_to_doc(report),
        "size": L.n,
        "distributive": is_distributive(L),
        "forbidden_sublattice": None if w is None else {"kind": w.kind, "elements": [L.labels[i] for i in w.elements]},
        "residuation": io.residuation_to_doc(L, res),
        "atoms": io.names(L, at),
        "atomic": is_atomic(L),
    }
    lines = [
        f"lattice with {L.n} elements (bottom {L.labels[L.bottom]}, top {L.labels[L.top]})",
        "distributive" if doc["distributive"] else "not distributive",
    ]
    if w is not None:
        lines.append(f"{w.kind} sublattice: {' '.join(L.labels[i] for i in w.elements)}")
    for label, ok, wit in (
        ("frame (complete Heyting algebra)", res.is_frame, res.frame_witness),
        ("coframe (complete co-Heyting algebra)", res.is_coframe, res.coframe_witness),
    ):
        if ok:
            lines.append(label)
        else:
            x, Y = wit
            lines.append(f"not a {label.split()[0]}: x = {L.labels[x]}, Y = {{{','.join(L.labels[y] for y in Y)}}}")
    lines.append(f"atoms: {', '.join(doc['atoms']) or '(none)'}; {'atomic' if doc['atomic'] else 'not atomic'}")
    return 0, doc, "\n".join(lines) + "\n"


def cmd_sl(args) -> tuple[int, dict, str]:
    L = load_lattice(args.source, args.seed)
    v = analyze(L, args.cap)
    doc = io.verdict_to_doc(L, v)
    if v.is_lattice:
        text = f"|SL| = {v.sl_size}\nSL is a complete lattice\n"
    else:
        f = v.failure
        which = "lower" if f.kind == "glb" else "upper"
        text = (
            f"|SL| = {v.sl_size}\n"
            f"SL not a lattice; witness pair {L.fmt(f.pair[0])} / {L.fmt(f.pair[1])}; "
            f"{'maximal' if f.kind == 'glb' else 'minimal'} {which} bounds {', '.join(L.fmt(s) for s in f.bounds)}\n"
        )
    return 0, doc, text


def _bound(args, kind: str) -> tuple[int, dict, str]:
    L = load_lattice(args.source, args.seed)
    if not args.family:
        raise InputError(f"{kind} needs --family")
    try:
        family = io.parse_family(L, args.family)
    except ValueError as e:
        raise InputError(str(e)) from None
    formula_fn = veinott_glb_formula if kind == "glb" else veinott_lub_formula
    brute_fn = veinott_glb_bruteforce if kind == "glb" else veinott_lub_bruteforce
    try:
        brute = brute_fn(L, family, args.cap)
    except ValueError as e:
        raise InputError(str(e)) from None
    try:
        formula = formula_fn(L, family)
    except NotDistributiveError as e:
        doc = {"formula": None, "bruteforce": io.names(L, brute) if brute else None, "refused": str(e)}
        text = f"refused: {e}\nbrute force: {io.format_set(L, brute)}\n"
        raise Refusal((doc, text))
    agree = brute == formula
    doc = {"formula": io.names(L, formula), "bruteforce": io.names(L, brute) if brute else None, "agree": agree}
    text = f"{io.format_set(L, formula)}\noracle agreement: {'yes' if agree else 'NO'}\n"
    return 0, doc, text


def cmd_glb(args):
    return _bound(args, "glb")


def cmd_lub(args):
    return _bound(args, "lub")


def counterexample_checks() -> list[tuple[str, bool]]:
    """Reproduce the pentagon and diamond facts; one ``(description, ok)`` per fact."""
    N = catalog.n5()
    fmt = lambda sets: sorted(N.fmt(s) for s in sets)
    down_de = fmt(veinott_down_set(N, N.eset("de")))
    expected_de = sorted(["a", "c", "d", "ab", "ac", "ad", "cd", "de", "acd", "ade", "cde", "abde", "acde", "abcde"])
    down_abce = fmt(veinott_down_set(N, N.eset("abce")))
    lbs, maximal = veinott_lower_bounds(N, [N.eset("de"), N.eset("abce")])
    v = analyze(N)
    checks = [
        ("N5: down-set of de has the 14 listed sublattices", down_de == expected_de),
        ("N5: down-set of abce is {a, ab, ac, abce}", down_abce == ["a", "ab", "abce", "ac"]),
        ("N5: common lower bounds of de, abce are {a, ab, ac}", fmt(lbs) == ["a", "ab", "ac"]),
        ("N5: maximal lower bounds are ab and ac", fmt(maximal) == ["ab", "ac"]),
        ("N5: SL(N5) is not a lattice", not v.is_lattice),
        ("N5: reported witness pair is de / abce", v.failure is not None and fmt(v.failure.pair) == ["abce", "de"]),
    ]
    M = catalog.m3()
    lbs, maximal = veinott_lower_bounds(M, [M.eset("be"), M.eset("ce")])
    names_lbs = {M.fmt(s) for s in lbs}
    incomparable = not veinott_leq(M, M.eset("abce"), M.eset("abcde")) and not veinott_leq(M, M.eset("abcde"), M.eset("abce"))
    vm = analyze(M)
    checks += [
        ("M3: abce and abcde are lower bounds of be, ce", {"abce", "abcde"} <= names_lbs),
        ("M3: abce and abcde are incomparable", incomparable),
        ("M3: be and ce have no meet", veinott_glb_bruteforce(M, [M.eset("be"), M.eset("ce")]) is None),
        ("M3: SL(M3) is not a lattice", not vm.is_lattice),
    ]
    return checks


def cmd_counterexample(args) -> tuple[int, dict, str]:
    checks = counterexample_checks()
    ok = all(c for _, c in checks)
    doc = {"ok": ok, "checks": [{"fact": d, "ok": c} for d, c in checks]}
    text = "".join(f"[{'ok' if c else 'FAIL'}] {d}\n" for d, c in checks)
    return (0 if ok else 1), doc, text


def cmd_game(args) -> tuple[int, dict, str]:
    try:
        with open(args.source, encoding="utf-8") as fh:
            G = io.loads_game(fh.read())
    except OSError as e:
        raise InputError(f"cannot read {args.source}: {e}") from None
    except ValueError as e:
        raise InputError(f"{args.source}: {e}") from None
    try:
        r = solve(G)
    except NotSupermodularError as e:
        raise Refusal(({"refused": str(e)}, f"refused: {e}\n"))
    doc = io.equilibria_to_doc(G, r)
    pair = lambda p: f"({G.s1.labels[p[0]]}, {G.s2.labels[p[1]]})"
    text = (
        f"equilibria: {', '.join(pair(p) for p in r.equilibria)}\n"
        f"least: {pair(r.least)}\ngreatest: {pair(r.greatest)}\n"
        f"complete lattice: {'yes' if r.is_complete_lattice else 'no'}\n"
        f"closed under componentwise meet/join: {'yes' if r.is_sublattice else 'no'}\n"
    )
    return 0, doc, text


def cmd_export(args) -> tuple[int, dict, str]:
    L = load_lattice(args.source, args.seed)
    if args.sl:
        dot = io.sl_dot(L, sl_poset(L, args.cap))
    else:
        dot = io.hasse_dot(L)
    return 0, {"dot": dot, "lattice": io.lattice_to_doc(L)}, dot


COMMANDS = {
    "check": cmd_check,
    "sl": cmd_sl,
    "glb": cmd_glb,
    "lub": cmd_lub,
    "counterexample": cmd_counterexample,
    "game": cmd_game,
    "export": cmd_export,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="veinott", description="Finite lattices and the Veinott order on their sublattices.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("source", nargs="?", help="lattice JSON file or catalog spec (game: game JSON file)")
    p.add_argument("--family", help="family of sets, e.g. '{bot,p};{bot,q}'")
    p.add_argument("--cap", type=int, default=None, help="sublattice enumeration cap (default $VEINOTT_CAP or 50000)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "machine", "dot"), default="text")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--sl", action="store_true", help="export: draw the Veinott poset instead of the lattice")
    return p


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str]:
    """Run one command; returns the exit status and the rendered output."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0), ""
    if args.cap is None:
        args.cap = default_cap()
    if args.verb not in ("counterexample",) and not args.source:
        return 2, f"{args.verb}: missing source\n"
    try:
        status, doc, text = COMMANDS[args.verb](args)
    except Refusal as r:
        doc, text = r.args[0]
        status = 1
    except InputError as e:
        return 2, f"error: {e}\n"
    except CapExceeded as e:
        return 2, f"error: {e}\n"
    except ValueError as e:
        return 2, f"error: {e}\n"
    if args.format == "machine":
        out = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    elif args.format == "dot":
        if args.verb != "export":
            return 2, "error: --format dot is only available for export\n"
        out = doc["dot"]
    else:
        out = text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
        out = ""
    return status, out


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, out = run(argv)
    stream = sys.stdout if status != 2 else sys.stderr
    stream.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
