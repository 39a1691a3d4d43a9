"""Exit criteria for the library.

Every test records one line in ``RESULTS``; ``conftest.py`` prints them as a
pass/fail table at the end of the run.  Run just this suite with
``pytest tests/test_acceptance.py``.
"""

import itertools
import random
import time

import pytest

from veinott import catalog
from veinott.games import (
    best_response,
    closed_under_meet_join,
    componentwise_extremes,
    random_supermodular_game,
    solve,
)
from veinott.heyting import check_residuation, implication
from veinott.lattice import ElementSet, is_distributive, moore_closure
from veinott.sublattices import (
    CapExceeded,
    analyze,
    default_cap,
    enumerate_sl,
    sl_poset,
    sublattice_closure,
    veinott_down_set,
    veinott_glb_bruteforce,
    veinott_glb_formula,
    veinott_leq,
    veinott_lower_bounds,
    veinott_lub_bruteforce,
    veinott_lub_formula,
)

pytestmark = pytest.mark.acceptance

RESULTS: list[tuple[int, str, bool, str]] = []


def record(number: int, title: str, ok: bool, detail: str) -> None:
    RESULTS.append((number, title, ok, detail))
    print(f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}")
    assert ok, detail


def fmt_all(L, sets):
    return sorted(L.fmt(s) for s in sets)


def test_1_pentagon_golden():
    t = time.perf_counter()
    N = catalog.n5()
    down_de = fmt_all(N, veinott_down_set(N, N.eset("de")))
    down_abce = fmt_all(N, veinott_down_set(N, N.eset("abce")))
    lbs, maximal = veinott_lower_bounds(N, [N.eset("de"), N.eset("abce")])
    verdict = analyze(N)
    elapsed = time.perf_counter() - t
    expected_de = sorted(["a", "c", "d", "ab", "ac", "ad", "cd", "de", "acd", "ade", "cde", "abde", "acde", "abcde"])
    checks = {
        "down-set of de": down_de == expected_de,
        "down-set of abce": down_abce == ["a", "ab", "abce", "ac"],
        "common lower bounds": fmt_all(N, lbs) == ["a", "ab", "ac"],
        "maximal lower bounds": fmt_all(N, maximal) == ["ab", "ac"],
        "not a lattice": not verdict.is_lattice,
        "under 1 s": elapsed < 1.0,
    }
    bad = [k for k, v in checks.items() if not v]
    record(1, "N5 golden example", not bad, f"{elapsed:.3f}s" + (f", failed: {bad}" if bad else ""))


def test_2_diamond_golden():
    t = time.perf_counter()
    M = catalog.m3()
    lbs, _ = veinott_lower_bounds(M, [M.eset("be"), M.eset("ce")])
    abce, abcde = M.eset("abce"), M.eset("abcde")
    glb = veinott_glb_bruteforce(M, [M.eset("be"), M.eset("ce")])
    elapsed = time.perf_counter() - t
    ok = (
        abce in lbs
        and abcde in lbs
        and not veinott_leq(M, abce, abcde)
        and not veinott_leq(M, abcde, abce)
        and glb is None
        and elapsed < 1.0
    )
    record(2, "M3 golden example", ok, f"{elapsed:.3f}s, glb {'absent' if glb is None else M.fmt(glb)}")


def test_3_lattice_iff_distributive():
    t = time.perf_counter()
    checked = mismatches = skipped = 0
    lattices = [(f"size {n} #{i}", L) for n in range(1, 8) for i, L in enumerate(catalog.all_lattices(n))]
    lattices += catalog.standard_catalog()
    for name, L in lattices:
        try:
            v = analyze(L, default_cap())
        except CapExceeded:
            skipped += 1
            continue
        checked += 1
        if v.is_lattice != is_distributive(L):
            mismatches += 1
    elapsed = time.perf_counter() - t
    ok = mismatches == 0 and elapsed < 300
    record(3, "SL lattice iff distributive", ok, f"{checked} lattices, {mismatches} mismatches, {skipped} over cap, {elapsed:.1f}s")


def test_4_formula_matches_bruteforce():
    t = time.perf_counter()
    lattices = families = mismatches = 0
    for _, L in catalog.standard_catalog():
        if not is_distributive(L):
            continue
        sl = enumerate_sl(L)
        if len(sl) > 200:
            continue
        lattices += 1
        # repeated members change neither bound, so distinct members cover every family of size <= 3
        for k in (1, 2, 3):
            for family in itertools.combinations(sl, k):
                families += 1
                if veinott_glb_formula(L, family) != veinott_glb_bruteforce(L, family):
                    mismatches += 1
                if veinott_lub_formula(L, family) != veinott_lub_bruteforce(L, family):
                    mismatches += 1
    elapsed = time.perf_counter() - t
    record(4, "closed-form glb/lub equal brute force", mismatches == 0,
           f"{lattices} lattices, {families} families, {mismatches} mismatches, {elapsed:.1f}s")


def test_5_veinott_order_laws():
    rng = random.Random(5)
    pool = [L for _, L in catalog.standard_catalog()]
    triples = violations = chained = 0
    while triples < 100_000:
        L = rng.choice(pool)
        P = sl_poset(L)
        m = len(P)
        if triples % 2:
            S, T, U = (P.members[rng.randrange(m)] for _ in range(3))
        else:
            # bias towards chains S <=v T <=v U so transitivity is not vacuous
            j = rng.randrange(m)
            below = [i for i in range(m) if P.leq(i, j)]
            above = [k for k in range(m) if P.leq(j, k)]
            S, T, U = P.members[rng.choice(below)], P.members[j], P.members[rng.choice(above)]
        triples += 1
        top = L.eset([L.top])
        st, tu, su, ts = veinott_leq(L, S, T), veinott_leq(L, T, U), veinott_leq(L, S, U), veinott_leq(L, T, S)
        if st and tu:
            chained += 1
            violations += not su
        if st and ts and S != T:
            violations += 1
        if not veinott_leq(L, S, S) or not veinott_leq(L, S, top):
            violations += 1
        R = ElementSet(rng.randrange(1, 1 << L.n), L.n)
        if veinott_leq(L, R, R) != (sublattice_closure(L, R) == R):
            violations += 1
    record(5, "Veinott order laws", violations == 0,
           f"{triples} triples ({chained} with S<=T<=U), {violations} violations")


def test_6_moore_closure_laws():
    rng = random.Random(6)
    pool = [L for _, L in catalog.standard_catalog()]
    samples = violations = 0
    while samples < 10_000:
        L = rng.choice(pool)
        full = (1 << L.n) - 1
        S = ElementSet(rng.randrange(1, full + 1), L.n)
        T = S | ElementSet(rng.randrange(0, full + 1), L.n)
        c = moore_closure(L, S)
        samples += 1
        if not S <= c or moore_closure(L, c) != c or not c <= moore_closure(L, T):
            violations += 1
    record(6, "Moore closure laws", violations == 0, f"{samples} subsets, {violations} violations")


def test_7_residuation():
    violations = checked = 0
    lattices = [L for _, L in catalog.standard_catalog()]
    lattices += [L for n in range(1, 8) for L in catalog.all_lattices(n)]
    for L in lattices:
        report = check_residuation(L)
        d = is_distributive(L)
        checked += 1
        if report.is_frame != d or report.is_coframe != d:
            violations += 1
        if not d:
            continue
        le, meet = L.leq_table, L.meet_table
        for x in range(L.n):
            for y in range(L.n):
                r = implication(L, x, y)
                for z in range(L.n):
                    if le[z][r] != le[meet[x][z]][y]:
                        violations += 1
    negatives = not check_residuation(catalog.n5()).is_frame and not check_residuation(catalog.m3()).is_frame
    record(7, "residuation", violations == 0 and negatives, f"{checked} lattices, {violations} violations")


def test_8_d_lattice_family():
    got = {}
    mismatched = []
    for n in (2, 3, 5):
        L = catalog.d_lattice(n)
        expected = L.eset(["top", *(f"a{i}" for i in range(n + 1)), "aw"])
        glb = veinott_glb_bruteforce(L, catalog.d_family(L))
        got[n] = "none" if glb is None else L.fmt(glb)
        if glb != expected:
            mismatched.append(n)
    record(8, "D-lattice family glb is {top, a0..an, aw}", not mismatched,
           f"brute force gives {got}" + (f"; differs for n in {mismatched}" if mismatched else ""))


def test_9_supermodular_games():
    spaces = ["chain:0", "chain:1", "chain:2", "chain:3", "boolean:2", "product:chain:1*chain:1"]
    games = violations = several = 0
    for seed in range(100):
        s1 = catalog.build(spaces[seed % len(spaces)])
        s2 = catalog.build(spaces[(seed * 7 + 3) % len(spaces)])
        G = random_supermodular_game(s1, s2, seed)
        r = solve(G)
        games += 1
        several += len(r.equilibria) > 1
        if not r.equilibria:
            violations += 1
            continue
        if componentwise_extremes(G, r.equilibria) != (r.least, r.greatest):
            violations += 1
        if not closed_under_meet_join(G, r.equilibria):
            violations += 1
        for player in (1, 2):
            own, other = G.strategies(player), G.strategies(3 - player)
            for y, y2 in itertools.product(range(other.n), repeat=2):
                if other.leq_table[y][y2] and not veinott_leq(
                    own, best_response(G, player, y), best_response(G, player, y2)
                ):
                    violations += 1
    record(9, "supermodular games", games >= 20 and violations == 0, f"{games} games ({several} with several equilibria), {violations} violations")

