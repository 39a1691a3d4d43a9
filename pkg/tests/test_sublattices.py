import itertools

import pytest

import oracles
from veinott import catalog
from veinott.lattice import ElementSet, is_distributive
from veinott.sublattices import (
    CapExceeded,
    NotDistributiveError,
    SLPoset,
    analyze,
    bottom_shift,
    default_cap,
    enumerate_sl,
    is_sublattice,
    forbidden_pair,
    sublattice_closure,
    veinott_down_set,
    veinott_glb_bruteforce,
    veinott_glb_formula,
    veinott_leq,
    veinott_lower_bounds,
    veinott_lub_bruteforce,
    veinott_lub_formula,
    veinott_upper_bounds,
)


@pytest.fixture
def N5():
    return catalog.n5()


@pytest.fixture
def B2():
    return catalog.boolean(2)


def fmt_all(L, sets):
    return [L.fmt(s) for s in sets]


class TestSublattices:
    def test_examples(self, N5):
        assert is_sublattice(N5, N5.eset("de"))
        assert is_sublattice(N5, N5.eset("abce"))
        assert not is_sublattice(N5, N5.eset("bc"))
        assert not is_sublattice(N5, ElementSet.empty(5))
        assert all(is_sublattice(N5, N5.eset([x])) for x in range(5))

    def test_closure(self, N5):
        assert N5.fmt(sublattice_closure(N5, N5.eset("bc"))) == "abce"
        S = N5.eset("acd")
        assert sublattice_closure(N5, S) == S
        assert N5.fmt(sublattice_closure(N5, N5.eset("ae"))) == "ae"
        with pytest.raises(ValueError):
            sublattice_closure(N5, ElementSet.empty(5))

    def test_closure_is_least(self):
        L = catalog.build("random:6:3")
        subs = [ElementSet.of(L.n, s) for s in oracles.all_sublattices(L)]
        for k in (1, 2, 3):
            for S in itertools.combinations(range(L.n), k):
                S = ElementSet.of(L.n, S)
                c = sublattice_closure(L, S)
                assert S <= c and is_sublattice(L, c)
                assert all(c <= T for T in subs if S <= T)

    def test_chain_every_subset(self):
        assert len(enumerate_sl(catalog.chain(2))) == 7
        assert len(enumerate_sl(catalog.chain(4))) == 31
        assert len(enumerate_sl(catalog.chain(0))) == 1

    @pytest.mark.parametrize("spec", ["n5", "m3", "boolean:2", "boolean:3", "divisor:12", "d:1", "random:6:4", "random:7:5"])
    def test_enumeration_matches_powerset_scan(self, spec):
        L = catalog.build(spec)
        got = enumerate_sl(L)
        assert {frozenset(s) for s in got} == set(oracles.all_sublattices(L))
        assert len(got) == len(set(got))
        assert [s.bits for s in got] == sorted(s.bits for s in got)

    def test_known_counts(self):
        # frozen from the powerset scan oracle
        counts = {"n5": 22, "m3": 19, "boolean:2": 12, "boolean:3": 73, "chain:6": 127, "divisor:36": 146, "d:1": 103}
        for spec, k in counts.items():
            assert len(enumerate_sl(catalog.build(spec))) == k, spec

    def test_pentagon_members(self, N5):
        sl = enumerate_sl(N5)
        assert N5.eset("de") in sl and N5.eset("abce") in sl

    def test_cap(self):
        L = catalog.boolean(3)
        with pytest.raises(CapExceeded) as exc:
            enumerate_sl(L, cap=10)
        assert exc.value.cap == 10 and exc.value.found > 10
        assert len(enumerate_sl(L, cap=73)) == 73

    def test_cap_env(self, monkeypatch):
        monkeypatch.setenv("VEINOTT_CAP", "123")
        assert default_cap() == 123
        monkeypatch.delenv("VEINOTT_CAP")
        assert default_cap() == 50_000


class TestVeinottOrder:
    def test_examples(self, N5):
        e = N5.eset
        assert veinott_leq(N5, e("ab"), e("de"))
        assert veinott_leq(N5, e("ac"), e("de"))
        assert not veinott_leq(N5, e("ab"), e("ac"))
        assert not veinott_leq(N5, e("ac"), e("ab"))

    def test_singletons_in_chain(self):
        C = catalog.chain(3)
        for x in range(4):
            for y in range(4):
                assert veinott_leq(C, C.eset([x]), C.eset([y])) == (x <= y)

    @pytest.mark.parametrize("spec", ["n5", "m3", "boolean:2", "random:6:3"])
    def test_matches_oracle(self, spec):
        L = catalog.build(spec)
        subs = enumerate_sl(L)
        for S in subs:
            for T in subs:
                assert veinott_leq(L, S, T) == oracles.veinott_leq(L, set(S), set(T))

    def test_reflexive_exactly_on_sublattices(self, N5):
        for k in range(1, 6):
            for S in itertools.combinations(range(5), k):
                S = ElementSet.of(5, S)
                assert veinott_leq(N5, S, S) == is_sublattice(N5, S)

    def test_poset_matches_pairwise(self):
        L = catalog.m3()
        P = SLPoset(L)
        for i, S in enumerate(P.members):
            for j, T in enumerate(P.members):
                assert P.leq(i, j) == veinott_leq(L, S, T)
                if P.leq(i, j) and i != j:
                    assert i < j  # numbered along a linear extension


class TestBounds:
    def test_pentagon_down_sets(self, N5):
        de = sorted(fmt_all(N5, veinott_down_set(N5, N5.eset("de"))))
        assert de == sorted(["a", "c", "d", "ab", "ac", "ad", "cd", "de", "acd", "ade", "cde", "abde", "acde", "abcde"])
        assert sorted(fmt_all(N5, veinott_down_set(N5, N5.eset("abce")))) == ["a", "ab", "abce", "ac"]

    def test_pentagon_lower_bounds(self, N5):
        lbs, maximal = veinott_lower_bounds(N5, [N5.eset("de"), N5.eset("abce")])
        assert fmt_all(N5, lbs) == ["a", "ab", "ac"]
        assert fmt_all(N5, maximal) == ["ab", "ac"]

    def test_singleton_family(self, N5):
        S = N5.eset("acd")
        lbs, maximal = veinott_lower_bounds(N5, [S])
        assert lbs == veinott_down_set(N5, S)
        assert maximal == [S]

    def test_diamond_lower_bounds(self):
        M = catalog.m3()
        lbs, maximal = veinott_lower_bounds(M, [M.eset("be"), M.eset("ce")])
        assert M.eset("abce") in lbs and M.eset("abcde") in lbs
        assert not veinott_leq(M, M.eset("abce"), M.eset("abcde"))
        assert not veinott_leq(M, M.eset("abcde"), M.eset("abce"))
        assert len(maximal) > 1

    def test_upper_bounds_top(self, N5):
        ubs, minimal = veinott_upper_bounds(N5, [N5.eset("ab"), N5.eset("cd")])
        assert N5.eset("e") in ubs
        assert all(veinott_leq(N5, U, N5.eset("e")) for U in ubs)


class TestGlbLub:
    def test_pentagon_has_no_glb(self, N5):
        assert veinott_glb_bruteforce(N5, [N5.eset("de"), N5.eset("abce")]) is None

    def test_diamond_has_no_glb(self):
        M = catalog.m3()
        assert veinott_glb_bruteforce(M, [M.eset("be"), M.eset("ce")]) is None

    def test_idempotent(self, N5):
        for S in enumerate_sl(N5):
            assert veinott_glb_bruteforce(N5, [S, S]) == S
            assert veinott_lub_bruteforce(N5, [S, S]) == S

    def test_boolean_examples(self, B2):
        F = [B2.eset(["bot", "p"]), B2.eset(["bot", "q"])]
        assert B2.fmt(veinott_glb_bruteforce(B2, F)) == "{bot}"
        assert veinott_glb_formula(B2, F) == B2.eset(["bot"])
        G = [B2.eset(["p", "top"]), B2.eset(["q", "top"])]
        assert veinott_lub_formula(B2, G) == B2.eset(["top"])
        assert veinott_lub_bruteforce(B2, G) == B2.eset(["top"])

    def test_chain_lub(self):
        C = catalog.chain(3)
        F = [C.eset(["0"]), C.eset(["2"])]
        assert veinott_lub_formula(C, F) == C.eset(["2"])
        assert veinott_glb_formula(C, F) == C.eset(["0"])

    @pytest.mark.parametrize("spec", ["boolean:2", "chain:3", "divisor:12", "d:1"])
    def test_formula_singleton_family(self, spec):
        L = catalog.build(spec)
        for S in enumerate_sl(L):
            assert veinott_glb_formula(L, [S]) == S
            assert veinott_lub_formula(L, [S]) == S

    def test_top_in_family(self):
        L = catalog.divisor(12)
        top = L.eset([L.top])
        for A in enumerate_sl(L):
            g = veinott_glb_formula(L, [top, A])
            assert g == veinott_glb_formula(L, [A])
            assert veinott_leq(L, g, A)

    @pytest.mark.parametrize("spec", ["boolean:2", "chain:2", "product:chain:1*chain:2"])
    def test_formula_matches_set_oracle(self, spec):
        L = catalog.build(spec)
        universe = oracles.all_sublattices(L)
        for A, B in itertools.combinations_with_replacement(universe, 2):
            fam = [ElementSet.of(L.n, A), ElementSet.of(L.n, B)]
            assert set(veinott_glb_formula(L, fam)) == oracles.glb_family(L, [A, B], universe)
            assert set(veinott_lub_formula(L, fam)) == oracles.lub_family(L, [A, B], universe)

    def test_formula_refuses_non_distributive(self, N5):
        with pytest.raises(NotDistributiveError):
            veinott_glb_formula(N5, [N5.eset("de")])
        with pytest.raises(NotDistributiveError):
            veinott_lub_formula(catalog.m3(), [catalog.m3().eset("a")])

    def test_family_validation(self, B2):
        with pytest.raises(ValueError, match="empty"):
            veinott_glb_formula(B2, [])
        with pytest.raises(ValueError, match="not a sublattice"):
            veinott_glb_bruteforce(B2, [B2.eset(["p", "q"])])


class TestBottomShift:
    def test_examples(self, B2):
        F = [B2.eset(["bot", "p"]), B2.eset(["bot", "q"])]
        assert bottom_shift(B2, B2.eset(["bot"]), F) == B2.eset(["bot"])
        Z = B2.eset(["p"])
        assert bottom_shift(B2, Z, [B2.eset(["p", "top"])]) == Z

    def test_p_is_not_below_q_top(self, B2):
        # p ∧ q = bot lies outside {p}, so {p} is no lower bound of {q,top}
        G = [B2.eset(["p", "top"]), B2.eset(["q", "top"])]
        with pytest.raises(ValueError, match="lower bound"):
            bottom_shift(B2, B2.eset(["p"]), G)

    def test_requires_lower_bound(self, B2):
        with pytest.raises(ValueError, match="lower bound"):
            bottom_shift(B2, B2.eset(["top"]), [B2.eset(["bot"])])

    @pytest.mark.parametrize("spec", ["boolean:2", "divisor:12", "d:1"])
    def test_postconditions(self, spec):
        L = catalog.build(spec)
        sl = enumerate_sl(L)
        for A, B in itertools.combinations(sl[::3], 2):
            F = [A, B]
            G = veinott_glb_formula(L, F)
            for Z in veinott_lower_bounds(L, F, sl)[0]:
                Zb = bottom_shift(L, Z, F)
                assert is_sublattice(L, Zb)
                assert veinott_leq(L, Z, Zb)
                assert all(veinott_leq(L, Zb, X) for X in F)
                assert Zb <= G


class TestAnalyze:
    def test_pentagon(self, N5):
        v = analyze(N5)
        assert not v.is_lattice and v.sl_size == 22
        assert v.failure.kind == "glb"
        assert fmt_all(N5, v.failure.pair) == ["de", "abce"]
        assert fmt_all(N5, v.failure.bounds) == ["ab", "ac"]

    def test_diamond(self):
        M = catalog.m3()
        v = analyze(M)
        assert not v.is_lattice and v.sl_size == 19
        assert fmt_all(M, v.failure.pair) == ["be", "ce"]
        assert fmt_all(M, v.failure.bounds) == ["abce", "abcde"]

    def test_boolean(self, B2):
        v = analyze(B2)
        assert v.is_lattice and v.failure is None and v.sl_size == 12

    def test_failure_is_rechecked(self):
        for size in (5, 6):
            for L in catalog.all_lattices(size):
                v = analyze(L)
                if v.is_lattice:
                    continue
                S, T = v.failure.pair
                assert veinott_glb_bruteforce(L, [S, T]) is None
                lbs, maximal = veinott_lower_bounds(L, [S, T])
                assert list(v.failure.bounds) == maximal

    def test_forbidden_pair_absent_on_distributive(self, B2):
        assert forbidden_pair(B2) is None
        assert forbidden_pair(catalog.n5())[0] == "glb"

    def test_cap_propagates(self):
        with pytest.raises(CapExceeded):
            analyze(catalog.boolean(3), cap=5)

    def test_agrees_with_distributivity_small(self):
        for size in range(1, 7):
            for L in catalog.all_lattices(size):
                assert analyze(L).is_lattice == is_distributive(L)
