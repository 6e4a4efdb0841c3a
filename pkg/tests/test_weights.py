import pytest
from hypothesis import given
from hypothesis import strategies as st

from serrecalc.errors import ProfileMembershipError, UnsupportedCaseError
from serrecalc.weights import (
    Case,
    GaloisContext,
    Symbol,
    TGen,
    WeightProfile,
    character_window,
    count_by_A,
    enumerate_profiles,
    ext1_nonzero,
    in_p,
    j_set,
    jh_interval,
    length_witnesses,
    mu_shift,
    nonsplit_context,
    profile_from_subset,
    profile_stats,
    split_context,
    v_chi_from_windows,
)


def prof(*tags):
    return WeightProfile.from_tags(tags)


def test_context_validation():
    with pytest.raises(ValueError):
        GaloisContext(2, Case.SPLIT, frozenset({0}))
    with pytest.raises(ValueError):
        GaloisContext(2, Case.NONSPLIT, frozenset({0, 1}))
    with pytest.raises(ValueError):
        GaloisContext(2, Case.IRREDUCIBLE, frozenset({0}))
    with pytest.raises(ValueError):
        split_context(2, p=20)  # not prime
    with pytest.raises(ValueError):
        split_context(2, p=5)  # below the genericity bound
    split_context(2, p=47)


def test_enumerate_f1():
    split = split_context(1)
    assert [p.tags() for p in enumerate_profiles(split, "P")] == [
        ["X0"], ["X2"], ["P3"], ["P1"],
    ]
    ns = nonsplit_context(1, [])
    assert [p.tags() for p in enumerate_profiles(ns, "P")] == [["X0"], ["P1"]]
    assert [p.tags() for p in enumerate_profiles(split, "Dss")] == [["X0"], ["P3"]]


def test_enumerate_rejects_irreducible():
    with pytest.raises(UnsupportedCaseError):
        enumerate_profiles(GaloisContext(1, Case.IRREDUCIBLE), "P")


def test_profile_stats_examples():
    split2 = split_context(2)
    st_ = profile_stats(split2, prof("X1", "P2"))
    assert st_.j_lambda == frozenset({0})
    assert st_.t_assign == (TGen.YZ, TGen.YZ)
    assert st_.a_set == frozenset({0, 1}) and st_.k == 0

    st_ = profile_stats(split_context(1), prof("X0"))
    assert st_.t_assign == (TGen.Z,) and st_.a_set == frozenset() and st_.k == 1
    assert st_.eps == ((0, 1),)

    ns = nonsplit_context(2, [0])
    st_ = profile_stats(ns, prof("X0", "X0"))
    assert st_.j1 == frozenset() and st_.j2 == frozenset({1})
    assert st_.a_set == frozenset({1})


def test_profile_stats_rejects_uncovered():
    ns = nonsplit_context(2, [0])
    # x+2 outside J_rho has no generator rule
    with pytest.raises(ProfileMembershipError):
        profile_stats(ns, prof("X0", "X2"))
    with pytest.raises(ProfileMembershipError):
        profile_stats(split_context(2), prof("X0", "X1"))  # not in P^ss


def test_count_by_A_irreducible_f3():
    counts = count_by_A(GaloisContext(3, Case.IRREDUCIBLE))
    assert counts.closed == {1: 6, 3: 2}
    assert counts.closed_p_level == {1: 4 * 6, 3: 1 * 2}


def test_count_by_A_split_f2():
    counts = count_by_A(split_context(2))
    assert counts.domain == "D"
    assert counts.closed == {0: 2, 2: 2}
    assert counts.enumerated == {0: 2, 2: 2}
    assert counts.ok


def test_count_by_A_nonsplit_f2():
    counts = count_by_A(nonsplit_context(2, [0]))
    assert counts.domain == "Pbar"
    assert counts.enumerated == {1: 2, 2: 2}
    assert counts.ok


@pytest.mark.parametrize("f", range(1, 6))
def test_dss_bijection(f):
    ctx = split_context(f)
    seen = {j_set(lam) for lam in enumerate_profiles(ctx, "Dss")}
    assert len(seen) == 2**f


@pytest.mark.parametrize("f", range(1, 5))
def test_a_set_contains_jrho_complement(f):
    for mask in range(1 << f):
        j_rho = frozenset(j for j in range(f) if mask & (1 << j))
        if len(j_rho) == f:
            ctx = split_context(f)
        else:
            ctx = nonsplit_context(f, j_rho)
        for lam in enumerate_profiles(ctx, "P"):
            st_ = profile_stats(ctx, lam)
            assert ctx.j_rho_c <= st_.a_set
            if ctx.case is Case.SPLIT:
                assert len(st_.a_set) % 2 == 0


@pytest.mark.parametrize("f", range(2, 6))
def test_pbar_fibers(f):
    from itertools import combinations

    from serrecalc.verify import reducible_contexts

    for ctx in reducible_contexts(f):
        if ctx.case is not Case.NONSPLIT:
            continue
        d = ctx.d_rho
        pbar = enumerate_profiles(ctx, "Pbar")
        assert all(in_p(ctx, lam) for lam in pbar)
        for r in range(d + 1):
            for sub in combinations(sorted(ctx.j_rho), r):
                want = frozenset(sub) | ctx.j_rho_c
                fiber = [lam for lam in pbar if profile_stats(ctx, lam).a_set == want]
                assert len(fiber) == 2 ** (f - d)


@pytest.mark.parametrize("f", range(1, 7))
def test_length_witnesses(f):
    for d in range(f):
        ctx = nonsplit_context(f, frozenset(range(d)))
        found = length_witnesses(ctx)
        assert all(k in found for k in range(1, f + 1))


def test_jh_interval():
    a = frozenset({0, 1})
    assert jh_interval(a, a) == [a]
    got = jh_interval(frozenset(), frozenset({0, 1}))
    assert len(got) == 4
    assert ext1_nonzero(frozenset(), frozenset({0}))
    assert not ext1_nonzero(frozenset(), frozenset({0, 1}))


@given(
    st.frozensets(st.integers(min_value=0, max_value=5), max_size=6),
    st.frozensets(st.integers(min_value=0, max_value=5), max_size=6),
)
def test_jh_interval_cardinality(a, b):
    assert len(jh_interval(a, b)) == 2 ** len(a ^ b)


@given(st.frozensets(st.integers(min_value=0, max_value=7)), st.integers(min_value=0, max_value=7))
def test_mu_shift_involution(j_sigma, j):
    assert mu_shift(mu_shift(j_sigma, j), j) == j_sigma
    assert mu_shift(frozenset(), 0) == frozenset({0})
    assert mu_shift(frozenset({0, 1}), 1) == frozenset({0})


def test_profile_from_subset():
    assert profile_from_subset(frozenset(), "modular", 3) == (Symbol.X0,) * 3
    assert profile_from_subset(frozenset({0}), "modular", 1) == (Symbol.P3,)
    assert profile_from_subset(frozenset({0}), "principal_series", 1) == (Symbol.P1,)


@pytest.mark.parametrize("f", range(1, 5))
def test_modular_recipe_inverts_j_set(f):
    from itertools import combinations

    for r in range(f + 1):
        for sub in combinations(range(f), r):
            J = frozenset(sub)
            entries = profile_from_subset(J, "modular", f)
            lam = WeightProfile(entries)
            assert lam in enumerate_profiles(split_context(f), "Dss")
            assert j_set(lam) == J


def test_character_window_examples():
    split1 = split_context(1)
    w = character_window(split1, prof("X0"))
    assert w.j_min == frozenset() and w.j_max == frozenset()
    assert w.j_dprime == frozenset()
    assert w.v_chi == frozenset({frozenset(), frozenset({0})})

    # all coordinates at {x, p-1-x}: singletons and the empty set
    ns = nonsplit_context(3, [0, 1])
    w = character_window(ns, prof("X0", "X0", "X0"))
    assert w.j_min == frozenset()
    assert w.v_chi == frozenset({frozenset(), frozenset({0}), frozenset({1})})


@pytest.mark.parametrize("f", range(1, 5))
def test_v_chi_window_union(f):
    from serrecalc.verify import reducible_contexts

    for ctx in reducible_contexts(f):
        for lam in enumerate_profiles(ctx, "P"):
            assert character_window(ctx, lam).v_chi == v_chi_from_windows(ctx, lam)


def test_profile_serialization_round_trip():
    lam = prof("X0", "P2", "X1")
    assert WeightProfile.from_tags(lam.tags()) == lam
