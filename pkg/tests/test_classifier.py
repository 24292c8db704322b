import pytest

from posetdual import antichain, build_L, chain, direct_sum, generate_posets
from posetdual import alexander_dual, build_disconnected_witness, build_high_prime
from posetdual import chain_sum_dual, find_non_co_rooted_config, find_non_rooted_config
from posetdual import is_minimal_cover, predict_duality, verify_pair, verify_witness

from oracles import brute_force_minimal_covers

UP_TO_4 = [P for n in (1, 2, 3, 4) for P in generate_posets(n)]


def test_predict_examples(V, C3):
    v = predict_duality(V, V)
    assert v.holds and v.clause == "both-rooted" and v.witness is None
    for Q in UP_TO_4:
        assert predict_duality(C3, Q).clause == "some-chain"
    v = predict_duality(antichain(2), antichain(2))
    assert not v.holds and v.clause == "fails-disconnected"


def test_find_configs(V, LAM, N):
    assert find_non_rooted_config(LAM) == (0, 1, 2)
    assert find_non_rooted_config(V) is None
    assert find_non_rooted_config(N) == (0, 1, 2)
    assert find_non_co_rooted_config(V) == (0, 1, 2)
    assert find_non_co_rooted_config(LAM) is None


def test_high_prime_V_LAM(V, LAM):
    cover = build_high_prime(V, LAM, 0, 1, 2, 0, 1, 2)
    assert cover == ((0, 0), (0, 2), (1, 1), (1, 2))
    assert cover in brute_force_minimal_covers(3, 3, build_L(V, LAM).gens)
    assert len(cover) == LAM.n + len(LAM.up_set(0) & LAM.up_set(1))


def test_high_prime_preconditions(V, LAM):
    with pytest.raises(ValueError, match="comparable in P"):
        build_high_prime(V, LAM, 0, 2, 1, 0, 1, 2)
    with pytest.raises(ValueError, match="not above"):
        build_high_prime(V, LAM, 0, 1, 2, 0, 1, 1)
    with pytest.raises(ValueError, match="not below"):
        build_high_prime(LAM, LAM, 0, 1, 2, 0, 1, 2)


def test_high_prime_opposite(V, LAM):
    # a co-rooted configuration is the rooted one on opposite posets
    cover = build_high_prime(LAM.opposite(), V.opposite(), 0, 1, 2, 0, 1, 2)
    assert is_minimal_cover(build_L(LAM, V), cover)


def test_high_prime_size_law_exhaustive():
    n_checked = 0
    for P in UP_TO_4:
        pcfgs = [
            (a, b, c)
            for a, b in P.incomparable_pairs()
            for c in range(P.n)
            if P.lt(c, a) and P.lt(c, b)
        ]
        if not pcfgs:
            continue
        for Q in UP_TO_4:
            L = build_L(P, Q)
            for a, b in Q.incomparable_pairs():
                for c in range(Q.n):
                    if not (Q.lt(a, c) and Q.lt(b, c)):
                        continue
                    for p1, p2, p3 in pcfgs:
                        cover = build_high_prime(P, Q, p1, p2, p3, a, b, c, verify=False)
                        assert len(cover) == Q.n + len(Q.up_set(a) & Q.up_set(b))
                        assert is_minimal_cover(L, cover)
                        n_checked += 1
    assert n_checked > 0


def test_disconnected_witness(A2, V):
    cover, mono = build_disconnected_witness(A2, A2)
    assert cover == ((0, 0), (1, 1))
    assert mono == ((0, 1), (1, 0))
    assert mono in build_L(A2, A2).gens and not set(mono) & set(cover)
    Q = direct_sum(chain(1), chain(1))
    assert build_disconnected_witness(A2, Q) == (cover, mono)
    with pytest.raises(ValueError):
        build_disconnected_witness(V, A2)


def test_verify_pair_examples(V, LAM, N, C2C2):
    r = verify_pair(V, LAM)
    assert (r.predicted, r.clause, r.computed, r.witness_verified) == (
        False,
        "fails-rooted-mismatch",
        False,
        True,
    )
    assert r.witness.cover == ((0, 0), (0, 2), (1, 1), (1, 2))
    r = verify_pair(N, C2C2)
    assert r.predicted and r.computed and r.clause == "P-connected-Q-sum-of-chains"
    r = verify_pair(N, V)
    assert not r.predicted and not r.computed and r.clause == "fails-general"
    assert r.witness_verified
    d = r.to_dict()
    assert set(d) == {"P", "Q", "predicted", "clause", "computed", "agree", "witness", "witness_verified"}


def test_swapped_witness(V, LAM):
    P = direct_sum(V, chain(1))
    r = verify_pair(P, LAM)
    assert r.clause == "fails-co-rooted-mismatch"
    assert r.witness.swapped and r.witness.opposite
    assert r.witness_verified and r.agree


def test_tampered_witness_rejected(V, LAM):
    w = predict_duality(V, LAM).witness
    from dataclasses import replace

    assert not verify_witness(V, LAM, replace(w, cover=w.cover[:-1]))
    w = predict_duality(antichain(2), antichain(2)).witness
    assert not verify_witness(antichain(2), antichain(2), replace(w, monomial=((0, 0), (1, 0))))


@pytest.mark.parametrize("P", UP_TO_4)
def test_predicate_symmetric(P):
    for Q in UP_TO_4:
        assert predict_duality(P, Q).holds == predict_duality(Q, P).holds


def test_verdict_clause_consistency():
    from posetdual.classifier import FAILING_CLAUSES, HOLDING_CLAUSES

    for P in UP_TO_4:
        for Q in UP_TO_4:
            v = predict_duality(P, Q, with_witness=False)
            assert v.holds == (v.clause in HOLDING_CLAUSES)
            assert v.holds != (v.clause in FAILING_CLAUSES)


SUM_OF_CHAINS = [
    Q
    for n in (1, 2, 3, 4)
    for Q in generate_posets(n)
    if Q.is_sum_of_chains()
    and len(Q.decompose_direct_sum()) <= 2
    and all(s.poset.n <= 2 for s in Q.decompose_direct_sum())
]


@pytest.mark.parametrize("Q", SUM_OF_CHAINS)
def test_chain_sum_product_decomposition(Q):
    for P in UP_TO_4:
        if P.is_connected():
            assert alexander_dual(build_L(P, Q)) == chain_sum_dual(P, Q)
