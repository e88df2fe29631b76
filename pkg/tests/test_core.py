from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from pavingtools import catalog, oracle
from pavingtools.bits import full_mask, popcount
from pavingtools.core import (
    check_circuit_axioms,
    contract,
    delete,
    dual,
    from_circuits,
    from_paving,
    is_paving,
    is_simple,
    is_sparse_paving,
    relax,
    to_paving,
    uniform,
)
from pavingtools.errors import (
    AxiomViolation,
    BlockIsGroundSet,
    BlockOverlap,
    BlockTooSmall,
    ElementOutOfRange,
    GroundSetTooLarge,
    LoopContraction,
    NotAnAntichain,
)

FACES = [{1, 2, 3, 4}, {5, 6, 7, 8}, {1, 2, 6, 5}, {4, 3, 7, 8}, {1, 4, 8, 5}, {2, 3, 7, 6}]
K4_CYCLES = [(1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6), (1, 2, 5, 6), (1, 3, 4, 6), (2, 3, 4, 5)]


def test_ag32_prime_blocks(ag32p):
    blocks = [set(b) for b in ag32p.rep.sets()]
    assert len(blocks) == 13
    for face in FACES + [{1, 2, 7, 8}, {1, 8, 3, 6}]:
        assert face in blocks
    assert {2, 4, 5, 7} not in blocks
    assert ag32p.r == 4 and ag32p.n == 8


def test_from_paving_empty_is_uniform():
    M = from_paving(6, 3, [])
    assert all(M.rank(S) == min(len(S), 3) for k in range(7) for S in combinations(range(1, 7), k))
    assert M == from_circuits(6, list(combinations(range(1, 7), 4)))


def test_from_paving_rejects_overlap():
    with pytest.raises(BlockOverlap):
        from_paving(6, 4, [{1, 2, 3, 4}, {1, 2, 3, 5}])


def test_from_paving_rejects_small_block_and_range():
    with pytest.raises(BlockTooSmall):
        from_paving(6, 4, [{1, 2, 3}])
    with pytest.raises(ElementOutOfRange):
        from_paving(6, 3, [{1, 2, 7}])
    with pytest.raises(BlockIsGroundSet):
        from_paving(4, 4, [{1, 2, 3, 4}])
    with pytest.raises(GroundSetTooLarge):
        from_paving(65, 3, [])


def test_from_circuits_uniform():
    M = from_circuits(4, list(combinations(range(1, 5), 3)))
    assert M.r == 2
    assert M == uniform(4, 2)


def test_from_circuits_weak_elimination():
    with pytest.raises(AxiomViolation):
        from_circuits(4, [{1, 2}, {1, 3}])
    with pytest.raises(NotAnAntichain):
        from_circuits(4, [{1, 2}, {1, 2, 3}])


def test_k4_circuits(k4):
    # cycles enumerated independently as connected 2-regular edge sets
    assert sorted(k4.circuits()) == sorted(K4_CYCLES)
    assert k4.r == 3


def test_rank_examples(ag32p):
    assert ag32p.rank({1, 2, 7, 8}) == 3
    assert ag32p.rank(set()) == 0
    assert ag32p.rank({2, 4, 5, 7}) == 4
    with pytest.raises(ElementOutOfRange):
        ag32p.rank({0})


def test_closure_examples(ag32p):
    assert ag32p.closure({1, 2, 7}) == {1, 2, 7, 8}
    assert ag32p.closure({2, 4, 5}) == {2, 4, 5}
    for S in combinations(range(1, 9), 2):
        assert ag32p.closure(S) == set(S)


def test_contract_uniform():
    for e in range(1, 6):
        M = contract(uniform(5, 3), e)
        assert M == uniform(4, 2)
        assert M.labels == tuple(x for x in range(1, 6) if x != e)


def test_contract_ag32_prime(ag32p):
    M = ag32p.contract(1)
    assert (M.n, M.r) == (7, 3) and M.is_paving()
    # independent hyperplanes of M/2 by the brute-force oracle
    M2 = ag32p.contract(2)
    table = oracle.rank_table_from(M2)
    independent = [h for h in oracle.maximal_proper_flats(7, table) if len(h) == 2]
    lifted = sorted(tuple(sorted((2,) + tuple(M2.labels[i - 1] for i in h))) for h in independent)
    assert lifted == [(2, 4, 5), (2, 4, 7), (2, 5, 7)]


def test_contract_loop_rejected():
    M = from_circuits(3, [{1}])
    with pytest.raises(LoopContraction):
        M.contract(1)
    with pytest.raises(ElementOutOfRange):
        M.contract(4)


def test_delete_examples(ag32p, k4):
    assert delete(uniform(5, 3), 2) == uniform(4, 3)
    M = ag32p.delete(8)
    assert (M.n, M.r) == (7, 4) and M.is_paving()
    K = k4.delete(6)
    assert K.r == 3 and K.n == 5
    table = oracle.rank_table_from(K)
    hyps = oracle.maximal_proper_flats(5, table)
    # brute-force flats of the 5-edge graph: two triangles survive, not one
    assert hyps == [(1, 2, 4), (1, 3, 5), (2, 3), (2, 5), (3, 4), (4, 5)]
    assert sum(len(h) == 3 for h in hyps) == 2


def test_delete_coloop_drops_rank():
    M = delete(uniform(3, 3), 1)
    assert (M.n, M.r) == (2, 2)


def test_dual_examples(ag32p):
    assert dual(uniform(4, 2)) == uniform(4, 2)
    assert dual(uniform(5, 2)) == uniform(5, 3)
    D = dual(ag32p)
    assert D.r == 4 and D.is_paving()
    table = oracle.rank_table_from(ag32p)
    assert len(oracle.bases(8, table)) == 57
    complements = sorted(tuple(sorted(set(range(1, 9)) - set(B))) for B in oracle.bases(8, table))
    assert sorted(D.bases()) == complements


def test_paving_predicates(ag32p, hansen):
    assert is_paving(ag32p) and is_sparse_paving(ag32p) and is_simple(ag32p)
    assert is_paving(uniform(7, 3)) and is_sparse_paving(uniform(7, 3))
    assert not is_paving(hansen)
    M = from_paving(8, 4, [{1, 2, 3, 4, 5}])
    assert is_paving(M) and not is_sparse_paving(M)
    assert not is_simple(from_circuits(3, [{1, 2}]))


def test_relaxation_gives_ag32_prime(ag32, ag32p):
    assert relax(ag32, {2, 4, 5, 7}) == ag32p
    assert len(ag32.rep.blocks) == 14


def test_to_paving_roundtrip(kelly_moser):
    P = to_paving(kelly_moser)
    assert P == kelly_moser
    assert all(len(b) == 3 for b in P.rep.sets())


# -- properties ----------------------------------------------------------------


def _all_paving_families(n, r):
    """Every block family satisfying the paving invariants, by backtracking."""
    if r == 0:
        return [[]]
    cands = [frozenset(c) for k in range(r, n + 1) for c in combinations(range(1, n + 1), k)]
    out = []

    def rec(start, chosen):
        out.append(list(chosen))
        for i in range(start, len(cands)):
            if len(cands[i]) < n and all(len(cands[i] & B) <= r - 2 for B in chosen):
                chosen.append(cands[i])
                rec(i + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 7) for r in range(0, min(n, 4) + 1)])
def test_every_paving_family_is_a_matroid(n, r):
    for blocks in _all_paving_families(n, r):
        M = from_paving(n, r, blocks)
        check_circuit_axioms(M.circuit_masks)
        table = oracle.rank_table(n, M.circuit_masks)
        assert all(M.rank_mask(S) == table[S] for S in range(1 << n))


@st.composite
def sparse_paving(draw, max_n=9):
    n = draw(st.integers(4, max_n))
    r = draw(st.integers(3, min(4, n)))
    cands = list(combinations(range(1, n + 1), r))
    order = draw(st.permutations(range(len(cands))))
    chosen = []
    for i in order[: draw(st.integers(0, len(cands)))]:
        c = set(cands[i])
        if len(c) < n and all(len(c & B) <= r - 2 for B in chosen):
            chosen.append(c)
    return from_paving(n, r, chosen)


@settings(max_examples=60, deadline=None)
@given(sparse_paving(), st.data())
def test_rank_axioms(M, data):
    subsets = st.integers(0, full_mask(M.n))
    A, B = data.draw(subsets), data.draw(subsets)
    rA, rB = M.rank_mask(A), M.rank_mask(B)
    assert 0 <= rA <= popcount(A)
    assert M.rank_mask(A & B) <= rA <= M.rank_mask(A | B)
    assert rA + rB >= M.rank_mask(A | B) + M.rank_mask(A & B)
    cA = M.closure_mask(A)
    assert cA & A == A
    assert M.closure_mask(cA) == cA
    assert cA & M.closure_mask(A | B) == cA


@settings(max_examples=40, deadline=None)
@given(sparse_paving(max_n=8))
def test_paving_formula_matches_circuit_rank(M):
    rebuilt = from_circuits(M.n, M.circuits())
    assert all(M.rank_mask(S) == rebuilt.rank_mask(S) for S in range(1 << M.n))
    assert is_simple(M)


@settings(max_examples=40, deadline=None)
@given(sparse_paving(max_n=8))
def test_minors_stay_paving(M):
    for e in range(1, M.n + 1):
        assert M.delete(e).is_paving()
        assert M.contract(e).is_paving()
        # the paving shortcut agrees with the circuit-based minor
        generic = from_circuits(M.n, M.circuits())
        assert M.contract(e) == generic.contract(e)
        assert M.delete(e) == generic.delete(e)


@settings(max_examples=30, deadline=None)
@given(sparse_paving(max_n=8))
def test_dual_involution(M):
    D = M.dual()
    assert D.r == M.n - M.r
    assert D.dual().circuits() == M.circuits()
    assert M.is_sparse_paving() == D.is_paving()


def test_catalog_paving_minors():
    for entry in catalog.standard_entries():
        M = entry.matroid
        if not M.is_paving():
            continue
        for e in range(1, M.n + 1):
            assert M.delete(e).is_paving(), (entry.name, e)
            assert M.contract(e).is_paving(), (entry.name, e)
