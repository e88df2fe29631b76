import pytest

from pavingtools import catalog, search
from pavingtools.bits import popcount, subsets_of_size, to_mask
from pavingtools.core import uniform
from pavingtools.errors import ExhaustiveTooLarge, NotPaving, ParameterOutOfRange, RankOutOfRange


def _count_stable(verts, r):
    """Independent sets of the Johnson graph via I(G) = I(G - v) + I(G - N[v])."""
    if not verts:
        return 1
    v, rest = verts[0], verts[1:]
    return _count_stable(rest, r) + _count_stable([u for u in rest if popcount(u & v) != r - 1], r)


@pytest.mark.parametrize("n,r", [(4, 3), (5, 3), (6, 3), (6, 4), (7, 3)])
def test_exhaustive_count(n, r):
    families = list(search.block_families(n, r, "exhaustive", budget=None))
    assert len(families) == _count_stable(list(subsets_of_size(n, r)), r)
    assert families[0] == ()
    assert len(set(families)) == len(families)


def test_ground_set_never_a_block():
    assert list(search.block_families(3, 3, "exhaustive", budget=None)) == [()]
    assert list(search.block_families(4, 4, "greedy")) == [()]


def test_exhaustive_budget_caps():
    assert len(list(search.block_families(6, 3, "exhaustive", budget=10))) == 10


def test_exhaustive_too_large():
    with pytest.raises(ExhaustiveTooLarge):
        list(search.block_families(9, 4, "exhaustive"))
    with pytest.raises(ParameterOutOfRange):
        list(search.block_families(17, 4))
    with pytest.raises(ParameterOutOfRange):
        list(search.block_families(8, 4, "sideways"))


def test_greedy_deterministic_and_maximal():
    a = list(search.block_families(8, 4, "greedy"))
    assert a == list(search.block_families(8, 4, "greedy"))
    (fam,) = a
    for S in subsets_of_size(8, 4):
        assert S in fam or any(popcount(S & B) == 3 for B in fam)


def test_random_seeded():
    a = list(search.block_families(8, 4, "random", seed=3, budget=5))
    assert a == list(search.block_families(8, 4, "random", seed=3, budget=5))
    assert a != list(search.block_families(8, 4, "random", seed=4, budget=5))
    for fam in a:
        assert all(popcount(x & y) <= 2 for i, x in enumerate(fam) for y in fam[i + 1:])


def test_generated_are_sparse_paving():
    for M in search.generate_sparse_paving(7, 3, "random", seed=1, budget=5):
        assert M.is_sparse_paving()


def test_ag32_family_has_no_independent_hyperplanes(ag32):
    rec = search.record_for(8, 4, ag32.rep.blocks)
    assert rec.independent_count == 0 and rec.hyperplane_total == 14
    assert rec.not_orientable


def test_problem2_scan(k4, ag32p):
    assert search.problem2_scan(k4) is None
    assert search.problem2_scan(uniform(7, 4)) == (1, 2)
    assert search.problem2_scan(uniform(6, 3)) == (1,)
    assert search.problem2_scan(ag32p) == (2, 4)
    with pytest.raises(NotPaving):
        search.problem2_scan(catalog.hansen())
    with pytest.raises(RankOutOfRange):
        search.problem2_scan(uniform(5, 2))


def test_problem1_scan_sorted():
    recs = search.problem1_scan(range(7, 9), seed=2, budget=6)
    assert [r.n for r in recs] == [7] * 6 + [8] * 6
    for n in (7, 8):
        counts = [r.independent_count for r in recs if r.n == n]
        assert counts == sorted(counts)
    with pytest.raises(ParameterOutOfRange):
        search.problem1_scan(range(7, 8), r=3)


def test_scan_workers_identical():
    assert search.scan(8, 4, "random", 5, 12, workers=1) == search.scan(8, 4, "random", 5, 12, workers=3)


def test_jsonl_roundtrip(tmp_path):
    recs = search.scan(7, 3, "random", 0, 4)
    params = {"n": 7, "rank": 3, "mode": "random", "seed": 0, "budget": 4}
    path = tmp_path / "out.jsonl"
    search.write_jsonl(path, params, recs)
    head, back = search.read_jsonl(path)
    assert head == {"schema": "pav-search-v1", "version": 1, "params": params}
    assert back == recs
    assert back[0].matroid() == recs[0].matroid()


def test_record_fields():
    rec = search.record_for(8, 4, [to_mask(b, 8) for b in [(1, 2, 3, 4)]])
    d = rec.to_dict()
    assert d["bound"] == "112/13"
    assert d["independent_count"] == 56 - 4
    assert d["blocks"] == [[1, 2, 3, 4]]
