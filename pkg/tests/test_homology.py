import pytest
from hypothesis import given, settings, strategies as st

from floerbox import golden
from floerbox.cfk import alexander_polynomial, build_thin_model
from floerbox.homology import (HomologyError, homology, homology_rank_by_matrix, symmetrize)
from floerbox.pipeline import pattern_alexander, satellite_complex, satellite_hfk, satellite_homology
from floerbox.tensor import BigradedComplex, CGen

from conftest import COMPANIONS, EXTRA

ALL = {**COMPANIONS, **EXTRA}


def test_zero_differential_unchanged():
    C = BigradedComplex((CGen("a", 0, 0), CGen("b", 1, 0)))
    assert homology(C).generators == C.generators


def test_single_arrow_cancels():
    C = BigradedComplex((CGen("a", 1, 0), CGen("b", 0, 0)), (("a", "b"),))
    assert homology(C).generators == ()


def test_d_squared_detected():
    C = BigradedComplex((CGen("a", 2, 0), CGen("b", 1, 0), CGen("c", 0, 0)), (("a", "b"), ("b", "c")))
    with pytest.raises(HomologyError):
        homology(C)


def test_rht_minus_two_survivors():
    got = sorted((g.name, g.A_rel) for g in satellite_homology(build_thin_model(1), -2).generators)
    assert got == golden.rht_survivors(-2)
    assert ("x3⊠mu2", -3) in got and ("y5⊠mu4", 3) in got


def test_rht_one_shift():
    t = satellite_hfk(build_thin_model(1), 1)
    assert t.shift_applied == -3
    assert min(t.alexander_ranks()) == -3 and max(t.alexander_ranks()) == 3


def test_rht_zero_extremes():
    t = satellite_hfk(build_thin_model(1), 0)
    top, bottom = max(t.alexander_ranks()), min(t.alexander_ranks())
    assert {e.name for e in t.entries if e.A == bottom} == {"x0⊠eta1", "x1⊠mu2"}
    assert {e.name for e in t.entries if e.A == top} == {"y6⊠kappa1^eta1", "y6⊠mu2"}


def test_unknot_zero():
    t = satellite_hfk(build_thin_model(0), 0)
    assert t.rows() == [(0, t.entries[0].delta_rel, 1)] and t.total_rank == 1


def test_symmetrize_errors():
    with pytest.raises(HomologyError):
        symmetrize(BigradedComplex((CGen("a", 0, 0), CGen("b", 0, 1))))
    with pytest.raises(HomologyError):
        symmetrize(BigradedComplex((CGen("a", 0, 0), CGen("b", 0, 2), CGen("c", 0, 2))))
    with pytest.raises(HomologyError):
        symmetrize(BigradedComplex(()))


@pytest.mark.parametrize("name", sorted(ALL))
def test_table_properties(name):
    m = ALL[name]
    dk = alexander_polynomial(m).normalized()
    for n in range(-8, 9):
        if m.is_unknot and n == 0:
            continue
        C = satellite_complex(m, n)
        t = satellite_hfk(m, n)
        ranks = t.alexander_ranks()
        assert all(ranks[a] == ranks.get(-a) for a in ranks)
        assert t.total_rank % 2 == 1
        assert homology_rank_by_matrix(C) == t.total_rank == homology_rank_by_matrix(C, reverse=True)
        assert t.euler_characteristic().normalized() == (pattern_alexander(n) * dk).normalized()


def test_square_summand_deltas():
    for a in (0, 1, 3):
        m = build_thin_model(1, {a: 1, -a: 1} if a else {0: 1})
        idx = next(g.name.split("#")[1] for g in m.generators if g.name.startswith("s1#") and g.A == a)
        for n in range(-5, 6):
            got = sorted((g.name, g.delta_rel) for g in satellite_homology(m, n).generators
                         if g.name.endswith(f"#{idx}"))
            assert got == golden.square_survivors(int(idx), 1, n, a)


@settings(max_examples=40, deadline=None)
@given(st.integers(-2, 2), st.integers(0, 2), st.integers(0, 1), st.integers(-9, 9))
def test_rank_independent_of_pivot_order(tau, q, p, n):
    sq = {0: q} if q else {}
    if p:
        sq.update({2: p, -2: p})
    C = satellite_complex(build_thin_model(tau, sq), n)
    assert homology(C).rank == homology_rank_by_matrix(C) == homology_rank_by_matrix(C, reverse=True)
