import math

import pytest

from adlv import compare as CP
from adlv import semimodule as S
from adlv import weyl as W


# ---------------------------------------------------------------------------
# list predicates
# ---------------------------------------------------------------------------

def test_condition_iii_rows():
    assert CP.condition_iii((1, 0, 0, 0), 4)            # omega_1 always
    assert CP.condition_iii((1, 1, 0, 0, 0), 5)         # omega_2, odd n
    assert CP.condition_iii((1, 1, 0, 0, 0, 0, 0, 0, 0), 9)
    assert not CP.condition_iii((1, 1, 0, 0, 0, 0), 6)  # omega_2, even n
    assert CP.condition_iii((1, 1, 1, 0, 0, 0, 0), 7)
    assert CP.condition_iii((1, 1, 1, 0, 0, 0, 0, 0), 8)
    assert not CP.condition_iii((1, 1, 1, 0, 0, 0, 0, 0, 0), 9)
    assert CP.condition_iii((3, 0, 0, 0), 4)
    assert CP.condition_iii((3, 0, 0, 0, 0), 5)
    assert not CP.condition_iii((3, 0, 0, 0, 0, 0, 0), 7)
    assert CP.condition_iii((2, 1, 0, 0, 0), 5)         # omega_1+omega_2 at 5
    assert not CP.condition_iii((2, 1, 0, 0, 0, 0, 0), 7)
    assert CP.condition_iii((2, 1, 1, 1, 0, 0), 6)      # omega_1+omega_(n-2)
    assert CP.condition_iii((2, 2, 1, 1, 1, 0), 6)      # omega_2+omega_(n-1)
    assert CP.condition_iii((4, 0, 0), 3)
    assert CP.condition_iii((4, 1, 0), 3)               # 3 omega_1 + omega_2
    for m in (1, 3, 5, 9):
        assert CP.condition_iii((m, 0), 2)
    assert not CP.condition_iii((2, 0), 2)


def test_thm12_rows():
    assert CP.thm12_member((1, 1, 0, 0, 0), 5)          # (i)
    assert not CP.thm12_member((1, 1, 0, 0), 4)         # gcd(2,4) fails (i)
    assert CP.thm12_member((2, 1, 1, 0, 0), 5)          # (ii), i+1 = 4
    assert not CP.thm12_member((2, 1, 1, 1, 0), 5)      # (ii), i+1 = 5 fails
    assert CP.thm12_member((2, 2, 1, 0), 4)             # (ii) dual form
    assert CP.thm12_member((5, 0, 0), 3)                # (iii)
    assert CP.thm12_member((7, 0, 0, 0, 0), 5)
    assert CP.thm12_member((4, 1, 0), 3)                # (iv): 3 omega_1 + omega_2
    assert not CP.thm12_member((3, 3, 1, 0), 4)
    assert not CP.thm12_member((2, 2, 0, 0, 0), 5)      # 2 omega_2


# ---------------------------------------------------------------------------
# computed verdicts
# ---------------------------------------------------------------------------

def test_all_top_cyclic_examples():
    assert CP.all_top_cyclic((2, 1, 0, 0, 0), 5)
    assert CP.all_top_cyclic((2, 1, 0, 0, 0, 0, 0), 7)   # despite lower non-cyclic
    assert CP.all_top_cyclic((2, 2, 1, 0), 4)
    assert not CP.all_top_cyclic((3, 3, 1, 0), 4)
    assert not CP.all_top_cyclic((2, 2, 0, 0, 0), 5)
    assert CP.all_top_cyclic((1, 1, 0, 0, 0), 5)


def test_condition_ii_examples():
    assert CP.condition_ii((2, 1, 1, 1, 0, 0), 6)        # omega_1+omega_(n-2)
    assert CP.condition_ii((1, 1, 0, 0, 0), 5)
    assert CP.condition_ii((2, 1, 0, 0, 0), 5)
    assert not CP.condition_ii((2, 2, 1, 0, 0, 0), 6)    # omega_2+omega_3 at 6
    assert not CP.condition_ii((2, 2, 0, 0, 0), 5)       # 2 omega_2 at 5
    assert not CP.condition_ii((2, 1, 0, 0, 0, 0, 0), 7)


def test_condition_ii_false_rank9():
    assert not CP.condition_ii(W.omega(9, 4), 9)


def test_mus_below():
    assert CP.mus_below((1, 1, 0, 0, 0)) == ((1, 1, 0, 0, 0),)
    assert set(CP.mus_below((2, 1, 0, 0, 0))) == {(2, 1, 0, 0, 0), (1, 1, 1, 0, 0)}
    assert set(CP.mus_below((2, 2, 1, 0))) == {(2, 2, 1, 0), (2, 1, 1, 1)}
    for mu_p in CP.mus_below((3, 2, 1, 0, 0)):
        assert W.is_dominant(mu_p)
        assert W.dominance_leq(mu_p, (3, 2, 1, 0, 0))


def test_point_count_identity():
    assert CP.point_count_identity((1, 1, 0, 0, 0), 5)
    assert CP.point_count_identity((1, 1, 1, 0, 0, 0, 0), 7)
    assert CP.point_count_identity((2, 1, 0, 0, 0), 5)
    assert CP.point_count_identity((2, 1, 0, 0), 4)      # omega_1+omega_(n-2)


def test_full_report_refinement_case():
    rep = CP.full_report((1, 1, 0, 0, 0), 5)
    assert rep.cond_ii and rep.cond_iii and rep.thm12_member
    assert rep.all_top_cyclic and rep.point_count_identity
    assert rep.refinement_inferred
    # dims of the cyclic rows match the strata dims
    dims = sorted(r.dim for r in rep.eo_rows if r.dim is not None)
    assert dims == sorted(r.dim for r in rep.sm_rows)
    nonempty = [r for r in rep.eo_rows if r.nonempty]
    assert all(r.coxeter_witness is not None for r in nonempty)
    assert all(r.cycle_type == (5,) for r in nonempty)


def test_eo_dims_match_strata_dims_hook_family():
    # the cyclic minimal-coset elements come in lengths 2j with exactly j of
    # each, matching the strata dimension multiset
    from collections import Counter

    from adlv import admissible as A
    from adlv import reduction as R
    from adlv import weyl as W2

    mu = (2, 1, 1, 1, 0, 0)
    n, m = 6, 5
    cyc = A.s_adm_cyc(mu)
    lengths = Counter(W2.length(w) for w in cyc)
    assert lengths == Counter({0: 1, **{2 * j: j for j in range(1, n - 1)}})
    tree_dims = Counter(R.class_polynomial(w, m).dim_from_tree for w in cyc)
    strata_dims = Counter(e.dim for mu_p in CP.mus_below(mu)
                          for e in S.enumerate_extended(mu_p))
    assert tree_dims == strata_dims


def test_full_report_non_superbasic_is_well_formed():
    # omega_3 at n = 9 is basic but not superbasic: the list and witness
    # verdicts still evaluate (both false), the semi-module side is omitted
    rep = CP.full_report(W.omega(9, 3), 9, with_dims=False)
    assert rep.cond_iii is False
    assert rep.cond_ii is False
    assert rep.all_top_cyclic is None
    assert rep.point_count_identity is None
    assert rep.sm_rows == ()
    assert rep.eo_rows


def test_full_report_negative_case():
    rep = CP.full_report((2, 2, 0, 0, 0), 5)
    assert rep.cond_ii is False and rep.cond_iii is False
    assert rep.point_count_identity is None
    assert rep.all_top_cyclic is False and rep.thm12_member is False


def test_dominant_shapes_guard():
    shapes = list(CP.dominant_shapes(4, 3))
    assert all(W.is_dominant(mu) and mu[-1] == 0 and
               math.gcd(sum(mu), 4) == 1 for mu in shapes)
    with pytest.raises(ValueError):
        list(CP.dominant_shapes(10, 3))
    with pytest.raises(ValueError):
        list(CP.dominant_shapes(4, 9))


def test_verdicts_dual_invariant():
    for mu in [(1, 1, 0, 0, 0), (2, 1, 0, 0, 0), (2, 2, 0, 0, 0), (3, 1, 0)]:
        n = len(mu)
        mu_star, _ = S.dualize(mu, (0,) * n)
        assert CP.condition_iii(mu, n) == CP.condition_iii(mu_star, n)
        assert CP.thm12_member(mu, n) == CP.thm12_member(mu_star, n)
        assert CP.all_top_cyclic(mu, n) == CP.all_top_cyclic(mu_star, n)
        assert CP.condition_ii(mu, n) == CP.condition_ii(mu_star, n)


def test_small_equivalence_sweep():
    rows = CP.sweep_equivalence(4, 3)
    assert rows and all(cii == ciii for _, _, cii, ciii in rows)


def test_small_cyclicity_sweep():
    rows = CP.sweep_cyclicity(4, 4)
    assert rows and all(atc == t12 for _, _, atc, t12 in rows)
