from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercoho.algebra import SuperSpace, detecting_e, detecting_fbar
from supercoho.errors import UndeterminedProjectivity
from supercoho.linalg import Mat
from supercoho.modules import (Supermodule, adjoint_module, character_module, dual, dual_kac_module, kac_module,
                               natural_module, tensor, trivial_module)
from supercoho.varieties import (CLIFFORD, KOSZUL, MIXED, ZERO_POINT, OddPoint, atypicality,
                                 atypicality_bruteforce, elementary_symmetric, is_projective_over,
                                 point_vector, probe_points, projectivity_in_category, rank_variety_probe,
                                 rho_vector, simple_module_gl11, support_variety, tensor_property_check)


def test_zero_point(gl11):
    e, _ = detecting_e(gl11)
    rep = is_projective_over(trivial_module(gl11), OddPoint((0,)), e)
    assert rep.method == ZERO_POINT and rep.member


def test_trivial_module_on_e_axis(gl11):
    e, _ = detecting_e(gl11)
    rep = is_projective_over(trivial_module(gl11), OddPoint((1,)), e)
    assert rep.method == KOSZUL
    assert rep.member


def test_kac_projective_over_e(gl11):
    e, _ = detecting_e(gl11)
    K = kac_module(gl11, character_module(gl11, (1, 0)))
    assert not is_projective_over(K, OddPoint((1,)), e).member


def test_clifford_case(gl11):
    e, _ = detecting_e(gl11)
    # [x, x] acts invertibly on a typical Kac module
    K = kac_module(gl11, character_module(gl11, (2, 1)))
    rep = is_projective_over(K, OddPoint((1,)), e)
    assert rep.method == CLIFFORD and rep.projective


def test_koszul_case(gl22):
    # g_1 is abelian, so points there have [x, x] = 0
    from supercoho.algebra import graded_part
    g1 = graded_part(gl22, [1])
    V = natural_module(gl22)
    x = OddPoint((1, 0, 0, 0))
    rep = is_projective_over(V, x, g1)
    assert rep.method == KOSZUL
    assert rep.member  # 4-dimensional V is not free over a 2-dim exterior algebra with rank 1


def test_rank_condition_scaling(gl22):
    e, _ = detecting_e(gl22)
    pts = probe_points("axes+grid+random:3:6", 2)
    M = tensor(natural_module(gl22), dual(natural_module(gl22)))
    probe = rank_variety_probe(M, e, pts)
    assert len(probe.membership) == len(pts)
    for x, m in zip(pts, probe.membership):
        for c in (2, -1, 5):
            assert is_projective_over(M, x.scaled(c), e).member == m


def test_self_bracket_identity(gl22):
    """rho(x)^2 = rho([x,x])/2 on every probed point."""
    fb = detecting_fbar(gl22)
    A = adjoint_module(gl22)
    for x in probe_points("random:5:10", len(fb.odd_indices())):
        v = point_vector(fb, x)
        D = A.rho(v)
        E = A.rho(gl22.bracket_vectors(v, v))
        assert D @ D == E.scale(Fraction(1, 2))


def test_orbit_constancy(gl22):
    e, W = detecting_e(gl22)
    M = dual_kac_module(gl22, character_module(gl22, (-1, -1, 1, 1)))
    for x in probe_points("grid", 2):
        m = is_projective_over(M, x, e).member
        for G in W.elements():
            y = OddPoint(tuple(G.apply(list(x.coords))))
            assert is_projective_over(M, y, e).member == m


def _fake_module(gl11):
    """3-dim 'module' (axioms not checked) where [x,x] acts nonzero-nilpotently on its 0-block."""
    D = Mat(3, 3, {(1, 0): 1, (2, 1): 1})
    action = [Mat.zeros(3, 3) for _ in range(gl11.dim)]
    action[gl11.index("E1,2")] = D
    action[gl11.index("E1,1")] = D @ D
    space = SuperSpace(("a", "b", "c"), (0, 1, 0))
    return Supermodule(gl11, space, action, weights=[(0, 0)] * 3, check=False, name="fake")


def test_undetermined_projectivity(gl11):
    # x = E12 + E21 spans the odd part of e; [x, x] = 2(E11 + E22) acts as 2 D^2
    e, _ = detecting_e(gl11)
    with pytest.raises(UndeterminedProjectivity, match="undetermined projectivity"):
        is_projective_over(_fake_module(gl11), OddPoint((1,)), e)


def test_support_of_dual_kac_is_origin(gl11):
    for k in range(-2, 3):
        sv = support_variety(dual_kac_module(gl11, character_module(gl11, (k, -k))))
        assert sv.is_origin()


def test_support_of_trivial_gl22(gl22):
    sv = support_variety(trivial_module(gl22))
    assert sv.is_everything()
    assert sv.axes_profile == [True, True]
    assert sv.to_json()["ambientDim"] == 2


def test_support_of_simple_follows_atypicality(gl11):
    assert support_variety(simple_module_gl11(gl11, (1, -1))).is_everything()
    assert support_variety(simple_module_gl11(gl11, (2, 0))).is_origin()


def test_tensor_property(gl22):
    fb = detecting_fbar(gl22)
    pts = probe_points("random:11:8", len(fb.odd_indices()))
    V = natural_module(gl22)
    res = tensor_property_check(V, dual(V), fb, pts)
    assert res.ok and res.checked == 8


def test_projectivity_in_category(gl11):
    assert not projectivity_in_category(trivial_module(gl11))
    assert not projectivity_in_category(dual_kac_module(gl11, character_module(gl11, (1, -1))))
    assert projectivity_in_category(kac_module(gl11, character_module(gl11, (2, 0))))


def test_atypicality_examples():
    assert atypicality((0, 0), 1, 1).atypicality == 1
    assert atypicality((1, 0), 1, 1).atypicality == 0
    assert atypicality((0, 0, 0, 0), 2, 2).atypicality == 2
    assert atypicality((0, 0, 0), 2, 1).atypicality == 1
    assert atypicality((0, 0, 0), 1, 2).atypicality == 1
    assert rho_vector(1, 1) == (Fraction(-1, 2), Fraction(1, 2))


def test_elementary_symmetric():
    assert elementary_symmetric([1, 2, 3]) == [6, 11, 6]


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_atypicality_matches_exhaustive_search(m, n, data):
    w = data.draw(st.lists(st.integers(-3, 3), min_size=m + n, max_size=m + n))
    a = atypicality(w, m, n).atypicality
    assert a == atypicality_bruteforce(w, m, n)
    assert 0 <= a <= min(m, n)


def test_point_length_checked(gl11):
    e, _ = detecting_e(gl11)
    with pytest.raises(ValueError):
        point_vector(e, OddPoint((1, 2)))


def test_bad_point_spec():
    with pytest.raises(ValueError):
        probe_points("diagonal", 2)


def test_mixed_split_case(gl22):
    e, _ = detecting_e(gl22)
    x = OddPoint((1, 0))
    rep = is_projective_over(natural_module(gl22), x, e)
    assert rep.method == MIXED and rep.member
    rep = is_projective_over(kac_module(gl22, character_module(gl22, (0, 0, 0, 0))), x, e)
    assert rep.method == MIXED and not rep.member
