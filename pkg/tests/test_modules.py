from __future__ import annotations

import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercoho.algebra import detecting_e, detecting_f, whole
from supercoho.errors import NonAbelianizableWeight, StructureError
from supercoho.linalg import Mat
from supercoho.modules import (Supermodule, adjoint_module, character_module, degree_zero, direct_sum,
                               double_dual_identification, dual, dual_kac_module, hom_module, identity_vector,
                               is_indecomposable, kac_module, natural_module, restrict, tensor, trivial_module)


def test_natural_gl11_odd_operator(gl11):
    V = natural_module(gl11)
    assert V.parity == (0, 1)
    m = V.action[gl11.index("E1,2")]
    assert m.entries == {(0, 1): 1}  # sends the odd vector v2 to the even vector v1


def test_natural_weights(gl22):
    V = natural_module(gl22)
    assert V.weights == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def test_parity_violation_rejected(gl11):
    bad = [Mat.zeros(2, 2) for _ in range(4)]
    bad[gl11.index("E1,2")] = Mat(2, 2, {(0, 0): 1})
    with pytest.raises(StructureError):
        Supermodule(gl11, natural_module(gl11).space, bad)


@pytest.mark.parametrize("name", ["gl11", "gl22", "w2"])
def test_double_dual(name, request):
    g = request.getfixturevalue(name)
    V = natural_module(g)
    assert double_dual_identification(V).same_action(V)
    A = adjoint_module(g)
    assert double_dual_identification(A).same_action(A)


def test_tensor_weights_add(gl22):
    V = natural_module(gl22)
    VV = tensor(V, dual(V))
    assert VV.dim == 16
    assert VV.space.sdim() == (8, 8)
    expect = Counter(tuple(a - b for a, b in zip(u, w)) for u in V.weights for w in V.weights)
    assert Counter(VV.weights) == expect


def test_direct_sum(gl11):
    V = natural_module(gl11)
    S = direct_sum(V, trivial_module(gl11))
    assert S.dim == 3


def test_character_rejects_nonabelianizable(gl22):
    with pytest.raises(NonAbelianizableWeight, match="non-abelianizable"):
        character_module(gl22, (1, 0, 0, 0))
    C = character_module(gl22, (1, 1, 0, 0))
    assert C.dim == 1


def test_kac_dimensions(gl11, gl22):
    assert kac_module(gl11, character_module(gl11, (0, 0))).dim == 2
    assert kac_module(gl22, character_module(gl22, (0, 0, 0, 0))).dim == 16
    assert dual_kac_module(gl22, character_module(gl22, (-1, -1, 1, 1))).dim == 16


def _odd_negative_weights(m, n):
    # weights of E_{m+j, i}: delta_j - eps_i
    out = []
    for i in range(m):
        for j in range(n):
            w = [0] * (m + n)
            w[i] -= 1
            w[m + j] += 1
            out.append(w)
    return out


@pytest.mark.parametrize("lam", [(0, 0, 0, 0), (1, 1, 0, 0), (2, 2, -1, -1)])
def test_kac_weight_bookkeeping(gl22, lam):
    """Weights of K(lam) are lam plus sums of distinct odd negative roots."""
    K = kac_module(gl22, character_module(gl22, lam))
    roots = _odd_negative_weights(2, 2)
    expect = Counter()
    for k in range(len(roots) + 1):
        for S in itertools.combinations(roots, k):
            expect[tuple(l + sum(r[c] for r in S) for c, l in enumerate(lam))] += 1
    assert Counter(tuple(w) for w in K.weights) == expect


def test_dual_kac_gl11_weights(gl11):
    K = dual_kac_module(gl11, character_module(gl11, (-1, 1)))
    assert sorted(K.weights) == sorted([(-1, 1), (-2, 2)])


def test_restrict_to_whole_is_identity(gl22):
    V = natural_module(gl22)
    R = restrict(V, whole(gl22))
    assert R.action == V.action


def test_restriction_commutes_with_tensor(gl22):
    f = detecting_f(gl22)
    V = natural_module(gl22)
    Vd = dual(V)
    a = restrict(tensor(V, Vd), f)
    b = tensor(restrict(V, f), restrict(Vd, f))
    assert a.action == b.action


@pytest.mark.parametrize("name", ["gl11", "gl22"])
def test_identity_is_invariant(name, request):
    V = natural_module(request.getfixturevalue(name))
    H = hom_module(V, V)
    idv = identity_vector(V)
    for m in H.action:
        assert m.apply(idv) == {}


def test_indecomposability(gl11, gl22):
    K = dual_kac_module(gl11, character_module(gl11, (-1, 1)))
    assert is_indecomposable(K)
    e, _ = detecting_e(gl11)
    assert is_indecomposable(restrict(K, e))
    V = natural_module(gl11)
    assert not is_indecomposable(direct_sum(V, V))
    assert is_indecomposable(kac_module(gl22, character_module(gl22, (0, 0, 0, 0))))


def test_degree_zero_gl22(gl22):
    g0 = degree_zero(gl22)
    assert g0.dim == 8 and not g0.odd_indices()


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=2, max_size=2))
def test_kac_modules_gl11_are_modules(w):
    from supercoho.serialize import parse_algebra
    g = parse_algebra("gl:1,1")
    K = kac_module(g, character_module(g, w))
    K.verify()
    D = dual_kac_module(g, character_module(g, w))
    D.verify()
    assert Counter(D.weights) == Counter([tuple(w), (w[0] - 1, w[1] + 1)])
