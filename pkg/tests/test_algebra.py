from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercoho.algebra import (build_gl, build_W, detecting_e, detecting_f, detecting_f_W, detecting_fbar,
                               even_part, make_subalgebra, normalizer_group_W, signed_permutation_group)
from supercoho.errors import NotClosedError, StructureError, UnsupportedShapeError


def vec(g, **coeffs):
    return {g.index(k.replace("_", ",").replace("E", "E")): v for k, v in coeffs.items()}


def test_gl11_shape(gl11):
    assert gl11.dim == 4
    assert gl11.space.sdim() == (2, 2)
    assert gl11.zdegree == (0, 1, -1, 0)


def test_gl11_odd_bracket(gl11):
    e12, e21 = gl11.index("E1,2"), gl11.index("E2,1")
    assert gl11.bracket(e12, e21) == {gl11.index("E1,1"): 1, gl11.index("E2,2"): 1}
    assert gl11.bracket(e21, e12) == gl11.bracket(e12, e21)


def test_gl_against_matrix_supercommutator(gl22):
    """Brackets agree with [X, Y] = XY - (-1)^{|X||Y|} YX on explicit 4x4 matrix units."""
    N = 4

    def unit(i, j):
        return {(i, j): 1}

    def mul(a, b):
        out = {}
        for (i, k), x in a.items():
            for (k2, j), y in b.items():
                if k == k2:
                    out[(i, j)] = out.get((i, j), 0) + x * y
        return out

    labels = gl22.labels
    for a, b in itertools.product(range(gl22.dim), repeat=2):
        i, j = (int(t) - 1 for t in labels[a][1:].split(","))
        k, l = (int(t) - 1 for t in labels[b][1:].split(","))
        s = -1 if gl22.parity[a] and gl22.parity[b] else 1
        xy, yx = mul(unit(i, j), unit(k, l)), mul(unit(k, l), unit(i, j))
        expect = dict(xy)
        for key, v in yx.items():
            expect[key] = expect.get(key, 0) - s * v
        expect = {gl22.index(f"E{p + 1},{q + 1}"): v for (p, q), v in expect.items() if v}
        assert gl22.bracket(a, b) == expect


@pytest.mark.parametrize("name", ["gl11", "gl22", "w2"])
def test_structure_checks(name, request):
    g = request.getfixturevalue(name)
    g.verify()


def test_s2_structure(s2):
    assert s2.dim == 5
    s2.algebra.verify()
    s2.check_closed()


def test_witt_examples(w2):
    b = w2.bracket(w2.index("x1d2"), w2.index("x2d1"))
    assert b == {w2.index("x1d1"): 1, w2.index("x2d2"): -1}
    assert w2.bracket(w2.index("d1"), w2.index("x1x2d2")) == {w2.index("x2d2"): 1}
    assert w2.space.sdim() == (4, 4)


def test_w3_dimension_and_grading():
    w = build_W(3)
    assert w.dim == 3 * 8
    assert sorted(set(w.zdegree)) == [-1, 0, 1, 2]
    assert not w.is_type_one()


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 23), st.integers(0, 23), st.integers(0, 23))
def test_w3_jacobi_random_triples(i, j, k):
    w = _W3
    assert w.jacobi_defect(i, j, k) == {}


_W3 = build_W(3)


def test_detecting_f_gl22(gl22):
    f = detecting_f(gl22)
    assert f.algebra.space.sdim() == (2, 4)
    assert f.algebra.labels[:2] == ("E1,1+E3,3", "E2,2+E4,4")
    f.check_closed()
    f.algebra.verify()


def test_detecting_f_gl11_even_part_is_one_dimensional(gl11):
    f = detecting_f(gl11)
    assert f.algebra.space.sdim() == (1, 2)


def test_fbar_matches_f(gl22):
    assert detecting_fbar(gl22).inclusion == detecting_f(gl22).inclusion


def test_detecting_e(gl22):
    e, W = detecting_e(gl22)
    assert e.algebra.space.sdim() == (2, 2)
    assert W.order == 8
    e.algebra.verify()


def test_unsupported_shape():
    with pytest.raises(UnsupportedShapeError, match="unsupported shape"):
        detecting_f(build_gl(2, 1))


def test_signed_permutation_orders():
    assert signed_permutation_group(1).order == 2
    assert signed_permutation_group(3).order == 48
    assert len(signed_permutation_group(3).elements()) == 48


def test_witt_detecting_subalgebra():
    w = build_W(3)
    f = detecting_f_W(w)
    assert f.algebra.space.sdim() == (3, 3)
    f.algebra.verify()
    assert normalizer_group_W(3).order == 2


def test_not_closed(gl11):
    with pytest.raises(NotClosedError):
        make_subalgebra(gl11, [{gl11.index("E1,2"): 1}, {gl11.index("E2,1"): 1}])


def test_even_part(gl22):
    assert even_part(gl22).dim == 8


def test_jacobi_violation_detected():
    from supercoho.algebra import LieSuperalgebra, SuperSpace
    sp = SuperSpace(("a", "b", "c"), (0, 0, 0))
    # [a,b] = a, [b,c] = b, [a,c] = 0 violates Jacobi
    g = LieSuperalgebra(sp, {(0, 1): {0: 1}, (1, 2): {1: 1}})
    with pytest.raises(StructureError):
        g.check_jacobi()
