import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relsplit import dims, exterior as ext
from relsplit.exterior import CoForm, MultiVec

import oracles


AXES = (0, 1, 2, 3)
N = 4

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def comps_strategy(k):
    return st.tuples(*(finite for _ in range(ext.n_comps(N, k))))


def form(k, comps, **meta):
    return CoForm(AXES, k, tuple(float(c) for c in comps), **meta)


def vec(k, comps, **meta):
    return MultiVec(AXES, k, tuple(float(c) for c in comps), **meta)


# ---------------------------------------------------------------------------
# wedge

@settings(max_examples=60)
@given(st.integers(0, 2), st.integers(0, 2), st.data())
def test_wedge_matches_antisymmetrization_oracle(ka, kb, data):
    A = data.draw(comps_strategy(ka))
    B = data.draw(comps_strategy(kb))
    a, b = form(ka, A), form(kb, B)
    got = ext.wedge(a, b)
    Ad = oracles.dense_from_comps(N, ka, A)
    Bd = oracles.dense_from_comps(N, kb, B)
    want = oracles.comps_from_dense(N, ka + kb,
                                    oracles.wedge_dense(N, ka, kb, Ad, Bd))
    assert np.allclose(got.comps, want, atol=1e-12)


@settings(max_examples=60)
@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_wedge_graded_commutative(ka, kb, data):
    a = form(ka, data.draw(comps_strategy(ka)))
    b = form(kb, data.draw(comps_strategy(kb)))
    ab, ba = ext.wedge(a, b), ext.wedge(b, a)
    if ab.zero:
        assert ba.zero or max(abs(c) for c in ba.comps) == 0
        return
    sign = (-1.0) ** (ka * kb)
    assert np.allclose(ab.comps, [sign * c for c in ba.comps], atol=1e-12)


def test_wedge_antisymmetry_of_coordinates():
    dx = form(1, (0, 1, 0, 0))
    dy = form(1, (0, 0, 1, 0))
    assert ext.wedge(dx, dy).comps == tuple(
        -c for c in ext.wedge(dy, dx).comps)


def test_wedge_beyond_top_degree_vanishes():
    a = form(3, tuple(range(1, 5)))
    b = form(2, tuple(range(1, 7)))
    assert ext.wedge(a, b).zero


def test_coalgebra_square_vanishes():
    a = form(1, (1.0, 2.0, 0.0, 0.0), wg=-1)
    b = form(1, (0.5, 0.0, 1.0, 0.0), wg=-1)
    assert ext.wedge(a, b).zero
    c = form(1, (1.0, 2.0, 0.0, 0.0), wg=1)
    d = form(1, (0.5, 0.0, 1.0, 0.0), wg=1)
    assert ext.wedge(c, d).zero


def test_pairing_and_tensor_rules():
    a = form(1, (1.0, 2.0, 0.0, 0.0), wg=1)
    b = form(1, (0.5, 0.0, 1.0, 0.0), wg=-1)
    assert ext.wedge(a, b).wg == 0
    t = form(0, (2.0,), wg="T")
    assert ext.wedge(t, b).wg == -1
    assert ext.wedge(t, a).wg == 1
    assert ext.wedge(t, t).wg == "T"


def test_twist_flags_xor():
    a = form(1, (1, 0, 0, 0), twist_x=True)
    b = form(1, (0, 1, 0, 0), twist_x=True, twist_g=True)
    w = ext.wedge(a, b)
    assert w.twist_x is False and w.twist_g is True


def test_dims_multiply_and_add_requires_equal():
    a = form(1, (1, 0, 0, 0), dim=dims.UT)
    b = form(1, (0, 1, 0, 0), dim=dims.IT)
    assert ext.wedge(a, b).dim == dims.UT * dims.IT
    with pytest.raises(dims.DimensionError):
        ext.add(a, b)


# ---------------------------------------------------------------------------
# contraction

@settings(max_examples=60)
@given(st.integers(1, 2), st.integers(2, 4), st.data())
def test_contract_matches_bruteforce_oracle(kv, kg, data):
    if kv > kg:
        kv, kg = kg, kv
    V = data.draw(comps_strategy(kv))
    G = data.draw(comps_strategy(kg))
    got = ext.contract(vec(kv, V), form(kg, G))
    Vd = oracles.dense_from_comps(N, kv, V)
    Gd = oracles.dense_from_comps(N, kg, G)
    want = oracles.comps_from_dense(
        N, kg - kv, oracles.contract_dense(N, kv, kg, Vd, Gd))
    assert np.allclose(got.comps, want, atol=1e-12)


@settings(max_examples=40)
@given(st.data())
def test_iterated_contraction_law(data):
    va = vec(1, data.draw(comps_strategy(1)))
    vb = vec(1, data.draw(comps_strategy(1)))
    g = form(3, data.draw(comps_strategy(3)))
    lhs = ext.contract(ext.wedge(va, vb), g)
    rhs = ext.contract(vb, ext.contract(va, g))
    assert np.allclose(lhs.comps, rhs.comps, atol=1e-12)


def test_basic_contraction():
    dx = form(1, (0, 1, 0, 0))
    ex = vec(1, (0, 1, 0, 0))
    assert ext.contract(ex, dx).comps == (1.0,)


@settings(max_examples=40)
@given(st.data())
def test_contraction_leibniz_degree_one(data):
    v = vec(1, data.draw(comps_strategy(1)))
    g = form(1, data.draw(comps_strategy(1)))
    h = form(2, data.draw(comps_strategy(2)))
    lhs = ext.contract(v, ext.wedge(g, h))
    rhs = ext.add(ext.wedge(ext.contract(v, g), h),
                  ext.scale(ext.wedge(g, ext.contract(v, h)), -1.0))
    assert np.allclose(lhs.comps, rhs.comps, atol=1e-12)


def test_contract_degree_error():
    v = vec(2, tuple(range(1, 7)))
    g = form(1, (1, 0, 0, 0))
    with pytest.raises(ValueError):
        ext.contract(v, g)


# ---------------------------------------------------------------------------
# sign operator and rebase

def test_sign_operator():
    c = form(0, (3.0,))
    assert ext.sign_n(c).comps == (3.0,)
    dx = form(1, (0, 1, 0, 0))
    assert ext.sign_n(dx).comps == (0.0, -1.0, 0.0, 0.0)


@settings(max_examples=40)
@given(st.integers(0, 4), st.data())
def test_sign_involution(k, data):
    x = form(k, data.draw(comps_strategy(k)))
    assert ext.sign_n(ext.sign_n(x)).comps == x.comps


def test_rebase_weights():
    x0 = form(1, (1.0, 2.0, 0, 0))
    assert ext.rebase_lie(x0, 2.0).comps == x0.comps
    xg = form(0, (6.0,), wg=1)
    assert ext.rebase_lie(xg, 2.0).comps == (3.0,)
    xc = form(0, (6.0,), wg=-1)
    assert ext.rebase_lie(xc, 2.0).comps == (12.0,)
    xt = form(0, (6.0,), wg="T")
    assert ext.rebase_lie(xt, 2.0).comps == (6.0,)
    assert ext.rebase_lie(x0, -1.0).twist_g is True
    with pytest.raises(ValueError):
        ext.rebase_lie(x0, 0.0)


@settings(max_examples=40)
@given(st.data(), st.floats(0.1, 5.0))
def test_rebase_pairing_invariance(data, lam):
    g = form(1, data.draw(comps_strategy(1)), wg=-1)
    v = vec(1, data.draw(comps_strategy(1)), wg=1)
    before = ext.pairing(g, v)
    after = ext.pairing(ext.rebase_lie(g, lam), ext.rebase_lie(v, lam))
    assert abs(before - after) <= 1e-13 * (1.0 + abs(before))


# ---------------------------------------------------------------------------
# determinant/inverse helpers

@settings(max_examples=30)
@given(st.integers(1, 4), st.data())
def test_det_inv_against_numpy(n, data):
    m = [[data.draw(finite) for _ in range(n)] for _ in range(n)]
    arr = np.array(m)
    if abs(np.linalg.det(arr)) < 1e-3:
        return
    assert abs(ext.det(m) - np.linalg.det(arr)) <= 1e-9 * (
        1 + abs(np.linalg.det(arr)))
    got = np.array(ext.inv(m))
    assert np.allclose(got, np.linalg.inv(arr), atol=1e-8)
