import math

import numpy as np
import pytest

from relsplit import dims, exterior as ext, fields as fl
from relsplit.dual import real, sin
from relsplit.exterior import CoForm, MultiVec
from relsplit.fields import Chart, Field
from relsplit.sampling import Box, random_field, sobol_points

import oracles

CHART = Chart(("t", "x", "y", "z"))
AXES4 = (0, 1, 2, 3)
BASE = (1, 2, 3)
PTS = sobol_points(Box((0.0, -1, -1, -1), (1.0, 1, 1, 1)), 25, 99)


def maxres(f, pts=PTS):
    return max(f.at(p).max_abs() for p in pts)


def maxdiff(a, b, pts=PTS):
    out = 0.0
    for p in pts:
        va, vb = a.at(p), b.at(p)
        if va.zero and vb.zero:
            continue
        if va.zero or vb.zero:
            out = max(out, (vb if va.zero else va).max_abs())
            continue
        out = max(out, max(abs(real(x) - real(y))
                           for x, y in zip(va.comps, vb.comps)))
    return out


def test_d_simple():
    # d(x dy) = dx ^ dy
    f = Field.from_comps(CHART, BASE, 1, {(1,): lambda p: p[1]})
    df = fl.exterior_d(f)
    v = df.at([0.0, 0.3, 0.4, 0.5])
    assert v.comp(0, 1) == 1.0
    assert v.comp(0, 2) == 0.0 and v.comp(1, 2) == 0.0


def test_d_squared_zero(rng):
    for k in (0, 1, 2):
        f = random_field(rng, CHART, AXES4, k)
        dd = fl.exterior_d(fl.exterior_d(f))
        scale = 1.0 + maxres(f)
        assert maxres(dd) < 1e-12 * scale


def test_d_against_finite_differences(rng):
    f = random_field(rng, CHART, AXES4, 2)
    df = fl.exterior_d(f)
    for p in PTS[:5]:
        want = oracles.exterior_d_fd(f, p)
        got = df.at(p).comps
        assert np.allclose(got, want, atol=1e-6)


def test_d_top_degree_raises(rng):
    f = random_field(rng, CHART, AXES4, 4)
    with pytest.raises(ValueError):
        fl.exterior_d(f)


def test_group_derivative():
    # dG(t^2 a0) = 2t a0 (x) eps
    a0 = Field.from_comps(CHART, BASE, 1,
                          {(0,): lambda p: p[0] * p[0] * 3.0})
    da = fl.group_d(a0, 0)
    assert da.wg == -1
    v = da.at([0.5, 0.1, 0.2, 0.3])
    assert abs(v.comps[0] - 3.0) < 1e-15

    cov = Field.from_comps(CHART, BASE, 1, {(0,): lambda p: p[0]}, wg=-1)
    assert fl.group_d(cov, 0).zero
    alg = Field.from_comps(CHART, BASE, 1, {(0,): lambda p: p[0]}, wg=1)
    assert fl.group_d(alg, 0).wg == "T"
    assert fl.group_d(fl.group_d(alg, 0), 0).zero


def test_group_d_squared(rng):
    f = random_field(rng, CHART, BASE, 1)
    assert fl.group_d(fl.group_d(f, 0), 0).zero


def test_lie_derivative_simple():
    # L_{d/dx} (x dy) = dy
    f = Field.from_comps(CHART, BASE, 1, {(1,): lambda p: p[1]})
    v = Field.from_comps(CHART, BASE, 1, {(0,): 1.0}, kind=MultiVec)
    lf = fl.lie_derivative(v, f)
    val = lf.at([0.0, 0.3, 0.4, 0.5])
    assert val.comps == (0.0, 1.0, 0.0)


def test_lie_naturality(rng):
    v = random_field(rng, CHART, AXES4, 1, kind=MultiVec)
    f = random_field(rng, CHART, AXES4, 2)
    lhs = fl.lie_derivative(v, fl.exterior_d(f))
    rhs = fl.exterior_d(fl.lie_derivative(v, f))
    assert maxdiff(lhs, rhs) < 1e-11 * (1.0 + maxres(rhs))


def test_lie_equals_component_route(rng):
    # Cartan formula vs direct component differentiation for a 1-form:
    # (L_v g)_m = v^k d_k g_m + g_k d_m v^k
    v = random_field(rng, CHART, AXES4, 1, kind=MultiVec)
    f = random_field(rng, CHART, AXES4, 1)
    lf = fl.lie_derivative(v, f)
    for p in PTS[:4]:
        want = []
        for m in range(4):
            acc = 0.0
            for k in range(4):
                acc += real(v.comps_fn(p)[k]) * oracles.fd_partial(
                    lambda q, m=m: real(f.comps_fn(q)[m]), p, k)
                acc += real(f.comps_fn(p)[k]) * oracles.fd_partial(
                    lambda q, k=k: real(v.comps_fn(q)[k]), p, m)
            want.append(acc)
        got = [real(c) for c in lf.at(p).comps]
        assert np.allclose(got, want, atol=1e-6)


def test_integrate_constant_and_polynomial():
    one = Field.scalar(CHART, 1.0, axes=BASE, wg=-1)
    v = fl.integrate_g(one, (0.0, 1.0), [0.0, 0.1, 0.2, 0.3])
    assert abs(v.comps[0] - 1.0) < 1e-14

    lin = Field.scalar(CHART, lambda p: 2.0 * p[0], axes=BASE, wg=-1)
    v = fl.integrate_g(lin, (0.0, 1.0), [0.0, 0.1, 0.2, 0.3])
    assert abs(v.comps[0] - 1.0) < 1e-12


def test_integrate_fundamental_theorem():
    f0 = Field.scalar(CHART, lambda p: p[0] ** 3 + sin(p[0]) * p[1],
                      axes=BASE)
    df = fl.group_d(f0, 0)
    x0 = [0.0, 0.3, -0.2, 0.5]
    iv = fl.integrate_g(df, (0.2, 0.9), x0)
    want = (0.9 ** 3 + math.sin(0.9) * 0.3) - (0.2 ** 3 + math.sin(0.2) * 0.3)
    assert abs(iv.comps[0] - want) < 1e-9


def test_integrate_rebase_invariance():
    f = Field.scalar(CHART, lambda p: sin(3.0 * p[0]), axes=BASE, wg=-1)
    a = fl.integrate_g(f, (0.0, 2.0), [0.0, 0, 0, 0])
    b = fl.integrate_g(fl.rebase_lie(f, 3.0), (0.0, 2.0), [0.0, 0, 0, 0])
    assert abs(a.comps[0] - b.comps[0]) < 1e-12


def test_integrate_errors():
    one = Field.scalar(CHART, 1.0, axes=BASE, wg=-1)
    with pytest.raises(ValueError):
        fl.integrate_g(one, (1.0, 0.0), [0, 0, 0, 0])
    plain = Field.scalar(CHART, 1.0, axes=BASE)
    with pytest.raises(ValueError):
        fl.integrate_g(plain, (0.0, 1.0), [0, 0, 0, 0])


def test_field_metadata_is_point_independent(rng):
    f = random_field(rng, CHART, AXES4, 2, wg=1, twist_x=True, dim=dims.UT)
    vals = [f.at(p) for p in PTS[:3]]
    assert all(v.degree == 2 and v.wg == 1 and v.twist_x and v.dim == dims.UT
               for v in vals)


def test_derivative_symmetry(rng):
    # mixed second partials of every component commute
    from relsplit import dual
    f = random_field(rng, CHART, AXES4, 1)

    def comp0(p):
        return f.comps_fn(p)[0]

    p = PTS[0]
    a = dual.partial2(comp0, 0, 1)(p)
    b = dual.partial2(comp0, 1, 0)(p)
    assert abs(a - b) < 1e-13
