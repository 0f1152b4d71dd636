import pytest

from relsplit import fields as fl, splitting as sp
from relsplit.dual import real, sin
from relsplit.fields import Chart, Field
from relsplit.sampling import Box, random_field, random_gamma, sobol_points

CHART = Chart(("t", "x", "y", "z"))
AXES4 = (0, 1, 2, 3)
BASE = (1, 2, 3)
PTS = sobol_points(Box((0.0, -1, -1, -1), (1.0, 1, 1, 1)), 20, 31)


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


def maxres(f, pts=PTS):
    return max(f.at(p).max_abs() for p in pts)


@pytest.fixture
def s(rng):
    return random_gamma(rng, CHART, AXES4, 0)


def test_identity_transition(s, rng):
    tr = sp.Transition(s, lambda p: p[0])
    f = random_field(rng, CHART, BASE, 2, wg=1)
    assert maxdiff(sp.transition_pull(tr, f), f) == 0.0
    s2 = sp.transformed_structure(tr)
    assert maxdiff(s2.gamma, s.gamma) == 0.0


def test_bundle_shift_affine_form(s):
    # t_old = t_new + c(x): tau_j = -dc, with dG tau_j = 0 and chi invariant
    tr = sp.Transition(s, lambda p: p[0] + 0.2 * p[1] - 0.1 * p[2])
    aff = sp.affine_form(tr)
    p = PTS[0]
    assert abs(real(aff.at(p).comps[0]) + 0.2) < 1e-15
    assert abs(real(aff.at(p).comps[1]) - 0.1) < 1e-15
    s2 = sp.transformed_structure(tr)
    assert maxres(sp.group_D(s2, aff)) < 1e-13
    assert maxdiff(sp.transition_pull(tr, sp.variance_chi(s)),
                   sp.variance_chi(s2)) < 1e-12


def test_curvature_preserved(s):
    for tau in (lambda p: 1.7 * p[0] + 0.3,
                lambda p: p[0] + 0.2 * p[1] - 0.1 * p[2],
                lambda p: p[0] + 0.1 * sin(p[0]) + 0.2 * p[1]):
        tr = sp.Transition(s, tau)
        s2 = sp.transformed_structure(tr)
        lhs = sp.transition_pull(tr, sp.curvature_omega(s))
        assert maxdiff(lhs, sp.curvature_omega(s2)) < 1e-12


def test_intertwining(s, rng):
    tr = sp.Transition(s, lambda p: p[0] + 0.1 * sin(p[0]) + 0.2 * p[1])
    s2 = sp.transformed_structure(tr)
    a = random_field(rng, CHART, BASE, 1)
    b = random_field(rng, CHART, BASE, 0, wg=-1)
    lhs = sp.split_d_matrix(s2, (sp.transition_pull(tr, a),
                                 sp.transition_pull(tr, b)))
    m = sp.split_d_matrix(s, (a, b))
    rhs = (sp.transition_pull(tr, m[0]), sp.transition_pull(tr, m[1]))
    assert maxdiff(lhs[0], rhs[0]) < 1e-11
    assert maxdiff(lhs[1], rhs[1]) < 1e-11


def test_integral_invariance(s, rng):
    al = random_field(rng, CHART, BASE, 1, wg=-1)
    tau = lambda p: 1.7 * p[0] + 0.3 + 0.1 * p[1]
    tr = sp.Transition(s, tau)
    x0 = [0.0, 0.3, -0.2, 0.5]
    t0, t1 = 0.2, 0.9
    ia = fl.integrate_g(sp.transition_pull(tr, al), (t0, t1), x0)
    lo, hi = real(tau([t0] + x0[1:])), real(tau([t1] + x0[1:]))
    ib = fl.integrate_g(al, (lo, hi), x0)
    assert max(abs(u - v) for u, v in zip(ia.comps, ib.comps)) < 1e-10


def test_monotonicity_guard(s):
    tr = sp.Transition(s, lambda p: -p[0])
    f = Field.scalar(CHART, lambda p: p[0], axes=BASE, wg=1)
    with pytest.raises(ValueError):
        sp.transition_pull(tr, f).at(PTS[0])


def test_weight_factors():
    s0 = sp.natural(CHART, AXES4, 0)
    tr = sp.Transition(s0, lambda p: 2.0 * p[0])
    up = Field.scalar(CHART, 6.0, axes=BASE, wg=1)
    dn = Field.scalar(CHART, 6.0, axes=BASE, wg=-1)
    tt = Field.scalar(CHART, 6.0, axes=BASE, wg="T")
    p = PTS[0]
    assert real(sp.transition_pull(tr, up).at(p).comps[0]) == 3.0
    assert real(sp.transition_pull(tr, dn).at(p).comps[0]) == 12.0
    assert real(sp.transition_pull(tr, tt).at(p).comps[0]) == 6.0
