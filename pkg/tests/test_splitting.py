import numpy as np
import pytest

from relsplit import exterior as ext, fields as fl, splitting as sp
from relsplit.dual import real
from relsplit.exterior import CoForm, MultiVec
from relsplit.fields import Chart, Field
from relsplit.sampling import Box, random_field, random_gamma, sobol_points

CHART = Chart(("t", "x", "y", "z"))
AXES4 = (0, 1, 2, 3)
BASE = (1, 2, 3)
PTS = sobol_points(Box((0.0, -1, -1, -1), (1.0, 1, 1, 1)), 25, 17)


@pytest.fixture
def s(rng):
    return random_gamma(rng, CHART, AXES4, 0)


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
        assert (va.wg, va.wu, va.degree) == (vb.wg, vb.wu, vb.degree)
        out = max(out, max(abs(real(x) - real(y))
                           for x, y in zip(va.comps, vb.comps)))
    return out


def pair_diff(pa, pb, pts=PTS):
    return max(maxdiff(pa[0], pb[0], pts), maxdiff(pa[1], pb[1], pts))


# ---------------------------------------------------------------------------
# fundamental field, connection, parametric maps

def test_omega_of_natural_structure():
    s0 = sp.natural(CHART, AXES4, 0)
    om = sp.connection_omega(s0)
    assert om.at(PTS[0]).comps == (1.0, 0.0, 0.0, 0.0)


def test_omega_w_pairing(s):
    w = sp.fundamental_w(s)
    om = sp.connection_omega(s)
    for p in PTS[:10]:
        val = ext.contract(w.at(p), om.at(p))
        assert val.wg == 0
        assert abs(real(val.comps[0]) - 1.0) < 1e-15


def test_sigma_star_on_generators(s):
    # Sigma*: dx^0 -> -Gamma_i dx^i (as coefficients), dx^i -> dx^i
    dt = Field.from_comps(CHART, AXES4, 1, {(0,): 1.0})
    out = sp.sigma_star(s, dt)
    gam = s.gamma
    for p in PTS[:5]:
        got = out.at(p).comps
        want = tuple(-c for c in gam.at(p).comps)
        assert np.allclose([real(x) for x in got],
                           [real(x) for x in want], atol=1e-15)
    dx = Field.from_comps(CHART, AXES4, 1, {(1,): 1.0})
    out = sp.sigma_star(s, dx)
    assert out.at(PTS[0]).comps == (1.0, 0.0, 0.0)


def test_sigma_pi_identities(s, rng):
    for k in (0, 1, 2, 3):
        a = random_field(rng, CHART, BASE, k)
        assert maxdiff(sp.sigma_star(s, sp.pi_star(s, a)), a) < 1e-13
        v = random_field(rng, CHART, BASE, k, kind=MultiVec)
        assert maxdiff(sp.pi_push(s, sp.sigma_push(s, v)), v) < 1e-13


def test_split_round_trip(s, rng):
    for k in range(5):
        f = random_field(rng, CHART, AXES4, k)
        back = sp.unsplit_form(s, sp.split_form(s, f))
        assert maxdiff(back, f) < 1e-12 * (1 + maxres(f))
        v = random_field(rng, CHART, AXES4, k, kind=MultiVec)
        backv = sp.unsplit_vector(s, sp.split_vector(s, v))
        assert maxdiff(backv, v) < 1e-12 * (1 + maxres(v))


def test_split_degree_zero_convention(s, rng):
    f = random_field(rng, CHART, AXES4, 0)
    al, be = sp.split_form(s, f)
    assert be.zero
    assert maxdiff(al, sp.sigma_star(s, f)) == 0.0


def test_split_of_dt_natural():
    s0 = sp.natural(CHART, AXES4, 0)
    dt = Field.from_comps(CHART, AXES4, 1, {(0,): 1.0})
    al, be = sp.split_form(s0, dt)
    assert maxres(al) == 0.0
    assert be.wg == -1
    assert be.at(PTS[0]).comps == (1.0,)


def test_hor_ver(s, rng):
    w = sp.fundamental_w(s)
    we = w  # w(e): same components, scalar-valued stand-in
    for k in (1, 2, 3):
        v = random_field(rng, CHART, AXES4, k, kind=MultiVec)
        assert maxdiff(sp.hor(s, v) + sp.ver(s, v), v) < 1e-13
        hh = sp.hor(s, sp.hor(s, v))
        assert maxdiff(hh, sp.hor(s, v)) < 1e-13
    # vertical field: hor(w) = 0, ver(w) = w
    from dataclasses import replace
    w_plain = replace(w, wg=0)
    assert maxres(sp.hor(s, w_plain)) < 1e-15
    assert maxdiff(sp.ver(s, w_plain), w_plain) < 1e-15


def test_variance_and_curvature_forms(s):
    chi = sp.variance_chi(s)
    Om = sp.curvature_omega(s)
    assert chi.wg == "T" and chi.degree == 1
    assert Om.wg == 1 and Om.degree == 2
    # cross-check routes
    assert maxdiff(sp.curvature_from_variance(s), Om) < 1e-12
    d_om = fl.exterior_d(sp.connection_omega(s))
    assert maxdiff(sp.sigma_star(s, d_om), Om) < 1e-12
    iw = fl.contract(sp.fundamental_w(s), d_om, tensor_slot="g")
    assert maxdiff(sp.sigma_star(s, iw), chi) < 1e-12


def test_variance_polynomial_example():
    # Gamma = t x dx (x) e  ->  chi = x dx (x) (eps (x) e)
    s1 = sp.from_gamma_comps(CHART, AXES4, 0,
                             {(0,): lambda p: p[0] * p[1]})
    chi = sp.variance_chi(s1)
    p = [0.4, 0.7, 0.1, 0.2]
    assert abs(real(chi.at(p).comps[0]) - 0.7) < 1e-15
    assert chi.at(p).comps[1] == 0.0


def test_covariant_d_reduces_to_d_for_natural(rng):
    s0 = sp.natural(CHART, AXES4, 0)
    f = random_field(rng, CHART, BASE, 1)
    assert maxdiff(sp.covariant_D(s0, f), fl.exterior_d(f)) == 0.0


def test_operator_identities(s, rng):
    chi = sp.variance_chi(s)
    Om = sp.curvature_omega(s)
    for k, wg in ((0, 0), (1, 0), (1, 1)):
        a = random_field(rng, CHART, BASE, k, wg=wg)
        lhs = (sp.covariant_D(s, fl.group_d(a, 0) if wg == 0
                              else sp.group_D(s, a))
               - sp.group_D(s, sp.covariant_D(s, a)))
        rhs = fl.wedge(chi, sp.group_D(s, a))
        assert maxdiff(lhs, rhs) < 1e-10 * (1 + maxres(rhs))
        lhs2 = sp.covariant_D(s, sp.covariant_D(s, a))
        rhs2 = fl.wedge(Om, sp.group_D(s, a)).scaled(-1.0)
        assert maxdiff(lhs2, rhs2) < 1e-10 * (1 + maxres(rhs2))


def test_bianchi(s):
    r1, r2 = sp.bianchi_residuals(s)
    assert maxres(r1) < 1e-10
    assert maxres(r2) < 1e-10


def test_bianchi_flat():
    s0 = sp.natural(CHART, AXES4, 0)
    r1, r2 = sp.bianchi_residuals(s0)
    assert maxres(r1) == 0.0 and maxres(r2) == 0.0


def test_split_d_matrix_routes(s, rng):
    for k in (1, 2, 3):
        f = random_field(rng, CHART, AXES4, k)
        pair = sp.split_form(s, f)
        direct = sp.split_form(s, fl.exterior_d(f))
        matrix = sp.split_d_matrix(s, pair)
        assert pair_diff(direct, matrix) < 1e-10 * (1 + maxres(f))


def test_split_d_natural_form(rng):
    s0 = sp.natural(CHART, AXES4, 0)
    a = random_field(rng, CHART, BASE, 1)
    top, bottom = sp.split_d_matrix(s0, (a, Field.zero_field(
        CHART, BASE, 0, wg=-1)))
    assert maxdiff(top, fl.exterior_d(a)) == 0.0
    assert maxdiff(bottom, fl.group_d(a, 0)) == 0.0


def test_change_connection(s, rng):
    s2 = random_gamma(rng, CHART, AXES4, 0)
    a = random_field(rng, CHART, BASE, 2)
    b = random_field(rng, CHART, BASE, 1, wg=-1)
    # identity when alpha = beta
    same = sp.change_connection(s, s, (a, b))
    assert pair_diff(same, (a, b)) == 0.0
    # composing there and back is the identity
    back = sp.change_connection(s2, s, sp.change_connection(s, s2, (a, b)))
    assert pair_diff(back, (a, b)) < 1e-13
    # matches resplitting the same space-time form
    g4 = sp.unsplit_form(s, (a, b))
    resplit = sp.split_form(s2, g4)
    direct = sp.change_connection(s, s2, (a, b))
    assert pair_diff(resplit, direct) < 1e-13


def test_classify_flags():
    s0 = sp.natural(CHART, AXES4, 0)
    flags = sp.classify(s0, PTS)
    assert flags["natural"] and flags["holonomic"] and flags["flat"] \
        and flags["principal"]
    s1 = sp.from_gamma_comps(CHART, AXES4, 0, {(0,): lambda p: p[1]})
    flags1 = sp.classify(s1, PTS)
    assert not flags1["natural"]
    assert flags1["principal"]          # time-independent Gamma


def test_anholonomity(s):
    rec = sp.anholonomity(s)(PTS[0])
    chi = sp.variance_chi(s).at(PTS[0])
    Om = sp.curvature_omega(s).at(PTS[0])
    assert np.allclose([real(v) for v in rec["C0j0"]],
                       [real(v) for v in chi.comps], atol=1e-12)
    for (a, b), v in rec["Cij0"].items():
        assert abs(real(v) - real(Om.comp(a, b))) < 1e-12


def test_anholonomity_flat():
    s0 = sp.natural(CHART, AXES4, 0)
    rec = sp.anholonomity(s0)(PTS[0])
    assert all(v == 0.0 for v in rec["C0j0"])
    assert all(v == 0.0 for v in rec["Cij0"].values())


def test_frobenius_link(rng):
    # flat structure: the unsplit of a closed split pair is closed
    s0 = sp.natural(CHART, AXES4, 0)
    a = random_field(rng, CHART, BASE, 1)
    pair = (fl.exterior_d(a), Field.zero_field(CHART, BASE, 1, wg=-1))
    g4 = sp.unsplit_form(s0, pair)
    # d g4 has only the dG part of the pair; for a t-independent a it closes
    a_static = Field.from_comps(
        CHART, BASE, 1,
        {K: (lambda p, K=K: p[1 + K[0]] * 0.3) for K in
         ext.multi_indices(3, 1)})
    pair2 = (fl.exterior_d(a_static), Field.zero_field(CHART, BASE, 1,
                                                       wg=-1))
    g42 = sp.unsplit_form(s0, pair2)
    assert maxres(fl.exterior_d(g42)) < 1e-12
