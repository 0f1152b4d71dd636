import numpy as np
from relsplit import dims, em, exterior as ext, fields as fl, metric as mt, \
    splitting as sp, scenarios as sc
from relsplit.dual import real, sin
from relsplit.exterior import CoForm, MultiVec
from relsplit.fields import Chart, Field
from relsplit.sampling import Box, random_field, random_gamma, sobol_points

rng = np.random.default_rng(21)


def mdiff(a, b, pts):
    out = 0.0
    for p in pts:
        va, vb = a.at(p), b.at(p)
        if va.zero and vb.zero:
            continue
        if va.zero:
            out = max(out, vb.max_abs()); continue
        if vb.zero:
            out = max(out, va.max_abs()); continue
        out = max(out, max(abs(real(x) - real(y))
                           for x, y in zip(va.comps, vb.comps)))
    return out


chart = Chart(("t", "x", "y", "z"))
axes4 = (0, 1, 2, 3)
base = (1, 2, 3)
s = random_gamma(rng, chart, axes4, 0)
pts = sobol_points(Box((0.0, -1, -1, -1), (1.0, 1, 1, 1)), 10, 5)

# ---- operator split matrices vs direct 4-D routes -------------------------
for degv in (1, 2):
    v = random_field(rng, chart, axes4, degv, kind=MultiVec)
    vpair = sp.split_vector(s, v)
    for degf in (2, 3):
        a = random_field(rng, chart, base, degf)
        b = random_field(rng, chart, base, degf - 1, wg=-1)
        g4 = sp.unsplit_form(s, (a, b))
        direct = sp.split_form(s, fl.contract(v, g4))
        matrix = sp.split_contraction_matrix(s, vpair, (a, b))
        print(f"contract v{degv} f{degf}:", mdiff(direct[0], matrix[0], pts),
              mdiff(direct[1], matrix[1], pts))

gam4 = random_field(rng, chart, axes4, 1)
gpair = sp.split_form(s, gam4)
a = random_field(rng, chart, base, 1)
b = random_field(rng, chart, base, 0, wg=-1)
g4 = sp.unsplit_form(s, (a, b))
direct = sp.split_form(s, fl.wedge(gam4, g4))
matrix = sp.split_product_matrix(s, gpair, (a, b))
print("product:", mdiff(direct[0], matrix[0], pts),
      mdiff(direct[1], matrix[1], pts))

v1 = random_field(rng, chart, axes4, 1, kind=MultiVec)
vpair = sp.split_vector(s, v1)
for degf in (1, 2):
    a = random_field(rng, chart, base, degf)
    b = random_field(rng, chart, base, degf - 1, wg=-1)
    g4 = sp.unsplit_form(s, (a, b))
    direct = sp.split_form(s, fl.lie_derivative(v1, g4))
    matrix = sp.split_lie_matrix(s, vpair, (a, b))
    print(f"lie f{degf}:", mdiff(direct[0], matrix[0], pts),
          mdiff(direct[1], matrix[1], pts))

# ---- factorized split-d (change of connection route) ----------------------
a = random_field(rng, chart, base, 1)
b = random_field(rng, chart, base, 0, wg=-1)
s_nat = sp.natural(chart, axes4, 0)
step1 = sp.change_connection(s, s_nat, (a, b))
mid = (fl.exterior_d(step1[0]),
       sp.group_D(s_nat, step1[0]) - fl.exterior_d(step1[1]))
step3 = sp.change_connection(s_nat, s, mid)
matrix = sp.split_d_matrix(s, (a, b))
print("factorized d:", mdiff(step3[0], matrix[0], pts),
      mdiff(step3[1], matrix[1], pts))

# ---- transitions ----------------------------------------------------------
for nm, tau in [("affine", lambda p: 1.7 * p[0] + 0.3),
                ("bundle-shift", lambda p: p[0] + 0.2 * p[1] - 0.1 * p[2]),
                ("nonlinear", lambda p: p[0] + 0.1 * sin(p[0]) + 0.2 * p[1])]:
    tr = sp.Transition(s, tau)
    s2 = sp.transformed_structure(tr)
    # curvature is preserved
    Om_i = sp.curvature_omega(s)
    Om_j = sp.curvature_omega(s2)
    print(f"{nm}: Omega preserved:",
          mdiff(sp.transition_pull(tr, Om_i), Om_j, pts))
    # chi transforms with dG of the affine form
    chi_i = sp.variance_chi(s)
    chi_j = sp.variance_chi(s2)
    aff = sp.affine_form(tr)
    rhs = chi_j + sp.group_D(s2, aff)
    print(f"{nm}: chi rule:", mdiff(sp.transition_pull(tr, chi_i), rhs, pts))
    # split-d matrices intertwine
    A1 = random_field(rng, chart, base, 1)
    B1 = random_field(rng, chart, base, 0, wg=-1)
    lhs = sp.split_d_matrix(s2, (sp.transition_pull(tr, A1),
                                 sp.transition_pull(tr, B1)))
    m_i = sp.split_d_matrix(s, (A1, B1))
    rhs2 = (sp.transition_pull(tr, m_i[0]), sp.transition_pull(tr, m_i[1]))
    print(f"{nm}: d-matrix intertwines:", mdiff(lhs[0], rhs2[0], pts),
          mdiff(lhs[1], rhs2[1], pts))
    # integrals on G with transformed intervals
    al = random_field(rng, chart, base, 1, wg=-1)
    x0 = [0.0, 0.3, -0.2, 0.5]
    t0, t1 = 0.2, 0.9
    ia = fl.integrate_g(sp.transition_pull(tr, al), (t0, t1), x0)
    lo = real(tau([t0] + x0[1:]))
    hi = real(tau([t1] + x0[1:]))
    ib = fl.integrate_g(al, (min(lo, hi), max(lo, hi)), x0)
    print(f"{nm}: integral invariance:",
          max(abs(u - v) for u, v in zip(ia.comps, ib.comps)))

# ---- proxies ---------------------------------------------------------------
rot = sc.scenario_rotating()
g_r = rot.metric
s_r = rot.structure
obs = mt.lapse_shift(s_r, g_r)
pts_r = sobol_points(rot.box, 10, 7, rot.exclude)
c0 = rot.c0

for degf in (1, 2):
    a = random_field(rng, rot.chart, base, degf)
    bt = random_field(rng, rot.chart, base, degf - 1, wg=-1)
    pa, pb = mt.proxy_form_pair(s_r, g_r, c0, (a, bt), obs)
    # proxy round trip
    back = mt.unproxy_form_pair(s_r, g_r, c0, (pa, pb), obs)
    print(f"proxy round trip {degf}:", mdiff(back[1], bt, pts_r))
    # proxy d-matrix equals conjugated direct route
    g4 = sp.unsplit_form(s_r, (a, bt))
    direct = mt.proxy_form_pair(s_r, g_r, c0, sp.split_form(
        s_r, fl.exterior_d(g4)), obs)
    matrix = mt.proxy_d_matrix(s_r, g_r, c0, (pa, pb), obs)
    print(f"proxy d {degf}:", mdiff(direct[0], matrix[0], pts_r),
          mdiff(direct[1], matrix[1], pts_r))
    # proxy regular Hodge
    direct_h = mt.proxy_form_pair(s_r, g_r, c0, sp.split_form(
        s_r, mt.hodge(g_r, g4)), obs)
    matrix_h = mt.proxy_hodge_regular(s_r, g_r, c0, (pa, pb), obs)
    print(f"proxy hodge {degf}:", mdiff(direct_h[0], matrix_h[0], pts_r),
          mdiff(direct_h[1], matrix_h[1], pts_r))

# proxy Lie matrix
v1 = random_field(rng, rot.chart, axes4, 1, kind=MultiVec)
vp = mt.proxy_vec_pair(s_r, g_r, c0, sp.split_vector(s_r, v1), obs)
for degf in (1, 2):
    a = random_field(rng, rot.chart, base, degf)
    bt = random_field(rng, rot.chart, base, degf - 1, wg=-1)
    pp = mt.proxy_form_pair(s_r, g_r, c0, (a, bt), obs)
    g4 = sp.unsplit_form(s_r, (a, bt))
    direct = mt.proxy_form_pair(s_r, g_r, c0, sp.split_form(
        s_r, fl.lie_derivative(v1, g4)), obs)
    matrix = mt.proxy_lie_matrix(s_r, g_r, c0, vp, pp, obs)
    print(f"proxy lie {degf}:", mdiff(direct[0], matrix[0], pts_r),
          mdiff(direct[1], matrix[1], pts_r))

# proxy kinematic forms = proxies of the kinematic parameters
kin = mt.kinematics(s_r, g_r, c0, obs)
two_eta, delta = mt.proxy_kinematic_forms(s_r, g_r, c0, obs)
print("2eta-bar:", mdiff(two_eta, kin.eta.scaled(2.0), pts_r))
delta_px = fl.wedge(obs.lapse_inv.scaled(c0), kin.delta)
print("delta-bar:", mdiff(delta, delta_px, pts_r))

# proxy nonregular (Schiff natural)
nat = sc.scenario_schiff_natural()
s_n, g_n = nat.structure, nat.metric
obs_n = mt.lapse_shift(s_n, g_n)
pts_n = sobol_points(nat.box, 10, 13, nat.exclude)
for degf in (1, 2):
    a = random_field(rng, nat.chart, base, degf)
    bt = random_field(rng, nat.chart, base, degf - 1, wg=-1)
    pp = mt.proxy_form_pair(s_n, g_n, 1.0, (a, bt), obs_n)
    g4 = sp.unsplit_form(s_n, (a, bt))
    direct_h = mt.proxy_form_pair(s_n, g_n, 1.0, sp.split_form(
        s_n, mt.hodge(g_n, g4)), obs_n)
    for basis in ("sigma", "pi"):
        matrix_h = mt.proxy_hodge_nonregular(s_n, g_n, 1.0, pp, basis, obs_n)
        print(f"proxy hodge nonreg {basis} {degf}:",
              mdiff(direct_h[0], matrix_h[0], pts_n),
              mdiff(direct_h[1], matrix_h[1], pts_n))
    kk = random_field(rng, nat.chart, base, degf, kind=MultiVec)
    ll = random_field(rng, nat.chart, base, degf - 1, kind=MultiVec, wg=1)
    pv = mt.proxy_vec_pair(s_n, g_n, 1.0, (kk, ll), obs_n)
    v4 = sp.unsplit_vector(s_n, (kk, ll))
    direct_r = mt.proxy_form_pair(s_n, g_n, 1.0, sp.split_form(
        s_n, mt.riesz(g_n, v4)), obs_n)
    for basis in ("sigma", "pi"):
        matrix_r = mt.proxy_riesz_nonregular(s_n, g_n, 1.0, pv, basis, obs_n)
        print(f"proxy riesz nonreg {basis} {degf}:",
              mdiff(direct_r[0], matrix_r[0], pts_n),
              mdiff(direct_r[1], matrix_r[1], pts_n))

# ---- expansion: d_tau kappa3 = lambda kappa3 ------------------------------
exp_sc = sc.scenario_expanding(a=0.17)
s_e, g_e = exp_sc.structure, exp_sc.metric
obs_e = mt.lapse_shift(s_e, g_e)
pts_e = sobol_points(exp_sc.box, 8, 3)
kin_e = mt.kinematics(s_e, g_e, exp_sc.c0, obs_e)
print("expansion scalar:", mdiff(kin_e.expansion_scalar,
                                 exp_sc.oracles["expansion_scalar"], pts_e))
kappa3 = mt.unit_volume(obs_e.h_sigma)
lhs = mt.proper_time_d(s_e, g_e, kappa3, exp_sc.c0, obs_e)
rhs = fl.wedge(kin_e.expansion_scalar, kappa3)
print("d_tau kappa3 = lambda kappa3:", mdiff(lhs, rhs, pts_e))

# 2 lambda = d_tau h on rotating (both zero) and expanding
dt_h = mt.metric_dt(s_e, obs_e.h_sigma, exp_sc.c0, obs_e)
lam2 = kin_e.expansion
dd = max(abs(real(x) - 0.5 * real(y)) for p in pts_e
         for rowx, rowy in zip(lam2.matrix(p), dt_h.matrix(p))
         for x, y in zip(rowx, rowy))
print("2 lambda = d_tau h:", dd)

# shear trace-free
tr = max(abs(sum(ext.inv(obs_e.h_sigma.matrix(p))[i][j]
              * kin_e.shear.matrix(p)[j][i]
              for i in range(3) for j in range(3))) for p in pts_e)
print("shear trace:", tr)

# ---- classification -------------------------------------------------------
rotf = sp.classify(s_r, pts_r, metric=g_r)
print("rotating flags:", rotf)
natf = sp.classify(s_n, pts_n, metric=g_n)
print("schiff natural flags:", natf)
mink = sc.scenario_minkowski_rest()
pts_m = sobol_points(mink.box, 8, 3)
minkf = sp.classify(mink.structure, pts_m, metric=mink.metric)
print("minkowski flags:", minkf)

# ---- anholonomity ---------------------------------------------------------
anh = sp.anholonomity(s_r)
chi_r = sp.variance_chi(s_r)
Om_r = sp.curvature_omega(s_r)
p0 = pts_r[0]
rec = anh(p0)
print("C0j0 vs chi:", max(abs(real(u) - real(v)) for u, v in
                          zip(rec["C0j0"], chi_r.at(p0).comps)))
om_v = Om_r.at(p0)
print("Cij0 vs Omega:", max(abs(real(rec["Cij0"][(a_, b_)]) -
                                real(om_v.comp(a_, b_)))
                            for (a_, b_) in rec["Cij0"]))

# ---- integrate_g ----------------------------------------------------------
al0 = Field.scalar(chart, lambda p: 2.0 * p[0], axes=base, wg=-1)
val = fl.integrate_g(al0, (0.0, 1.0), [0.0, 0.1, 0.2, 0.3])
print("int 2t dt:", val.comps[0] - 1.0)
# fundamental theorem
f0 = Field.scalar(chart, lambda p: p[0] ** 3 + sin(p[0]) * p[1], axes=base)
df = fl.group_d(f0, 0)
x0 = [0.0, 0.3, -0.2, 0.5]
iv = fl.integrate_g(df, (0.2, 0.9), x0)
import math
exact = (0.9 ** 3 + math.sin(0.9) * 0.3) - (0.2 ** 3 + math.sin(0.2) * 0.3)
print("fundamental theorem:", iv.comps[0] - exact)
# rebase invariance
re_f = fl.rebase_lie(df, 3.0)
iv2 = fl.integrate_g(re_f, (0.2, 0.9), x0)
print("rebase invariance:", iv2.comps[0] - iv.comps[0])
