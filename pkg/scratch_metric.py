import numpy as np
from relsplit import exterior as ext, fields as fl, splitting as sp, metric as mt
from relsplit.exterior import CoForm, MultiVec
from relsplit.fields import Chart, Field
from relsplit.dual import real, sqrt

rng = np.random.default_rng(3)


def maxdiff(a, b, pt):
    va, vb = a.at(pt), b.at(pt)
    if va.zero and vb.zero:
        return 0.0
    if va.zero:
        return vb.max_abs()
    if vb.zero:
        return va.max_abs()
    assert va.degree == vb.degree, (va.degree, vb.degree)
    assert (va.wg, va.wu) == (vb.wg, vb.wu), ((va.wg, va.wu), (vb.wg, vb.wu))
    return max(abs(real(x) - real(y)) for x, y in zip(va.comps, vb.comps))


def rc(chart, lin=1.0):
    c = [float(v) for v in rng.uniform(-1, 1, 5)]

    def fn(p):
        t, x, y, z = p
        return c[0] + lin * (c[1] * x * t + c[2] * y * y + c[3] * z * x + c[4] * t * z)
    return fn


def rand_field(chart, axes, k, kind=CoForm, **meta):
    return Field.from_comps(chart, axes, k,
                            {K: rc(chart) for K in ext.multi_indices(len(axes), k)},
                            kind=kind, **meta)


# ---------------- Minkowski, L = 2 ----------------
chart = Chart(("t", "x", "y", "z"))
axes4 = (0, 1, 2, 3)
Lc = 2.0
g = mt.MetricField.from_entries(chart, axes4, {(0, 0): Lc * Lc, (1, 1): -1.0,
                                               (2, 2): -1.0, (3, 3): -1.0})
s = sp.natural(chart, axes4, 0)
pt = [0.3, 0.7, -0.4, 0.5]

obs = mt.lapse_shift(s, g)
print("N:", obs.lapse.comps_fn(pt), "Ndag:", obs.lapse_dag.comps_fn(pt),
      "xi:", obs.xi.comps_fn(pt))
print("shift:", obs.shift_vec.at(pt).max_abs())

# regular Riesz split vs direct
for deg in (1, 2, 3):
    k = rand_field(chart, (1, 2, 3), deg, kind=MultiVec)
    l = rand_field(chart, (1, 2, 3), deg - 1, kind=MultiVec, wg=1)
    v4 = sp.unsplit_vector(s, (k, l))
    direct = sp.split_form(s, mt.riesz(g, v4))
    matrix = mt.split_riesz_regular(s, g, (k, l), obs)
    print(f"riesz reg deg {deg}:", maxdiff(direct[0], matrix[0], pt),
          maxdiff(direct[1], matrix[1], pt))

# regular Hodge split vs direct
for deg in (0, 1, 2, 3):
    a = rand_field(chart, (1, 2, 3), deg)
    b = rand_field(chart, (1, 2, 3), deg - 1, wg=-1) if deg > 0 else \
        Field.zero_field(chart, (1, 2, 3), 0, wg=-1)
    g4f = sp.unsplit_form(s, (a, b))
    direct = sp.split_form(s, mt.hodge(g, g4f))
    matrix = mt.split_hodge_regular(s, g, (a, b), obs)
    print(f"hodge reg deg {deg}:", maxdiff(direct[0], matrix[0], pt),
          maxdiff(direct[1], matrix[1], pt))

# Hodge square on 2-forms in 4-D Lorentzian: ** = -Id
f2 = rand_field(chart, axes4, 2)
sq = mt.hodge(g, mt.hodge(g, f2))
print("hodge^2 on 2-forms + Id:", maxdiff(sq, f2.scaled(-1.0), pt) if False
      else max(abs(real(x) + real(y)) for x, y in
               zip(sq.at(pt).comps, f2.at(pt).comps)))

# ---------------- rotating scenario ----------------
omega, L, c0 = 0.3, 1.0, 1.0
chart_r = Chart(("t", "r", "phi", "z"))


def beta(p):
    return omega * p[1] / c0


def gam2(p):
    b = beta(p)
    return 1.0 / (1.0 - b * b)


g_rot = mt.MetricField.from_entries(chart_r, axes4, {
    (0, 0): lambda p: L * L / gam2(p),
    (1, 1): -1.0,
    (0, 2): lambda p: -beta(p) * p[1] * L,
    (2, 2): lambda p: -p[1] * p[1],
    (3, 3): -1.0,
})

s_rot = sp.from_gamma_comps(chart_r, axes4, 0, {
    (1,): lambda p: -omega / (c0 * L) * gam2(p) * p[1] * p[1]
}, name="rotating")
# wait: Gamma = -(omega/(c0 L)) (gamma r)^2 dphi, so the phi component (local
# base index 1) carries it; r and z components vanish.
s_rot = sp.from_gamma_comps(chart_r, axes4, 0, {
    (1,): lambda p: -omega / (c0 * L) * gam2(p) * p[1] * p[1]
}, name="rotating")

pt_r = [0.4, 0.8, 1.1, -0.3]

obs_r = mt.lapse_shift(s_rot, g_rot)
b = beta(pt_r); g2v = gam2(pt_r)
print("rot N vs gamma^-1 L:", obs_r.lapse.comps_fn(pt_r)[0] - L / np.sqrt(g2v))
print("rot shift:", obs_r.shift_vec.at(pt_r).max_abs())
print("rot xi-1:", obs_r.xi.comps_fn(pt_r)[0] - 1.0)

h = obs_r.h_sigma.matrix(pt_r)
print("rot h:", [[real(x) for x in row] for row in h], " expect diag(1,(gr)^2,1)",
      g2v * pt_r[1] ** 2)

Om = sp.curvature_omega(s_rot).at(pt_r)
print("rot Omega comp (r,phi):", Om.comp(0, 1), " oracle:",
      -2 * b * g2v * g2v / L)
chi = sp.variance_chi(s_rot).at(pt_r)
print("rot chi:", chi.max_abs())

kin = mt.kinematics(s_rot, g_rot, c0)
dl = kin.delta.at(pt_r)
print("rot delta~ dr comp:", dl.comps[0], " oracle:", b * np.sqrt(g2v) * omega * L,
      "; other comps:", dl.comps[1], dl.comps[2])
et = kin.eta.at(pt_r)
print("rot eta (r,phi):", et.comp(0, 1), " oracle:",
      -g2v ** 1.5 * omega * pt_r[1])
lam = kin.expansion.matrix(pt_r)
print("rot lambda max:", max(abs(real(x)) for row in lam for x in row))

# kinematic cross-relations
two_eta = fl.wedge(obs_r.lapse, sp.curvature_omega(s_rot)).scaled(c0)
print("2 eta = c0 N Omega:", maxdiff(kin.eta.scaled(2.0), two_eta, pt_r))
delta_alt = mt.delta_from_connection(s_rot, g_rot, c0, obs_r)
print("delta~ = c0 N (chi - N^-1 D N):", maxdiff(kin.delta, delta_alt, pt_r))

# (2 eta, delta~) = S^-* d mu
u = mt.four_velocity(s_rot, g_rot, c0)
mu = mt.riesz(g_rot, u)
pair = sp.split_form(s_rot, fl.exterior_d(mu))
print("2eta slot:", maxdiff(pair[0], kin.eta.scaled(2.0), pt_r))
print("delta slot:", maxdiff(pair[1], kin.delta, pt_r))
print("|u| = c0:", real(mt.norm(g_rot, u).comps_fn(pt_r)[0]) - c0)

# ---------------- Schiff natural splitting (cylindrical chart) -------------
s_nat = sp.natural(chart_r, axes4, 0, name="schiff-natural")
obs_n = mt.lapse_shift(s_nat, g_rot)
b = beta(pt_r)
gma = 1.0 / np.sqrt(1 - b * b)
print("schiff xi vs gamma:", real(obs_n.xi.comps_fn(pt_r)[0]) - gma)
print("schiff Ndag vs L:", real(obs_n.lapse_dag.comps_fn(pt_r)[0]) - L)
print("schiff h_sigma:", [[real(x) for x in row] for row in obs_n.h_sigma.matrix(pt_r)],
      "expect diag(1, r^2, 1)", pt_r[1] ** 2)
print("schiff h_pi phi-phi:", real(obs_n.h_pi.matrix(pt_r)[1][1]),
      "expect (gamma r)^2 =", gma ** 2 * pt_r[1] ** 2)
# shift: N-vec = (beta L / r) d_phi
print("schiff shift comps:", [real(x) for x in obs_n.shift_vec.at(pt_r).comps],
      "expect", b * L / pt_r[1], "on phi")
nu_c = [real(x) for x in obs_n.shift_form.at(pt_r).comps]
print("schiff nu comps:", nu_c, "expect", gma ** 2 * b * pt_r[1] / L, "on phi")

# nonregular Riesz / Hodge splits vs direct route, both bases
for deg in (1, 2):
    k = rand_field(chart_r, (1, 2, 3), deg, kind=MultiVec)
    l = rand_field(chart_r, (1, 2, 3), deg - 1, kind=MultiVec, wg=1)
    v4 = sp.unsplit_vector(s_nat, (k, l))
    direct = sp.split_form(s_nat, mt.riesz(g_rot, v4))
    for basis in ("sigma", "pi"):
        matrix = mt.split_riesz_nonregular(s_nat, g_rot, (k, l), basis, obs_n)
        print(f"riesz nonreg {basis} deg {deg}:",
              maxdiff(direct[0], matrix[0], pt_r),
              maxdiff(direct[1], matrix[1], pt_r))
    a = rand_field(chart_r, (1, 2, 3), deg)
    bb = rand_field(chart_r, (1, 2, 3), deg - 1, wg=-1)
    g4f = sp.unsplit_form(s_nat, (a, bb))
    directh = sp.split_form(s_nat, mt.hodge(g_rot, g4f))
    for basis in ("sigma", "pi"):
        matrixh = mt.split_hodge_nonregular(s_nat, g_rot, (a, bb), basis, obs_n)
        print(f"hodge nonreg {basis} deg {deg}:",
              maxdiff(directh[0], matrixh[0], pt_r),
              maxdiff(directh[1], matrixh[1], pt_r))
    directi = sp.split_vector(s_nat, mt.riesz_inv(g_rot, g4f))
    for basis in ("sigma", "pi"):
        matrixi = mt.split_riesz_nonregular_inv(s_nat, g_rot, (a, bb), basis, obs_n)
        print(f"riesz-inv nonreg {basis} deg {deg}:",
              maxdiff(directi[0], matrixi[0], pt_r),
              maxdiff(directi[1], matrixi[1], pt_r))
