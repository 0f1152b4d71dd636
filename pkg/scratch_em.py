import numpy as np
from relsplit import dims, em, exterior as ext, fields as fl, metric as mt, \
    splitting as sp, scenarios as sc
from relsplit.dual import real
from relsplit.exterior import CoForm, MultiVec
from relsplit.fields import Chart, Field
from relsplit.sampling import random_field, random_gamma, sobol_points

rng = np.random.default_rng(11)


def mx(f, pts):
    return max(f.at(p).max_abs() for p in pts)


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


# ---------- generic Maxwell residuals under a random structure -------------
chart = Chart(("t", "x", "y", "z"))
axes4 = (0, 1, 2, 3)
s = random_gamma(rng, chart, axes4, 0)
pts = sobol_points(sc.Box((0.0, -1, -1, -1), (1.0, 1, 1, 1)), 20, 5)

A = random_field(rng, chart, axes4, 1, dim=dims.UT)
H = random_field(rng, chart, axes4, 2, twist_x=True, dim=dims.IT)
fs = em.MaxwellFieldSet.from_potentials(A, H)
sf = em.split_em(s, fs)
res = em.maxwell_residuals(s, sf)
for name, r in res.items():
    print(f"maxwell {name}:", mx(r, pts))
alt = em.maxwell_residuals_alt(s, sf)
for name, r in alt.items():
    print(f"alt {name}:", mx(r, pts))

# alt equals change-of-connection route
s_nat = sp.natural(chart, axes4, 0)
pair_b = sp.change_connection(s, s_nat, (sf.b, sf.e.scaled(-1.0)))
b_n = pair_b[0]
print("alt b route:", mdiff(b_n, sf.b - fl.wedge(s.gamma, sf.e), pts))

# energy-momentum: matrix route vs direct split of T_n
n4 = random_field(rng, chart, axes4, 1, kind=MultiVec)
k, l = sp.split_vector(s, n4)
T = em.stress_tensor_4d(fs.F, fs.H, n4)
direct = sp.split_form(s, T)
emq = em.energy_momentum(sf, k, l)
m0, m1 = em.split_stress_pair(emq)
print("stress slot0:", mdiff(direct[0], m0, pts))
print("stress slot1:", mdiff(direct[1], m1, pts))

# ---------- rotating scenario: stationarity, balance, theta ----------------
rot = sc.scenario_rotating()
pts_r = sobol_points(rot.box, 15, 7, rot.exclude)
g = rot.metric
w = sp.fundamental_w(rot.structure)
lw = mt.lie_metric(w, g)
print("L_w g (stationary):", max(abs(real(v)) for p in pts_r
                                 for row in lw(p) for v in row))

# X_n for Killing n = w(e) on the exact Schiff fields, via both routes
sol = sc.scenario_schiff_solution()
pts_s = sobol_points(sol.box, 15, 9, sol.exclude)

F4, H4 = sol.maxwell.F, sol.maxwell.H
n_kill = Field.from_comps(rot.chart, axes4, 1, {(0,): 1.0}, kind=MultiVec)
Xn = em.body_force(F4, H4, n_kill)
print("X_w (Killing):", mx(Xn, pts_s))

tr_res = em.trautman_commutator_residual(g, n_kill, F4)
print("trautman commutator (Killing):", mx(tr_res, pts_s))

nonk = Field.from_comps(rot.chart, axes4, 1,
                        {(1,): lambda p: p[1]}, kind=MultiVec)
tr_res2 = em.trautman_commutator_residual(g, nonk, F4)
print("trautman commutator (non-Killing r d_r):", mx(tr_res2, pts_s))
Xn2 = em.body_force(F4, H4, nonk)
z0c = em.const(rot.chart, axes4, -0.5 / sol.z0, dims.Z0_DIM ** -1)
Xn2b = fl.wedge(z0c, fl.wedge(F4, em.trautman_commutator_residual(
    g, nonk, F4))) if False else None
print("X_n nonKilling nonzero:", mx(Xn2, pts_s))

# ---------- Schiff solution checks ----------------------------------------
red = sol.reduced
Ybar = mt.MetricField.from_entries(rot.chart, (1, 3), {(0, 0): 1.0,
                                                       (1, 1): 1.0})
# reduced equations
r1 = em._d_or_zero(red["b"]) + fl.wedge(sol.oracles["omega_bar"], red["e"])
r2 = em._d_or_zero(red["e"])
r3 = em._d_or_zero(red["d"]) - fl.wedge(sol.oracles["omega_bar"], red["h"])
r4 = em._d_or_zero(red["h"])
for nm, r in [("-db=Om^e", r1), ("de=0", r2), ("dd=Om^h", r3), ("dh=j", r4)]:
    print("reduced", nm, mx(r, pts_s))

# reduced constitutive: d = Z0^-1 gamma^2 Lambda *2 e
beta, gam2 = sc._rot_helpers(0.3, 1.0, 1.0)
gl = fl.wedge(Field.scalar(rot.chart, gam2, axes=(1, 3)),
              sol.oracles["lambda_axial"])
z0inv = em.const(rot.chart, (1, 3), 1.0 / sol.z0, dims.Z0_DIM ** -1)
dcheck = fl.wedge(z0inv, fl.wedge(gl, mt.hodge(Ybar, red["e"])))
print("reduced constitutive:", mdiff(dcheck, red["d"], pts_s))

# 3-D residuals in the regular splitting
res3 = em.maxwell_residuals(sol.structure, sol.split_fields)
for name, r in res3.items():
    print("schiff 3d", name, mx(r, pts_s))

# 3-D constitutive in the regular splitting
obs = mt.lapse_shift(sol.structure, sol.metric)
d3c, h3c = em.constitutive_regular(sol.structure, sol.metric,
                                   sol.split_fields.e, sol.split_fields.b,
                                   sol.z0, obs)
print("3d constitutive d:", mdiff(d3c, sol.split_fields.d, pts_s))
print("3d constitutive h:", mdiff(h3c, sol.split_fields.h, pts_s))

# component constitutive route
dcomp = em.constitutive_regular_components(sol.structure, sol.metric,
                                           sol.split_fields.e, sol.z0, obs)
print("component constitutive:", mdiff(dcomp, sol.split_fields.d, pts_s))

# outside: everything zero
pout = [0.1, 0.55, 1.0, 0.45]   # spherical radius ~0.71 > R2
print("outside F:", F4.at(pout).max_abs(), " H:", H4.at(pout).max_abs())

# balance in the rotating splitting with Killing pair
kk, ll = sp.split_vector(sol.structure, n_kill)
mom, en = em.balance_residuals(sol.structure, sol.split_fields, kk, ll)
print("balance mom:", mx(mom, pts_s), " en:", mx(en, pts_s))

# ---------- Schiff natural -------------------------------------------------
nat = sc.scenario_schiff_natural()
pts_n = sobol_points(nat.box, 20, 13, nat.exclude)
obs_n = mt.lapse_shift(nat.structure, nat.metric)
print("xi = gamma:", mdiff(obs_n.xi, nat.oracles["xi"], pts_n))
print("Ndag = L:", mdiff(obs_n.lapse_dag, nat.oracles["lapse_dag"], pts_n))
print("shift oracle:", mdiff(obs_n.shift_vec, nat.oracles["shift_vec"], pts_n))

stars = em.schiff_star_fields(nat.structure, nat.metric, nat.split_fields,
                              nat.z0, obs_n)
print("rho_S:", mx(stars.rho_s, pts_n))
print("j~ + j_S:", mdiff(stars.j_s.scaled(-1.0), nat.split_fields.j, pts_n))
print("d* = d - p_S:", mdiff(stars.d_star,
                             nat.split_fields.d - stars.p_s, pts_n))
print("h* = h~ + m_S:", mdiff(stars.h_star,
                              nat.split_fields.h + stars.m_s, pts_n))

# natural-splitting Maxwell residuals (D = d, Omega = chi = 0)
res_n = em.maxwell_residuals(nat.structure, nat.split_fields)
for name, r in res_n.items():
    print("schiff natural", name, mx(r, pts_n))

# the natural fields must be consistent with the regular ones: same F, H
F4n = sp.unsplit_form(nat.structure, (nat.split_fields.b,
                                      nat.split_fields.e.scaled(-1.0)))
H4n = sp.unsplit_form(nat.structure, (nat.split_fields.d,
                                      nat.split_fields.h))
Hn_check = em.vacuum_excitation(nat.metric, F4n, nat.z0)
print("H = Z0^-1 *4 F (natural chart):", mdiff(Hn_check, H4n, pts_n))

# excitation chain with a smooth stand-in charge density
def prof(p):
    return 0.3 + 0.1 * p[1] * p[1] + 0.05 * p[3]

fs_j = sc.static_charge_current(rot, prof)
sf_j = em.split_em(rot.structure, fs_j)
rho_or, j_or = sc.schiff_excitation_oracle(rot, prof)
print("excitation rho:", mdiff(sf_j.rho, rho_or, pts_r))
print("excitation j:", mdiff(sf_j.j, j_or, pts_r))
