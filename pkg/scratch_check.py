"""Scratch validation of core conventions (not part of the package)."""
import math
import numpy as np

from relsplit import exterior as ext, fields as fl, splitting as sp
from relsplit.exterior import CoForm, MultiVec
from relsplit.fields import Chart, Field
from relsplit.dual import real, sin

rng = np.random.default_rng(0)

# --- value-level checks ---------------------------------------------------
axes4 = (0, 1, 2, 3)


def rand_form(k, wg=0):
    comps = tuple(float(c) for c in rng.uniform(-1, 1, ext.n_comps(4, k)))
    return CoForm(axes4, k, comps, wg=wg)


def rand_vec(k, wg=0):
    comps = tuple(float(c) for c in rng.uniform(-1, 1, ext.n_comps(4, k)))
    return MultiVec(axes4, k, comps, wg=wg)


# antisymmetry
a = rand_form(1); b = rand_form(2)
ab = ext.wedge(a, b); ba = ext.wedge(b, a)
print("graded comm:", max(abs(x - y) for x, y in zip(ab.comps, ba.comps)))

# iterated contraction: i_{a^b} gamma = i_b i_a gamma
va = rand_vec(1); vb = rand_vec(1); g3 = rand_form(3)
lhs = ext.contract(ext.wedge(va, vb), g3)
rhs = ext.contract(vb, ext.contract(va, g3))
print("iter contraction:", max(abs(x - y) for x, y in zip(lhs.comps, rhs.comps)))

# --- field-level: polynomial Gamma splitting ------------------------------
chart = Chart(("t", "x", "y", "z"))
base = (1, 2, 3)


def f1(p):
    t, x, y, z = p
    return 0.3 * x * y + 0.1 * t * x + 0.2 * z


def f2(p):
    t, x, y, z = p
    return 0.5 * x - 0.2 * t * y + 0.05 * t * t * z


def f3(p):
    t, x, y, z = p
    return 0.1 + 0.3 * z * x + 0.2 * t * z


s = sp.from_gamma_comps(chart, axes4, 0, {(0,): f1, (1,): f2, (2,): f3})

pt = [0.3, 0.7, -0.4, 0.5]

# omega(w) = 1
w = sp.fundamental_w(s)
om = sp.connection_omega(s)
pair_val = ext.contract(w.at(pt), om.at(pt))
print("omega(w):", pair_val.comps[0], "weight:", pair_val.wg)

# random 2-form on spacetime
def rc(seed):
    c = rng.uniform(-1, 1, 5)
    def fn(p):
        t, x, y, z = p
        return float(c[0]) + float(c[1]) * x * t + float(c[2]) * y * y + \
            float(c[3]) * z * x + float(c[4]) * sin(x) * t
    return fn

gamma2 = Field.from_comps(chart, axes4, 2,
                          {K: rc(i) for i, K in enumerate(ext.multi_indices(4, 2))})

# round trip
al, be = sp.split_form(s, gamma2)
back = sp.unsplit_form(s, (al, be))
v0 = gamma2.at(pt); v1 = back.at(pt)
print("split round trip:", max(abs(x - y) for x, y in zip(v0.comps, v1.comps)))

# sigma* pi* = Id
alpha2 = Field.from_comps(chart, base, 2,
                          {K: rc(i) for i, K in enumerate(ext.multi_indices(3, 2))})
sp_id = sp.sigma_star(s, sp.pi_star(s, alpha2))
va_, vb_ = alpha2.at(pt), sp_id.at(pt)
print("sigma* pi* = Id:", max(abs(x - y) for x, y in zip(va_.comps, vb_.comps)))

# split-d matrix vs direct route
d_direct = sp.split_form(s, fl.exterior_d(gamma2))
d_matrix = sp.split_d_matrix(s, (al, be))
for i in range(2):
    x, y = d_direct[i].at(pt), d_matrix[i].at(pt)
    print(f"split d slot {i}:", max(abs(real(u) - real(v)) for u, v in zip(x.comps, y.comps)),
          "weights", x.wg, y.wg)

# (Omega, chi) = S^-*(d omega)
d_om = fl.exterior_d(sp.connection_omega(s))
slot_a = sp.sigma_star(s, d_om)
iwd = fl.contract(sp.fundamental_w(s), d_om, tensor_slot="g")
slot_b = sp.sigma_star(s, iwd)
Om = sp.curvature_omega(s); chi = sp.variance_chi(s)
xa, ya = slot_a.at(pt), Om.at(pt)
xb, yb = slot_b.at(pt), chi.at(pt)
print("Omega = Sigma* d omega:", max(abs(u - v) for u, v in zip(xa.comps, ya.comps)), xa.wg, ya.wg)
print("chi = Sigma* iw d omega:", max(abs(u - v) for u, v in zip(xb.comps, yb.comps)), xb.wg, yb.wg)

# Omega = d Gamma - Gamma ^ chi
alt = sp.curvature_from_variance(s)
xa, ya = alt.at(pt), Om.at(pt)
print("Omega = dG - G^chi:", max(abs(u - v) for u, v in zip(xa.comps, ya.comps)))

# [D, dG] = e_chi dG on scalar forms
alpha1 = Field.from_comps(chart, base, 1,
                          {K: rc(i) for i, K in enumerate(ext.multi_indices(3, 1))})
lhs = sp.covariant_D(s, sp.group_D(s, alpha1)) - sp.group_D(s, sp.covariant_D(s, alpha1))
rhs = fl.wedge(chi, sp.group_D(s, alpha1))
xa, ya = lhs.at(pt), rhs.at(pt)
print("[D,dG] = e_chi dG:", max(abs(u - v) for u, v in zip(xa.comps, ya.comps)), xa.wg, ya.wg)

# D^2 = -e_Omega dG
lhs = sp.covariant_D(s, sp.covariant_D(s, alpha1))
rhs = fl.wedge(Om, sp.group_D(s, alpha1)).scaled(-1.0)
xa, ya = lhs.at(pt), rhs.at(pt)
print("D^2 = -e_Om dG:", max(abs(u - v) for u, v in zip(xa.comps, ya.comps)))

# Bianchi
r1, r2 = sp.bianchi_residuals(s)
print("bianchi:", r1.at(pt).max_abs(), r2.at(pt).max_abs())

# hor + ver = Id on random multivector
v2 = Field.from_comps(chart, axes4, 2,
                      {K: rc(i) for i, K in enumerate(ext.multi_indices(4, 2))},
                      kind=MultiVec)
hv = sp.hor(s, v2) + sp.ver(s, v2)
xa, ya = hv.at(pt), v2.at(pt)
print("hor+ver=Id:", max(abs(u - v) for u, v in zip(xa.comps, ya.comps)))

# vector split round trip
kk, ll = sp.split_vector(s, v2)
back_v = sp.unsplit_vector(s, (kk, ll))
xa, ya = back_v.at(pt), v2.at(pt)
print("vector round trip:", max(abs(u - v) for u, v in zip(xa.comps, ya.comps)))
