import numpy as np
from relsplit import exterior as ext, fields as fl, splitting as sp
from relsplit.fields import Chart, Field
from relsplit.dual import sin

rng = np.random.default_rng(0)
chart = Chart(("t", "x", "y", "z"))
axes4 = (0, 1, 2, 3)
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


def rc():
    c = [float(v) for v in rng.uniform(-1, 1, 5)]

    def fn(p):
        t, x, y, z = p
        return c[0] + c[1] * x * t + c[2] * y * y + c[3] * z * x + c[4] * sin(x) * t
    return fn


alpha1 = Field.from_comps(chart, base, 1,
                          {K: rc() for K in ext.multi_indices(3, 1)})

Om = sp.curvature_omega(s)
lhs = sp.covariant_D(s, sp.covariant_D(s, alpha1))
rhs = fl.wedge(Om, sp.group_D(s, alpha1)).scaled(-1.0)
print("lhs:", lhs.at(pt).comps)
print("rhs:", rhs.at(pt).comps)

# 4-D route: d(d(S* (alpha,0))) = 0, so S^-* route of D^2-equivalent:
be = Field.zero_field(chart, base, 0, wg=-1)
m1 = sp.split_d_matrix(s, (alpha1, be))
m2 = sp.split_d_matrix(s, m1)
print("matrix^2 slot0 (= D^2 a + Om ^ dG a):", m2[0].at(pt).comps)

# so D^2 alpha + e_Om dG alpha should vanish:
tot = lhs - rhs
print("residual:", tot.at(pt).comps)

# check wedge order: maybe e_Om means Om wedge FROM LEFT with sign conventions
rhs2 = fl.wedge(sp.group_D(s, alpha1), Om).scaled(-1.0)
print("rhs (other order):", rhs2.at(pt).comps)
