"""Metric machinery: Riesz and Hodge operators, observer metric, lapse and
shift, regular and nonregular splittings of the metric operators, kinematic
parameters, and the proxy map.

Conventions: signature (+,-,-,-) on the space-time chart, pd(g) = L^2, and a
fixed future time orientation per scenario (group twists are recorded as an
orientation sign, not carried as tags).
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from . import dual, exterior as ext, fields as fl, splitting as sp
from .dims import Dimension, ONE as DIM1, C0_DIM, L as DIM_L, T as DIM_T
from .dual import habs, real, sqrt
from .exterior import CoForm, MultiVec, multi_indices
from .fields import Chart, Field


@dataclass
class MetricField:
    """Symmetric 2-tensor with components over a subset of scene axes.

    Used for the space-time metric g, the observer metrics h, and derived
    symmetric tensors (expansion, shear).
    """

    chart: Chart
    axes: tuple
    mat_fn: object               # point -> nested list, len(axes) square
    dim: Dimension = DIM_L ** 2

    @property
    def n(self) -> int:
        return len(self.axes)

    def matrix(self, p):
        return self.mat_fn(p)

    def inv_matrix(self, p):
        return ext.inv(self.mat_fn(p))

    @classmethod
    def from_entries(cls, chart, axes, entries, dim=DIM_L ** 2):
        """Build from {(i, j) local index: fn or constant}; symmetrized."""
        n = len(axes)

        def mat_fn(p):
            m = [[0.0] * n for _ in range(n)]
            for (i, j), f in entries.items():
                v = f(p) if callable(f) else f
                m[i][j] = v
                if i != j:
                    m[j][i] = v
            return m

        return cls(chart, tuple(axes), mat_fn, dim)


def eval_scalar(f: Field, p):
    return f.comps_fn(p)[0]


# ---------------------------------------------------------------------------
# Riesz and Hodge

def riesz(g: MetricField, v: Field) -> Field:
    """Index lowering, extended to degree k by exterior compound."""
    if v.axes != g.axes:
        raise ValueError("metric and field axes differ")
    k = v.degree

    def comps_fn(p):
        return ext.lower_comps(v.n, k, v.comps_fn(p), g.matrix(p))

    return replace(v, comps_fn=comps_fn, kind=CoForm, dim=v.dim * g.dim ** k)


def riesz_inv(g: MetricField, f: Field) -> Field:
    """Index raising with the inverse metric."""
    if f.axes != g.axes:
        raise ValueError("metric and field axes differ")
    k = f.degree

    def comps_fn(p):
        return ext.lower_comps(f.n, k, f.comps_fn(p), g.inv_matrix(p))

    return replace(f, comps_fn=comps_fn, kind=MultiVec, dim=f.dim / g.dim ** k)


def hodge(g: MetricField, f: Field) -> Field:
    """Hodge operator of the metric g on the field's axes; toggles the
    spatial twist and multiplies the dimension by L^(n-2k)."""
    if f.axes != g.axes:
        raise ValueError("metric and field axes differ")
    n, k = f.n, f.degree

    def comps_fn(p):
        gm = g.matrix(p)
        return ext.hodge_comps(n, k, f.comps_fn(p), gm)

    return replace(f, degree=n - k, comps_fn=comps_fn,
                   twist_x=not f.twist_x, dim=f.dim * DIM_L ** (n - 2 * k),
                   zero=f.zero)


def unit_volume(g: MetricField) -> Field:
    """Twisted unit volume form sqrt|det g| dx^1...dx^n."""
    n = g.n

    def comps_fn(p):
        return (sqrt(habs(ext.det(g.matrix(p)))),)

    return Field(g.chart, g.axes, n, comps_fn, twist_x=True,
                 dim=DIM_L ** n)


def norm(g: MetricField, v: Field) -> Field:
    """Pointwise norm |v| = sqrt|g(v)(v)| of a vector or 1-form field.

    The Lie-value of the argument is preserved: the norm of a
    coalgebra-valued vector field is coalgebra-valued (orientation already
    fixed, so no group twist is carried).
    """
    if v.degree != 1:
        raise ValueError("norm is implemented for degree-1 fields")
    use_inv = v.kind is CoForm

    def comps_fn(p):
        m = g.inv_matrix(p) if use_inv else g.matrix(p)
        c = v.comps_fn(p)
        s = 0.0
        for i in range(v.n):
            for j in range(v.n):
                s = s + m[i][j] * c[i] * c[j]
        return (sqrt(habs(s)),)

    return Field(v.chart, v.axes, 0, comps_fn, wg=v.wg, wu=v.wu,
                 dim=v.dim * DIM_L, twist_x=v.twist_x)


# ---------------------------------------------------------------------------
# observer metric, lapse, shift

def observer_metric(s: sp.SplittingStructure, g: MetricField) -> MetricField:
    """Connection-induced metric h_Sigma = -Sigma* g on the base axes."""
    imgs = _sigma_images(s)
    base = s.base_axes

    def mat_fn(p):
        gm = g.matrix(p)
        rows = imgs(p)
        nb = len(base)
        out = [[0.0] * nb for _ in range(nb)]
        for i in range(nb):
            for j in range(i, nb):
                sacc = 0.0
                for a in range(g.n):
                    for b in range(g.n):
                        sacc = sacc + gm[a][b] * rows[i][a] * rows[j][b]
                out[i][j] = -sacc
                out[j][i] = out[i][j]
        return out

    return MetricField(g.chart, base, mat_fn, g.dim)


def fiber_metric(s: sp.SplittingStructure, g: MetricField) -> MetricField:
    """Fiber-induced metric: h_Pi^{-1} = -Pi g^{-1} (spatial block of the
    inverse space-time metric, negated, then inverted)."""
    base = s.base_axes
    base_pos = [s.total_axes.index(a) for a in base]

    def mat_fn(p):
        gi = g.inv_matrix(p)
        block = [[-gi[a][b] for b in base_pos] for a in base_pos]
        return ext.inv(block)

    return MetricField(g.chart, base, mat_fn, g.dim)


def _sigma_images(s: sp.SplittingStructure):
    """Rows = horizontal lifts of the base frame in chart components."""
    fl_pos = s.fiber_local
    n = len(s.total_axes)
    b_cols = [j for j in range(n) if j != fl_pos]

    def imgs(p):
        gam = s.gamma.comps_fn(p)
        rows = []
        for a in range(len(b_cols)):
            row = [0.0] * n
            row[b_cols[a]] = 1.0
            row[fl_pos] = -gam[a]
            rows.append(row)
        return rows

    return imgs


@dataclass
class ObserverFrame:
    """Lapse/shift data of a (possibly nonregular) splitting."""

    h_sigma: MetricField
    h_pi: MetricField
    lapse: Field          # N, coalgebra-valued, pd = L
    lapse_inv: Field      # N^-1, algebra-valued, pd = L^-1
    lapse_dag: Field      # N-dagger
    lapse_dag_inv: Field  # its inverse
    xi: Field             # N-dagger / N >= 1, == 1 iff regular
    shift_vec: Field      # N-vec, coalgebra-valued parametric vector
    shift_form: Field     # nu, algebra-valued parametric 1-form
    w_dag: Field          # reciprocal fundamental field (space-time)
    omega_dag: Field      # reciprocal connection 1-form (space-time)


def lapse_shift(s: sp.SplittingStructure, g: MetricField) -> ObserverFrame:
    fl_pos = s.fiber_local
    n = len(s.total_axes)
    base_pos = [j for j in range(n) if j != fl_pos]
    chart = g.chart

    def n_c(p):
        gm = g.matrix(p)
        v = gm[fl_pos][fl_pos]
        if real(v) <= 0.0:
            raise ValueError("fundamental field is not time-like here")
        return sqrt(v)

    def omega_comps(p):
        gam = s.gamma.comps_fn(p)
        out = [0.0] * n
        out[fl_pos] = 1.0
        for bp, gv in zip(base_pos, gam):
            out[bp] = gv
        return out

    def ndaginv_c(p):
        gi = g.inv_matrix(p)
        om = omega_comps(p)
        sacc = 0.0
        for i in range(n):
            for j in range(n):
                sacc = sacc + gi[i][j] * om[i] * om[j]
        if real(sacc) <= 0.0:
            raise ValueError("connection form is not time-like here")
        return sqrt(sacc)

    base = s.base_axes
    lapse = Field.scalar(chart, lambda p: n_c(p), axes=base,
                         wg=-1, dim=DIM_L)
    lapse_inv = Field.scalar(chart, lambda p: 1.0 / n_c(p), axes=base,
                             wg=1, dim=DIM_L ** -1)
    lapse_dag_inv = Field.scalar(chart, ndaginv_c, axes=base,
                                 wg=1, dim=DIM_L ** -1)
    lapse_dag = Field.scalar(chart, lambda p: 1.0 / ndaginv_c(p),
                             axes=base, wg=-1, dim=DIM_L)
    # xi = N-dagger / N >= 1 by the reversed Cauchy-Schwarz inequality for
    # time-like directions, with equality exactly for regular splittings.
    xi = Field.scalar(chart, lambda p: 1.0 / (n_c(p) * ndaginv_c(p)),
                      axes=base)

    def wdag_comps(p):
        gi = g.inv_matrix(p)
        om = omega_comps(p)
        nd2 = 1.0 / ndaginv_c(p) ** 2
        return tuple(nd2 * sum(gi[mu][nu] * om[nu] for nu in range(n))
                     for mu in range(n))

    w_dag = Field(chart, s.total_axes, 1, wdag_comps, kind=MultiVec, wg=-1)

    def odag_comps(p):
        gm = g.matrix(p)
        n2 = n_c(p) ** 2
        return tuple(gm[mu][fl_pos] / n2 for mu in range(n))

    omega_dag = Field(chart, s.total_axes, 1, odag_comps, wg=1)

    shift_vec = sp.pi_push(s, w_dag).scaled(-1.0)
    shift_form = sp.sigma_star(s, omega_dag).scaled(-1.0)

    return ObserverFrame(
        h_sigma=observer_metric(s, g),
        h_pi=fiber_metric(s, g),
        lapse=lapse, lapse_inv=lapse_inv,
        lapse_dag=lapse_dag, lapse_dag_inv=lapse_dag_inv,
        xi=xi, shift_vec=shift_vec, shift_form=shift_form,
        w_dag=w_dag, omega_dag=omega_dag)


# ---------------------------------------------------------------------------
# splittings of the metric operators

def _require_pair(pair, kind):
    a, b = pair
    if not (a.kind is kind or a.zero) or not (b.kind is kind or b.zero):
        raise TypeError("pair of the wrong kind")
    return a, b


def split_riesz_regular(s, g, pair_vec, obs: ObserverFrame = None):
    """[[1, 0], [0, (N N)]] h n  applied to a split pair of multivectors."""
    k, l = _require_pair(pair_vec, MultiVec)
    obs = obs or lapse_shift(s, g)
    h = obs.h_sigma
    slot1 = riesz(h, fl.sign_n(k))
    slot2 = fl.wedge(obs.lapse, fl.wedge(obs.lapse, riesz(h, fl.sign_n(l))))
    return slot1, slot2


def split_riesz_regular_inv(s, g, pair_form, obs: ObserverFrame = None):
    a, b = _require_pair(pair_form, CoForm)
    obs = obs or lapse_shift(s, g)
    h = obs.h_sigma
    slot1 = riesz_inv(h, fl.sign_n(a))
    slot2 = fl.wedge(obs.lapse_inv,
                     fl.wedge(obs.lapse_inv, riesz_inv(h, fl.sign_n(b))))
    return slot1, slot2


def split_hodge_regular(s, g, pair_form, obs: ObserverFrame = None):
    """[[0, N^-1 *3 n], [N *3, 0]] on a split pair of forms."""
    a, b = _require_pair(pair_form, CoForm)
    obs = obs or lapse_shift(s, g)
    h = obs.h_sigma
    slot1 = fl.wedge(obs.lapse_inv, hodge(h, fl.sign_n(b)))
    slot2 = fl.wedge(obs.lapse, hodge(h, a))
    return slot1, slot2


def _scalar_pow(f: Field, k: int) -> Field:
    fn = f.comps_fn
    return replace(f, comps_fn=lambda p: (fn(p)[0] ** k,),
                   dim=f.dim ** k)


def split_riesz_nonregular(s, g, pair_vec, basis: str = "sigma",
                           obs: ObserverFrame = None):
    """Nonregular splitting of the Riesz operator; `basis` picks whether the
    connection-induced or the fiber-induced base metric appears.

    Writing r = N / N-dagger (<= 1, the reciprocal of the classification
    scalar xi), the shear matrices read
        sigma:  [[Id, -e_nu], [i_N, r^-2 Id - i_N e_nu]]
        pi:     r^2 [[r^-2 Id - e_nu i_N, -e_nu], [i_N, Id]].
    """
    k, l = _require_pair(pair_vec, MultiVec)
    obs = obs or lapse_shift(s, g)
    nu, Nv = obs.shift_form, obs.shift_vec
    rm2 = _scalar_pow(obs.xi, 2)      # r^-2
    r2 = _scalar_pow(obs.xi, -2)      # r^2
    if basis == "sigma":
        h = obs.h_sigma
        i1 = riesz(h, fl.sign_n(k))
        i2 = fl.wedge(obs.lapse, fl.wedge(obs.lapse, riesz(h, fl.sign_n(l))))
        out1 = i1 - fl.wedge(nu, i2)
        out2 = (fl.contract(Nv, i1) + fl.wedge(rm2, i2)
                - fl.contract(Nv, fl.wedge(nu, i2)))
        return out1, out2
    if basis == "pi":
        h = obs.h_pi
        i1 = riesz(h, fl.sign_n(k))
        i2 = fl.wedge(obs.lapse_dag,
                      fl.wedge(obs.lapse_dag, riesz(h, fl.sign_n(l))))
        out1 = i1 - fl.wedge(r2, fl.wedge(nu, fl.contract(Nv, i1) + i2))
        out2 = fl.wedge(r2, fl.contract(Nv, i1) + i2)
        return out1, out2
    raise ValueError("basis must be 'sigma' or 'pi'")


def split_riesz_nonregular_inv(s, g, pair_form, basis: str = "sigma",
                               obs: ObserverFrame = None):
    a, b = _require_pair(pair_form, CoForm)
    obs = obs or lapse_shift(s, g)
    nu, Nv = obs.shift_form, obs.shift_vec
    rm2 = _scalar_pow(obs.xi, 2)
    r2 = _scalar_pow(obs.xi, -2)
    if basis == "sigma":
        # r^2 [[r^-2 Id - e_nu i_N, e_nu], [-i_N, Id]]
        u1 = a - fl.wedge(r2, fl.wedge(nu, fl.contract(Nv, a) - b))
        u2 = fl.wedge(r2, b - fl.contract(Nv, a))
        h = obs.h_sigma
        slot1 = riesz_inv(h, fl.sign_n(u1))
        slot2 = fl.wedge(obs.lapse_inv,
                         fl.wedge(obs.lapse_inv, riesz_inv(h, fl.sign_n(u2))))
        return slot1, slot2
    if basis == "pi":
        # [[Id, e_nu], [-i_N, r^-2 Id - i_N e_nu]]
        u1 = a + fl.wedge(nu, b)
        u2 = (fl.wedge(rm2, b) - fl.contract(Nv, a)
              - fl.contract(Nv, fl.wedge(nu, b)))
        h = obs.h_pi
        slot1 = riesz_inv(h, fl.sign_n(u1))
        slot2 = fl.wedge(obs.lapse_dag_inv,
                         fl.wedge(obs.lapse_dag_inv,
                                  riesz_inv(h, fl.sign_n(u2))))
        return slot1, slot2
    raise ValueError("basis must be 'sigma' or 'pi'")


def split_hodge_nonregular(s, g, pair_form, basis: str = "sigma",
                           obs: ObserverFrame = None):
    """Nonregular splitting of the Hodge operator (overall factor r)."""
    a, b = _require_pair(pair_form, CoForm)
    obs = obs or lapse_shift(s, g)
    nu, Nv = obs.shift_form, obs.shift_vec
    rm2 = _scalar_pow(obs.xi, 2)
    r = _scalar_pow(obs.xi, -1)
    rm1 = obs.xi
    if basis == "sigma":
        h = obs.h_sigma
        i1 = fl.wedge(obs.lapse_inv, hodge(h, fl.sign_n(b)))
        i2 = fl.wedge(obs.lapse, hodge(h, a))
        o1 = i1 - fl.wedge(nu, i2)
        o2 = (fl.contract(Nv, i1) + fl.wedge(rm2, i2)
              - fl.contract(Nv, fl.wedge(nu, i2)))
        return fl.wedge(r, o1), fl.wedge(r, o2)
    if basis == "pi":
        h = obs.h_pi
        i1 = fl.wedge(obs.lapse_dag_inv, hodge(h, fl.sign_n(b)))
        i2 = fl.wedge(obs.lapse_dag, hodge(h, a))
        o1 = fl.wedge(rm1, i1) - fl.wedge(
            r, fl.wedge(nu, fl.contract(Nv, i1) + i2))
        o2 = fl.wedge(r, fl.contract(Nv, i1) + i2)
        return o1, o2
    raise ValueError("basis must be 'sigma' or 'pi'")


# ---------------------------------------------------------------------------
# four-velocity, proper time, kinematic parameters

def four_velocity(s, g, c0: float) -> Field:
    obs = lapse_shift(s, g)
    fl_pos = s.fiber_local
    n = len(s.total_axes)
    ninv = obs.lapse_inv.comps_fn

    def comps_fn(p):
        return tuple(c0 * ninv(p)[0] if m == fl_pos else 0.0
                     for m in range(n))

    return Field(g.chart, s.total_axes, 1, comps_fn, kind=MultiVec,
                 dim=DIM_T ** -1)


def proper_time_d(s, g, f: Field, c0: float,
                  obs: ObserverFrame = None) -> Field:
    """d_tau = c0 N^-1 dG, a derivation of degree 0."""
    obs = obs or lapse_shift(s, g)
    return fl.wedge(obs.lapse_inv.scaled(c0, C0_DIM), sp.group_D(s, f))


def lie_metric(v: Field, g: MetricField):
    """Components of L_v g (Leibniz rule on a symmetric 2-tensor)."""
    if v.axes != g.axes:
        raise ValueError("vector and metric axes differ")
    n = g.n
    axes = g.axes

    def mat(p):
        vv = v.comps_fn(p)
        dg = []
        dv = []
        for ax in axes:
            q, lvl = dual.seed(list(p), ax)
            dg.append([[dual.d_part(x, lvl) for x in row]
                       for row in g.matrix(q)])
            dv.append([dual.d_part(x, lvl) for x in v.comps_fn(q)])
        gm = g.matrix(p)
        out = [[0.0] * n for _ in range(n)]
        for mu in range(n):
            for nu in range(mu, n):
                sacc = 0.0
                for kk in range(n):
                    sacc = (sacc + vv[kk] * dg[kk][mu][nu]
                            + gm[kk][nu] * dv[mu][kk]
                            + gm[mu][kk] * dv[nu][kk])
                out[mu][nu] = sacc
                out[nu][mu] = sacc
        return out

    return mat


def pull_tensor(s, mat_fn, src_n):
    """Pull a symmetric 2-tensor to the base through the horizontal lift."""
    imgs = _sigma_images(s)
    nb = len(s.base_axes)

    def out(p):
        m = mat_fn(p)
        rows = imgs(p)
        res = [[0.0] * nb for _ in range(nb)]
        for i in range(nb):
            for j in range(i, nb):
                sacc = 0.0
                for a in range(src_n):
                    for b in range(src_n):
                        sacc = sacc + m[a][b] * rows[i][a] * rows[j][b]
                res[i][j] = sacc
                res[j][i] = sacc
        return res

    return out


@dataclass
class Kinematics:
    delta: Field              # acceleration form (coalgebra-valued)
    eta: Field                # vorticity 2-form
    expansion: MetricField    # expansion tensor lambda
    shear: MetricField        # trace-free part sigma
    expansion_scalar: Field   # lambda = Tr(h^-1 lambda)


def kinematics(s, g, c0: float, obs: ObserverFrame = None) -> Kinematics:
    obs = obs or lapse_shift(s, g)
    u = four_velocity(s, g, c0)
    mu = riesz(g, u)
    lu_mu = fl.lie_derivative(u, mu)
    delta = fl.wedge(obs.lapse, sp.sigma_star(s, lu_mu)).scaled(
        1.0 / c0, C0_DIM ** -1)
    eta = sp.sigma_star(s, fl.exterior_d(mu)).scaled(0.5)

    lug = lie_metric(u, g)
    pulled = pull_tensor(s, lug, len(s.total_axes))

    def lam_fn(p):
        m = pulled(p)
        return [[-0.5 * x for x in row] for row in m]

    lam = MetricField(g.chart, s.base_axes, lam_fn, g.dim * DIM_T ** -1)
    h = obs.h_sigma

    def lam_scalar_fn(p):
        hi = h.inv_matrix(p)
        lm = lam.matrix(p)
        nb = len(s.base_axes)
        return sum(hi[i][j] * lm[j][i] for i in range(nb) for j in range(nb))

    lam_scalar = Field.scalar(g.chart, lam_scalar_fn, axes=s.base_axes,
                              dim=DIM_T ** -1)

    def shear_fn(p):
        lm = lam.matrix(p)
        hm = h.matrix(p)
        tr = lam_scalar_fn(p)
        nb = len(s.base_axes)
        return [[lm[i][j] - tr / 3.0 * hm[i][j] for j in range(nb)]
                for i in range(nb)]

    shear = MetricField(g.chart, s.base_axes, shear_fn, g.dim * DIM_T ** -1)
    return Kinematics(delta, eta, lam, shear, lam_scalar)


def delta_from_connection(s, g, c0: float, obs: ObserverFrame = None) -> Field:
    """Acceleration form from splitting data: c0 N (chi - N^-1 D N)."""
    obs = obs or lapse_shift(s, g)
    chi = sp.variance_chi(s)
    ninv_dn = fl.wedge(obs.lapse_inv, sp.covariant_D(s, obs.lapse),
                       tensor_slot=s.slot)
    return fl.wedge(obs.lapse, chi - ninv_dn).scaled(c0, C0_DIM)


def eta_from_connection(s, g, c0: float, obs: ObserverFrame = None) -> Field:
    """Vorticity from curvature: 2 eta = c0 N Omega."""
    obs = obs or lapse_shift(s, g)
    return fl.wedge(obs.lapse, sp.curvature_omega(s)).scaled(0.5 * c0,
                                                              C0_DIM)


def metric_dt(s, m: MetricField, c0: float, obs: ObserverFrame):
    """Proper-time derivative of a parametric symmetric tensor."""
    ninv = obs.lapse_inv.comps_fn
    fiber = s.fiber_axis

    def mat(p):
        q, lvl = dual.seed(list(p), fiber)
        dm = [[dual.d_part(x, lvl) for x in row] for row in m.matrix(q)]
        f = c0 * ninv(p)[0]
        return [[f * x for x in row] for row in dm]

    return MetricField(m.chart, m.axes, mat, m.dim * DIM_T ** -1)


# ---------------------------------------------------------------------------
# proxies

def proxy_form_pair(s, g, c0, pair, obs: ObserverFrame = None):
    """(alpha, beta~) -> (alpha, c0 N^-1 beta~)."""
    obs = obs or lapse_shift(s, g)
    a, b = pair
    return a, fl.wedge(obs.lapse_inv.scaled(c0, C0_DIM), b)


def unproxy_form_pair(s, g, c0, pair, obs: ObserverFrame = None):
    obs = obs or lapse_shift(s, g)
    a, b = pair
    return a, fl.wedge(obs.lapse.scaled(1.0 / c0, C0_DIM ** -1), b)


def proxy_vec_pair(s, g, c0, pair, obs: ObserverFrame = None):
    obs = obs or lapse_shift(s, g)
    k, l = pair
    return k, fl.wedge(obs.lapse.scaled(1.0 / c0, C0_DIM ** -1), l)


def unproxy_vec_pair(s, g, c0, pair, obs: ObserverFrame = None):
    obs = obs or lapse_shift(s, g)
    k, l = pair
    return k, fl.wedge(obs.lapse_inv.scaled(c0, C0_DIM), l)


def proxy_kinematic_forms(s, g, c0, obs: ObserverFrame = None):
    """(2 eta-bar, delta-bar): the ordinary-valued stand-ins entering the
    proxy split of the exterior derivative."""
    obs = obs or lapse_shift(s, g)
    chi0 = replace(sp.variance_chi(s), wg=0)
    ninv_dn = fl.wedge(obs.lapse_inv, sp.covariant_D(s, obs.lapse))
    delta_bar = (chi0 - ninv_dn).scaled(c0 * c0, C0_DIM ** 2)
    two_eta_bar = fl.wedge(obs.lapse, sp.curvature_omega(s)).scaled(
        c0, C0_DIM)
    return two_eta_bar, delta_bar


def proxy_d_matrix(s, g, c0, pair, obs: ObserverFrame = None):
    """[[D, c0^-2 e_{2 eta-bar}], [d_tau, c0^-2 e_{delta-bar} - D]]."""
    obs = obs or lapse_shift(s, g)
    a, b = pair
    two_eta_bar, delta_bar = proxy_kinematic_forms(s, g, c0, obs)
    top = sp._safe_D(s, a) + fl.wedge(two_eta_bar, b).scaled(
        c0 ** -2, C0_DIM ** -2)
    bottom = (proper_time_d(s, g, a, c0, obs)
              + fl.wedge(delta_bar, b).scaled(c0 ** -2, C0_DIM ** -2)
              - sp._safe_D(s, b))
    return top, bottom


def proxy_hodge_regular(s, g, c0, pair, obs: ObserverFrame = None):
    """[[0, c0^-1 *3 n], [c0 *3, 0]] on proxy pairs."""
    obs = obs or lapse_shift(s, g)
    a, b = pair
    h = obs.h_sigma
    return (hodge(h, fl.sign_n(b)).scaled(1.0 / c0, C0_DIM ** -1),
            hodge(h, a).scaled(c0, C0_DIM))


def proxy_riesz_regular(s, g, c0, pair_vec, obs: ObserverFrame = None):
    obs = obs or lapse_shift(s, g)
    k, l = pair_vec
    h = obs.h_sigma
    return (riesz(h, fl.sign_n(k)),
            riesz(h, fl.sign_n(l)).scaled(c0 * c0, C0_DIM ** 2))


def proxy_lie_matrix(s, g, c0, vpair, pair, obs: ObserverFrame = None):
    """Splitting of the Lie derivative in terms of proxies, (k, l) = P S v:
        [[L_k + i_l d_tau, e_{D l} + c0^-2 (i_l e_delta + e_{i_k 2eta})],
         [[d_tau, i_k],    L_k + d_tau i_l - c0^-2 e_{i_k delta}]]."""
    obs = obs or lapse_shift(s, g)
    k, l = vpair
    alpha, beta = pair
    two_eta, delta = proxy_kinematic_forms(s, g, c0, obs)
    ic2 = c0 ** -2

    def dtau(f):
        return proper_time_d(s, g, f, c0, obs)

    def L_k(f):
        return (sp._safe_D(s, sp._safe_contract(k, f))
                + sp._safe_contract(k, sp._safe_D(s, f)))

    l_form = replace(l, kind=CoForm)
    top = (L_k(alpha) + sp._safe_contract(l, dtau(alpha))
           + fl.wedge(sp.covariant_D(s, l_form), beta)
           + sp._safe_contract(l, fl.wedge(delta, beta)).scaled(
               ic2, C0_DIM ** -2)
           + fl.wedge(sp._safe_contract(k, two_eta), beta).scaled(
               ic2, C0_DIM ** -2))
    bottom = (dtau(sp._safe_contract(k, alpha))
              - sp._safe_contract(k, dtau(alpha))
              + L_k(beta) + dtau(sp._safe_contract(l, beta))
              - fl.wedge(sp._safe_contract(k, delta), beta).scaled(
                  ic2, C0_DIM ** -2))
    return top, bottom


def proxy_shift_fields(s, g, c0, obs: ObserverFrame = None):
    """Proxies of shift vector and shift 1-form: c0 N^-1 N-vec and
    c0^-1 N nu."""
    obs = obs or lapse_shift(s, g)
    vbar = fl.wedge(obs.lapse_inv.scaled(c0, C0_DIM), obs.shift_vec)
    ups = fl.wedge(obs.lapse.scaled(1.0 / c0, C0_DIM ** -1),
                   obs.shift_form)
    return vbar, ups


def proxy_riesz_nonregular(s, g, c0, pair_vec, basis: str = "sigma",
                           obs: ObserverFrame = None):
    obs = obs or lapse_shift(s, g)
    k, l = pair_vec
    vbar, ups = proxy_shift_fields(s, g, c0, obs)
    rm2 = _scalar_pow(obs.xi, 2)
    if basis == "sigma":
        h = obs.h_sigma
        i1 = riesz(h, fl.sign_n(k))
        i2 = riesz(h, fl.sign_n(l)).scaled(c0 * c0, C0_DIM ** 2)
        out1 = i1 - fl.wedge(ups, i2)
        out2 = (fl.contract(vbar, i1) + fl.wedge(rm2, i2)
                - fl.contract(vbar, fl.wedge(ups, i2)))
        return out1, out2
    if basis == "pi":
        # v = r^2 c0 N^-1 N-vec, same ups; no overall factor
        h = obs.h_pi
        r2 = _scalar_pow(obs.xi, -2)
        v = fl.wedge(r2, vbar)
        i1 = riesz(h, fl.sign_n(k))
        i2 = riesz(h, fl.sign_n(l)).scaled(c0 * c0, C0_DIM ** 2)
        out1 = i1 - fl.wedge(ups, fl.contract(v, i1)) - fl.wedge(ups, i2)
        out2 = fl.contract(v, i1) + i2
        return out1, out2
    raise ValueError("basis must be 'sigma' or 'pi'")


def proxy_hodge_nonregular(s, g, c0, pair, basis: str = "sigma",
                           obs: ObserverFrame = None):
    obs = obs or lapse_shift(s, g)
    a, b = pair
    vbar, ups = proxy_shift_fields(s, g, c0, obs)
    rm2 = _scalar_pow(obs.xi, 2)
    r = _scalar_pow(obs.xi, -1)
    if basis == "sigma":
        h = obs.h_sigma
        i1 = hodge(h, fl.sign_n(b)).scaled(1.0 / c0, C0_DIM ** -1)
        i2 = hodge(h, a).scaled(c0, C0_DIM)
        o1 = i1 - fl.wedge(ups, i2)
        o2 = (fl.contract(vbar, i1) + fl.wedge(rm2, i2)
              - fl.contract(vbar, fl.wedge(ups, i2)))
        return fl.wedge(r, o1), fl.wedge(r, o2)
    if basis == "pi":
        h = obs.h_pi
        r2 = _scalar_pow(obs.xi, -2)
        v = fl.wedge(r2, vbar)
        i1 = hodge(h, fl.sign_n(b)).scaled(1.0 / c0, C0_DIM ** -1)
        i2 = hodge(h, a).scaled(c0, C0_DIM)
        o1 = i1 - fl.wedge(ups, fl.contract(v, i1)) - fl.wedge(ups, i2)
        o2 = fl.contract(v, i1) + i2
        return o1, o2
    raise ValueError("basis must be 'sigma' or 'pi'")
