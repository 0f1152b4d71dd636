"""Splitting structure for a 1-D translation group over an (n-1)-D base.

A structure fixes, inside one global adapted chart: which scene axis runs
along the fibers, the Christoffel form of the Ehresmann connection on the
base axes, and the orientation of the Lie-algebra basis.  The same class
drives both the space-time splitting (fiber = coordinate time, slot "g")
and the azimuthal splitting used for dimensional reduction (fiber = the
angle coordinate, slot "u").
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from . import dual, exterior as ext, fields as fl
from .dims import ONE as DIM1
from .exterior import CoForm, MultiVec, index_pos, multi_indices
from .fields import Chart, Field


@dataclass
class SplittingStructure:
    chart: Chart
    total_axes: tuple
    fiber_axis: int
    gamma: Field                 # Christoffel form, degree 1 on the base axes
    slot: str = "g"
    lie_orientation: int = 1
    name: str = ""

    def __post_init__(self):
        self.total_axes = tuple(self.total_axes)
        if self.fiber_axis not in self.total_axes:
            raise ValueError("fiber axis must be one of the split axes")
        if self.gamma.axes != self.base_axes:
            raise ValueError("Christoffel form must live on the base axes")
        if self.gamma.degree != 1 and not self.gamma.zero:
            raise ValueError("Christoffel form must have degree 1")
        w = self.gamma.wg if self.slot == "g" else self.gamma.wu
        if w != 1 and not self.gamma.zero:
            raise ValueError("Christoffel form must be algebra-valued")

    @property
    def base_axes(self) -> tuple:
        return tuple(a for a in self.total_axes if a != self.fiber_axis)

    @property
    def fiber_local(self) -> int:
        return self.total_axes.index(self.fiber_axis)

    def weight_of(self, f) -> object:
        return f.wg if self.slot == "g" else f.wu

    def _wkey(self) -> str:
        return "wg" if self.slot == "g" else "wu"


def natural(chart: Chart, total_axes, fiber_axis: int, slot: str = "g",
            name: str = "natural") -> SplittingStructure:
    """Structure whose connection is the chart-associated one (Gamma = 0)."""
    base = tuple(a for a in total_axes if a != fiber_axis)
    gam = Field.zero_field(chart, base, 1, **{("wg" if slot == "g" else "wu"): 1})
    return SplittingStructure(chart, total_axes, fiber_axis, gam, slot,
                              name=name)


def from_gamma_comps(chart: Chart, total_axes, fiber_axis: int, comp_map,
                     slot: str = "g", name: str = "") -> SplittingStructure:
    base = tuple(a for a in total_axes if a != fiber_axis)
    gam = Field.from_comps(chart, base, 1, comp_map,
                           **{("wg" if slot == "g" else "wu"): 1})
    return SplittingStructure(chart, total_axes, fiber_axis, gam, slot,
                              name=name)


# ---------------------------------------------------------------------------
# fundamental field and connection 1-form

def fundamental_w(s: SplittingStructure) -> Field:
    """w: the coalgebra-valued vertical unit vector field."""
    n = len(s.total_axes)
    comps = tuple(1.0 if i == s.fiber_local else 0.0 for i in range(n))
    return Field(s.chart, s.total_axes, 1, lambda p: comps, kind=MultiVec,
                 **{s._wkey(): -1})


def connection_omega(s: SplittingStructure) -> Field:
    """omega: the algebra-valued connection 1-form (dx^0 + Gamma_i dx^i)."""
    n = len(s.total_axes)
    fl_pos = s.fiber_local
    base_pos = [i for i in range(n) if i != fl_pos]

    def comps_fn(p):
        gam = s.gamma.comps_fn(p)
        out = [0.0] * n
        out[fl_pos] = 1.0
        for bp, gv in zip(base_pos, gam):
            out[bp] = gv
        return tuple(out)

    return Field(s.chart, s.total_axes, 1, comps_fn, **{s._wkey(): 1})


def coframe_eps0(s: SplittingStructure) -> Field:
    """The scalar coefficient form of the connection (the adapted coframe
    element along the fiber)."""
    om = connection_omega(s)
    return replace(om, **{s._wkey(): 0})


# ---------------------------------------------------------------------------
# parametric maps

def _sigma_star_img(s: SplittingStructure):
    n_src, n_tgt = len(s.total_axes), len(s.base_axes)
    fl_pos = s.fiber_local

    def img_fn(p):
        gam = s.gamma.comps_fn(p)
        rows = []
        b = 0
        for i in range(n_src):
            if i == fl_pos:
                rows.append([-gv for gv in gam])
            else:
                rows.append([1.0 if j == b else 0.0 for j in range(n_tgt)])
                b += 1
        return rows

    return img_fn


def sigma_star(s: SplittingStructure, f: Field) -> Field:
    """Pullback under the horizontal lift: dx^fiber -> -Gamma_i dx^i."""
    if f.axes != s.total_axes:
        raise ValueError("sigma_star expects a field on the split axes")
    return fl.pull_through(f, s.base_axes, _sigma_star_img(s), kind=CoForm)


def pi_star(s: SplittingStructure, f: Field) -> Field:
    """Inclusion of parametric forms as horizontal forms."""
    if f.axes != s.base_axes:
        raise ValueError("pi_star expects a field on the base axes")
    n_src, n_tgt = len(s.base_axes), len(s.total_axes)
    fl_pos = s.fiber_local
    rows = []
    b_cols = [j for j in range(n_tgt) if j != fl_pos]
    for a in range(n_src):
        rows.append([1.0 if j == b_cols[a] else 0.0 for j in range(n_tgt)])

    return fl.pull_through(f, s.total_axes, lambda p: rows, kind=CoForm)


def sigma_push(s: SplittingStructure, v: Field) -> Field:
    """Horizontal lift of parametric multivectors."""
    if v.axes != s.base_axes:
        raise ValueError("sigma_push expects a field on the base axes")
    n_src, n_tgt = len(s.base_axes), len(s.total_axes)
    fl_pos = s.fiber_local
    b_cols = [j for j in range(n_tgt) if j != fl_pos]

    def img_fn(p):
        gam = s.gamma.comps_fn(p)
        rows = []
        for a in range(n_src):
            row = [0.0] * n_tgt
            row[b_cols[a]] = 1.0
            row[fl_pos] = -gam[a]
            rows.append(row)
        return rows

    return fl.pull_through(v, s.total_axes, img_fn, kind=MultiVec)


def pi_push(s: SplittingStructure, v: Field) -> Field:
    """Projection of multivectors to the base (kills vertical parts)."""
    if v.axes != s.total_axes:
        raise ValueError("pi_push expects a field on the split axes")
    n_src, n_tgt = len(s.total_axes), len(s.base_axes)
    fl_pos = s.fiber_local
    rows = []
    b = 0
    for a in range(n_src):
        if a == fl_pos:
            rows.append([0.0] * n_tgt)
        else:
            rows.append([1.0 if j == b else 0.0 for j in range(n_tgt)])
            b += 1
    return fl.pull_through(v, s.base_axes, lambda p: rows, kind=MultiVec)


# ---------------------------------------------------------------------------
# splitting maps

def split_form(s: SplittingStructure, f: Field):
    """gamma -> (alpha, beta~) = (Sigma* gamma, Sigma* i_w gamma)."""
    alpha = sigma_star(s, f)
    if f.degree == 0:
        beta = Field.zero_field(s.chart, s.base_axes, 0, **f._meta())
        beta = replace(beta, **{s._wkey(): _add_coweight(s.weight_of(f))})
        return alpha, beta
    tslot = s.slot if s.weight_of(f) == 1 else None
    iwf = fl.contract(fundamental_w(s), f, tensor_slot=tslot)
    return alpha, sigma_star(s, iwf)


def unsplit_form(s: SplittingStructure, pair) -> Field:
    """(alpha, beta~) -> Pi* alpha + omega ^ Pi* beta~."""
    alpha, beta = pair
    head = pi_star(s, alpha)
    if beta.zero:
        return head
    tail = fl.wedge(connection_omega(s), pi_star(s, beta))
    return head + tail


def split_vector(s: SplittingStructure, v: Field):
    """v -> (k, l~) = (Pi v, Pi i_omega v)."""
    k = pi_push(s, v)
    if v.degree == 0:
        l = Field.zero_field(s.chart, s.base_axes, 0, kind=MultiVec,
                             **v._meta())
        l = replace(l, **{s._wkey(): _add_weight(s.weight_of(v))})
        return k, l
    iov = fl.contract_vec(connection_omega(s), v)
    return k, pi_push(s, iov)


def unsplit_vector(s: SplittingStructure, pair) -> Field:
    k, l = pair
    head = sigma_push(s, k)
    if l.zero:
        return head
    tail = fl.wedge(fundamental_w(s), sigma_push(s, l))
    return head + tail


def _add_coweight(w):
    return {0: -1, 1: "T"}.get(w, 0)


def _add_weight(w):
    return {0: 1, -1: "T"}.get(w, 0)


def hor(s: SplittingStructure, v: Field) -> Field:
    """Horizontal projector i_omega (w ^ .) on multivectors."""
    return fl.contract_vec(connection_omega(s), fl.wedge(fundamental_w(s), v))


def ver(s: SplittingStructure, v: Field) -> Field:
    """Vertical projector w ^ (i_omega .) on multivectors."""
    return fl.wedge(fundamental_w(s), fl.contract_vec(connection_omega(s), v))


# ---------------------------------------------------------------------------
# derivatives on the base

def group_D(s: SplittingStructure, f: Field) -> Field:
    return fl.group_d(f, s.fiber_axis, s.slot)


def covariant_D(s: SplittingStructure, f: Field) -> Field:
    """D = dx^i ^ (d_i - Gamma_i d_t), any valuedness."""
    if f.axes != s.base_axes:
        raise ValueError("covariant derivative acts on parametric fields")
    n, k = f.n, f.degree
    if k >= n:
        raise ValueError("covariant derivative of a top-degree form")
    if f.zero:
        return Field.zero_field(s.chart, f.axes, k + 1, kind=f.kind,
                                **f._meta())
    pos_in = index_pos(n, k)
    base_axes = s.base_axes
    fiber = s.fiber_axis

    def comps_fn(p):
        gam = s.gamma.comps_fn(p)
        qt, lt = dual.seed(p, fiber)
        dt = tuple(dual.d_part(c, lt) for c in f.comps_fn(qt))
        parts = []
        for lb, ax in enumerate(base_axes):
            qa, la = dual.seed(p, ax)
            da = tuple(dual.d_part(c, la) for c in f.comps_fn(qa))
            parts.append(tuple(a - gam[lb] * t for a, t in zip(da, dt)))
        out = []
        for K in multi_indices(n, k + 1):
            sacc = 0.0
            for t_pos, t in enumerate(K):
                rest = K[:t_pos] + K[t_pos + 1:]
                term = parts[t][pos_in[rest]]
                sacc = sacc + (-term if t_pos % 2 else term)
            out.append(sacc)
        return tuple(out)

    return replace(f, degree=k + 1, comps_fn=comps_fn)


def variance_chi(s: SplittingStructure) -> Field:
    return group_D(s, s.gamma)


def curvature_omega(s: SplittingStructure) -> Field:
    return covariant_D(s, s.gamma)


def _safe_D(s: SplittingStructure, f: Field) -> Field:
    """Covariant derivative, with top-degree input mapped to the zero field
    (its image would live beyond the top degree)."""
    if f.degree >= f.n or f.zero:
        return Field.zero_field(s.chart, f.axes, f.degree + 1,
                                kind=f.kind, **f._meta())
    return covariant_D(s, f)


def split_d_matrix(s: SplittingStructure, pair):
    """The 2x2 operator matrix [[D, e_Omega], [dG, e_chi - D]]."""
    alpha, beta = pair
    top = _safe_D(s, alpha) + fl.wedge(curvature_omega(s), beta)
    bottom = (group_D(s, alpha) + fl.wedge(variance_chi(s), beta)
              - _safe_D(s, beta))
    return top, bottom


def change_connection(s_a: SplittingStructure, s_b: SplittingStructure, pair):
    """[[Id, e_{Gamma_a - Gamma_b}], [0, Id]] between splittings over the
    same fiber chart."""
    alpha, beta = pair
    dg = s_a.gamma - s_b.gamma
    if beta.zero or dg.zero:
        return alpha, beta
    return alpha + fl.wedge(dg, beta), beta


def _safe_contract(v: Field, f: Field, tensor_slot=None) -> Field:
    """Contraction, with over-degree input mapped to the zero field."""
    if v.degree > f.degree or v.zero or f.zero:
        kout = max(f.degree - v.degree, 0)
        return Field.zero_field(f.chart, f.axes, kout, **f._meta())
    return fl.contract(v, f, tensor_slot=tensor_slot)


def split_contraction_matrix(s: SplittingStructure, vpair, pair):
    """S^-* i_v S* = [[i_k, i_l~], [0, i_{n(k)}]] for S v = (k, l~)."""
    k, l = vpair
    alpha, beta = pair
    top = _safe_contract(k, alpha) + _safe_contract(l, beta)
    bottom = _safe_contract(fl.sign_n(k), beta)
    return top, bottom


def split_product_matrix(s: SplittingStructure, gpair, pair):
    """S^-* e_gamma S* = [[e_alpha, 0], [e_beta~, e_{n(alpha)}]]."""
    ga, gb = gpair
    alpha, beta = pair
    top = fl.wedge(ga, alpha)
    bottom = fl.wedge(gb, alpha) + fl.wedge(fl.sign_n(ga), beta)
    return top, bottom


def split_lie_matrix(s: SplittingStructure, vpair, pair):
    """Splitting of the Lie derivative along a degree-1 vector field with
    S v = (k, l~):
        [[L_k + i_l dG,  e_{D l} + i_l e_chi + e_{i_k Omega}],
         [[dG, i_k],     L_k + dG i_l - e_{i_k chi}]]
    where L_k = D i_k + i_k D."""
    k, l = vpair
    alpha, beta = pair
    Om = curvature_omega(s)
    chi = variance_chi(s)

    def L_k(f):
        return _safe_D(s, _safe_contract(k, f)) + _safe_contract(k, _safe_D(s, f))

    l_form = replace(l, kind=CoForm)      # degree-0 coefficient function
    top = (L_k(alpha) + _safe_contract(l, group_D(s, alpha))
           + fl.wedge(covariant_D(s, l_form), beta)
           + _safe_contract(l, fl.wedge(chi, beta))
           + fl.wedge(_safe_contract(k, Om), beta))
    bottom = (group_D(s, _safe_contract(k, alpha))
              - _safe_contract(k, group_D(s, alpha))
              + L_k(beta) + group_D(s, _safe_contract(l, beta))
              - fl.wedge(_safe_contract(k, chi), beta))
    return top, bottom


def bianchi_residuals(s: SplittingStructure):
    """(dG Omega - D chi, D Omega + Omega ^ chi); both vanish identically."""
    Om = curvature_omega(s)
    chi = variance_chi(s)
    r1 = fl.lift2(ext.sub, group_D(s, Om), covariant_D(s, chi))
    r2 = covariant_D(s, Om) + fl.wedge(Om, chi)
    return r1, r2


def curvature_from_variance(s: SplittingStructure) -> Field:
    """Omega = d Gamma - Gamma ^ chi (cross-check route)."""
    return fl.exterior_d(s.gamma) - fl.wedge(s.gamma, variance_chi(s))


# ---------------------------------------------------------------------------
# transitions between fiber charts

@dataclass
class Transition:
    """Fiber-chart change: t_old = tau(scene point with new fiber coord).

    tau must be strictly increasing in the fiber coordinate.
    """

    structure: SplittingStructure       # structure in the old chart
    tau: object                         # point -> old fiber coordinate

    def _factor(self, p):
        q, lvl = dual.seed(list(p), self.structure.fiber_axis)
        f = dual.d_part(self.tau(q), lvl)
        if dual.real(f) <= 0.0:
            raise ValueError("fiber-chart transition is not increasing here")
        return f

    def pull_point(self, p):
        q = list(p)
        q[self.structure.fiber_axis] = self.tau(p)
        return q


def transition_pull(tr: Transition, f: Field) -> Field:
    """Transport a parametric field into the new fiber chart."""
    s = tr.structure
    w = s.weight_of(f)

    def comps_fn(p):
        vals = f.comps_fn(tr.pull_point(p))
        if w == 1:
            fac = tr._factor(p)
            return tuple(v / fac for v in vals)
        if w == -1:
            fac = tr._factor(p)
            return tuple(v * fac for v in vals)
        return tuple(vals)

    return replace(f, comps_fn=comps_fn)


def affine_form(tr: Transition) -> Field:
    """The affine part in the transformation of the Christoffel form,
    tau_new = -(d_k tau / d_t tau) dx^k (algebra-valued)."""
    s = tr.structure

    def comps_fn(p):
        fac = tr._factor(p)
        out = []
        for ax in s.base_axes:
            qa, la = dual.seed(list(p), ax)
            dk = dual.d_part(tr.tau(qa), la)
            out.append(-dk / fac)
        return tuple(out)

    return Field(s.chart, s.base_axes, 1, comps_fn, **{s._wkey(): 1})


def transformed_structure(tr: Transition, name: str = "") -> SplittingStructure:
    """Same Ehresmann connection described in the new fiber chart:
    Gamma_new = Phi* Gamma_old - tau_affine."""
    s = tr.structure
    gam_new = transition_pull(tr, s.gamma) - affine_form(tr)
    return SplittingStructure(s.chart, s.total_axes, s.fiber_axis, gam_new,
                              s.slot, s.lie_orientation,
                              name=name or (s.name + "'"))


# ---------------------------------------------------------------------------
# anholonomity and classification

def anholonomity(s: SplittingStructure):
    """Frame components of the object of anholonomity.

    Returns a function point -> dict with entries ``C0j0`` (= chi_j) and
    ``Cij0`` (= Omega_ij over increasing pairs of base axes); all other
    components vanish because the spatial coframe is closed.
    """
    eps0 = coframe_eps0(s)
    d_eps0 = fl.exterior_d(eps0)
    nb = len(s.base_axes)
    fl_pos = s.fiber_local
    n = len(s.total_axes)

    # express d eps0 in the adapted coframe: dx^fiber = eps^0 - Gamma_j eps^j
    def img_fn(p):
        gam = s.gamma.comps_fn(p)
        rows = []
        b = 0
        for i in range(n):
            if i == fl_pos:
                row = [0.0] * n
                row[fl_pos] = 1.0
                for j, gv in zip([c for c in range(n) if c != fl_pos], gam):
                    row[j] = -gv
                rows.append(row)
            else:
                rows.append([1.0 if j == i else 0.0 for j in range(n)])
                b += 1
        return rows

    framed = fl.pull_through(d_eps0, s.total_axes, img_fn)

    def at(p):
        val = framed.at(p)
        c0j = []
        cij = {}
        base_pos = [i for i in range(n) if i != fl_pos]
        for j_local, jp in enumerate(base_pos):
            c0j.append(val.comp(fl_pos, jp))
        for a in range(nb):
            for b in range(a + 1, nb):
                cij[(a, b)] = val.comp(base_pos[a], base_pos[b])
        return {"C0j0": tuple(c0j), "Cij0": cij}

    return at


def classify(s: SplittingStructure, points, tol: float = 1e-9,
             metric=None, c0: float = 1.0) -> dict:
    """Sample the defining conditions of the classification flags."""
    gam = s.gamma
    Om = curvature_omega(s)
    chi = variance_chi(s)

    def vanishes(fld):
        return all(fld.at(p).max_abs() < tol for p in points)

    flags = {
        "flat": vanishes(Om),
        "principal": vanishes(chi),
        "natural": gam.zero or vanishes(gam),
    }
    flags["holonomic"] = flags["flat"] and flags["principal"]

    if metric is not None:
        from . import metric as mt
        obs = mt.lapse_shift(s, metric)
        flags["regular"] = vanishes(obs.shift_vec)
        flags["metric"] = (flags["regular"]
                           and vanishes(covariant_D(s, obs.lapse_inv))
                           and vanishes(group_D(s, obs.lapse_inv)))
        flags["standard"] = flags["natural"] and flags["metric"]
        lw = mt.lie_metric(fundamental_w(s), metric)
        flags["stationary"] = all(
            max(abs(dual.real(v)) for row in lw(p) for v in row) < tol
            for p in points)
    return flags
