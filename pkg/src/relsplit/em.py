"""Electromagnetic fields and equations under a splitting structure.

Sign conventions for the split fields: the splitting map sends
A -> (a, -phi~), F -> (b, -e~), H -> (d, h~), J -> (rho, -j~); the excitation
and source fields are twisted with respect to the spatial chart.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import dims, exterior as ext, fields as fl, metric as mt, splitting as sp
from .dims import C0_DIM
from .exterior import CoForm, MultiVec
from .fields import Chart, Field


def const(chart, axes, value, dim=dims.ONE, **meta) -> Field:
    return Field.scalar(chart, value, axes=axes, dim=dim, **meta)


@dataclass
class MaxwellFieldSet:
    """Space-time fields: potential A, field F, excitation H, current J."""

    A: Field
    F: Field
    H: Field
    J: Field

    @classmethod
    def from_potentials(cls, A: Field, H: Field) -> "MaxwellFieldSet":
        """F := dA and J := dH, so dF = 0 and dH = J hold by construction."""
        return cls(A, fl.exterior_d(A), H, fl.exterior_d(H))


@dataclass
class SplitEmFields:
    """Parametric images of the space-time fields under one splitting."""

    a: Field = None       # magnetic vector potential (1-form)
    phi: Field = None     # electric potential (coalgebra-valued 0-form)
    b: Field = None       # magnetic flux density (2-form)
    e: Field = None       # electric field strength (coalgebra-valued 1-form)
    d: Field = None       # electric flux density (twisted 2-form)
    h: Field = None       # magnetic field strength (twisted, coalgebra-valued)
    rho: Field = None     # charge density (twisted 3-form)
    j: Field = None       # current density (twisted, coalgebra-valued 2-form)


def split_em(s: sp.SplittingStructure, fs: MaxwellFieldSet) -> SplitEmFields:
    out = SplitEmFields()
    if fs.A is not None:
        a, mphi = sp.split_form(s, fs.A)
        out.a, out.phi = a, mphi.scaled(-1.0)
    if fs.F is not None:
        b, me = sp.split_form(s, fs.F)
        out.b, out.e = b, me.scaled(-1.0)
    if fs.H is not None:
        out.d, out.h = sp.split_form(s, fs.H)
    if fs.J is not None:
        rho, mj = sp.split_form(s, fs.J)
        out.rho, out.j = rho, mj.scaled(-1.0)
    return out


def unsplit_em(s: sp.SplittingStructure, sf: SplitEmFields) -> MaxwellFieldSet:
    A = sp.unsplit_form(s, (sf.a, sf.phi.scaled(-1.0))) if sf.a is not None else None
    F = sp.unsplit_form(s, (sf.b, sf.e.scaled(-1.0))) if sf.b is not None else None
    H = sp.unsplit_form(s, (sf.d, sf.h)) if sf.d is not None else None
    J = sp.unsplit_form(s, (sf.rho, sf.j.scaled(-1.0))) if sf.rho is not None else None
    return MaxwellFieldSet(A, F, H, J)


# ---------------------------------------------------------------------------
# Maxwell residuals

def maxwell_terms(s: sp.SplittingStructure, sf: SplitEmFields) -> dict:
    """Summands of the split Maxwell system; every equation's terms add to
    a residual that vanishes when dF = 0, dH = J, F = dA hold upstairs."""
    Om = sp.curvature_omega(s)
    chi = sp.variance_chi(s)
    eqs = {}
    if sf.b is not None:
        eqs["gauss_mag"] = [sp._safe_D(s, sf.b),
                            fl.wedge(Om, sf.e).scaled(-1.0)]
        eqs["faraday"] = [sp._safe_D(s, sf.e), sp.group_D(s, sf.b),
                          fl.wedge(chi, sf.e).scaled(-1.0)]
    if sf.d is not None:
        eqs["gauss_el"] = [sp._safe_D(s, sf.d), sf.rho.scaled(-1.0),
                           fl.wedge(Om, sf.h)]
        eqs["ampere"] = [sp._safe_D(s, sf.h), sf.j.scaled(-1.0),
                         sp.group_D(s, sf.d).scaled(-1.0),
                         fl.wedge(chi, sf.h).scaled(-1.0)]
    if sf.a is not None:
        eqs["potential_b"] = [sp._safe_D(s, sf.a), sf.b.scaled(-1.0),
                              fl.wedge(Om, sf.phi).scaled(-1.0)]
        eqs["potential_e"] = [sp._safe_D(s, sf.phi), sf.e,
                              sp.group_D(s, sf.a),
                              fl.wedge(chi, sf.phi).scaled(-1.0)]
    if sf.j is not None:
        eqs["charge"] = [sp._safe_D(s, sf.j), sp.group_D(s, sf.rho),
                         fl.wedge(chi, sf.j).scaled(-1.0)]
    return eqs


def maxwell_residuals(s: sp.SplittingStructure, sf: SplitEmFields) -> dict:
    return {name: _sum(terms) for name, terms in maxwell_terms(s, sf).items()}


def maxwell_residuals_alt(s: sp.SplittingStructure, sf: SplitEmFields) -> dict:
    """Plain-d equations on the shifted combinations b - Gamma ^ e~ and
    d + Gamma ^ h~ (the natural-splitting fields)."""
    gam = s.gamma
    b_n = sf.b - fl.wedge(gam, sf.e)
    d_n = sf.d + fl.wedge(gam, sf.h)
    rho_n = sf.rho - fl.wedge(gam, sf.j)
    return {
        "gauss_mag": _d_or_zero(b_n),
        "faraday": _d_or_zero(sf.e) + sp.group_D(s, b_n),
        "gauss_el": _d_or_zero(d_n) - rho_n,
        "ampere": _d_or_zero(sf.h) - sf.j - sp.group_D(s, d_n),
    }


def _d_or_zero(f: Field) -> Field:
    if f.degree >= f.n or f.zero:
        return Field.zero_field(f.chart, f.axes, f.degree + 1,
                                kind=f.kind, **f._meta())
    return fl.exterior_d(f)


def _sum(terms):
    out = terms[0]
    for t in terms[1:]:
        out = out + t
    return out


# ---------------------------------------------------------------------------
# constitutive relations

def constitutive_regular(s, g, e, b, z0: float, obs=None):
    """Vacuum relations in a regular splitting:
    d = Z0^-1 N^-1 *3 e~ and h~ = Z0^-1 N *3 b."""
    obs = obs or mt.lapse_shift(s, g)
    h3 = obs.h_sigma
    z0inv = const(g.chart, s.base_axes, 1.0 / z0, dims.Z0_DIM ** -1)
    d = fl.wedge(z0inv, fl.wedge(obs.lapse_inv, mt.hodge(h3, e)))
    ht = fl.wedge(z0inv, fl.wedge(obs.lapse, mt.hodge(h3, b)))
    return d, ht


def constitutive_regular_components(s, g, e, z0: float, obs=None) -> Field:
    """Component form d_ij = Z0^-1 sqrt(g00)^-1 sqrt|h| eps_ij^k e_k, as an
    independent route to the electric flux density."""
    obs = obs or mt.lapse_shift(s, g)
    h3 = obs.h_sigma
    nb = len(s.base_axes)
    n_c = obs.lapse.comps_fn

    def comps_fn(p):
        hm = h3.matrix(p)
        hinv = ext.inv(hm)
        sq = mt.sqrt(mt.habs(ext.det(hm)))
        ec = e.comps_fn(p)
        fac = sq / (n_c(p)[0] * z0)
        out = []
        for (i, j) in ext.multi_indices(nb, 2):
            acc = 0.0
            for l in range(nb):
                ms = ext.merge_sign((i, j), (l,))
                if ms is None:
                    continue
                _, sgn = ms
                acc = acc + sgn * sum(hinv[l][k] * ec[k] for k in range(nb))
            out.append(fac * acc)
        return tuple(out)

    return Field(g.chart, s.base_axes, 2, comps_fn, twist_x=True,
                 dim=dims.IT)


def vacuum_excitation(g, F: Field, z0: float) -> Field:
    """H = Z0^-1 *4 F."""
    z0inv = const(g.chart, F.axes, 1.0 / z0, dims.Z0_DIM ** -1)
    return fl.wedge(z0inv, mt.hodge(g, F))


def lagrangian(F: Field, H: Field) -> Field:
    """L = -(F ^ H)/2, a twisted 4-form of dimension action."""
    return fl.wedge(F, H).scaled(-0.5)


# ---------------------------------------------------------------------------
# energy-momentum

def stress_tensor_4d(F: Field, H: Field, n: Field) -> Field:
    """T_n = (i_n H ^ F - i_n F ^ H) / 2."""
    return (fl.wedge(fl.contract(n, H), F)
            - fl.wedge(fl.contract(n, F), H)).scaled(0.5)


def four_force_density(F: Field, J: Field, n: Field) -> Field:
    """R_n = i_n F ^ J."""
    return fl.wedge(fl.contract(n, F), J)


@dataclass
class EnergyMomentum:
    p: Field    # momentum density (twisted 3-form)
    w: Field    # energy density
    m: Field    # momentum flux density (Maxwell stress)
    s: Field    # energy flux density (Poynting)


def energy_momentum(sf: SplitEmFields, k: Field, l: Field) -> EnergyMomentum:
    """The four split stress quantities evaluated on a test pair (k, l~)."""
    e, b, d, h = sf.e, sf.b, sf.d, sf.h
    p = fl.wedge(fl.contract(k, b), d)
    w = (fl.wedge(fl.contract(l, e), d)
         + fl.wedge(fl.contract(l, h), b)).scaled(0.5)
    m = (fl.wedge(fl.contract(k, d), e).scaled(-1.0)
         + fl.wedge(fl.contract(k, b), h).scaled(-1.0)
         + (fl.contract(k, fl.wedge(d, e))
            + fl.contract(k, fl.wedge(b, h))).scaled(0.5))
    s_ = (fl.wedge(fl.contract(l, e), h)
          + fl.wedge(e, fl.contract(l, h))).scaled(0.5)
    return EnergyMomentum(p, w, m, s_)


def split_stress_pair(em: EnergyMomentum):
    """S^-* T S^-1 = [[-p, w~], [-m~, -s~]] applied to the test pair."""
    return (em.w - em.p, (em.m + em.s).scaled(-1.0))


def force_densities(sf: SplitEmFields, k: Field, l: Field):
    """f~(k) = i_k e~ ^ rho + i_k b ^ j~;
    r~(l~) = -(i_l e~ ^ j~ + e~ ^ i_l j~)/2."""
    f = fl.wedge(fl.contract(k, sf.e), sf.rho) + fl.wedge(
        fl.contract(k, sf.b), sf.j)
    r = (fl.wedge(fl.contract(l, sf.e), sf.j)
         + fl.wedge(sf.e, fl.contract(l, sf.j))).scaled(-0.5)
    return f, r


def balance_residuals(s, sf: SplitEmFields, k: Field, l: Field):
    """Momentum and energy balance for a Killing test pair (k, l~):
    f~ + dG p + (e_chi - D) m~ and r~ - dG w~ + (e_chi - D) s~."""
    em = energy_momentum(sf, k, l)
    f, r = force_densities(sf, k, l)
    chi = sp.variance_chi(s)
    mom = (f + sp.group_D(s, em.p) + fl.wedge(chi, em.m)
           - sp._safe_D(s, em.m))
    en = (r - sp.group_D(s, em.w) + fl.wedge(chi, em.s)
          - sp._safe_D(s, em.s))
    return mom, en


# ---------------------------------------------------------------------------
# the Theta tensor and the body-force term

def theta_matrix(g: mt.MetricField, n: Field):
    """A^mu_nu = g^{mu kappa} (L_n g)_{kappa nu} and its trace."""
    lng = mt.lie_metric(n, g)
    nn = g.n

    def mats(p):
        gi = g.inv_matrix(p)
        lg = lng(p)
        A = [[sum(gi[mu][k] * lg[k][nu] for k in range(nn))
              for nu in range(nn)] for mu in range(nn)]
        tr = sum(A[mu][mu] for mu in range(nn))
        return A, tr

    return mats


def theta_bar_apply(g: mt.MetricField, n: Field, f: Field) -> Field:
    """Degree-0 derivation induced by L_n g acting on a form field."""
    mats = theta_matrix(g, n)
    nn, k = f.n, f.degree
    idx = ext.multi_indices(nn, k)
    pos = ext.index_pos(nn, k)

    def comps_fn(p):
        A, _ = mats(p)
        fc = f.comps_fn(p)
        out = []
        for K in idx:
            acc = 0.0
            for slot in range(k):
                for mu in range(nn):
                    rest = K[:slot] + (mu,) + K[slot + 1:]
                    if len(set(rest)) != len(rest):
                        continue
                    srt, sgn = ext._sort_sign(rest)
                    acc = acc + A[mu][K[slot]] * sgn * fc[pos[srt]]
            out.append(acc)
        return tuple(out)

    return Field(f.chart, f.axes, k, comps_fn, kind=f.kind, **f._meta())


def trautman_commutator_residual(g, n: Field, F: Field) -> Field:
    """[L_n, *4] F - (Theta-bar_n - Theta_n / 2) *4 F."""
    star_F = mt.hodge(g, F)
    lhs = fl.lie_derivative(n, star_F) - mt.hodge(g, fl.lie_derivative(n, F))
    mats = theta_matrix(g, n)
    tr_field = Field.scalar(g.chart, lambda p: mats(p)[1], axes=F.axes)
    rhs = theta_bar_apply(g, n, star_F) - fl.wedge(tr_field, star_F).scaled(0.5)
    return lhs - rhs


def body_force(F: Field, H: Field, n: Field) -> Field:
    """X_n = -(F ^ L_n H - H ^ L_n F)/2; zero when n is Killing (vacuum)."""
    return (fl.wedge(F, fl.lie_derivative(n, H))
            - fl.wedge(H, fl.lie_derivative(n, F))).scaled(-0.5)


# ---------------------------------------------------------------------------
# Schiff star fields (natural nonregular splitting)

@dataclass
class SchiffFields:
    d_star: Field
    h_star: Field
    p_s: Field       # fictitious vacuum polarization
    m_s: Field       # fictitious vacuum magnetization
    rho_s: Field     # Schiff charge: -d p_s
    j_s: Field       # Schiff current: d m_s + dG p_s


def schiff_star_fields(s, g, sf: SplitEmFields, z0: float,
                       obs: mt.ObserverFrame = None) -> SchiffFields:
    """The starred fields and fictitious sources of the natural nonregular
    treatment: d* = Z0^-1 N^-dag *S e~ = d - p_S, h* = Z0^-1 N^dag *S b."""
    obs = obs or mt.lapse_shift(s, g)
    hS = obs.h_sigma
    z0inv = const(g.chart, s.base_axes, 1.0 / z0, dims.Z0_DIM ** -1)
    d_star = fl.wedge(z0inv, fl.wedge(obs.lapse_dag_inv, mt.hodge(hS, sf.e)))
    h_star = fl.wedge(z0inv, fl.wedge(obs.lapse_dag, mt.hodge(hS, sf.b)))
    p_s = fl.wedge(z0inv, fl.wedge(obs.lapse_dag_inv,
                                   mt.hodge(hS, fl.contract(obs.shift_vec,
                                                            sf.b))))
    m_s = fl.contract(obs.shift_vec, sf.d).scaled(-1.0)
    rho_s = _d_or_zero(p_s).scaled(-1.0)
    j_s = _d_or_zero(m_s) + sp.group_D(s, p_s)
    return SchiffFields(d_star, h_star, p_s, m_s, rho_s, j_s)


# ---------------------------------------------------------------------------
# proxies

def proxy_em(s, g, c0: float, sf: SplitEmFields,
             obs: mt.ObserverFrame = None) -> SplitEmFields:
    """Ordinary-valued stand-ins: tilde fields scaled by c0 N^-1."""
    obs = obs or mt.lapse_shift(s, g)

    def px(f):
        return None if f is None else fl.wedge(
            obs.lapse_inv.scaled(c0, C0_DIM), f)

    return SplitEmFields(a=sf.a, phi=px(sf.phi), b=sf.b, e=px(sf.e),
                         d=sf.d, h=px(sf.h), rho=sf.rho, j=px(sf.j))


def proxy_maxwell_residuals(s, g, c0: float, psf: SplitEmFields,
                            obs: mt.ObserverFrame = None) -> dict:
    """Maxwell's equations for proxies:
    D b = c0^-2 2 eta-bar ^ e, D e = -d_tau b + c0^-2 delta-bar ^ e, ..."""
    obs = obs or mt.lapse_shift(s, g)
    two_eta, delta = mt.proxy_kinematic_forms(s, g, c0, obs)
    ic2 = c0 ** -2

    def dtau(f):
        return mt.proper_time_d(s, g, f, c0, obs)

    icd = C0_DIM ** -2
    out = {
        "gauss_mag": sp._safe_D(s, psf.b)
        - fl.wedge(two_eta, psf.e).scaled(ic2, icd),
        "faraday": sp._safe_D(s, psf.e) + dtau(psf.b)
        - fl.wedge(delta, psf.e).scaled(ic2, icd),
    }
    if psf.d is not None:
        out["gauss_el"] = (sp._safe_D(s, psf.d) - psf.rho
                           + fl.wedge(two_eta, psf.h).scaled(ic2, icd))
        out["ampere"] = (sp._safe_D(s, psf.h) - psf.j - dtau(psf.d)
                         - fl.wedge(delta, psf.h).scaled(ic2, icd))
    return out


def proxy_energy_momentum(psf: SplitEmFields, k: Field) -> EnergyMomentum:
    """Proxy stress quantities; w and s need no test argument."""
    e, b, d, h = psf.e, psf.b, psf.d, psf.h
    p = fl.wedge(fl.contract(k, b), d)
    w = (fl.wedge(e, d) + fl.wedge(h, b)).scaled(0.5)
    m = (fl.wedge(fl.contract(k, d), e).scaled(-1.0)
         + fl.wedge(fl.contract(k, b), h).scaled(-1.0)
         + (fl.contract(k, fl.wedge(d, e))
            + fl.contract(k, fl.wedge(b, h))).scaled(0.5))
    s_ = fl.wedge(e, h)
    return EnergyMomentum(p, w, m, s_)


def proxy_force_densities(psf: SplitEmFields, k: Field):
    f = (fl.wedge(fl.contract(k, psf.e), psf.rho)
         + fl.wedge(fl.contract(k, psf.b), psf.j))
    r = fl.wedge(psf.e, psf.j).scaled(-1.0)
    return f, r


def proxy_balance_residuals(s, g, c0: float, psf: SplitEmFields, k: Field,
                            obs: mt.ObserverFrame = None):
    """f = -d_tau p - (c0^-2 e_delta - D) m and Poynting's theorem
    r = d_tau w - (c0^-2 e_delta - D) s, as residuals."""
    obs = obs or mt.lapse_shift(s, g)
    em = proxy_energy_momentum(psf, k)
    f, r = proxy_force_densities(psf, k)
    _, delta = mt.proxy_kinematic_forms(s, g, c0, obs)
    ic2 = c0 ** -2

    def dtau(x):
        return mt.proper_time_d(s, g, x, c0, obs)

    icd = C0_DIM ** -2
    mom = (f + dtau(em.p) + fl.wedge(delta, em.m).scaled(ic2, icd)
           - sp._safe_D(s, em.m))
    en = (r - dtau(em.w) + fl.wedge(delta, em.s).scaled(ic2, icd)
          - sp._safe_D(s, em.s))
    return mom, en
