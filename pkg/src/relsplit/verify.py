"""Named identity checks and verification suites.

Every check samples one operator identity or closed-form comparison at
Sobol points, records the worst residual against a pinned tolerance, and
carries a human-readable anchor string naming the identity it verifies.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field, asdict

import numpy as np

from . import dims, em, exterior as ext, fields as fl, metric as mt, \
    scenarios as sc, splitting as sp
from .dual import real, sin
from .exterior import CoForm, MultiVec
from .fields import Chart, Field
from .sampling import Box, random_field, random_gamma, sobol_points, smooth_fn


@dataclass
class CheckRecord:
    suite: str
    check: str
    anchor: str
    residual: float
    tol: float
    passed: bool
    seconds: float = 0.0


@dataclass
class VerifyConfig:
    suites: list = None
    seed: int = 7
    points: int = 100
    tolerances: dict = dc_field(default_factory=dict)
    omega: float = 0.3
    L: float = 1.0
    c0: float = 1.0
    z0: float = 1.0
    Q: float = 1.0
    R1: float = 0.2
    R2: float = 0.4
    R: float = 0.8
    a_expansion: float = 0.1

    def __post_init__(self):
        if self.points < 1:
            raise ValueError("points must be >= 1")
        for v in self.tolerances.values():
            if v <= 0:
                raise ValueError("tolerances must be positive")


@dataclass
class Report:
    records: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def as_dict(self) -> dict:
        return {"status": "PASS" if self.passed else "FAIL",
                "records": [asdict(r) for r in self.records]}


# ---------------------------------------------------------------------------
# residual helpers

def maxres(f: Field, pts) -> float:
    return max((f.at(p).max_abs() for p in pts), default=0.0)


def maxdiff(a: Field, b: Field, pts, rel: bool = False) -> float:
    out = 0.0
    for p in pts:
        va, vb = a.at(p), b.at(p)
        if va.zero and vb.zero:
            continue
        if va.zero or vb.zero:
            d = (vb if va.zero else va).max_abs()
            s = d
        else:
            d = max(abs(real(x) - real(y))
                    for x, y in zip(va.comps, vb.comps))
            s = max(va.max_abs(), vb.max_abs())
        out = max(out, d / (1.0 + s) if rel else d)
    return out


def pair_diff(pa, pb, pts, rel: bool = False) -> float:
    return max(maxdiff(pa[0], pb[0], pts, rel), maxdiff(pa[1], pb[1], pts, rel))


class _Checks:
    """Collects check records for one suite run."""

    def __init__(self, suite: str, tol_override=None):
        self.suite = suite
        self.records = []
        self.tol_override = tol_override

    def add(self, check: str, anchor: str, residual: float, tol: float):
        tol = self.tol_override or tol
        residual = float(residual)
        self.records.append(CheckRecord(self.suite, check, anchor, residual,
                                        tol, residual < tol))

    def add_bool(self, check: str, anchor: str, ok: bool):
        self.records.append(CheckRecord(self.suite, check, anchor,
                                        0.0 if ok else 1.0, 1.0, bool(ok)))


def _std_chart():
    return Chart(("t", "x", "y", "z"),
                 (dims.ONE, dims.L, dims.L, dims.L))


def _unit_box():
    return Box((0.0, -1.0, -1.0, -1.0), (1.0, 1.0, 1.0, 1.0))


def _three_structures(rng, chart):
    """Gamma = 0, a time-independent Gamma, and a fully random Gamma."""
    axes4 = (0, 1, 2, 3)
    s0 = sp.natural(chart, axes4, 0, name="flat")
    static = {K: smooth_fn(rng, 3)
              for K in ext.multi_indices(3, 1)}

    def spatial_only(fn):
        return lambda p: fn(p[1:])

    s1 = sp.from_gamma_comps(chart, axes4, 0,
                             {K: spatial_only(f) for K, f in static.items()},
                             name="static")
    s2 = random_gamma(rng, chart, axes4, 0)
    return [s0, s1, s2]


# ---------------------------------------------------------------------------
# suites

def suite_algebra(cfg: VerifyConfig, tol=None):
    ch = _Checks("algebra", tol)
    rng = np.random.default_rng(cfg.seed)
    n = 4
    axes = (0, 1, 2, 3)

    def rand_val(k, cls=CoForm, **meta):
        return cls(axes, k, tuple(float(v) for v in
                                  rng.uniform(-1, 1, ext.n_comps(n, k))),
                   **meta)

    worst_comm = 0.0
    worst_assoc = 0.0
    for _ in range(max(10, cfg.points // 5)):
        ka, kb = int(rng.integers(0, 3)), int(rng.integers(0, 3))
        a, b = rand_val(ka), rand_val(kb)
        ab, ba = ext.wedge(a, b), ext.wedge(b, a)
        sign = (-1.0) ** (ka * kb)
        if not ab.zero:
            worst_comm = max(worst_comm, max(
                abs(x - sign * y) for x, y in zip(ab.comps, ba.comps)))
        c = rand_val(int(rng.integers(0, 2)))
        lhs = ext.wedge(ext.wedge(a, b), c)
        rhs = ext.wedge(a, ext.wedge(b, c))
        if not lhs.zero and not rhs.zero:
            worst_assoc = max(worst_assoc, max(
                abs(x - y) for x, y in zip(lhs.comps, rhs.comps)))
    ch.add("wedge_graded_commutative", "a^b = (-1)^{|a||b|} b^a",
           worst_comm, 1e-12)
    ch.add("wedge_associative", "(a^b)^c = a^(b^c)", worst_assoc, 1e-12)

    worst = 0.0
    for _ in range(max(10, cfg.points // 5)):
        va, vb = rand_val(1, MultiVec), rand_val(1, MultiVec)
        g3 = rand_val(3)
        lhs = ext.contract(ext.wedge(va, vb), g3)
        rhs = ext.contract(vb, ext.contract(va, g3))
        worst = max(worst, max(abs(x - y)
                               for x, y in zip(lhs.comps, rhs.comps)))
    ch.add("iterated_contraction", "i_{a^b} g = i_b i_a g", worst, 1e-12)

    worst = 0.0
    for _ in range(max(10, cfg.points // 5)):
        k = int(rng.integers(0, 4))
        x = rand_val(k)
        nn = ext.sign_n(ext.sign_n(x))
        worst = max(worst, max(abs(u - v) for u, v in zip(nn.comps, x.comps)))
    ch.add("sign_involution", "n(n(x)) = x", worst, 1e-15)

    worst = 0.0
    for _ in range(max(10, cfg.points // 5)):
        g1 = rand_val(1, CoForm, wg=-1)
        v1 = rand_val(1, MultiVec, wg=1)
        lam = float(rng.uniform(0.2, 3.0)) * float(rng.choice([-1.0, 1.0]))
        before = ext.pairing(g1, v1)
        after = ext.pairing(ext.rebase_lie(g1, lam), ext.rebase_lie(v1, lam))
        worst = max(worst, abs(before - after) / (1.0 + abs(before)))
    ch.add("rebase_pairing_invariant",
           "<rebase(g), rebase(v)> = <g, v>", worst, 1e-13)

    zero = ext.wedge(rand_val(1, CoForm, wg=1), rand_val(1, CoForm, wg=1))
    ch.add_bool("lie_square_zero", "algebra-valued ^ algebra-valued = 0",
                zero.zero)
    return ch.records


def suite_derivative(cfg: VerifyConfig, tol=None):
    ch = _Checks("derivative", tol)
    rng = np.random.default_rng(cfg.seed + 1)
    chart = _std_chart()
    pts = sobol_points(_unit_box(), cfg.points, cfg.seed)
    axes4 = (0, 1, 2, 3)

    worst = 0.0
    for k in (0, 1, 2):
        f = random_field(rng, chart, axes4, k)
        dd = fl.exterior_d(fl.exterior_d(f))
        scale = 1.0 + maxres(f, pts)
        worst = max(worst, maxres(dd, pts) / scale)
    ch.add("d_squared", "d(d(g)) = 0", worst, 1e-12)

    worst = 0.0
    v = random_field(rng, chart, axes4, 1, kind=MultiVec)
    for k in (1, 2):
        f = random_field(rng, chart, axes4, k)
        lhs = fl.lie_derivative(v, fl.exterior_d(f))
        rhs = fl.exterior_d(fl.lie_derivative(v, f))
        worst = max(worst, maxdiff(lhs, rhs, pts, rel=True))
    ch.add("lie_naturality", "L_v d g = d L_v g", worst, 1e-11)

    base = (1, 2, 3)
    f0 = Field.scalar(chart, lambda p: p[0] ** 3 + sin(p[0]) * p[1],
                      axes=base)
    df = fl.group_d(f0, 0)
    x0 = [0.0, 0.3, -0.2, 0.5]
    iv = fl.integrate_g(df, (0.2, 0.9), x0)
    hi = f0.comps_fn([0.9, 0.3, -0.2, 0.5])[0]
    lo = f0.comps_fn([0.2, 0.3, -0.2, 0.5])[0]
    ch.add("fundamental_theorem", "int_[t0,t1] dG f = f(t1) - f(t0)",
           abs(iv.comps[0] - (hi - lo)), 1e-9)

    iv2 = fl.integrate_g(fl.rebase_lie(df, 3.0), (0.2, 0.9), x0)
    ch.add("integral_rebase_invariant",
           "int is independent of the Lie basis",
           abs(iv2.comps[0] - iv.comps[0]), 1e-12)

    a1 = random_field(rng, chart, base, 1, wg=-1)
    worst = 0.0
    for p in pts[: max(4, cfg.points // 8)]:
        q = list(p)
        val = fl.integrate_g(a1, (0.1, 0.7), q)
        anti = fl.integrate_g(a1, (0.1, 0.4), q)
        anti2 = fl.integrate_g(a1, (0.4, 0.7), q)
        worst = max(worst, max(abs(x - y - z) for x, y, z in
                               zip(val.comps, anti.comps, anti2.comps)))
    ch.add("integral_additive", "interval additivity of int on G",
           worst, 1e-10)

    gd2 = fl.group_d(fl.group_d(random_field(rng, chart, base, 1), 0), 0)
    ch.add("group_d_squared", "dG(dG(g)) = 0", maxres(gd2, pts), 1e-14)
    return ch.records


def suite_splitting(cfg: VerifyConfig, tol=None):
    ch = _Checks("splitting", tol)
    rng = np.random.default_rng(cfg.seed + 2)
    chart = _std_chart()
    pts = sobol_points(_unit_box(), cfg.points, cfg.seed)
    axes4 = (0, 1, 2, 3)
    base = (1, 2, 3)
    structures = _three_structures(rng, chart)
    s = structures[2]

    worst = 0.0
    for k in range(0, 5):
        f = random_field(rng, chart, axes4, k)
        back = sp.unsplit_form(s, sp.split_form(s, f))
        worst = max(worst, maxdiff(back, f, pts, rel=True))
        v = random_field(rng, chart, axes4, k, kind=MultiVec)
        backv = sp.unsplit_vector(s, sp.split_vector(s, v))
        worst = max(worst, maxdiff(backv, v, pts, rel=True))
    ch.add("split_bijection", "S* S^-* = Id and S^-1 S = Id", worst, 1e-12)

    worst = 0.0
    for k in (0, 1, 2):
        a = random_field(rng, chart, base, k)
        sid = sp.sigma_star(s, sp.pi_star(s, a))
        worst = max(worst, maxdiff(sid, a, pts, rel=True))
        v = random_field(rng, chart, base, k, kind=MultiVec)
        vid = sp.pi_push(s, sp.sigma_push(s, v))
        worst = max(worst, maxdiff(vid, v, pts, rel=True))
    ch.add("parametric_maps", "Sigma* Pi* = Id and Pi Sigma = Id",
           worst, 1e-12)

    w = sp.fundamental_w(s)
    om = sp.connection_omega(s)
    worst = max(abs(real(ext.pairing(om.at(p), w.at(p))) - 1.0) for p in pts)
    ch.add("omega_w_unit", "omega(w) = 1 (x) t", worst, 1e-14)

    worst = 0.0
    for k in (1, 2, 3):
        v = random_field(rng, chart, axes4, k, kind=MultiVec)
        hv = sp.hor(s, v) + sp.ver(s, v)
        worst = max(worst, maxdiff(hv, v, pts, rel=True))
        hh = sp.hor(s, sp.hor(s, v))
        worst = max(worst, maxdiff(hh, sp.hor(s, v), pts, rel=True))
    ch.add("hor_ver", "hor + ver = Id, hor hor = hor", worst, 1e-12)

    worst = 0.0
    for st in structures:
        for k in (1, 2, 3):
            f = random_field(rng, chart, axes4, k)
            pair = sp.split_form(st, f)
            direct = sp.split_form(st, fl.exterior_d(f))
            matrix = sp.split_d_matrix(st, pair)
            worst = max(worst, pair_diff(direct, matrix, pts, rel=True))
    ch.add("split_d_matrix",
           "S^-* d S* = [[D, e_Om], [dG, e_chi - D]] (3 connections)",
           worst, 1e-10)

    Om = sp.curvature_omega(s)
    chi = sp.variance_chi(s)
    a1 = random_field(rng, chart, base, 1)
    lhs = (sp.covariant_D(s, sp.group_D(s, a1))
           - sp.group_D(s, sp.covariant_D(s, a1)))
    rhs = fl.wedge(chi, sp.group_D(s, a1))
    ch.add("commutator_D_dG", "[D, dG] = e_chi dG",
           maxdiff(lhs, rhs, pts, rel=True), 1e-10)

    lhs = sp.covariant_D(s, sp.covariant_D(s, a1))
    rhs = fl.wedge(Om, sp.group_D(s, a1)).scaled(-1.0)
    ch.add("D_squared", "D^2 = -e_Om dG",
           maxdiff(lhs, rhs, pts, rel=True), 1e-10)

    r1, r2 = sp.bianchi_residuals(s)
    ch.add("bianchi_1", "dG Om = D chi", maxres(r1, pts), 1e-10)
    ch.add("bianchi_2", "D Om + Om ^ chi = 0", maxres(r2, pts), 1e-10)

    alt = sp.curvature_from_variance(s)
    ch.add("curvature_variance", "Om = d Gamma - Gamma ^ chi",
           maxdiff(alt, Om, pts, rel=True), 1e-10)

    d_om = fl.exterior_d(sp.connection_omega(s))
    slot_a = sp.sigma_star(s, d_om)
    slot_b = sp.sigma_star(s, fl.contract(sp.fundamental_w(s), d_om,
                                          tensor_slot="g"))
    worst = max(maxdiff(slot_a, Om, pts, rel=True),
                maxdiff(slot_b, chi, pts, rel=True))
    ch.add("split_d_omega", "(Om, chi) = S^-* d omega", worst, 1e-11)

    # operator matrices vs the direct 4-D route
    worst = 0.0
    v = random_field(rng, chart, axes4, 2, kind=MultiVec)
    vpair = sp.split_vector(s, v)
    for k in (2, 3):
        a = random_field(rng, chart, base, k)
        b = random_field(rng, chart, base, k - 1, wg=-1)
        g4 = sp.unsplit_form(s, (a, b))
        direct = sp.split_form(s, fl.contract(v, g4))
        matrix = sp.split_contraction_matrix(s, vpair, (a, b))
        worst = max(worst, pair_diff(direct, matrix, pts, rel=True))
    ch.add("split_contraction", "S^-* i_v S* = [[i_k, i_l],[0, i_nk]]",
           worst, 1e-10)

    gam4 = random_field(rng, chart, axes4, 1)
    gpair = sp.split_form(s, gam4)
    a = random_field(rng, chart, base, 1)
    b = random_field(rng, chart, base, 0, wg=-1)
    direct = sp.split_form(s, fl.wedge(gam4, sp.unsplit_form(s, (a, b))))
    matrix = sp.split_product_matrix(s, gpair, (a, b))
    ch.add("split_product", "S^-* e_g S* = [[e_a, 0],[e_b, e_na]]",
           pair_diff(direct, matrix, pts, rel=True), 1e-10)

    v1 = random_field(rng, chart, axes4, 1, kind=MultiVec)
    vpair = sp.split_vector(s, v1)
    worst = 0.0
    for k in (1, 2):
        a = random_field(rng, chart, base, k)
        b = random_field(rng, chart, base, k - 1, wg=-1)
        g4 = sp.unsplit_form(s, (a, b))
        direct = sp.split_form(s, fl.lie_derivative(v1, g4))
        matrix = sp.split_lie_matrix(s, vpair, (a, b))
        worst = max(worst, pair_diff(direct, matrix, pts, rel=True))
    ch.add("split_lie", "splitting of the Lie derivative", worst, 1e-10)

    a = random_field(rng, chart, base, 1)
    b = random_field(rng, chart, base, 0, wg=-1)
    s_nat = sp.natural(chart, axes4, 0)
    step1 = sp.change_connection(s, s_nat, (a, b))
    mid = (fl.exterior_d(step1[0]),
           sp.group_D(s_nat, step1[0]) - fl.exterior_d(step1[1]))
    step3 = sp.change_connection(s_nat, s, mid)
    matrix = sp.split_d_matrix(s, (a, b))
    ch.add("factorized_split_d",
           "split d = (chg conn) (natural d) (chg conn)^-1",
           pair_diff(step3, matrix, pts, rel=True), 1e-10)

    cc1 = sp.change_connection(s, s, (a, b))
    cc2 = sp.change_connection(structures[1], s,
                               sp.change_connection(s, structures[1], (a, b)))
    worst = max(pair_diff(cc1, (a, b), pts), pair_diff(cc2, (a, b), pts))
    ch.add("change_connection_inverse",
           "change of connection composes to the identity", worst, 1e-12)

    p0 = pts[0]
    anh = sp.anholonomity(s)(p0)
    chi_v = chi.at(p0)
    om_v = Om.at(p0)
    worst = max(abs(real(u) - real(v))
                for u, v in zip(anh["C0j0"], chi_v.comps))
    worst = max(worst, max(abs(real(anh["Cij0"][ij]) - real(om_v.comp(*ij)))
                           for ij in anh["Cij0"]))
    ch.add("anholonomity", "C_0j^0 = chi_j and C_ij^0 = Om_ij", worst, 1e-11)
    return ch.records


def suite_transitions(cfg: VerifyConfig, tol=None):
    ch = _Checks("transitions", tol)
    rng = np.random.default_rng(cfg.seed + 3)
    chart = _std_chart()
    pts = sobol_points(_unit_box(), cfg.points, cfg.seed)
    axes4 = (0, 1, 2, 3)
    base = (1, 2, 3)
    s_rand = random_gamma(rng, chart, axes4, 0)
    s_nat = sp.natural(chart, axes4, 0)

    cases = [
        ("affine", s_rand, lambda p: 1.7 * p[0] + 0.3),
        ("bundle_shift", s_rand, lambda p: p[0] + 0.2 * p[1] - 0.1 * p[2]),
        # the chi rule needs dG of the value map to vanish along the old
        # connection; starting from the natural splitting keeps it exact
        ("nonlinear", s_nat,
         lambda p: p[0] + 0.1 * sin(p[0]) + 0.2 * p[1]),
    ]
    for name, s, tau in cases:
        tr = sp.Transition(s, tau)
        s2 = sp.transformed_structure(tr)
        ch.add(f"{name}_curvature", "Phi* Om_i = Om_j",
               maxdiff(sp.transition_pull(tr, sp.curvature_omega(s)),
                       sp.curvature_omega(s2), pts, rel=True), 1e-10)
        aff = sp.affine_form(tr)
        rhs = sp.variance_chi(s2) + sp.group_D(s2, aff)
        ch.add(f"{name}_variance", "Phi* chi_i = chi_j + dG tau_j",
               maxdiff(sp.transition_pull(tr, sp.variance_chi(s)), rhs,
                       pts, rel=True), 1e-10)
        a = random_field(rng, chart, base, 1)
        b = random_field(rng, chart, base, 0, wg=-1)
        lhs = sp.split_d_matrix(s2, (sp.transition_pull(tr, a),
                                     sp.transition_pull(tr, b)))
        m_i = sp.split_d_matrix(s, (a, b))
        rhs2 = (sp.transition_pull(tr, m_i[0]), sp.transition_pull(tr, m_i[1]))
        ch.add(f"{name}_intertwine", "M_j Phi* = Phi* M_i",
               pair_diff(lhs, rhs2, pts, rel=True), 1e-10)

        al = random_field(rng, chart, base, 1, wg=-1)
        x0 = [0.0, 0.3, -0.2, 0.5]
        t0, t1 = 0.2, 0.9
        ia = fl.integrate_g(sp.transition_pull(tr, al), (t0, t1), x0)
        lo = real(tau([t0] + x0[1:]))
        hi = real(tau([t1] + x0[1:]))
        ib = fl.integrate_g(al, (min(lo, hi), max(lo, hi)), x0)
        ch.add(f"{name}_integral", "int_Hj Phi* = Phi* int_Hi",
               max(abs(u - v) for u, v in zip(ia.comps, ib.comps)), 1e-10)

    tr_id = sp.Transition(s_rand, lambda p: p[0])
    a = random_field(rng, chart, base, 2, wg=1)
    ch.add("identity_transition", "identity chart change acts trivially",
           maxdiff(sp.transition_pull(tr_id, a), a, pts), 1e-14)

    # within-bundle shift: the affine form is time-independent
    tr_b = sp.Transition(s_rand, cases[1][2])
    aff_b = sp.affine_form(tr_b)
    s2b = sp.transformed_structure(tr_b)
    ch.add("bundle_shift_affine_static", "dG tau_j = 0 within the bundle",
           maxres(sp.group_D(s2b, aff_b), pts), 1e-12)
    return ch.records


def suite_metric(cfg: VerifyConfig, tol=None):
    ch = _Checks("metric", tol)
    rng = np.random.default_rng(cfg.seed + 4)
    rot = sc.scenario_rotating(cfg.omega, cfg.L, cfg.c0, cfg.z0)
    nat = sc.scenario_schiff_natural(cfg.omega, cfg.L, cfg.c0, cfg.z0,
                                     cfg.Q, cfg.R1, cfg.R2)
    npts = max(10, cfg.points // 4)
    pts_r = sobol_points(rot.box, npts, cfg.seed, rot.exclude)
    pts_n = sobol_points(nat.box, npts, cfg.seed, nat.exclude)
    base = (1, 2, 3)
    axes4 = (0, 1, 2, 3)

    # Hodge square law per degree (Lorentzian 4-D and Riemannian 3-D)
    worst = 0.0
    for k in range(0, 5):
        f = random_field(rng, rot.chart, axes4, k)
        sq = mt.hodge(rot.metric, mt.hodge(rot.metric, f))
        sign = -1.0 if k in (1, 3) else (1.0 if k in (0, 4) else -1.0)
        # Lorentzian: ** = s(-1)^{k(n-k)} with s = -1: degrees 0..4 give
        # -,+,-,+,- on (+,-,-,-)? verified against the permutation oracle in
        # the tests; here we pin the closed signs
        sign = {0: -1.0, 1: 1.0, 2: -1.0, 3: 1.0, 4: -1.0}[k]
        ch_val = maxdiff(sq, f.scaled(sign), pts_r, rel=True)
        worst = max(worst, ch_val)
    ch.add("hodge_square_4d", "*4 *4 = sign(k) Id on (+,-,-,-)",
           worst, 1e-10)

    obs_r = mt.lapse_shift(rot.structure, rot.metric)
    worst = 0.0
    for k in range(0, 4):
        f = random_field(rng, rot.chart, base, k)
        sq = mt.hodge(obs_r.h_sigma, mt.hodge(obs_r.h_sigma, f))
        worst = max(worst, maxdiff(sq, f, pts_r, rel=True))
    ch.add("hodge_square_3d", "*3 *3 = Id (Riemannian)", worst, 1e-10)

    kap4 = mt.unit_volume(rot.metric)
    pair = sp.split_form(rot.structure, kap4)
    kap3 = mt.unit_volume(obs_r.h_sigma)
    worst = max(maxres(pair[0], pts_r),
                maxdiff(pair[1], fl.wedge(obs_r.lapse, kap3), pts_r,
                        rel=True))
    ch.add("volume_split", "S^-* kappa4 = (0, N kappa3)", worst, 1e-11)

    worst = 0.0
    for k in range(1, 4):
        kk = random_field(rng, rot.chart, base, k, kind=MultiVec)
        ll = random_field(rng, rot.chart, base, k - 1, kind=MultiVec, wg=1)
        v4 = sp.unsplit_vector(rot.structure, (kk, ll))
        direct = sp.split_form(rot.structure, mt.riesz(rot.metric, v4))
        matrix = mt.split_riesz_regular(rot.structure, rot.metric, (kk, ll),
                                        obs_r)
        worst = max(worst, pair_diff(direct, matrix, pts_r, rel=True))
        back = mt.split_riesz_regular_inv(rot.structure, rot.metric, matrix,
                                          obs_r)
        worst = max(worst, pair_diff(back, (kk, ll), pts_r, rel=True))
    ch.add("riesz_regular", "S^-* g S^-1 = [[1,0],[0,NN]] h n",
           worst, 1e-10)

    worst = 0.0
    for k in range(0, 4):
        a = random_field(rng, rot.chart, base, k)
        b = random_field(rng, rot.chart, base, max(k - 1, 0), wg=-1) \
            if k > 0 else Field.zero_field(rot.chart, base, 0, wg=-1)
        g4f = sp.unsplit_form(rot.structure, (a, b))
        direct = sp.split_form(rot.structure, mt.hodge(rot.metric, g4f))
        matrix = mt.split_hodge_regular(rot.structure, rot.metric, (a, b),
                                        obs_r)
        worst = max(worst, pair_diff(direct, matrix, pts_r, rel=True))
    ch.add("hodge_regular", "S^-* *4 S* = [[0, N^-1 *3 n],[N *3, 0]]",
           worst, 1e-10)

    obs_n = mt.lapse_shift(nat.structure, nat.metric)
    worst_r = worst_h = worst_i = 0.0
    for k in (1, 2):
        kk = random_field(rng, nat.chart, base, k, kind=MultiVec)
        ll = random_field(rng, nat.chart, base, k - 1, kind=MultiVec, wg=1)
        v4 = sp.unsplit_vector(nat.structure, (kk, ll))
        direct = sp.split_form(nat.structure, mt.riesz(nat.metric, v4))
        a = random_field(rng, nat.chart, base, k)
        b = random_field(rng, nat.chart, base, k - 1, wg=-1)
        g4f = sp.unsplit_form(nat.structure, (a, b))
        direct_h = sp.split_form(nat.structure, mt.hodge(nat.metric, g4f))
        direct_i = sp.split_vector(nat.structure,
                                   mt.riesz_inv(nat.metric, g4f))
        for basis in ("sigma", "pi"):
            m_r = mt.split_riesz_nonregular(nat.structure, nat.metric,
                                            (kk, ll), basis, obs_n)
            worst_r = max(worst_r, pair_diff(direct, m_r, pts_n, rel=True))
            m_h = mt.split_hodge_nonregular(nat.structure, nat.metric,
                                            (a, b), basis, obs_n)
            worst_h = max(worst_h, pair_diff(direct_h, m_h, pts_n, rel=True))
            m_i = mt.split_riesz_nonregular_inv(nat.structure, nat.metric,
                                                (a, b), basis, obs_n)
            worst_i = max(worst_i, pair_diff(direct_i, m_i, pts_n, rel=True))
    ch.add("riesz_nonregular", "nonregular Riesz splitting, both bases",
           worst_r, 1e-10)
    ch.add("hodge_nonregular", "nonregular Hodge splitting, both bases",
           worst_h, 1e-10)
    ch.add("riesz_inv_nonregular", "nonregular inverse Riesz, both bases",
           worst_i, 1e-10)

    # nonregular formulas reduce to the regular ones for vanishing shift
    worst = 0.0
    for k in (1, 2):
        kk = random_field(rng, rot.chart, base, k, kind=MultiVec)
        ll = random_field(rng, rot.chart, base, k - 1, kind=MultiVec, wg=1)
        reg = mt.split_riesz_regular(rot.structure, rot.metric, (kk, ll),
                                     obs_r)
        for basis in ("sigma", "pi"):
            non = mt.split_riesz_nonregular(rot.structure, rot.metric,
                                            (kk, ll), basis, obs_r)
            worst = max(worst, pair_diff(reg, non, pts_r, rel=True))
        a = random_field(rng, rot.chart, base, k)
        b = random_field(rng, rot.chart, base, k - 1, wg=-1)
        regh = mt.split_hodge_regular(rot.structure, rot.metric, (a, b),
                                      obs_r)
        for basis in ("sigma", "pi"):
            nonh = mt.split_hodge_nonregular(rot.structure, rot.metric,
                                             (a, b), basis, obs_r)
            worst = max(worst, pair_diff(regh, nonh, pts_r, rel=True))
    ch.add("nonregular_reduces", "shift -> 0 recovers the regular matrices",
           worst, 1e-10)

    worst = max(abs(real(obs_n.xi.comps_fn(p)[0])
                    - real(nat.oracles["xi"].comps_fn(p)[0]))
                for p in pts_n)
    ch.add("xi_schiff", "xi = gamma for the natural rotating chart",
           worst, 1e-12)
    lo = min(real(obs_n.xi.comps_fn(p)[0]) for p in pts_n)
    ch.add_bool("xi_lower_bound", "xi >= 1, equality iff regular",
                lo >= 1.0 - 1e-12)

    u = mt.four_velocity(rot.structure, rot.metric, rot.c0)
    worst = max(abs(real(mt.norm(rot.metric, u).comps_fn(p)[0]) - rot.c0)
                for p in pts_r)
    ch.add("four_velocity_norm", "|u| = c0", worst, 1e-12)

    f = random_field(rng, rot.chart, base, 1)
    lhs = mt.proper_time_d(rot.structure, rot.metric, f, rot.c0, obs_r)
    rhs = fl.wedge(obs_r.lapse_inv.scaled(rot.c0),
                   sp.group_D(rot.structure, f))
    ch.add("proper_time", "d_tau = c0 N^-1 dG",
           maxdiff(lhs, rhs, pts_r, rel=True), 1e-13)
    return ch.records


def suite_kinematics(cfg: VerifyConfig, tol=None):
    ch = _Checks("kinematics", tol)
    rot = sc.scenario_rotating(cfg.omega, cfg.L, cfg.c0, cfg.z0)
    exp_sc = sc.scenario_expanding(cfg.a_expansion, cfg.L, cfg.c0)
    npts = max(10, cfg.points // 4)
    pts_r = sobol_points(rot.box, npts, cfg.seed, rot.exclude)
    pts_e = sobol_points(exp_sc.box, npts, cfg.seed)

    for name, scn, pts in (("rotating", rot, pts_r),
                           ("expanding", exp_sc, pts_e)):
        s, g, c0 = scn.structure, scn.metric, scn.c0
        obs = mt.lapse_shift(s, g)
        kin = mt.kinematics(s, g, c0, obs)

        delta_alt = mt.delta_from_connection(s, g, c0, obs)
        ch.add(f"{name}_delta", "delta~ = c0 N (chi - N^-1 D N)",
               maxdiff(kin.delta, delta_alt, pts, rel=True), 1e-10)

        eta_alt = mt.eta_from_connection(s, g, c0, obs)
        ch.add(f"{name}_eta", "2 eta = c0 N Om",
               maxdiff(kin.eta, eta_alt, pts, rel=True), 1e-10)

        u = mt.four_velocity(s, g, c0)
        mu = mt.riesz(g, u)
        pair = sp.split_form(s, fl.exterior_d(mu))
        worst = max(maxdiff(pair[0], kin.eta.scaled(2.0), pts, rel=True),
                    maxdiff(pair[1], kin.delta, pts, rel=True))
        ch.add(f"{name}_dmu", "(2 eta, delta~) = S^-* d mu", worst, 1e-10)

        dt_h = mt.metric_dt(s, obs.h_sigma, c0, obs)
        worst = max(abs(real(x) - 0.5 * real(y)) for p in pts
                    for rx, ry in zip(kin.expansion.matrix(p),
                                      dt_h.matrix(p))
                    for x, y in zip(rx, ry))
        ch.add(f"{name}_expansion", "2 lambda = d_tau h", worst, 1e-10)

        kap3 = mt.unit_volume(obs.h_sigma)
        lhs = mt.proper_time_d(s, g, kap3, c0, obs)
        rhs = fl.wedge(kin.expansion_scalar, kap3)
        ch.add(f"{name}_volume_rate", "d_tau kappa3 = lambda kappa3",
               maxdiff(lhs, rhs, pts, rel=True), 1e-10)

        tr = max(abs(real(sum(
            ext.inv(obs.h_sigma.matrix(p))[i][j] * kin.shear.matrix(p)[j][i]
            for i in range(3) for j in range(3)))) for p in pts)
        ch.add(f"{name}_shear_tracefree", "Tr(h^-1 sigma) = 0", tr, 1e-11)

    # rotating: Born rigid, expansion vanishes
    kin_r = mt.kinematics(rot.structure, rot.metric, rot.c0)
    worst = max(abs(real(v)) for p in pts_r
                for row in kin_r.expansion.matrix(p) for v in row)
    ch.add("rotating_born_rigid", "lambda = 0 at constant spin rate",
           worst, 1e-12)

    # expanding scenario scalar value
    kin_e = mt.kinematics(exp_sc.structure, exp_sc.metric, exp_sc.c0)
    worst = maxdiff(kin_e.expansion_scalar,
                    exp_sc.oracles["expansion_scalar"], pts_e, rel=True)
    ch.add("expanding_scalar", "lambda = 3 a c0 / L for h = exp(2at) delta",
           worst, 1e-11)

    # stationarity equivalence, both directions
    for name, scn, pts, expect in (("rotating", rot, pts_r, True),
                                   ("expanding", exp_sc, pts_e, False)):
        s, g = scn.structure, scn.metric
        obs = mt.lapse_shift(s, g)
        lw = mt.lie_metric(sp.fundamental_w(s), g)
        stat = max(abs(real(v)) for p in pts
                   for row in lw(p) for v in row) < 1e-9
        chi_zero = maxres(sp.variance_chi(s), pts) < 1e-9
        dt_h = mt.metric_dt(s, obs.h_sigma, 1.0, obs)
        h_static = max(abs(real(v)) for p in pts
                       for row in dt_h.matrix(p) for v in row) < 1e-9
        n_static = maxres(sp.group_D(s, obs.lapse_inv), pts) < 1e-9
        ch.add_bool(f"{name}_stationary_equiv",
                    "L_w g = 0 iff chi = 0, dG h = 0, dG N^-1 = 0",
                    stat == (chi_zero and h_static and n_static)
                    and stat == expect)

    # proxy kinematic forms match the kinematic parameters
    s, g, c0 = rot.structure, rot.metric, rot.c0
    obs = mt.lapse_shift(s, g)
    kin = mt.kinematics(s, g, c0, obs)
    two_eta, delta = mt.proxy_kinematic_forms(s, g, c0, obs)
    worst = max(
        maxdiff(two_eta, kin.eta.scaled(2.0), pts_r, rel=True),
        maxdiff(delta,
                fl.wedge(obs.lapse_inv.scaled(c0, dims.C0_DIM), kin.delta),
                pts_r, rel=True))
    ch.add("proxy_kinematics", "(2 eta-bar, delta-bar) = proxies of (2 eta, delta~)",
           worst, 1e-10)
    return ch.records


def suite_em(cfg: VerifyConfig, tol=None):
    ch = _Checks("em", tol)
    rng = np.random.default_rng(cfg.seed + 5)
    chart = _std_chart()
    pts = sobol_points(_unit_box(), max(10, cfg.points // 4), cfg.seed)
    axes4 = (0, 1, 2, 3)
    s = random_gamma(rng, chart, axes4, 0)

    A = random_field(rng, chart, axes4, 1, dim=dims.UT)
    H = random_field(rng, chart, axes4, 2, twist_x=True, dim=dims.IT)
    fs = em.MaxwellFieldSet.from_potentials(A, H)
    sf = em.split_em(s, fs)

    res = em.maxwell_residuals(s, sf)
    worst = max(maxres(r, pts) for r in res.values())
    ch.add("maxwell_general", "all 7 split residuals vanish for F = dA, "
           "J = dH", worst, 1e-10)

    alt = em.maxwell_residuals_alt(s, sf)
    worst = max(maxres(r, pts) for r in alt.values())
    ch.add("maxwell_alt", "d(b - Gamma^e~) = 0 and companions", worst, 1e-10)

    s_nat = sp.natural(chart, axes4, 0)
    pair = sp.change_connection(s, s_nat, (sf.b, sf.e.scaled(-1.0)))
    ch.add("alt_change_connection",
           "alt fields = change of connection to Gamma = 0",
           maxdiff(pair[0], sf.b - fl.wedge(s.gamma, sf.e), pts, rel=True),
           1e-12)

    round_trip = em.unsplit_em(s, sf)
    ch.add("em_round_trip", "unsplit(split(F)) = F",
           maxdiff(round_trip.F, fs.F, pts, rel=True), 1e-12)

    n4 = random_field(rng, chart, axes4, 1, kind=MultiVec)
    k, l = sp.split_vector(s, n4)
    T = em.stress_tensor_4d(fs.F, fs.H, n4)
    direct = sp.split_form(s, T)
    emq = em.energy_momentum(sf, k, l)
    matrix = em.split_stress_pair(emq)
    ch.add("stress_split", "S^-* T S^-1 = [[-p, w~],[-m~, -s~]]",
           pair_diff(direct, matrix, pts, rel=True), 1e-10)

    rot = sc.scenario_rotating(cfg.omega, cfg.L, cfg.c0, cfg.z0)
    sol = sc.scenario_schiff_solution(cfg.Q, cfg.R1, cfg.R2, cfg.omega,
                                      cfg.L, cfg.c0, cfg.z0, cfg.R)
    pts_s = sobol_points(sol.box, max(10, cfg.points // 4), cfg.seed,
                         sol.exclude)
    g = rot.metric

    n_kill = Field.from_comps(rot.chart, axes4, 1, {(0,): 1.0},
                              kind=MultiVec)
    Xw = em.body_force(sol.maxwell.F, sol.maxwell.H, n_kill)
    ch.add("killing_body_force", "X_n = 0 for Killing n",
           maxres(Xw, pts_s), 1e-10)

    nonk = Field.from_comps(rot.chart, axes4, 1, {(1,): lambda p: p[1]},
                            kind=MultiVec)
    tr_res = em.trautman_commutator_residual(g, nonk, sol.maxwell.F)
    ch.add("trautman_commutator",
           "[L_n, *4] = (Theta-bar_n - Theta_n/2) *4 (non-Killing n)",
           maxres(tr_res, pts_s), 1e-9)
    ch.add_bool("nonkilling_body_force", "X_n != 0 for non-Killing n",
                maxres(em.body_force(sol.maxwell.F, sol.maxwell.H, nonk),
                       pts_s) > 1e-6)

    kk, ll = sp.split_vector(sol.structure, n_kill)
    mom, en = em.balance_residuals(sol.structure, sol.split_fields, kk, ll)
    worst = max(maxres(mom, pts_s), maxres(en, pts_s))
    ch.add("balance", "momentum and energy balance for Killing n",
           worst, 1e-8)

    obs = mt.lapse_shift(sol.structure, sol.metric)
    d3c, h3c = em.constitutive_regular(sol.structure, sol.metric,
                                       sol.split_fields.e,
                                       sol.split_fields.b, sol.z0, obs)
    worst = max(maxdiff(d3c, sol.split_fields.d, pts_s, rel=True),
                maxdiff(h3c, sol.split_fields.h, pts_s, rel=True))
    ch.add("constitutive_regular", "d = Z0^-1 N^-1 *3 e~, "
           "h~ = Z0^-1 N *3 b", worst, 1e-10)

    dcomp = em.constitutive_regular_components(sol.structure, sol.metric,
                                               sol.split_fields.e, sol.z0,
                                               obs)
    ch.add("constitutive_components",
           "d_ij = Z0^-1 g00^-1/2 |h|^1/2 eps_ij^k e_k",
           maxdiff(dcomp, sol.split_fields.d, pts_s, rel=True), 1e-10)

    F2 = sp.unsplit_form(sol.structure, (sol.split_fields.b,
                                         sol.split_fields.e.scaled(-1.0)))
    H2 = em.vacuum_excitation(sol.metric, F2, sol.z0)
    ch.add("constitutive_4d", "H = Z0^-1 *4 F then split agrees",
           pair_diff(sp.split_form(sol.structure, H2),
                     (sol.split_fields.d, sol.split_fields.h),
                     pts_s, rel=True), 1e-10)

    # proxies
    psf = em.proxy_em(sol.structure, sol.metric, sol.c0, sol.split_fields,
                      obs)
    pres = em.proxy_maxwell_residuals(sol.structure, sol.metric, sol.c0,
                                      psf, obs)
    worst = max(maxres(r, pts_s) for r in pres.values())
    ch.add("proxy_maxwell", "D b = c0^-2 2 eta-bar ^ e and companions",
           worst, 1e-9)

    kp = mt.proxy_vec_pair(sol.structure, sol.metric, sol.c0, (kk, ll), obs)
    pmom, pen = em.proxy_balance_residuals(sol.structure, sol.metric,
                                           sol.c0, psf, kp[0], obs)
    worst = max(maxres(pmom, pts_s), maxres(pen, pts_s))
    ch.add("proxy_poynting", "r = -e^j and Poynting's theorem", worst, 1e-8)

    lag = em.lagrangian(fs.F, fs.H)
    ch.add_bool("lagrangian_dim", "pd(-(F^H)/2) is action",
                lag.dim == dims.A)
    return ch.records


def suite_scenarios(cfg: VerifyConfig, tol=None):
    ch = _Checks("scenarios", tol)
    rng = np.random.default_rng(cfg.seed + 6)
    rot = sc.scenario_rotating(cfg.omega, cfg.L, cfg.c0, cfg.z0)
    pts_r = sobol_points(rot.box, cfg.points, cfg.seed, rot.exclude)
    s, g = rot.structure, rot.metric
    obs = mt.lapse_shift(s, g)
    kin = mt.kinematics(s, g, rot.c0, obs)

    ch.add("rot_lapse", "N = gamma^-1 L (x) dt",
           maxdiff(obs.lapse, rot.oracles["lapse"], pts_r, rel=True), 1e-11)
    ch.add("rot_omega", "omega = (dt - w/(c0 L) (g r)^2 dphi) (x) dt",
           maxdiff(sp.connection_omega(s), rot.oracles["omega_form"],
                   pts_r, rel=True), 1e-11)
    ch.add("rot_curvature", "Om = -2 b g^4 L^-1 dr^dphi (x) dt",
           maxdiff(sp.curvature_omega(s), rot.oracles["curvature"],
                   pts_r, rel=True), 1e-11)
    ch.add("rot_chi", "chi = 0 (principal)",
           maxres(sp.variance_chi(s), pts_r), 1e-12)
    ch.add("rot_delta", "delta~ = b g w L dr (x) dt",
           maxdiff(kin.delta, rot.oracles["delta"], pts_r, rel=True), 1e-11)
    ch.add("rot_eta", "eta = -g^3 w r dr^dphi",
           maxdiff(kin.eta, rot.oracles["eta"], pts_r, rel=True), 1e-11)
    worst = max(abs(real(x) - real(y)) for p in pts_r
                for rx, ry in zip(obs.h_sigma.matrix(p),
                                  rot.oracles["h"].matrix(p))
                for x, y in zip(rx, ry))
    ch.add("rot_h", "h = diag(1, (g r)^2, 1)", worst, 1e-11)
    worst = max(abs(real(v)) for p in pts_r
                for row in kin.expansion.matrix(p) for v in row)
    ch.add("rot_lambda", "lambda = 0 (Born rigid)", worst, 1e-12)

    # eta = -gamma^2 w *3 dz
    dz = Field.from_comps(rot.chart, (1, 2, 3), 1, {(2,): 1.0}, dim=dims.L)
    beta, gam2 = sc._rot_helpers(cfg.omega, cfg.L, cfg.c0)
    pref = Field.scalar(rot.chart, lambda p: -gam2(p) * cfg.omega,
                        axes=(1, 2, 3), dim=dims.L ** -1 / dims.T)
    eta_hodge = fl.wedge(pref, mt.hodge(obs.h_sigma, dz))
    worst = 0.0
    for p in pts_r:
        va, vb = kin.eta.at(p), eta_hodge.at(p)
        worst = max(worst, max(abs(real(x) - real(y))
                               for x, y in zip(va.comps, vb.comps)))
    ch.add("rot_eta_hodge", "eta = -g^2 w *3 dz", worst, 1e-11)

    # axial quantities
    n_ring = mt.norm(obs.h_sigma, rot.oracles["w_ring"])
    ch.add("rot_n_ring", "N-ring = g r (x) dphi",
           maxdiff(n_ring, rot.oracles["n_ring"], pts_r, rel=True), 1e-11)
    lam_f = fl.wedge(rot.oracles["n_ring"],
                     fl.wedge(obs.lapse_inv,
                              Field.scalar(rot.chart, lambda p: 1.0 / gam2(p),
                                           axes=(1, 3))))
    ch.add("rot_lambda_axial", "Lambda = g^-2 N-ring N^-1 = r/L",
           maxdiff(lam_f, rot.oracles["lambda_axial"], pts_r, rel=True),
           1e-11)
    ax_pair = sc.axial_curvature_pair(s, rot.axial)
    worst = max(maxres(ax_pair[0], pts_r),
                maxdiff(ax_pair[1], rot.oracles["omega_bar"],
                        pts_r, rel=True))
    ch.add("rot_omega_bar", "axial split of Om gives (0, Om-bar), "
           "Om-bar = d(b g^2 Lambda) = -d Gamma-bar", worst, 1e-11)
    gb = fl.wedge(Field.scalar(rot.chart,
                               lambda p: -beta(p) * gam2(p), axes=(1, 3)),
                  rot.oracles["lambda_axial"])
    ch.add("rot_gamma_bar", "Gamma-bar = -b g^2 Lambda",
           maxdiff(gb, rot.oracles["gamma_bar"], pts_r, rel=True), 1e-11)
    dgb = fl.exterior_d(rot.oracles["gamma_bar"])
    ch.add("rot_omega_bar_exact", "Om-bar = -d Gamma-bar",
           maxdiff(dgb.scaled(-1.0), rot.oracles["omega_bar"], pts_r,
                   rel=True), 1e-11)

    # omega -> 0 limit reproduces the observer at rest (cylindrical)
    tiny = sc.scenario_rotating(1e-8, cfg.L, cfg.c0, cfg.z0)
    obs_t = mt.lapse_shift(tiny.structure, tiny.metric)
    kin_t = mt.kinematics(tiny.structure, tiny.metric, tiny.c0, obs_t)
    pts_t = sobol_points(Box((0.0, 0.1, 0.0, -1.0), (1.0, 2.0, 6.28, 1.0)),
                         16, cfg.seed)
    worst = max(maxres(kin_t.delta, pts_t), maxres(kin_t.eta, pts_t),
                maxres(sp.curvature_omega(tiny.structure), pts_t))
    ch.add("rot_rest_limit", "omega -> 0 recovers the inertial observer",
           worst, 1e-6)

    # Minkowski rest observer
    mink = sc.scenario_minkowski_rest(cfg.L, cfg.c0)
    pts_m = sobol_points(mink.box, max(10, cfg.points // 4), cfg.seed)
    kin_m = mt.kinematics(mink.structure, mink.metric, mink.c0)
    worst = max(maxres(kin_m.delta, pts_m), maxres(kin_m.eta, pts_m),
                max(abs(real(v)) for p in pts_m
                    for row in kin_m.expansion.matrix(p) for v in row))
    ch.add("mink_inertial", "inertial observer: delta~ = eta = lambda = 0",
           worst, 1e-12)

    # classification flags
    flags_m = sp.classify(mink.structure, pts_m, metric=mink.metric)
    ch.add_bool("mink_flags", "rest observer: standard and stationary",
                all(flags_m[k] for k in ("flat", "principal", "natural",
                                         "holonomic", "regular", "metric",
                                         "standard", "stationary")))
    flags_r = sp.classify(s, pts_r, metric=g)
    ch.add_bool("rot_flags", "rotating observer: regular, principal, "
                "stationary; not flat, natural, metric",
                flags_r["principal"] and flags_r["regular"]
                and flags_r["stationary"] and not flags_r["flat"]
                and not flags_r["natural"] and not flags_r["metric"]
                and not flags_r["standard"] and not flags_r["holonomic"])

    nat = sc.scenario_schiff_natural(cfg.omega, cfg.L, cfg.c0, cfg.z0,
                                     cfg.Q, cfg.R1, cfg.R2)
    pts_n = sobol_points(nat.box, cfg.points, cfg.seed, nat.exclude)
    flags_n = sp.classify(nat.structure, pts_n, metric=nat.metric)
    ch.add_bool("schiff_flags", "Schiff splitting: natural, stationary, "
                "not regular",
                flags_n["natural"] and flags_n["holonomic"]
                and flags_n["stationary"] and not flags_n["regular"]
                and not flags_n["metric"])

    # implication structure on random structures
    ok = True
    chart = _std_chart()
    pts_u = sobol_points(_unit_box(), 16, cfg.seed)
    for st in _three_structures(rng, chart):
        fl_ = sp.classify(st, pts_u)
        if fl_["natural"] and not fl_["holonomic"]:
            ok = False
        if fl_["holonomic"] and not (fl_["flat"] and fl_["principal"]):
            ok = False
    ch.add_bool("flag_implications",
                "natural => holonomic => flat and principal", ok)

    # Schiff natural splitting quantities and star fields
    obs_n = mt.lapse_shift(nat.structure, nat.metric)
    ch.add("schiff_xi", "xi = gamma",
           maxdiff(obs_n.xi, nat.oracles["xi"], pts_n, rel=True), 1e-11)
    ch.add("schiff_ndag", "N-dagger = L",
           maxdiff(obs_n.lapse_dag, nat.oracles["lapse_dag"], pts_n,
                   rel=True), 1e-11)
    worst = max(abs(real(x) - real(y)) for p in pts_n
                for rx, ry in zip(obs_n.h_sigma.matrix(p),
                                  nat.oracles["h_sigma"].matrix(p))
                for x, y in zip(rx, ry))
    ch.add("schiff_h_euclid", "h_Sigma is Euclidean", worst, 1e-11)
    ch.add("schiff_shift", "N-vec = (w L / c0) d_phi",
           maxdiff(obs_n.shift_vec, nat.oracles["shift_vec"], pts_n,
                   rel=True), 1e-11)

    stars = em.schiff_star_fields(nat.structure, nat.metric,
                                  nat.split_fields, nat.z0, obs_n)
    ch.add("schiff_rho_s", "rho_S = -d p_S = 0",
           maxres(stars.rho_s, pts_n), 1e-9)
    ch.add("schiff_j_s", "j~ = -j_S",
           maxdiff(stars.j_s.scaled(-1.0), nat.split_fields.j, pts_n),
           1e-9)
    worst = max(
        maxdiff(stars.d_star, nat.split_fields.d - stars.p_s, pts_n,
                rel=True),
        maxdiff(stars.h_star, nat.split_fields.h + stars.m_s, pts_n,
                rel=True))
    ch.add("schiff_star_decomp", "d* = d - p_S and h* = h~ + m_S",
           worst, 1e-10)

    cpl1 = fl.wedge(em.const(nat.chart, (1, 2, 3), 1.0 / nat.z0,
                             dims.Z0_DIM ** -1),
                    fl.wedge(obs_n.lapse_dag_inv,
                             mt.hodge(obs_n.h_sigma,
                                      nat.split_fields.e + fl.contract(
                                          obs_n.shift_vec,
                                          nat.split_fields.b))))
    ch.add("schiff_coupling", "d = Z0^-1 N^-dag *S (e~ + i_N b)",
           maxdiff(cpl1, nat.split_fields.d, pts_n, rel=True), 1e-9)

    # Schiff exact solution
    sol = sc.scenario_schiff_solution(cfg.Q, cfg.R1, cfg.R2, cfg.omega,
                                      cfg.L, cfg.c0, cfg.z0, cfg.R)
    pts_s = sobol_points(sol.box, cfg.points, cfg.seed, sol.exclude)
    red = sol.reduced
    r1 = em._d_or_zero(red["b"]) + fl.wedge(sol.oracles["omega_bar"],
                                            red["e"])
    r2 = em._d_or_zero(red["e"])
    r3 = em._d_or_zero(red["d"]) - fl.wedge(sol.oracles["omega_bar"],
                                            red["h"])
    r4 = em._d_or_zero(red["h"])
    worst = max(maxres(r1, pts_s), maxres(r2, pts_s), maxres(r3, pts_s),
                maxres(r4, pts_s))
    ch.add("schiff_reduced_maxwell",
           "-d b- = Om- ^ e-, d e- = 0, -d d- = rho- - Om- ^ h-, d h- = j-",
           worst, 1e-9)

    Ybar = mt.MetricField.from_entries(rot.chart, (1, 3),
                                       {(0, 0): 1.0, (1, 1): 1.0})
    gl = fl.wedge(Field.scalar(rot.chart, gam2, axes=(1, 3)),
                  sol.oracles["lambda_axial"])
    z0inv = em.const(rot.chart, (1, 3), 1.0 / sol.z0, dims.Z0_DIM ** -1)
    dcheck = fl.wedge(z0inv, fl.wedge(gl, mt.hodge(Ybar, red["e"])))
    ch.add("schiff_reduced_const", "d- = Z0^-1 g^2 Lambda *2 e-",
           maxdiff(dcheck, red["d"], pts_s, rel=True), 1e-10)

    blam = Field.scalar(rot.chart,
                        lambda p: beta(p) * cfg.L / p[1], axes=(1, 3),
                        wu=1, wg=-1)
    ch.add("schiff_beta_lambda", "d(beta Lambda^-1) = 0",
           maxres(fl.exterior_d(blam), pts_s), 1e-12)

    res3 = em.maxwell_residuals(sol.structure, sol.split_fields)
    worst = max(maxres(r, pts_s) for r in res3.values())
    ch.add("schiff_3d_maxwell", "static split Maxwell residuals off the "
           "spheres", worst, 1e-9)

    pout = []
    for p in pts_s:
        q = list(p)
        q[1] = 0.9 * cfg.R
        q[3] = 0.0
        pout.append(q)
    worst = max(max(sol.maxwell.F.at(p).max_abs(),
                    sol.maxwell.H.at(p).max_abs()) for p in pout)
    ch.add("schiff_outside", "all fields vanish outside the outer sphere",
           worst, 1e-15)

    pert = max(
        maxdiff(red["e"], red["e0"], pts_s, rel=True),
        maxdiff(red["b"], fl.wedge(Field.scalar(rot.chart, gam2,
                                                axes=(1, 3)), red["b1"]),
                pts_s, rel=True))
    ch.add("schiff_perturbation", "(e-, d-) = (e1, g^2 d1), "
           "(b-, h-) = (g^2 b1, h1)", pert, 1e-12)

    def prof(p):
        return 0.3 + 0.1 * p[1] * p[1] + 0.05 * p[3]

    fs_j = sc.static_charge_current(rot, prof)
    sf_j = em.split_em(rot.structure, fs_j)
    rho_or, j_or = sc.schiff_excitation_oracle(rot, prof)
    worst = max(maxdiff(sf_j.rho, rho_or, pts_r, rel=True),
                maxdiff(sf_j.j, j_or, pts_r, rel=True))
    ch.add("schiff_excitation", "(rho, j~) = (g^2, -b Lambda^-1 i_w-ring) "
           "rho0", worst, 1e-11)

    # axial splitting of the 3-D fields: one system is trivial
    ax = sc.axial_split_em(sol.axial, sol.split_fields)
    worst = max(maxres(ax["e"][1], pts_s), maxres(ax["b"][0], pts_s),
                maxres(ax["h"][1], pts_s), maxres(ax["d"][0], pts_s))
    ch.add("axial_trivial_system", "azimuthal sources leave one reduced "
           "system empty", worst, 1e-12)
    worst = max(maxdiff(ax["e"][0], red["e"], pts_s, rel=True),
                maxdiff(ax["h"][0], red["h"], pts_s, rel=True))
    ch.add("axial_consistency", "axial split returns the reduced fields",
           worst, 1e-11)
    return ch.records


def _dims_equations(cfg: VerifyConfig):
    """Representative equations with the dimensions of their summands."""
    rng = np.random.default_rng(cfg.seed + 7)
    chart = _std_chart()
    axes4 = (0, 1, 2, 3)
    s = random_gamma(rng, chart, axes4, 0)
    A = random_field(rng, chart, axes4, 1, dim=dims.UT)
    H = random_field(rng, chart, axes4, 2, twist_x=True, dim=dims.IT)
    fs = em.MaxwellFieldSet.from_potentials(A, H)
    sf = em.split_em(s, fs)
    eqs = {}
    for name, terms in em.maxwell_terms(s, sf).items():
        eqs[f"maxwell.{name}"] = [t.dim for t in terms]

    rot = sc.scenario_rotating(cfg.omega, cfg.L, cfg.c0, cfg.z0)
    obs = mt.lapse_shift(rot.structure, rot.metric)
    kin = mt.kinematics(rot.structure, rot.metric, rot.c0, obs)
    eqs["kinematics.delta"] = [
        kin.delta.dim,
        mt.delta_from_connection(rot.structure, rot.metric, rot.c0,
                                 obs).dim]
    eqs["kinematics.eta"] = [
        kin.eta.dim,
        mt.eta_from_connection(rot.structure, rot.metric, rot.c0, obs).dim]

    sol = sc.scenario_schiff_solution(cfg.Q, cfg.R1, cfg.R2, cfg.omega,
                                      cfg.L, cfg.c0, cfg.z0, cfg.R)
    d3c, h3c = em.constitutive_regular(sol.structure, sol.metric,
                                       sol.split_fields.e,
                                       sol.split_fields.b, sol.z0)
    eqs["constitutive.d"] = [d3c.dim, sol.split_fields.d.dim]
    eqs["constitutive.h"] = [h3c.dim, sol.split_fields.h.dim]

    n_kill = Field.from_comps(rot.chart, axes4, 1, {(0,): 1.0},
                              kind=MultiVec)
    kk, ll = sp.split_vector(sol.structure, n_kill)
    emq = em.energy_momentum(sol.split_fields, kk, ll)
    eqs["stress.action"] = [emq.p.dim, emq.w.dim, dims.A]
    f_d, r_d = em.force_densities(sol.split_fields, kk, ll)
    eqs["balance.momentum"] = [
        f_d.dim, sp.group_D(sol.structure, emq.p).dim,
        sp._safe_D(sol.structure, emq.m).dim]
    eqs["balance.energy"] = [
        r_d.dim, sp.group_D(sol.structure, emq.w).dim,
        sp._safe_D(sol.structure, emq.s).dim]
    eqs["hodge.excitation"] = [
        em.vacuum_excitation(sol.metric, sol.maxwell.F, sol.z0).dim,
        dims.IT]
    eqs["action.UIT2"] = [dims.U * dims.I * dims.T ** 2, dims.A]
    return eqs


def suite_dims(cfg: VerifyConfig, tol=None):
    ch = _Checks("dims", tol)
    for name, terms in _dims_equations(cfg).items():
        ch.add_bool(name, "pd homogeneous: " + str(terms[0]),
                    dims.pd_check(terms))
    # the audit must catch a deliberate mismatch
    bad = [dims.UT, dims.UT * dims.L]
    ch.add_bool("negative_control", "deliberate mismatch is detected",
                not dims.pd_check(bad))
    group_ok = (dims.U == dims.M * dims.L ** 2 / (dims.T ** 3 * dims.I)
                and dims.A == dims.U * dims.I * dims.T ** 2
                and (dims.U * dims.U.inverse()).is_neutral)
    ch.add_bool("group_laws", "U = M L^2 T^-3 I^-1, A = U I T^2, "
                "D D^-1 = 1", group_ok)
    return ch.records


SUITES = {
    "algebra": suite_algebra,
    "derivative": suite_derivative,
    "splitting": suite_splitting,
    "transitions": suite_transitions,
    "metric": suite_metric,
    "kinematics": suite_kinematics,
    "em": suite_em,
    "scenarios": suite_scenarios,
    "dims": suite_dims,
}


def run_suites(cfg: VerifyConfig) -> Report:
    names = cfg.suites or list(SUITES)
    records = []
    for name in names:
        if name not in SUITES:
            raise KeyError(name)
        t0 = time.perf_counter()
        recs = SUITES[name](cfg, cfg.tolerances.get(name))
        dt = time.perf_counter() - t0
        for r in recs:
            r.seconds = round(dt / max(len(recs), 1), 4)
        records.extend(recs)
    return Report(records)
