"""Built-in analytic scenarios with closed-form oracles.

All scenarios fix program units c0 = 1, L = 1 by default (configurable),
declare their sampling box and singular set, and expose every derived
quantity they have a closed form for in ``oracles``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import dims, em, exterior as ext, fields as fl, metric as mt, \
    splitting as sp
from .dual import real, sqrt
from .exterior import CoForm, MultiVec
from .fields import Chart, Field
from .sampling import Box


@dataclass
class Scenario:
    name: str
    chart: Chart
    structure: sp.SplittingStructure
    metric: mt.MetricField
    c0: float
    z0: float = 1.0
    params: dict = dc_field(default_factory=dict)
    box: Box = None
    exclude: object = None            # point -> bool, the singular set
    oracles: dict = dc_field(default_factory=dict)
    split_fields: em.SplitEmFields = None
    maxwell: em.MaxwellFieldSet = None
    axial: sp.SplittingStructure = None
    reduced: dict = dc_field(default_factory=dict)
    singular: str = ""


# ---------------------------------------------------------------------------
# Minkowski observer at rest

def scenario_minkowski_rest(L: float = 1.0, c0: float = 1.0,
                            z0: float = 1.0) -> Scenario:
    if L <= 0:
        raise ValueError("chart scale L must be positive")
    chart = Chart(("t", "x", "y", "z"),
                  (dims.ONE, dims.L, dims.L, dims.L))
    axes4 = (0, 1, 2, 3)
    g = mt.MetricField.from_entries(chart, axes4, {
        (0, 0): L * L, (1, 1): -1.0, (2, 2): -1.0, (3, 3): -1.0})
    s = sp.natural(chart, axes4, 0, name="minkowski-rest")
    box = Box((0.0, -1.0, -1.0, -1.0), (1.0, 1.0, 1.0, 1.0))
    nzero = Field.scalar(chart, L, axes=(1, 2, 3), wg=-1, dim=dims.L)
    return Scenario(
        name="minkowski_rest", chart=chart, structure=s, metric=g, c0=c0,
        z0=z0, params={"L": L}, box=box,
        oracles={"lapse": nzero,
                 "h": mt.MetricField.from_entries(
                     chart, (1, 2, 3), {(0, 0): 1.0, (1, 1): 1.0,
                                        (2, 2): 1.0})},
        singular="none")


# ---------------------------------------------------------------------------
# rotating observer (cylindrical adapted chart)

def _rot_helpers(omega: float, L: float, c0: float):
    def beta(p):
        return omega * p[1] / c0

    def gam2(p):
        b = beta(p)
        return 1.0 / (1.0 - b * b)

    return beta, gam2


def scenario_rotating(omega: float = 0.3, L: float = 1.0, c0: float = 1.0,
                      z0: float = 1.0, r_frac=(0.1, 0.8)) -> Scenario:
    """Splitting on helical world-lines: coordinates (t, r, phi, z), helixes
    are the coordinate lines of t, horizontal subspaces metric-orthogonal."""
    if min(omega, L, c0) <= 0:
        raise ValueError("parameters must be positive")
    chart = Chart(("t", "r", "phi", "z"),
                  (dims.ONE, dims.L, dims.ONE, dims.L))
    axes4 = (0, 1, 2, 3)
    base = (1, 2, 3)
    beta, gam2 = _rot_helpers(omega, L, c0)

    g = mt.MetricField.from_entries(chart, axes4, {
        (0, 0): lambda p: L * L / gam2(p),
        (1, 1): -1.0,
        (0, 2): lambda p: -beta(p) * p[1] * L,
        (2, 2): lambda p: -p[1] * p[1],
        (3, 3): -1.0,
    })

    def gamma_phi(p):
        return -omega / (c0 * L) * gam2(p) * p[1] * p[1]

    s = sp.from_gamma_comps(chart, axes4, 0, {(1,): gamma_phi},
                            name="rotating")

    rmax = r_frac[1] * c0 / omega
    rmin = r_frac[0] * c0 / omega
    box = Box((0.0, rmin, 0.0, -1.0), (1.0, rmax, 6.28, 1.0))

    # closed forms from the adapted-chart representation
    lapse_o = Field.scalar(chart, lambda p: L / sqrt(gam2(p)), axes=base,
                           wg=-1, dim=dims.L)
    omega_o = Field.from_comps(chart, axes4, 1,
                               {(0,): 1.0, (2,): gamma_phi}, wg=1)
    gamma_o = Field.from_comps(chart, base, 1, {(1,): gamma_phi}, wg=1)
    chi_o = Field.zero_field(chart, base, 1, wg="T")
    omega2_o = Field.from_comps(chart, base, 2, {
        (0, 1): lambda p: -2.0 * beta(p) * gam2(p) ** 2 / L}, wg=1)
    delta_o = Field.from_comps(chart, base, 1, {
        (0,): lambda p: beta(p) * sqrt(gam2(p)) * omega * L}, wg=-1,
        dim=dims.L ** 2 / dims.T)
    eta_o = Field.from_comps(chart, base, 2, {
        (0, 1): lambda p: -gam2(p) ** 1.5 * omega * p[1]},
        dim=dims.L ** 2 / dims.T)
    h_o = mt.MetricField.from_entries(chart, base, {
        (0, 0): 1.0, (1, 1): lambda p: gam2(p) * p[1] * p[1], (2, 2): 1.0})

    # axial quantities (second splitting along phi, meridian plane (r, z))
    w_ring = Field.from_comps(chart, base, 1, {(1,): 1.0}, kind=MultiVec,
                              wu=-1)
    n_ring = Field.scalar(chart, lambda p: sqrt(gam2(p)) * p[1],
                          axes=(1, 3), wu=-1, dim=dims.L)
    lam_o = Field.scalar(chart, lambda p: p[1] / L, axes=(1, 3), wu=-1, wg=1)
    gamma_bar_o = Field.scalar(chart, lambda p: -beta(p) * gam2(p) * p[1] / L,
                               axes=(1, 3), wu=-1, wg=1)
    omega_bar_o = Field.from_comps(chart, (1, 3), 1, {
        (0,): lambda p: 2.0 * beta(p) * gam2(p) ** 2 / L}, wu=-1, wg=1)

    s_ax = sp.natural(chart, base, 2, slot="u", name="axial")

    return Scenario(
        name="rotating", chart=chart, structure=s, metric=g, c0=c0, z0=z0,
        params={"omega": omega, "L": L},
        box=box,
        exclude=lambda p: p[1] < rmin or beta(p) > 0.95,
        oracles={"lapse": lapse_o, "omega_form": omega_o, "gamma": gamma_o,
                 "chi": chi_o, "curvature": omega2_o, "delta": delta_o,
                 "eta": eta_o, "h": h_o, "w_ring": w_ring, "n_ring": n_ring,
                 "lambda_axial": lam_o, "gamma_bar": gamma_bar_o,
                 "omega_bar": omega_bar_o},
        axial=s_ax,
        singular="rotation axis r = 0 and the light cylinder beta -> 1")


def scenario_expanding(a: float = 0.1, L: float = 1.0, c0: float = 1.0,
                       z0: float = 1.0) -> Scenario:
    """Synthetic expanding observer metric h = exp(2 a t) delta; regular,
    natural, nonstationary.  Expansion scalar 3 a c0 / L."""
    from .dual import exp
    chart = Chart(("t", "x", "y", "z"),
                  (dims.ONE, dims.L, dims.L, dims.L))
    axes4 = (0, 1, 2, 3)
    g = mt.MetricField.from_entries(chart, axes4, {
        (0, 0): L * L,
        (1, 1): lambda p: -exp(2.0 * a * p[0]),
        (2, 2): lambda p: -exp(2.0 * a * p[0]),
        (3, 3): lambda p: -exp(2.0 * a * p[0])})
    s = sp.natural(chart, axes4, 0, name="expanding")
    box = Box((0.0, -1.0, -1.0, -1.0), (1.0, 1.0, 1.0, 1.0))
    lam_scalar_o = Field.scalar(chart, 3.0 * a * c0 / L, axes=(1, 2, 3),
                                dim=dims.T ** -1)
    return Scenario(name="expanding", chart=chart, structure=s, metric=g,
                    c0=c0, z0=z0, params={"a": a, "L": L}, box=box,
                    oracles={"expansion_scalar": lam_scalar_o},
                    singular="none")


# ---------------------------------------------------------------------------
# Schiff: charged spheres seen by a rotating observer

def _coulomb_pieces(Q, R1, R2, omega, L, c0, z0):
    """Closed forms of the dimensionally reduced solution on the meridian
    plane (r, z).  E(s) = k / s^2 between the spheres, zero elsewhere."""
    k = Q * z0 * L * c0 / (4.0 * 3.141592653589793)

    def sph(p):
        return sqrt(p[1] * p[1] + p[3] * p[3])

    def inside(p):
        sv = real(sph(p))
        return R1 < sv < R2

    def E(p):
        if not inside(p):
            return 0.0
        return k / (sph(p) ** 2)

    return k, sph, inside, E


def scenario_schiff_solution(Q: float = 1.0, R1: float = 0.2,
                             R2: float = 0.4, omega: float = 0.3,
                             L: float = 1.0, c0: float = 1.0,
                             z0: float = 1.0, R: float = 0.8) -> Scenario:
    """Exact fields of the two charged spheres in the regular splitting of
    the rotating observer, via the azimuthal reduction to the meridian
    plane.  Spheres carry total charge +Q (inner) and -Q (outer)."""
    if not (0.0 < R1 < R2 < R):
        raise ValueError("need 0 < R1 < R2 < R")
    if omega * R >= c0:
        raise ValueError("domain reaches the light cylinder: omega R >= c0")
    base_sc = scenario_rotating(omega, L, c0, z0)
    chart, s, g = base_sc.chart, base_sc.structure, base_sc.metric
    s_ax = base_sc.axial
    beta, gam2 = _rot_helpers(omega, L, c0)
    k, sph, inside, E = _coulomb_pieces(Q, R1, R2, omega, L, c0, z0)
    Y = (1, 3)

    # zeroth order: radial electrostatic field between the spheres
    e0 = Field.from_comps(chart, Y, 1, {
        (0,): lambda p: E(p) * p[1] / sph(p),
        (1,): lambda p: E(p) * p[3] / sph(p)}, wg=-1, dim=dims.UT)
    d0 = Field.from_comps(chart, Y, 1, {
        (0,): lambda p: -E(p) * p[1] * p[3] / (z0 * L * sph(p)),
        (1,): lambda p: E(p) * p[1] * p[1] / (z0 * L * sph(p))},
        wu=-1, twist_x=True, dim=dims.IT)

    # first order magnetic field: (b1, h1) = beta (-Lambda e0, Lambda^-1 d0)
    b1 = Field.from_comps(chart, Y, 1, {
        (0,): lambda p: -beta(p) * p[1] / L * E(p) * p[1] / sph(p),
        (1,): lambda p: -beta(p) * p[1] / L * E(p) * p[3] / sph(p)},
        wu=-1, dim=dims.UT)
    h1 = Field.from_comps(chart, Y, 1, {
        (0,): lambda p: -beta(p) * E(p) * p[3] / (z0 * sph(p)),
        (1,): lambda p: beta(p) * E(p) * p[1] / (z0 * sph(p))},
        wg=-1, twist_x=True, dim=dims.IT)

    gam2_f = Field.scalar(chart, gam2, axes=Y)
    e_bar = e0
    d_bar = fl.wedge(gam2_f, d0)
    b_bar = fl.wedge(gam2_f, b1)
    h_bar = h1
    rho_bar = Field.zero_field(chart, Y, 2, wu=-1, twist_x=True, dim=dims.IT)
    j_bar = Field.zero_field(chart, Y, 2, wg=-1, twist_x=True, dim=dims.IT)

    # three-dimensional fields in the rotating regular splitting
    zero_e = Field.zero_field(chart, Y, 0, wg=-1, dim=dims.UT)
    zero_h = Field.zero_field(chart, Y, 0, wg=-1, wu="T", twist_x=True,
                              dim=dims.IT)
    e3 = sp.unsplit_form(s_ax, (e_bar, Field.zero_field(
        chart, Y, 0, wg=-1, wu=-1, dim=dims.UT)))
    b3 = sp.unsplit_form(s_ax, (Field.zero_field(
        chart, Y, 2, dim=dims.UT), b_bar))
    h3 = sp.unsplit_form(s_ax, (h_bar, Field.zero_field(
        chart, Y, 0, wg=-1, wu=-1, twist_x=True, dim=dims.IT)))
    d3 = sp.unsplit_form(s_ax, (Field.zero_field(
        chart, Y, 2, twist_x=True, dim=dims.IT), d_bar))
    rho3 = Field.zero_field(chart, (1, 2, 3), 3, twist_x=True, dim=dims.IT)
    j3 = Field.zero_field(chart, (1, 2, 3), 2, wg=-1, twist_x=True,
                          dim=dims.IT)
    sf = em.SplitEmFields(b=b3, e=e3, d=d3, h=h3, rho=rho3, j=j3)

    F4 = sp.unsplit_form(s, (b3, e3.scaled(-1.0)))
    H4 = sp.unsplit_form(s, (d3, h3))
    fs = em.MaxwellFieldSet(A=None, F=F4, H=H4, J=fl.exterior_d(H4))

    shell = 0.02 * R1

    def exclude(p):
        sv = real(sph(p))
        return (abs(sv - R1) < shell or abs(sv - R2) < shell
                or p[1] < 0.02 or sv > R)

    box = Box((0.0, 0.02, 0.0, -R), (1.0, R, 6.28, R))

    sc = Scenario(
        name="schiff_solution", chart=chart, structure=s, metric=g, c0=c0,
        z0=z0,
        params={"Q": Q, "R1": R1, "R2": R2, "omega": omega, "L": L, "R": R},
        box=box, exclude=exclude,
        oracles=dict(base_sc.oracles),
        split_fields=sf, maxwell=fs, axial=s_ax,
        reduced={"e0": e0, "d0": d0, "b1": b1, "h1": h1, "e": e_bar,
                 "d": d_bar, "b": b_bar, "h": h_bar, "rho": rho_bar,
                 "j": j_bar},
        singular="sphere surfaces (surface charges) and the axis r = 0")
    return sc


def scenario_schiff_natural(omega: float = 0.3, L: float = 1.0,
                            c0: float = 1.0, z0: float = 1.0,
                            Q: float = 1.0, R1: float = 0.2,
                            R2: float = 0.4) -> Scenario:
    """Schiff's own (natural, nonregular, stationary) splitting in rotating
    Cartesian coordinates (t, x, y, z); the chart scale follows the Born
    chart, L = c0 in program units."""
    chart = Chart(("t", "x", "y", "z"),
                  (dims.ONE, dims.L, dims.L, dims.L))
    axes4 = (0, 1, 2, 3)
    base = (1, 2, 3)
    k = Q * z0 * L * c0 / (4.0 * 3.141592653589793)

    def rho2(p):
        return p[1] * p[1] + p[2] * p[2]

    g = mt.MetricField.from_entries(chart, axes4, {
        (0, 0): lambda p: L * L * (1.0 - omega * omega * rho2(p) / (c0 * c0)),
        (0, 1): lambda p: omega * p[2] * L / c0,
        (0, 2): lambda p: -omega * p[1] * L / c0,
        (1, 1): -1.0, (2, 2): -1.0, (3, 3): -1.0})
    s = sp.natural(chart, axes4, 0, name="schiff-natural")

    def sph(p):
        return sqrt(p[1] * p[1] + p[2] * p[2] + p[3] * p[3])

    def inside(p):
        sv = real(sph(p))
        return R1 < sv < R2

    def E(p):
        return k / sph(p) ** 2 if inside(p) else 0.0

    # natural-splitting fields of the two charged spheres: pure Coulomb
    # electric field, vanishing magnetic flux, and a nonzero magnetic field
    # strength h~ that the fictitious magnetization exactly cancels
    e3 = Field.from_comps(chart, base, 1, {
        (0,): lambda p: E(p) * p[1] / sph(p),
        (1,): lambda p: E(p) * p[2] / sph(p),
        (2,): lambda p: E(p) * p[3] / sph(p)}, wg=-1, dim=dims.UT)
    b3 = Field.zero_field(chart, base, 2, dim=dims.UT)
    d3 = Field.from_comps(chart, base, 2, {
        (1, 2): lambda p: k / (z0 * L) * (p[1] / sph(p) ** 3
                                          if inside(p) else 0.0),
        (0, 2): lambda p: -k / (z0 * L) * (p[2] / sph(p) ** 3
                                           if inside(p) else 0.0),
        (0, 1): lambda p: k / (z0 * L) * (p[3] / sph(p) ** 3
                                          if inside(p) else 0.0)},
        twist_x=True, dim=dims.IT)
    h3 = Field.from_comps(chart, base, 1, {
        (0,): lambda p: -omega / c0 * k / z0 * (
            p[3] * p[1] / sph(p) ** 3 if inside(p) else 0.0),
        (1,): lambda p: -omega / c0 * k / z0 * (
            p[3] * p[2] / sph(p) ** 3 if inside(p) else 0.0),
        (2,): lambda p: omega / c0 * k / z0 * (
            rho2(p) / sph(p) ** 3 if inside(p) else 0.0)},
        wg=-1, twist_x=True, dim=dims.IT)
    rho3 = Field.zero_field(chart, base, 3, twist_x=True, dim=dims.IT)
    j3 = Field.zero_field(chart, base, 2, wg=-1, twist_x=True, dim=dims.IT)
    sf = em.SplitEmFields(b=b3, e=e3, d=d3, h=h3, rho=rho3, j=j3)

    beta, gam2 = _rot_helpers(omega, L, c0)

    def gamma_of(p):
        return 1.0 / sqrt(1.0 - omega * omega * rho2(p) / (c0 * c0))

    xi_o = Field.scalar(chart, gamma_of, axes=base)
    ndag_o = Field.scalar(chart, L, axes=base, wg=-1, dim=dims.L)
    shift_o = Field.from_comps(chart, base, 1, {
        (1,): lambda p: omega * L / c0 * p[1],
        (0,): lambda p: -omega * L / c0 * p[2]}, kind=MultiVec, wg=-1)
    h_sigma_o = mt.MetricField.from_entries(chart, base, {
        (0, 0): 1.0, (1, 1): 1.0, (2, 2): 1.0})

    shell = 0.02 * R1

    def exclude(p):
        sv = real(sph(p))
        return abs(sv - R1) < shell or abs(sv - R2) < shell or sv < 0.05

    box = Box((0.0, -0.6, -0.6, -0.6), (1.0, 0.6, 0.6, 0.6))

    return Scenario(
        name="schiff_natural", chart=chart, structure=s, metric=g, c0=c0,
        z0=z0,
        params={"omega": omega, "L": L, "Q": Q, "R1": R1, "R2": R2},
        box=box, exclude=exclude,
        oracles={"xi": xi_o, "lapse_dag": ndag_o, "shift_vec": shift_o,
                 "h_sigma": h_sigma_o},
        split_fields=sf,
        singular="sphere surfaces (surface charges)")


# ---------------------------------------------------------------------------
# axial reduction

def axial_split_em(s_ax: sp.SplittingStructure,
                   sf: em.SplitEmFields) -> dict:
    """Second application of the splitting machinery along the azimuthal
    U(1): maps the 3-D fields to pairs on the meridian plane.  For
    axisymmetric sources in azimuthal direction one member of each pair
    vanishes (one of the two reduced systems is trivial)."""
    out = {}
    for name in ("e", "h", "j"):
        f = getattr(sf, name)
        if f is not None:
            out[name] = sp.split_form(s_ax, f)
    for name in ("b", "d", "rho"):
        f = getattr(sf, name)
        if f is not None:
            out[name] = sp.split_form(s_ax, f)
    return out


def axial_curvature_pair(s: sp.SplittingStructure,
                         s_ax: sp.SplittingStructure):
    """S_ax^-* Omega = (0, Omega-bar) and S_ax^-* N = (N-bar, 0)."""
    Om = sp.curvature_omega(s)
    return sp.split_form(s_ax, Om)


def static_charge_current(sc: Scenario, rho_profile) -> em.MaxwellFieldSet:
    """Space-time current of a charge distribution at rest with respect to
    the nonrotating observer, expressed in the rotating chart:
    J = rho_{r phi z} dr ^ (dphi + (omega L / c0) dt) ^ dz."""
    chart = sc.chart
    omega, L = sc.params["omega"], sc.params["L"]
    c0 = sc.c0
    fac = omega * L / c0

    def c_rphiz(p):
        return rho_profile(p)

    # components over (t, r, phi, z): dr^dphi^dz and dr^dt^dz = -dt^dr^dz
    J = Field.from_comps(chart, (0, 1, 2, 3), 3, {
        (1, 2, 3): c_rphiz,
        (0, 1, 3): lambda p: -fac * c_rphiz(p)}, twist_x=True, dim=dims.IT)
    return em.MaxwellFieldSet(A=None, F=None, H=None, J=J)


def schiff_excitation_oracle(sc: Scenario, rho_profile):
    """(rho, -j~) = (gamma^2 rho_0, beta Lambda^-1 i_w-ring rho_0)."""
    chart = sc.chart
    omega, L = sc.params["omega"], sc.params["L"]
    beta, gam2 = _rot_helpers(omega, L, sc.c0)
    rho0 = Field.from_comps(chart, (1, 2, 3), 3, {(0, 1, 2): rho_profile},
                            twist_x=True, dim=dims.IT)
    gam2_f = Field.scalar(chart, gam2, axes=(1, 2, 3))
    rho_or = fl.wedge(gam2_f, rho0)
    w_ring = sc.oracles["w_ring"]
    lam_inv = Field.scalar(chart, lambda p: L / p[1], axes=(1, 2, 3),
                           wu=1, wg=-1)
    beta_f = Field.scalar(chart, beta, axes=(1, 2, 3))
    j_or = fl.wedge(beta_f, fl.wedge(lam_inv, fl.contract(w_ring, rho0))
                    ).scaled(-1.0)
    return rho_or, j_or
