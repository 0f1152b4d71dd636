"""Smooth fields on a scenario chart, with exact derivatives.

A `Chart` fixes one global coordinate tuple per scenario (the scene point);
every field's components are functions of the full scene point.  Which of
the scene axes a field actually has form indices over is recorded in
``axes``: space-time fields use all of them, parametric fields on the base
manifold only the spatial ones, dimensionally reduced fields only the
meridian-plane ones.  Derivatives are taken with hyper-dual arithmetic, so
operator compositions stay exact to machine precision through second order.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace

import numpy as np

from . import dual, exterior as ext
from .dims import Dimension, ONE as DIM1
from .exterior import CoForm, MultiVec, index_pos, multi_indices, n_comps


@dataclass(frozen=True)
class Chart:
    """Global coordinate chart of a scenario (its scene point layout)."""

    names: tuple
    coord_dims: tuple = None

    def __post_init__(self):
        if self.coord_dims is None:
            object.__setattr__(self, "coord_dims",
                               tuple(DIM1 for _ in self.names))

    @property
    def dim(self) -> int:
        return len(self.names)

    def axis(self, name: str) -> int:
        return self.names.index(name)


@dataclass
class Field:
    """Lazy k-form or k-multivector field: scene point -> value object."""

    chart: Chart
    axes: tuple
    degree: int
    comps_fn: object           # point -> tuple of components
    kind: type = CoForm        # CoForm or MultiVec
    wg: object = 0
    wu: object = 0
    twist_x: bool = False
    twist_g: bool = False
    dim: Dimension = DIM1
    lie_scale: float = 1.0
    zero: bool = False

    @property
    def n(self) -> int:
        return len(self.axes)

    def _meta(self) -> dict:
        return dict(wg=self.wg, wu=self.wu, twist_x=self.twist_x,
                    twist_g=self.twist_g, dim=self.dim,
                    lie_scale=self.lie_scale)

    def proto(self) -> ext.Alternating:
        k = self.degree
        return self.kind(self.axes, k, (0.0,) * n_comps(self.n, k),
                         zero=self.zero, **self._meta())

    def at(self, point):
        val = self.kind(self.axes, self.degree, tuple(self.comps_fn(point)),
                        zero=self.zero, **self._meta())
        return val

    __call__ = at

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_comps(cls, chart, axes, degree, comp_map, kind=CoForm, **meta):
        """Build a field from {local multi-index: fn} or a full fn list."""
        n = len(axes)
        if isinstance(comp_map, dict):
            fns = []
            for K in multi_indices(n, degree):
                f = comp_map.get(K, 0.0)
                fns.append(f)
        else:
            fns = list(comp_map)

        def comps_fn(p):
            return tuple(f(p) if callable(f) else f for f in fns)

        return cls(chart, tuple(axes), degree, comps_fn, kind=kind, **meta)

    @classmethod
    def scalar(cls, chart, fn, axes=None, **meta):
        axes = tuple(range(chart.dim)) if axes is None else tuple(axes)
        g = fn if callable(fn) else (lambda p, v=fn: v)
        return cls(chart, axes, 0, lambda p: (g(p),), **meta)

    @classmethod
    def zero_field(cls, chart, axes, degree, kind=CoForm, **meta):
        zeros = (0.0,) * n_comps(len(axes), degree)
        return cls(chart, tuple(axes), degree, lambda p: zeros, kind=kind,
                   zero=True, **meta)

    # -- arithmetic sugar ----------------------------------------------------

    def __add__(self, other):
        return lift2(ext.add, self, other)

    def __sub__(self, other):
        return lift2(ext.sub, self, other)

    def __neg__(self):
        return self.scaled(-1.0)

    def scaled(self, c, dim_factor: Dimension = None):
        """Multiply by a constant; a dimensionful constant must pass the
        dimension it carries."""
        new_dim = self.dim if dim_factor is None else self.dim * dim_factor
        if self.zero:
            return replace(self, dim=new_dim)
        fn = self.comps_fn
        return replace(self, dim=new_dim,
                       comps_fn=lambda p: tuple(c * x for x in fn(p)))


def lift2(op, a: Field, b: Field, **kw) -> Field:
    """Lift a value-level binary operation to fields."""
    if a.chart is not b.chart and a.chart != b.chart:
        raise ValueError("fields live on different charts")
    proto = op(a.proto(), b.proto(), **kw)
    if proto.zero:
        return Field(a.chart, proto.axes, proto.degree,
                     lambda p, m=n_comps(len(proto.axes), proto.degree):
                     (0.0,) * m,
                     kind=type(proto), zero=True,
                     wg=proto.wg, wu=proto.wu, twist_x=proto.twist_x,
                     twist_g=proto.twist_g, dim=proto.dim,
                     lie_scale=proto.lie_scale)

    def comps_fn(p):
        return op(a.at(p), b.at(p), **kw).comps

    return Field(a.chart, proto.axes, proto.degree, comps_fn,
                 kind=type(proto), wg=proto.wg, wu=proto.wu,
                 twist_x=proto.twist_x, twist_g=proto.twist_g, dim=proto.dim,
                 lie_scale=proto.lie_scale)


def wedge(a: Field, b: Field, tensor_slot=None) -> Field:
    return lift2(ext.wedge, a, b, tensor_slot=tensor_slot)


def contract(v: Field, g: Field, tensor_slot=None) -> Field:
    return lift2(ext.contract, v, g, tensor_slot=tensor_slot)


def contract_vec(g: Field, v: Field, tensor_slot=None) -> Field:
    return lift2(ext.contract_vec, g, v, tensor_slot=tensor_slot)


def sign_n(f: Field) -> Field:
    return f if f.degree % 2 == 0 else f.scaled(-1.0)


def rebase_lie(f: Field, lam: float) -> Field:
    if lam == 0.0:
        raise ValueError("Lie basis change must be nonzero")
    if f.wg == 1:
        g = f.scaled(1.0 / lam)
    elif f.wg == -1:
        g = f.scaled(lam)
    else:
        g = replace(f)
    return replace(g, lie_scale=f.lie_scale * lam,
                   twist_g=f.twist_g ^ (lam < 0))


# ---------------------------------------------------------------------------
# derivative operators

def _partials(f: Field, p, axes):
    """dict local-axis -> tuple of partials of all components at p."""
    out = {}
    for la, ax in enumerate(f.axes):
        if ax in axes:
            q, lvl = dual.seed(p, ax)
            out[la] = tuple(dual.d_part(c, lvl) for c in f.comps_fn(q))
    return out


def exterior_d(f: Field) -> Field:
    """Exterior derivative over the field's own axes."""
    if f.degree >= f.n:
        raise ValueError("exterior derivative of a top-degree form")
    if f.zero:
        return Field.zero_field(f.chart, f.axes, f.degree + 1, kind=f.kind,
                                **f._meta())
    if f.kind is not CoForm:
        raise TypeError("exterior derivative acts on forms")
    n, k = f.n, f.degree
    pos_in = index_pos(n, k)

    def comps_fn(p):
        partials = _partials(f, p, f.axes)
        out = []
        for K in multi_indices(n, k + 1):
            s = 0.0
            for t_pos, t in enumerate(K):
                rest = K[:t_pos] + K[t_pos + 1:]
                term = partials[t][pos_in[rest]]
                s = s + (-term if t_pos % 2 else term)
            out.append(s)
        return tuple(out)

    return replace(f, degree=k + 1, comps_fn=comps_fn)


def group_d(f: Field, fiber_axis: int = 0, slot: str = "g") -> Field:
    """Group derivative: fiber-direction derivative, valued in the coalgebra.

    On coalgebra-valued (and eps (x) e valued) input the trivial extension
    returns the zero field instead of raising.
    """
    w = f.wg if slot == "g" else f.wu
    if w in (-1, "T"):
        return Field.zero_field(f.chart, f.axes, f.degree, kind=f.kind,
                                **f._meta())
    new_w = -1 if w == 0 else "T"

    def comps_fn(p):
        q, lvl = dual.seed(p, fiber_axis)
        return tuple(dual.d_part(c, lvl) for c in f.comps_fn(q))

    g = replace(f, comps_fn=comps_fn)
    if slot == "g":
        g.wg = new_w
    else:
        g.wu = new_w
    return g


def lie_derivative(v: Field, f: Field) -> Field:
    """Cartan formula for forms: L_v = i_v d + d i_v (degree-1 v)."""
    if v.degree != 1:
        raise ValueError("Lie derivative needs a vector field of degree 1")
    if f.degree == 0:
        return contract(v, exterior_d(f))
    if f.degree == f.n:
        return exterior_d(contract(v, f))
    return contract(v, exterior_d(f)) + exterior_d(contract(v, f))


# ---------------------------------------------------------------------------
# integration along the group

_GL_X, _GL_W = (lambda xw: (tuple(map(float, xw[0])), tuple(map(float, xw[1]))))(
    np.polynomial.legendre.leggauss(12))


def _gl_segment(fn, a, b):
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return half * sum(w * fn(mid + half * x) for x, w in zip(_GL_X, _GL_W))


def _gl_adaptive(fn, a, b, tol, depth=0):
    whole = _gl_segment(fn, a, b)
    mid = 0.5 * (a + b)
    halves = _gl_segment(fn, a, mid) + _gl_segment(fn, mid, b)
    if abs(whole - halves) <= tol or depth >= 40:
        return halves
    return (_gl_adaptive(fn, a, mid, 0.5 * tol, depth + 1)
            + _gl_adaptive(fn, mid, b, 0.5 * tol, depth + 1))


def integrate_g(f: Field, interval, base_point, fiber_axis: int = 0,
                tol: float = 1e-10):
    """Integrate a coalgebra-valued parametric form along the group.

    The result is an ordinary form at the base point; it is independent of
    the Lie basis the integrand is expressed in.
    """
    if f.wg != -1 and not f.zero:
        raise ValueError("integration on the group needs a coalgebra-valued form")
    t0, t1 = interval
    if t0 > t1:
        raise ValueError("reversed interval; orientation follows the basis e")
    out = []
    for c in range(n_comps(f.n, f.degree)):
        def integrand(t, c=c):
            q = list(base_point)
            q[fiber_axis] = t
            return f.comps_fn(q)[c]

        out.append(_gl_adaptive(integrand, t0, t1, tol) / f.lie_scale)
    meta = f._meta()
    meta.update(wg=0, lie_scale=1.0, twist_g=False)
    return CoForm(f.axes, f.degree, tuple(out), zero=f.zero, **meta)


# ---------------------------------------------------------------------------
# morphisms (pullback / pushforward along linear-in-generators maps)

def pull_through(f: Field, tgt_axes, img_fn, kind=None, src_axes=None) -> Field:
    """Pull a field through a morphism given by generator images.

    ``img_fn(p)`` returns the matrix img[a][b]: the coefficient of target
    generator b in the image of source generator a.  Works for form
    pullbacks and (with roles read accordingly) multivector pushforwards.
    """
    kind = kind or f.kind
    src_axes = f.axes if src_axes is None else src_axes
    n_src, n_tgt = len(src_axes), len(tgt_axes)
    k = f.degree
    if k > n_tgt:
        return Field.zero_field(f.chart, tgt_axes, k, kind=kind, **f._meta())

    def comps_fn(p):
        return ext.pullback_comps(n_src, k, n_tgt, f.comps_fn(p), img_fn(p))

    return Field(f.chart, tuple(tgt_axes), k, comps_fn, kind=kind, **f._meta())
