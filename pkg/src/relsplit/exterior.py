"""Pointwise exterior algebra on antisymmetric multi-index components.

Values of degree-k forms and k-vectors are stored as tuples of components
indexed by strictly increasing multi-indices in lexicographic order.  Every
object carries

* two Lie-value slots: ``wg`` for the time-translation group and ``wu`` for
  the azimuthal U(1) used in dimensional reduction.  A slot holds 0
  (scalar), +1 (algebra-valued, coefficient of the basis vector e), -1
  (coalgebra-valued, coefficient of the dual basis with eps(e)=1), or "T"
  (coefficient of eps (x) e);
* twist flags with respect to the spatial chart and the group;
* a physical dimension.

Binary operations combine the slots by duality pairing: (+1, -1) pairs to a
scalar, (+1, +1) and (-1, -1) annihilate (the exterior square of a
1-dimensional algebra vanishes), and "T" acts as the identity operator on
algebra- and coalgebra-values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import combinations, permutations

from .dims import Dimension, ONE as DIM1, require_same
from .dual import habs, real, sqrt


# ---------------------------------------------------------------------------
# multi-index tables

@lru_cache(maxsize=None)
def multi_indices(n: int, k: int) -> tuple:
    if k < 0 or k > n:
        return ()
    return tuple(combinations(range(n), k))


@lru_cache(maxsize=None)
def index_pos(n: int, k: int) -> dict:
    return {K: p for p, K in enumerate(multi_indices(n, k))}


def n_comps(n: int, k: int) -> int:
    return len(multi_indices(n, k))


def merge_sign(I: tuple, J: tuple):
    """Merge two increasing index tuples; None on overlap.

    Returns (sorted tuple, parity of the sorting permutation of I + J).
    """
    if set(I) & set(J):
        return None
    inv = 0
    for j in J:
        for i in I:
            if i > j:
                inv += 1
    return tuple(sorted(I + J)), (-1 if inv % 2 else 1)


@lru_cache(maxsize=None)
def _perms_with_parity(k: int):
    out = []
    for p in permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if p[a] > p[b])
        out.append((p, -1 if inv % 2 else 1))
    return tuple(out)


def det(m):
    """Determinant by permutation expansion; generic over the scalar type."""
    k = len(m)
    if k == 0:
        return 1.0
    s = 0.0
    for p, sign in _perms_with_parity(k):
        term = sign
        for i in range(k):
            term = term * m[i][p[i]]
        s = s + term
    return s


def inv(m):
    """Matrix inverse via the adjugate; generic over the scalar type."""
    k = len(m)
    d = det(m)
    out = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = [[m[r][c] for c in range(k) if c != j]
                     for r in range(k) if r != i]
            cof = det(minor) * (-1 if (i + j) % 2 else 1)
            out[j][i] = cof / d
    return out


# ---------------------------------------------------------------------------
# Lie-value slots

def combine_weight(a, b):
    """Product rule for one value slot; None means structural zero."""
    if a == 0:
        return b
    if b == 0:
        return a
    if a == "T" and b == "T":
        return "T"
    if a == "T" or b == "T":
        return b if a == "T" else a
    if a == -b:
        return 0
    return None


def tensor_weight(a, b):
    """Tensor-product pairing eps (x) e used by the splitting of
    algebra-valued forms: (-1) (x) (+1) -> "T"."""
    if (a, b) in ((-1, 1), (1, -1)):
        return "T"
    return combine_weight(a, b)


# ---------------------------------------------------------------------------
# value containers

@dataclass
class Alternating:
    """Shared container for pointwise k-forms and k-vectors."""

    axes: tuple            # scene axes the component indices run over
    degree: int
    comps: tuple
    wg: object = 0
    wu: object = 0
    twist_x: bool = False
    twist_g: bool = False
    dim: Dimension = DIM1
    lie_scale: float = 1.0
    zero: bool = False

    def __post_init__(self):
        want = n_comps(len(self.axes), self.degree)
        if len(self.comps) != want:
            raise ValueError(
                f"degree {self.degree} over {len(self.axes)} axes needs "
                f"{want} components, got {len(self.comps)}")

    @property
    def n(self) -> int:
        return len(self.axes)

    def comp(self, *idx):
        """Component for a (not necessarily sorted) local multi-index."""
        if len(set(idx)) != len(idx):
            return 0.0
        K, s = _sort_sign(tuple(idx))
        return s * self.comps[index_pos(self.n, self.degree)[K]]

    def max_abs(self) -> float:
        return max((abs(real(c)) for c in self.comps), default=0.0)


def _sort_sign(idx: tuple):
    inv_count = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx))
                    if idx[a] > idx[b])
    return tuple(sorted(idx)), (-1 if inv_count % 2 else 1)


class CoForm(Alternating):
    pass


class MultiVec(Alternating):
    pass


def zero_like(cls, axes, degree=0, dim=DIM1):
    # degree > n is fine: the component tuple is empty, the canonical zero
    return cls(axes, degree, (0.0,) * n_comps(len(axes), degree), dim=dim,
               zero=True)


def _meta_product(a: Alternating, b: Alternating, tensor_slot=None):
    g_rule = tensor_weight if tensor_slot == "g" else combine_weight
    u_rule = tensor_weight if tensor_slot == "u" else combine_weight
    wg = g_rule(a.wg, b.wg)
    wu = u_rule(a.wu, b.wu)
    annihilated = wg is None or wu is None
    if a.lie_scale != b.lie_scale and not (a.zero or b.zero):
        raise ValueError("operands use different Lie-algebra bases; rebase first")
    return dict(
        wg=0 if annihilated else wg,
        wu=0 if annihilated else wu,
        twist_x=a.twist_x ^ b.twist_x,
        twist_g=a.twist_g ^ b.twist_g,
        dim=a.dim * b.dim,
        lie_scale=a.lie_scale,
    ), annihilated


def _check_axes(a: Alternating, b: Alternating):
    if a.axes != b.axes:
        raise ValueError(f"axis mismatch {a.axes} vs {b.axes}")


def _broadcast0(a: Alternating, b: Alternating):
    """Degree-0 factors act as scalar functions on any axis set."""
    if a.axes != b.axes:
        if a.degree == 0:
            a = replace(a, axes=b.axes)
        elif b.degree == 0:
            b = replace(b, axes=a.axes)
    return a, b


# ---------------------------------------------------------------------------
# component kernels (generic over the scalar type)

def wedge_comps(n, ka, kb, A, B):
    kout = ka + kb
    out = [0.0] * n_comps(n, kout)
    pos = index_pos(n, kout)
    for I, av in zip(multi_indices(n, ka), A):
        for J, bv in zip(multi_indices(n, kb), B):
            m = merge_sign(I, J)
            if m is not None:
                K, s = m
                out[pos[K]] = out[pos[K]] + s * (av * bv)
    return tuple(out)


def contract_comps(n, kv, kg, V, G):
    """(i_v g)_J = sum_I v^I sign(I,J) g_{sort(I+J)};  i_{a^b} = i_b i_a."""
    kout = kg - kv
    out = [0.0] * n_comps(n, kout)
    pos_g = index_pos(n, kg)
    for I, vv in zip(multi_indices(n, kv), V):
        for jpos, J in enumerate(multi_indices(n, kout)):
            m = merge_sign(I, J)
            if m is not None:
                K, s = m
                out[jpos] = out[jpos] + s * (vv * G[pos_g[K]])
    return tuple(out)


def pullback_comps(src_n, k, tgt_n, G, img):
    """Pull k-form components through a morphism given by generator images.

    img[a][b] is the coefficient of target generator b in the image of
    source generator a; the wedge of images is expanded as a k x k minor.
    """
    out = []
    for K in multi_indices(tgt_n, k):
        s = 0.0
        for M, gv in zip(multi_indices(src_n, k), G):
            if isinstance(gv, float) and gv == 0.0:
                continue
            sub = [[img[a][b] for b in K] for a in M]
            s = s + gv * det(sub)
        out.append(s)
    return tuple(out)


def lower_comps(n, k, G, gmat):
    """Riesz lowering of a k-vector, extended by exterior compound."""
    out = []
    for K in multi_indices(n, k):
        s = 0.0
        for M, vv in zip(multi_indices(n, k), G):
            sub = [[gmat[a][b] for b in M] for a in K]
            s = s + det(sub) * vv
        out.append(s)
    return tuple(out)


def hodge_comps(n, k, G, gmat, ginv=None, sqrtdet=None):
    """Component Hodge: gamma*_M = sqrt|g| gamma^K  eps_{K M}."""
    if ginv is None:
        ginv = inv(gmat)
    if sqrtdet is None:
        sqrtdet = sqrt(habs(det(gmat)))
    raised = lower_comps(n, k, G, ginv)
    out = []
    for M in multi_indices(n, n - k):
        s = 0.0
        for K, rv in zip(multi_indices(n, k), raised):
            m = merge_sign(K, M)
            if m is not None:
                s = s + m[1] * rv
        out.append(s * sqrtdet)
    return tuple(out)


# ---------------------------------------------------------------------------
# value-level operations

def wedge(a: Alternating, b: Alternating, tensor_slot=None) -> Alternating:
    if type(a) is not type(b):
        # scalar functions multiply anything; other kind mixes are errors
        if a.degree != 0 and b.degree != 0:
            raise TypeError("wedge combines two forms or two multivectors")
    a, b = _broadcast0(a, b)
    _check_axes(a, b)
    meta, dead = _meta_product(a, b, tensor_slot)
    kout = a.degree + b.degree
    cls = type(b) if a.degree == 0 else type(a)
    if dead or kout > a.n or a.zero or b.zero:
        return zero_like(cls, a.axes, kout, meta["dim"])
    comps = wedge_comps(a.n, a.degree, b.degree, a.comps, b.comps)
    return cls(a.axes, kout, comps, **meta)


def contract(v: MultiVec, g: CoForm, tensor_slot=None) -> CoForm:
    """Interior product i_v g; `tensor_slot` selects the eps (x) e pairing."""
    if not isinstance(v, MultiVec) or not isinstance(g, CoForm):
        raise TypeError("contract(v, g) wants a multivector and a form")
    v, g = _broadcast0(v, g)
    _check_axes(v, g)
    if v.degree > g.degree:
        raise ValueError("contraction degree exceeds form degree")
    meta, dead = _meta_product(v, g, tensor_slot)
    kout = g.degree - v.degree
    if dead or v.zero or g.zero:
        return zero_like(CoForm, g.axes, kout, meta["dim"])
    comps = contract_comps(g.n, v.degree, g.degree, v.comps, g.comps)
    return CoForm(g.axes, kout, comps, **meta)


def contract_vec(g: CoForm, v: MultiVec, tensor_slot=None) -> MultiVec:
    """Dual interior product i_g v of a form into a multivector."""
    if not isinstance(v, MultiVec) or not isinstance(g, CoForm):
        raise TypeError("contract_vec(g, v) wants a form and a multivector")
    g, v = _broadcast0(g, v)
    _check_axes(v, g)
    if g.degree > v.degree:
        raise ValueError("contraction degree exceeds multivector degree")
    meta, dead = _meta_product(g, v, tensor_slot)
    kout = v.degree - g.degree
    if dead or v.zero or g.zero:
        return zero_like(MultiVec, v.axes, kout, meta["dim"])
    comps = contract_comps(v.n, g.degree, v.degree, g.comps, v.comps)
    return MultiVec(v.axes, kout, comps, **meta)


def sign_n(x: Alternating) -> Alternating:
    if x.degree % 2 == 0:
        return x
    return replace(x, comps=tuple(-c for c in x.comps))


def rebase_lie(x: Alternating, lam: float) -> Alternating:
    """Re-express the g-slot value in the basis e' = lam * e."""
    if lam == 0.0:
        raise ValueError("Lie basis change must be nonzero")
    if x.wg == 1:
        comps = tuple(c / lam for c in x.comps)
    elif x.wg == -1:
        comps = tuple(c * lam for c in x.comps)
    else:
        comps = x.comps
    return replace(x, comps=comps, lie_scale=x.lie_scale * lam,
                   twist_g=x.twist_g ^ (lam < 0))


def add(a: Alternating, b: Alternating) -> Alternating:
    if a.zero:
        return b
    if b.zero:
        return a
    _check_axes(a, b)
    if (type(a), a.degree, a.wg, a.wu, a.twist_x, a.twist_g) != \
            (type(b), b.degree, b.wg, b.wu, b.twist_x, b.twist_g):
        raise ValueError("incompatible objects in addition")
    require_same(a.dim, b.dim)
    return replace(a, comps=tuple(x + y for x, y in zip(a.comps, b.comps)))


def sub(a: Alternating, b: Alternating) -> Alternating:
    return add(a, scale(b, -1.0))


def scale(a: Alternating, c) -> Alternating:
    if a.zero:
        return a
    return replace(a, comps=tuple(c * x for x in a.comps))


def pairing(g: CoForm, v: MultiVec) -> object:
    """Full duality pairing of a k-form with a k-vector."""
    if g.degree != v.degree:
        raise ValueError("pairing needs equal degrees")
    r = contract(v, g)
    return r.comps[0] if not r.zero else 0.0
