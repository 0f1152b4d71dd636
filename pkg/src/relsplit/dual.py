"""Hyper-dual numbers: exact first and second partial derivatives.

A hyper-dual number x = f + f1*e1 + f2*e2 + f12*e1*e2 (e1^2 = e2^2 = 0)
propagates two directional derivatives and the mixed second derivative
through arithmetic.  Every differentiation pass allocates a fresh level
tag; numbers of different levels treat each other as constants, so
operators that differentiate already-derived fields nest without
perturbation confusion.
"""
from __future__ import annotations

import itertools
import math

_LEVELS = itertools.count(1)


class HyperDual:
    __slots__ = ("f", "f1", "f2", "f12", "level")

    def __init__(self, f, f1=0.0, f2=0.0, f12=0.0, level=0):
        self.f = f
        self.f1 = f1
        self.f2 = f2
        self.f12 = f12
        self.level = level

    def __repr__(self):
        return (f"HyperDual({self.f!r}, {self.f1!r}, {self.f2!r}, "
                f"{self.f12!r}, level={self.level})")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, o):
        if isinstance(o, HyperDual):
            if o.level == self.level:
                return HyperDual(self.f + o.f, self.f1 + o.f1,
                                 self.f2 + o.f2, self.f12 + o.f12, self.level)
            if o.level > self.level:
                return HyperDual(o.f + self, o.f1, o.f2, o.f12, o.level)
        return HyperDual(self.f + o, self.f1, self.f2, self.f12, self.level)

    __radd__ = __add__

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __neg__(self):
        return HyperDual(-self.f, -self.f1, -self.f2, -self.f12, self.level)

    def __mul__(self, o):
        if isinstance(o, HyperDual):
            if o.level == self.level:
                return HyperDual(
                    self.f * o.f,
                    self.f * o.f1 + self.f1 * o.f,
                    self.f * o.f2 + self.f2 * o.f,
                    self.f * o.f12 + self.f1 * o.f2
                    + self.f2 * o.f1 + self.f12 * o.f,
                    self.level)
            if o.level > self.level:
                return HyperDual(o.f * self, o.f1 * self, o.f2 * self,
                                 o.f12 * self, o.level)
        return HyperDual(self.f * o, self.f1 * o, self.f2 * o, self.f12 * o,
                         self.level)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, HyperDual):
            return self * o._reciprocal()
        return self * (1.0 / o)

    def __rtruediv__(self, o):
        return self._reciprocal() * o

    def _reciprocal(self):
        inv = 1.0 / self.f
        return self._lift(inv, -inv * inv, 2.0 * inv * inv * inv)

    def __pow__(self, p):
        if isinstance(p, HyperDual):
            return exp(p * log(self))
        v = self.f ** p
        d = p * self.f ** (p - 1)
        dd = p * (p - 1) * self.f ** (p - 2)
        return self._lift(v, d, dd)

    def __abs__(self):
        return -self if real(self) < 0.0 else self

    # chain rule f(x) = f(a) + f'(a) dx + 1/2 f''(a) dx^2 on the nilpotent part
    def _lift(self, v, d, dd):
        return HyperDual(v, d * self.f1, d * self.f2,
                         d * self.f12 + dd * self.f1 * self.f2, self.level)

    # -- comparisons on the real part -------------------------------------

    def __lt__(self, o):
        return real(self) < real(o)

    def __le__(self, o):
        return real(self) <= real(o)

    def __gt__(self, o):
        return real(self) > real(o)

    def __ge__(self, o):
        return real(self) >= real(o)

    # -- elementary functions (numpy-compatible method dispatch) ----------

    def sin(self):
        return self._lift(sin(self.f), cos(self.f), -sin(self.f))

    def cos(self):
        return self._lift(cos(self.f), -sin(self.f), -cos(self.f))

    def tan(self):
        t = tan(self.f)
        return self._lift(t, 1.0 + t * t, 2.0 * t * (1.0 + t * t))

    def exp(self):
        e = exp(self.f)
        return self._lift(e, e, e)

    def log(self):
        return self._lift(log(self.f), 1.0 / self.f, -1.0 / (self.f * self.f))

    def sqrt(self):
        r = sqrt(self.f)
        return self._lift(r, 0.5 / r, -0.25 / (r * self.f))

    def arctan(self):
        den = 1.0 + self.f * self.f
        return self._lift(arctan(self.f), 1.0 / den,
                          -2.0 * self.f / (den * den))


def real(x):
    """Real part, through any nesting depth."""
    while isinstance(x, HyperDual):
        x = x.f
    return x


def _dispatch(name, mathfn):
    def fn(x):
        if isinstance(x, HyperDual):
            return getattr(x, name)()
        return mathfn(x)

    fn.__name__ = name
    return fn


sin = _dispatch("sin", math.sin)
cos = _dispatch("cos", math.cos)
tan = _dispatch("tan", math.tan)
exp = _dispatch("exp", math.exp)
log = _dispatch("log", math.log)
sqrt = _dispatch("sqrt", math.sqrt)
arctan = _dispatch("arctan", math.atan)


def atan2(y, x):
    if not isinstance(y, HyperDual) and not isinstance(x, HyperDual):
        return math.atan2(y, x)
    # differentials of atan2(y, x) equal (x dy - y dx)/(x^2 + y^2); fix the
    # value on the arctan branch that keeps the denominator away from zero
    base = math.atan2(real(y), real(x))
    w = arctan(y / x) if abs(real(x)) >= abs(real(y)) else -arctan(x / y)
    return w - real(w) + base


def habs(x):
    """|x| decided on the real part (used for metric determinants)."""
    return abs(x)


def seed(point, axis):
    """Fresh-level dual seed along `axis`: returns (point copy, level)."""
    lvl = next(_LEVELS)
    q = list(point)
    q[axis] = HyperDual(q[axis], 1.0, 0.0, 0.0, lvl)
    return q, lvl


def seed2(point, axis1, axis2):
    """One level, both slots: for a mixed second derivative in one pass."""
    lvl = next(_LEVELS)
    q = list(point)
    if axis1 == axis2:
        q[axis1] = HyperDual(q[axis1], 1.0, 1.0, 0.0, lvl)
    else:
        q[axis1] = HyperDual(q[axis1], 1.0, 0.0, 0.0, lvl)
        q[axis2] = HyperDual(q[axis2], 0.0, 1.0, 0.0, lvl)
    return q, lvl


def d_part(x, lvl, slot=1):
    """Derivative part of an evaluation with respect to a seed level."""
    if not isinstance(x, HyperDual) or x.level != lvl:
        return 0.0
    return x.f1 if slot == 1 else x.f2


def d2_part(x, lvl):
    if not isinstance(x, HyperDual) or x.level != lvl:
        return 0.0
    return x.f12


def partial(fn, axis):
    """First partial of a scalar point-function along a coordinate axis."""

    def dfn(point):
        q, lvl = seed(point, axis)
        return d_part(fn(q), lvl)

    return dfn


def partial2(fn, axis1, axis2):
    """Mixed second partial of a scalar point-function."""

    def dfn(point):
        q, lvl = seed2(point, axis1, axis2)
        return d2_part(fn(q), lvl)

    return dfn
