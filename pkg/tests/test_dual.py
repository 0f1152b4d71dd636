import math

import numpy as np
import pytest

from relsplit import dual
from relsplit.dual import HyperDual, atan2, cos, exp, log, real, sin, sqrt


def f_scalar(x):
    return sin(x) * exp(0.3 * x) + x ** 3 / (1.0 + x * x)


def f_scalar_d(x):
    h = 1e-6
    return (f_scalar(x + h) - f_scalar(x - h)) / (2 * h)


def test_first_derivative_matches_fd():
    for x in (-1.2, 0.3, 2.0):
        q, lvl = dual.seed([x], 0)
        got = dual.d_part(f_scalar(q[0]), lvl)
        assert abs(got - f_scalar_d(x)) < 1e-8


def test_second_derivative_one_pass():
    def f(p):
        return p[0] ** 2 * p[1] + sin(p[0] * p[1])

    x, y = 0.7, -0.4
    q, lvl = dual.seed2([x, y], 0, 1)
    d2 = dual.d2_part(f(q), lvl)
    # d2/dxdy = 2x + cos(xy) - xy sin(xy)
    want = 2 * x + math.cos(x * y) - x * y * math.sin(x * y)
    assert abs(d2 - want) < 1e-12


def test_mixed_partials_commute():
    def f(p):
        return exp(p[0] * p[1]) + p[1] ** 3 * p[0]

    p = [0.3, 0.8]
    a = dual.partial2(f, 0, 1)(p)
    b = dual.partial2(f, 1, 0)(p)
    assert abs(a - b) < 1e-13


def test_nesting_no_perturbation_confusion():
    # d/dx (x * d/dy (x * y^2)) = d/dx (2 x y) = 2 y
    def inner(x, y):
        q, lvl = dual.seed([x, y], 1)
        return dual.d_part(q[0] * q[1] ** 2, lvl)

    def outer(x, y):
        q, lvl = dual.seed([x, y], 0)
        return dual.d_part(q[0] * inner(q[0], y), lvl)

    # careful: inner receives the outer-seeded x
    x, y = 0.7, 0.4
    got = outer(x, y)
    assert abs(got - 2 * 2 * x * y / x / 2 - 0) < 1e-12 or True
    # explicit: inner(x, y) = 2 x y, so outer = d/dx (x * 2 x y) = 4 x y
    assert abs(got - 4 * x * y) < 1e-12


def test_division_and_power():
    q, lvl = dual.seed([2.0], 0)
    x = q[0]
    v = (1.0 / x) + x ** -2 + sqrt(x)
    d = dual.d_part(v, lvl)
    want = -1 / 4 - 2 / 8 + 0.5 / math.sqrt(2)
    assert abs(d - want) < 1e-14


def test_log_atan2():
    q, lvl = dual.seed([0.5, 1.2], 0)
    v = log(q[1] / (1 + q[0]))
    assert abs(dual.d_part(v, lvl) - (-1 / 1.5)) < 1e-13
    v2 = atan2(q[1], q[0])
    # d/dx atan2(y, x) = -y / (x^2 + y^2)
    assert abs(dual.d_part(v2, lvl) - (-1.2 / (0.25 + 1.44))) < 1e-13
    assert abs(real(v2) - math.atan2(1.2, 0.5)) < 1e-15


def test_comparisons_and_abs():
    h = HyperDual(-2.0, 1.0, 0.0, 0.0, level=1)
    assert h < 0
    assert abs(h).f == 2.0
    assert abs(h).f1 == -1.0


def test_numpy_dispatch():
    h = HyperDual(0.3, 1.0, 0.0, 0.0, level=1)
    assert abs(real(np.sin(h)) - math.sin(0.3)) < 1e-15
    assert abs(np.sin(h).f1 - math.cos(0.3)) < 1e-15
