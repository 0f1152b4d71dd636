import pytest
from hypothesis import given
from hypothesis import strategies as st

from relsplit import dims

exponents = st.tuples(*(st.integers(-6, 6) for _ in range(4)))


@given(exponents, exponents)
def test_product_is_componentwise_addition(ea, eb):
    a, b = dims.Dimension(ea), dims.Dimension(eb)
    assert (a * b).exps == tuple(x + y for x, y in zip(ea, eb))


@given(exponents, exponents, exponents)
def test_associative_commutative(ea, eb, ec):
    a, b, c = (dims.Dimension(e) for e in (ea, eb, ec))
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(exponents)
def test_identity_and_inverse(e):
    d = dims.Dimension(e)
    assert d * dims.ONE == d
    assert (d * d.inverse()).is_neutral


def test_derived_constants():
    assert dims.U.exps == (2, -3, 1, -1)
    assert dims.A.exps == (2, -1, 1, 0)
    assert dims.A == dims.U * dims.I * dims.T ** 2


def test_action_from_voltage_current_time():
    assert dims.U * dims.I * dims.T ** 2 == dims.A


def test_pd_check():
    assert dims.pd_check([dims.UT, dims.UT])
    assert not dims.pd_check([dims.UT, dims.IT])
    assert dims.pd_check([dims.ONE])
    with pytest.raises(ValueError):
        dims.pd_check([])


def test_hodge_dimension_rule():
    # pd(*_n) = L^(n-2k): checking pd(*4 F) Z0^-1 = pd(H)
    star4_on_2forms = dims.L ** (4 - 2 * 2)
    assert star4_on_2forms * dims.UT / dims.Z0_DIM == dims.IT


def test_require_same():
    with pytest.raises(dims.DimensionError):
        dims.require_same(dims.UT, dims.IT)
