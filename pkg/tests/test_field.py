from fractions import Fraction

import pytest

from qzero.field import FieldContext


@pytest.fixture(scope="module")
def ctx():
    return FieldContext(2, 4)


def test_q_is_primitive_2h_root(ctx):
    q = ctx.q
    acc = ctx.one
    for _ in range(2 * ctx.h):
        acc = acc * q
    assert acc == ctx.one
    acc = ctx.one
    for _ in range(ctx.h):
        acc = acc * q
    assert acc == -ctx.one


def test_qbar_is_inverse(ctx):
    assert ctx.q * ctx.qbar == ctx.one


def test_qint_vanishes_at_h(ctx):
    assert ctx.qint(ctx.h).is_zero()
    assert ctx.qint(0).is_zero()
    assert ctx.qint(1) == ctx.one
    assert ctx.qint(-3) == -ctx.qint(3)


def test_qint_numeric(ctx):
    import math

    for m in range(1, 4):
        val = ctx.qint(m).numeric()
        ref = math.sin(m * math.pi / ctx.h) / math.sin(math.pi / ctx.h)
        assert abs(val - ref) < 1e-12


def test_fractional_q_powers(ctx):
    half = ctx.q_power(Fraction(1, 2))
    assert half * half == ctx.q
    assert ctx.q_power(Fraction(-1, 2)) * half == ctx.one


def test_arith_and_inverse(ctx):
    x = ctx.q + ctx.from_int(3)
    assert x * x.inverse() == ctx.one
    assert (x - x).is_zero()
    assert x / x == ctx.one


def test_qfact(ctx):
    assert ctx.qfact(3) == ctx.qint(1) * ctx.qint(2) * ctx.qint(3)


def test_qplus_and_binom(ctx):
    # (r)_+ = (q^{2r} - 1)/(q^2 - 1)
    q2 = ctx.q * ctx.q
    for r in range(1, 5):
        num = ctx.q_power(2 * r) - ctx.one
        assert ctx.qplus(r) * (q2 - ctx.one) == num
    assert ctx.qplus(ctx.h).is_zero()
    assert ctx.qplus_binom(3, 1) == ctx.qplus(3)


def test_conj(ctx):
    z = ctx.q + ctx.from_int(2)
    assert z.conj().conj() == z
    # q is a root of unity, so conj is the inverse
    assert ctx.q.conj() == ctx.qbar
    val = (z * z.conj()).numeric()
    assert abs(val.imag) < 1e-12 and val.real > 0
