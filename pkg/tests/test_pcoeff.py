import pytest

from qzero.field import FieldContext
from qzero.pcoeff import SymbolRing, verify_q_identities


@pytest.fixture(scope="module")
def ctx():
    return FieldContext(2, 5)


def test_q_identities_n2(ctx):
    checks = verify_q_identities(ctx)
    bad = [c.name for c in checks if c.status == "fail"]
    assert not bad


def test_q_identities_n3():
    checks = verify_q_identities(FieldContext(3, 4))
    bad = [c.name for c in checks if c.status == "fail"]
    assert not bad


def test_bracket_shift_cancels(ctx):
    # shifting p_12 up then down is the identity
    ring = SymbolRing(ctx)
    f = ring.bracket(1, 2)
    assert f.shift(1).shift(1, inverse=True) == f


def test_subs_matches_qint(ctx):
    ring = SymbolRing(ctx)
    from qzero.pcoeff import PCoeff

    f = PCoeff(ring.bracket(1, 2))
    # x_j = q^{p_j} with the traceless convention p_1 + p_2 = 0
    from fractions import Fraction

    for p in range(1, 4):
        vals = [[Fraction(p, 2), Fraction(-p, 2)]]
        assert f.subs(vals) == ctx.qint(p)
