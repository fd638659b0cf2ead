import pytest

from qzero.field import FieldContext
from qzero.tensors import (
    eps_component,
    eps_contract,
    rhat,
    verify_rmatrix_structure,
)


@pytest.mark.parametrize("n,h", [(2, 4), (3, 4), (4, 5)])
def test_eps_contraction_is_qfact(n, h):
    ctx = FieldContext(n, h)
    assert eps_contract(ctx) == ctx.qfact(n)


def test_eps_identity_component():
    from fractions import Fraction

    ctx = FieldContext(3, 5)
    # the inversion-free word carries just the prefactor q^{-n(n-1)/4}
    assert eps_component(ctx, (3, 2, 1), "upper") == ctx.q_power(Fraction(-3, 2))


@pytest.mark.parametrize("n,h", [(2, 4), (3, 4)])
def test_rmatrix_structure(n, h):
    rep = verify_rmatrix_structure(FieldContext(n, h))
    assert rep.ok(), [c.name for c in rep.failed]


def test_rhat_entries_exist():
    ctx = FieldContext(2, 4)
    r = rhat(ctx)
    assert r.dim() == 4
