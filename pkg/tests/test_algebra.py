import pytest

from qzero.algebra import (
    Algebra,
    check_confluence_samples,
    check_genex,
    check_rmatrix_exchange,
)
from qzero.field import FieldContext


@pytest.fixture(scope="module")
def ctx():
    return FieldContext(2, 4)


def test_same_upper_swap(ctx):
    alg = Algebra(ctx)
    # a^1_2 a^1_1 normal-orders to q a^1_1 a^1_2 (same upper index)
    e = (alg.gen(1, 2) * alg.gen(1, 1)).normal_form()
    ref = (alg.gen(1, 1) * alg.gen(1, 2)).scaled(ctx.q)
    assert e == ref


def test_equal_lower_commute(ctx):
    alg = Algebra(ctx)
    lhs = (alg.gen(2, 1) * alg.gen(1, 1)).normal_form()
    rhs = (alg.gen(1, 1) * alg.gen(2, 1)).normal_form()
    assert lhs == rhs


def test_power_stays_normal(ctx):
    # (a^i_alpha)^h = 0 is a representation-level fact checked in the module
    # tests; in the abstract algebra the power is simply a normal word
    alg = Algebra(ctx)
    e = (alg.gen(1, 1) ** ctx.h).normal_form()
    assert list(e.terms) == [((1, 1),) * ctx.h]


def test_det_is_central_scalar_relation(ctx):
    alg = Algebra(ctx)
    det = alg.det()
    # the determinant has only normal words with one letter per upper index
    for word in det.terms:
        assert sorted(i for i, _ in word) == list(range(1, ctx.n + 1))


def test_genex(ctx):
    rep = check_genex(ctx, max_m=4)
    assert rep.ok(), [c.name for c in rep.failed]


def test_genex_n3():
    rep = check_genex(FieldContext(3, 4), max_m=3)
    assert rep.ok(), [c.name for c in rep.failed]


def test_confluence_samples(ctx):
    rep = check_confluence_samples(ctx, count=25, seed=0)
    assert rep.ok(), [c.name for c in rep.failed]


def test_rmatrix_exchange(ctx):
    rep = check_rmatrix_exchange(ctx)
    assert rep.ok(), [c.name for c in rep.failed]
