import pytest

from qzero.fock import (
    build_module,
    gram,
    n2_closed_form,
    p_eigenvalue,
    verify_module,
)
from qzero.matrix import SparseMat, commutator


@pytest.fixture(scope="module")
def mod():
    return build_module(2, 4)


def test_dimension(mod):
    assert mod.dim == 16
    assert mod.complete


def test_vacuum_weights(mod):
    assert p_eigenvalue((), 2, 1, 2) == 1
    assert p_eigenvalue(((1, 1),), 2, 1, 2) == 2


def test_verify_module(mod):
    rep = verify_module(mod)
    assert rep.ok(), [c.name for c in rep.failed]


def test_generator_nilpotency(mod):
    h = mod.ctx.h
    for g, m in mod.gen_mats.items():
        assert (m ** h).is_zero(), g


def test_depth_zero_first_column(mod):
    # a^i_alpha with i != 1 annihilates the vacuum
    vac = mod.vacuum()
    for (i, alpha), m in mod.gen_mats.items():
        if i != 1:
            assert not m.apply(vac), (i, alpha)


def test_closed_form_oracle():
    ctx, A, D, L = n2_closed_form(4)
    G = gram(4, ctx)
    h = 4
    for m in range(h):
        col = A.cols.get(m, {})
        if m < h - 1:
            assert col == {m + 1: ctx.qint(m + 1)}
        else:
            assert not col
    # [A, D]|m> = -[2m+2]|m>
    c = commutator(A, D)
    for m in range(h):
        assert c.apply({m: ctx.one}) == ({m: -ctx.qint(2 * m + 2)}
                                         if not ctx.qint(2 * m + 2).is_zero()
                                         else {})
    # Gram adjointness
    assert A.conj_transpose() * G == G * D


def test_right_module_matches_left():
    left = build_module(2, 3, chirality="left")
    right = build_module(2, 3, chirality="right")
    assert left.dim == right.dim
    for g in left.gen_mats:
        assert left.gen_mats[g] == right.gen_mats[g]
