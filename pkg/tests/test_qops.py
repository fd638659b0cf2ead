import pytest

from qzero import qops


@pytest.fixture(scope="module")
def qs():
    return qops.get_system(2, 4)


def test_dimension(qs):
    assert qs.dim == 16 * 16


def test_vacuum_index(qs):
    assert qs.vacuum() == {0: qs.ctx.one}


def test_nilpotency(qs):
    rep = qops.check_nilpotency(2, 4, qs=qs)
    assert rep.ok(), [c.name for c in rep.failed]


def test_lemma1(qs):
    rep = qops.check_lemma1(2, 4, qs=qs)
    assert rep.ok(), [c.name for c in rep.failed]


def test_lemma2(qs):
    rep = qops.check_lemma2(2, 4, qs=qs)
    assert rep.ok(), [c.name for c in rep.failed]


def test_n2_suite(qs):
    rep = qops.n2_suite(4, qs=qs)
    assert rep.ok(), [c.name for c in rep.failed]


def test_conjecture_scan_n2(qs):
    rep = qops.conjecture_scan(2, 4, 3, qs=qs)
    assert rep.ok(), [c.name for c in rep.failed]
    counts = next(c for c in rep.checks if c.name == "scan_counts").detail
    assert counts["annihilating"] == counts["total_offdiag_monomials"]
    assert not counts["counterexamples"]


def test_diag_sector_n2(qs):
    sector, rep = qops.diag_sector(2, 4, 4, qs=qs)
    assert rep.ok(), [c.name for c in rep.failed]
    assert sector.dim == 4
    assert sector.dim_fprime == 4


def test_plactic_n2(qs):
    rep = qops.plactic_compare(2, 4, qs=qs)
    assert rep.ok(), [c.name for c in rep.failed]


def test_kernel_basis():
    ctx = qops.get_system(2, 4).ctx
    one = ctx.one
    # x0 + x1 = 0 over 3 unknowns -> kernel dim 2
    rows = [{0: one, 1: one}]
    basis = qops.kernel_basis(rows, 3, ctx)
    assert len(basis) == 2
    for vec in basis:
        s = ctx.zero
        for k, c in vec.items():
            if k in (0, 1):
                s = s + c
        assert s.is_zero()
