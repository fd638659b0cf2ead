"""q-antisymmetric epsilon tensors and the constant / dynamical R-matrices.

Index conventions: greek indices run 1..n; a pair (alpha, beta) is flattened
row-major as (alpha-1)*n + (beta-1) (alpha slow, beta fast).  The constant
R-matrix acts on the quantum-group indices, the dynamical one on the
"dynamical" upper indices and has PCoeff entries.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import permutations, product

from .field import FieldContext
from .pcoeff import PCoeff, SymbolRing
from .report import Check, Report


def eps_sign(alpha, beta):
    """epsilon_{alpha beta}: +1 for alpha > beta, -1 for alpha < beta, 0 equal."""
    return (alpha > beta) - (alpha < beta)


def inversions(seq):
    """Number of pairs (i < j) with seq[i] < seq[j] (the paper's convention:
    the reference order is descending n...1)."""
    count = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] < seq[j]:
                count += 1
    return count


def eps_component(ctx: FieldContext, indices, variant="upper"):
    """Component of the totally q-antisymmetric tensor (or the classical one)."""
    n = ctx.n
    if sorted(indices) != list(range(1, n + 1)):
        return ctx.zero
    ell = inversions(indices)
    if variant == "classical":
        return ctx.from_int(1 if ell % 2 == 0 else -1)
    if variant not in ("upper", "lower"):
        raise ValueError(f"unknown epsilon variant {variant!r}")
    # upper and lower q-epsilon coincide
    pref = ctx.q_power(-Fraction(n * (n - 1), 4))
    return pref * ((-(ctx.q)) ** ell)


def eps_contract(ctx: FieldContext):
    """Full contraction eps^{a_1..a_n} eps_{a_1..a_n}; must equal [n]!."""
    acc = ctx.zero
    for sigma in permutations(range(1, ctx.n + 1)):
        c = eps_component(ctx, sigma)
        acc = acc + c * c
    return acc


# -- matrices ----------------------------------------------------------------


class RMatrix:
    """Square matrix over CycNum or PCoeff entries on the n^2 pair space."""

    def __init__(self, ctx, entries, flavor):
        self.ctx = ctx
        self.n = ctx.n
        self.entries = entries  # list of rows
        self.flavor = flavor

    def __getitem__(self, key):
        (a, b), (c, d) = key
        n = self.n
        return self.entries[(a - 1) * n + (b - 1)][(c - 1) * n + (d - 1)]

    def dim(self):
        return len(self.entries)

    def to_json(self):
        return json.dumps(
            {
                "n": self.n,
                "h": self.ctx.h,
                "flavor": self.flavor,
                "entries": [[str(e) for e in row] for row in self.entries],
            },
            indent=2,
        )


def rhat(ctx: FieldContext) -> RMatrix:
    """The constant R-matrix, entries q^{1/n}*(permutation + diagonal part)."""
    n = ctx.n
    pref = ctx.q_power(Fraction(1, n))
    rows = []
    for a, b in product(range(1, n + 1), repeat=2):
        row = []
        for c, d in product(range(1, n + 1), repeat=2):
            val = ctx.zero
            if a == d and b == c:
                val = val + ctx.one
            if a == c and b == d:
                val = val + (ctx.qbar - ctx.q_power(-eps_sign(a, b)))
            row.append(pref * val)
        rows.append(row)
    return RMatrix(ctx, rows, "constant")


def rhat_dyn(ctx: FieldContext, alpha_choice="unit", ring=None, group=0) -> RMatrix:
    """Dynamical R-matrix with PCoeff entries.

    alpha_choice 'unit' gives alpha(p_ij) = 1; 'ratio' gives
    alpha(p_ij) = [p_ij + 1]/[p_ij - 1].
    """
    if alpha_choice not in ("unit", "ratio"):
        raise ValueError(f"unknown alpha choice {alpha_choice!r}")
    n = ctx.n
    if ring is None:
        ring = SymbolRing(ctx)
    pref = ctx.q_power(Fraction(1, n))

    def a_coeff(i, j):
        if i == j:
            return PCoeff(ring.scalar(ctx.qbar))
        br = ring.bracket(i, j, group=group)
        if alpha_choice == "unit":
            return PCoeff(ring.bracket(i, j, group=group, shift=-1), br)
        return PCoeff(ring.bracket(i, j, group=group, shift=1), br)

    def b_coeff(i, j):
        if i == j:
            return PCoeff(ring.zero, ring.one)
        return PCoeff(ring.qp(i, j, group=group, power=-1), ring.bracket(i, j, group=group))

    rows = []
    for i, j in product(range(1, n + 1), repeat=2):
        row = []
        for ip, jp in product(range(1, n + 1), repeat=2):
            val = PCoeff(ring.zero, ring.one)
            if i == jp and j == ip:
                val = val + a_coeff(i, j)
            if i == ip and j == jp:
                val = val + b_coeff(i, j)
            row.append(val * pref)
        rows.append(row)
    return RMatrix(ctx, rows, f"dynamical({alpha_choice})")


# -- dense exact matrix helpers (small dimensions only) ----------------------


def mat_mul(ctx, A, B):
    m, k, n = len(A), len(B), len(B[0])
    out = [[ctx.zero] * n for _ in range(m)]
    for i in range(m):
        Ai = A[i]
        for s in range(k):
            a = Ai[s]
            if a.is_zero():
                continue
            Bs = B[s]
            row = out[i]
            for j in range(n):
                b = Bs[j]
                if not b.is_zero():
                    row[j] = row[j] + a * b
    return out


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_is_zero(A):
    return all(e.is_zero() for row in A for e in row)


def identity_mat(ctx, m):
    return [[ctx.one if i == j else ctx.zero for j in range(m)] for i in range(m)]


def kron(ctx, A, B):
    ma, mb = len(A), len(B)
    out = [[ctx.zero] * (ma * mb) for _ in range(ma * mb)]
    for i in range(ma):
        for j in range(ma):
            a = A[i][j]
            if a.is_zero():
                continue
            for k in range(mb):
                for l in range(mb):
                    b = B[k][l]
                    if not b.is_zero():
                        out[i * mb + k][j * mb + l] = a * b
    return out


def first_nonzero_witness(A):
    for i, row in enumerate(A):
        for j, e in enumerate(row):
            if not e.is_zero():
                return f"entry ({i},{j}) = {e}"
    return None


def verify_rmatrix_structure(ctx: FieldContext) -> Report:
    """Braid relation, symmetry and Hecke-type minimal polynomial of rhat."""
    if ctx.n > 4:
        raise ValueError("structure checks are limited to n <= 4")
    rep = Report("rmatrix", {"n": ctx.n, "h": ctx.h})
    R = rhat(ctx).entries
    n = ctx.n
    I = identity_mat(ctx, n)
    R12 = kron(ctx, R, I)
    R23 = kron(ctx, I, R)
    lhs = mat_mul(ctx, mat_mul(ctx, R12, R23), R12)
    rhs = mat_mul(ctx, mat_mul(ctx, R23, R12), R23)
    diff = mat_sub(lhs, rhs)
    rep.add("braid_relation", mat_is_zero(diff), first_nonzero_witness(diff))

    sym = all(
        R[i][j] == R[j][i] for i in range(n * n) for j in range(i + 1, n * n)
    )
    rep.add("symmetry", sym)

    # minimal polynomial: solve R^2 = t R + s I over the field
    R2 = mat_mul(ctx, R, R)
    Inn = identity_mat(ctx, n * n)
    t = s = None
    for i in range(n * n):
        for j in range(n * n):
            # pick two equations with invertible 2x2 coefficient matrix
            if i == j:
                continue
            a1, b1, c1 = R[i][j], Inn[i][j], R2[i][j]
            a2, b2, c2 = R[i][i], Inn[i][i], R2[i][i]
            det = a1 * b2 - a2 * b1
            if det.is_zero():
                continue
            t = (c1 * b2 - c2 * b1) / det
            s = (a1 * c2 - a2 * c1) / det
            break
        if t is not None:
            break
    ok = t is not None
    if ok:
        resid = mat_sub(R2, [[t * R[i][j] + s * Inn[i][j] for j in range(n * n)] for i in range(n * n)])
        ok = mat_is_zero(resid)
    rep.add("quadratic_minimal_polynomial", ok, None if ok else "R^2 not in span{R, I}")
    if ok:
        # the two eigenvalues are the roots of x^2 - t x - s
        cand = ctx.q_power(Fraction(1, n)) * ctx.qbar
        lam2 = t - cand
        if (cand * cand - t * cand - s).is_zero() and not (cand - lam2 == ctx.zero and False):
            rep.info(
                "eigenvalues",
                detail={"lambda1": str(cand), "lambda2": str(lam2), "trace_coeff": str(t)},
            )
            rep.add("two_distinct_eigenvalues", not (cand - lam2).is_zero())
        else:
            rep.add("eigenvalue_extraction", False, f"candidate {cand} is not a root")
    return rep
