"""Two-dimensional zero-mode operators on the tensor product of the two
chiral vacuum modules, with the verification and exploration suites.

Q^i_j = sum_alpha a^i_alpha (x) abar^alpha_j acts on F (x) Fbar.  The barred
algebra satisfies relations of the same form as the unbarred one, so a single
module build supplies both tensor factors; the generator keyed (j, alpha)
plays the role of abar^alpha_j on the right factor.  All checks are exact
matrix identities over the cyclotomic field; weight-bracket factors such as
[p_ij - 1] (x) [pbar_lm] are assembled as diagonal matrices over the tensor
basis, never by scalar substitution.
"""

import math
import os
from fractions import Fraction

from .fock import build_module, n2_closed_form, gram, p_eigenvalue
from .matrix import SparseMat, commutator
from .report import Report
from .tensors import eps_sign


def _threads():
    try:
        return max(1, int(os.environ.get("QZERO_THREADS", "1")))
    except ValueError:
        return 1


# -- sparse vector helpers ---------------------------------------------------


def vec_add(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out[k] + v if k in out else v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vec_scale(a, c):
    if c.is_zero():
        return {}
    return {k: c * v for k, v in a.items()}


def vec_sub(a, b):
    return vec_add(a, {k: -v for k, v in b.items()})


def vec_eq(a, b):
    return not vec_sub(a, b)


class VecReducer:
    """Row reduction of sparse vectors keyed by ambient index."""

    def __init__(self):
        self.pivots = {}  # index -> vector with coeff 1 at index

    def reduce(self, vec):
        vec = dict(vec)
        while True:
            hit = next((k for k in vec if k in self.pivots), None)
            if hit is None:
                return vec
            c = vec[hit]
            for k2, c2 in self.pivots[hit].items():
                v = vec.get(k2)
                v = -(c * c2) if v is None else v - c * c2
                if v.is_zero():
                    vec.pop(k2, None)
                else:
                    vec[k2] = v

    def add(self, vec):
        """Insert; returns the reduced vector if it enlarges the span."""
        vec = self.reduce(vec)
        if not vec:
            return None
        piv = max(vec)
        inv = vec[piv].inverse()
        self.pivots[piv] = {k: inv * c for k, c in vec.items()}
        return vec


def kernel_basis(rows, ncols, ctx):
    """Kernel of the linear map given by sparse rows over unknowns 0..ncols-1.

    Returns a list of sparse coefficient vectors spanning the null space.
    """
    pivots = {}  # unknown index -> RREF row {col: CycNum} with 1 at index
    for row in rows:
        row = dict(row)
        # eliminate
        changed = True
        while changed:
            changed = False
            for c in list(row):
                if c in pivots:
                    f = row.pop(c)
                    for c2, v2 in pivots[c].items():
                        if c2 == c:
                            continue
                        v = row.get(c2)
                        v = -(f * v2) if v is None else v - f * v2
                        if v.is_zero():
                            row.pop(c2, None)
                        else:
                            row[c2] = v
                    changed = True
        if not row:
            continue
        p = max(row)
        inv = row[p].inverse()
        row = {c: inv * v for c, v in row.items()}
        # back-substitute into existing pivot rows
        for p2, row2 in pivots.items():
            if p in row2:
                f = row2.pop(p)
                for c, v in row.items():
                    if c == p:
                        continue
                    v2 = row2.get(c)
                    v2 = -(f * v) if v2 is None else v2 - f * v
                    if v2.is_zero():
                        row2.pop(c, None)
                    else:
                        row2[c] = v2
        pivots[p] = row
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for f in free:
        vec = {f: ctx.one}
        for p, row in pivots.items():
            if f in row:
                vec[p] = -row[f]
        basis.append(vec)
    return basis


# -- the operator system -----------------------------------------------------

_SYSTEM_CACHE = {}


def get_system(n, h, **kwargs):
    key = (n, h)
    if key not in _SYSTEM_CACHE:
        _SYSTEM_CACHE[key] = QSystem(n, h, **kwargs)
    return _SYSTEM_CACHE[key]


class QSystem:
    """Q^i_j and the weight diagonals on the tensor-product space."""

    def __init__(self, n, h, module=None, **build_kwargs):
        if module is None:
            module = build_module(n, h, **build_kwargs)
        self.n = n
        self.h = h
        self.ctx = module.ctx
        # the barred relations have the same form, so one module serves as
        # both tensor factors; key (j, alpha) is abar^alpha_j on the right
        self.left = module
        self.right = module
        self.dimf = module.dim
        self.dim = module.dim * module.dim
        self._q = {}
        self._comp = {}

    # generator factors
    def a(self, i, alpha):
        return self.left.gen_mats[(i, alpha)]

    def abar(self, alpha, j):
        return self.right.gen_mats[(j, alpha)]

    def component(self, i, j, alpha):
        """Q_alpha = a^i_alpha (x) abar^alpha_j, no summation."""
        key = (i, j, alpha)
        if key not in self._comp:
            self._comp[key] = self.a(i, alpha).kron(self.abar(alpha, j))
        return self._comp[key]

    def q(self, i, j):
        key = (i, j)
        if key not in self._q:
            acc = None
            for alpha in range(1, self.n + 1):
                m = self.component(i, j, alpha)
                acc = m if acc is None else acc + m
            self._q[key] = acc
        return self._q[key]

    # weight diagonals on the tensor basis -----------------------------------
    def pair_diag(self, f):
        """Diagonal matrix with entries f(left_word, right_word)."""
        vals = []
        for wl in self.left.basis:
            for wr in self.right.basis:
                vals.append(f(wl, wr))
        return SparseMat.diagonal(vals)

    def pw(self, i, j, shift=0):
        """[p_ij + shift] (x) 1."""
        ctx = self.ctx
        return self.pair_diag(
            lambda wl, wr: ctx.qint(p_eigenvalue(wl, self.n, i, j) + shift)
        )

    def pbar(self, i, j, shift=0):
        """1 (x) [pbar_ij + shift]."""
        ctx = self.ctx
        return self.pair_diag(
            lambda wl, wr: ctx.qint(p_eigenvalue(wr, self.n, i, j) + shift)
        )

    def qpw(self, i, j, power=1):
        ctx = self.ctx
        return self.pair_diag(
            lambda wl, wr: ctx.q_power(
                Fraction(power) * p_eigenvalue(wl, self.n, i, j)
            )
        )

    def qpbar(self, i, j, power=1):
        ctx = self.ctx
        return self.pair_diag(
            lambda wl, wr: ctx.q_power(
                Fraction(power) * p_eigenvalue(wr, self.n, i, j)
            )
        )

    def br_minus(self, i, j, l, m):
        """[p_ij - pbar_lm] as one diagonal."""
        ctx = self.ctx
        return self.pair_diag(
            lambda wl, wr: ctx.qint(
                p_eigenvalue(wl, self.n, i, j) - p_eigenvalue(wr, self.n, l, m)
            )
        )

    def br_plus(self, i, j, l, m):
        """[p_ij + pbar_lm] as one diagonal."""
        ctx = self.ctx
        return self.pair_diag(
            lambda wl, wr: ctx.qint(
                p_eigenvalue(wl, self.n, i, j) + p_eigenvalue(wr, self.n, l, m)
            )
        )

    def vacuum(self):
        return {0: self.ctx.one}

    # n = 2 named operators ---------------------------------------------------
    @property
    def A(self):
        return self.q(1, 1)

    @property
    def B(self):
        return self.q(1, 2)

    @property
    def C(self):
        return self.q(2, 1)

    @property
    def D(self):
        return self.q(2, 2)

    def weight_op_L(self, sign=1):
        """L^{sign} = -q^{sign p} (x) q^{sign pbar} (n=2, p = p_12)."""
        return (self.qpw(1, 2, sign) * self.qpbar(1, 2, sign)).scale(-self.ctx.one)

    def weight_op_N(self, sign=1):
        """N^{sign} = -q^{sign p} (x) q^{-sign pbar}."""
        return (self.qpw(1, 2, sign) * self.qpbar(1, 2, -sign)).scale(-self.ctx.one)


def _witness(mat):
    w = mat.first_nonzero()
    return str(w) if w is not None else None


# -- nilpotency suite --------------------------------------------------------


def check_nilpotency(n, h, qs=None):
    qs = qs if qs is not None else get_system(n, h)
    ctx = qs.ctx
    rep = Report("qcheck-nilpotency", {"n": n, "h": h})
    rep.completeness["module_complete"] = qs.left.complete

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = qs.q(i, j) ** h
            rep.add(f"Q[{i},{j}]^{h}=0", m.is_zero(), witness=_witness(m))

    # component relations, all (i, j) pairs
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            comps = [qs.component(i, j, al) for al in range(1, n + 1)]
            ok = all((c ** h).is_zero() for c in comps)
            rep.add(f"components[{i},{j}]^h=0", ok)
            ok = True
            wit = None
            for a in range(n):
                for b in range(n):
                    if a == b:
                        continue
                    lhs = comps[a] * comps[b]
                    rhs = (comps[b] * comps[a]).scale(
                        ctx.q_power(2 * eps_sign(a + 1, b + 1))
                    )
                    d = lhs - rhs
                    if not d.is_zero():
                        ok = False
                        wit = f"alpha={a+1},beta={b+1},{_witness(d)}"
            rep.add(f"component_q2_commutation[{i},{j}]", ok, witness=wit)

    # partial sums (representative corner entry: indices play no role)
    i = j = 1
    comps = [qs.component(i, j, al) for al in range(1, n + 1)]
    partial = None
    prev_pow = None
    for al in range(n):
        new = comps[al] if partial is None else partial + comps[al]
        if partial is not None:
            lhs = comps[al] * partial
            rhs = (partial * comps[al]).scale(ctx.q_power(2))
            d = lhs - rhs
            rep.add(f"partial_sum_q2_commutation[alpha={al+1}]", d.is_zero(),
                    witness=_witness(d))
            cur_pow = new ** h
            rep.add(f"partial_sum_power_collapse[alpha={al+1}]",
                    cur_pow == prev_pow,
                    witness=_witness(cur_pow - prev_pow))
            prev_pow = cur_pow
        else:
            prev_pow = new ** h
        partial = new

    # q-binomial expansion for the pair (Q_1, Q_2)
    if n >= 2:
        q1, q2 = comps[0], comps[1]
        s = q1 + q2
        for m in (2, 3, h):
            lhs = s ** m
            rhs = None
            for r in range(m + 1):
                term = None
                if r:
                    term = q1 ** r
                if m - r:
                    t2 = q2 ** (m - r)
                    term = t2 if term is None else term * t2
                if term is None:
                    term = SparseMat.identity(qs.dim, ctx)
                term = term.scale(ctx.qplus_binom(m, r))
                rhs = term if rhs is None else rhs + term
            d = lhs - rhs
            rep.add(f"q_binomial[m={m}]", d.is_zero(), witness=_witness(d))

    # at a root of unity the h-th q-plus integer vanishes, so the general
    # power formula collapses to the sum of component powers
    rep.add("(h)_+=0", ctx.qplus(h).is_zero())
    acc = None
    for al in range(n):
        p = comps[al] ** h
        acc = p if acc is None else acc + p
    rep.add("power_formula_collapse", acc.is_zero(), witness=_witness(acc))
    return rep


# -- Lemma 1 ----------------------------------------------------------------


def check_lemma1(n, h, qs=None):
    qs = qs if qs is not None else get_system(n, h)
    rep = Report("qcheck-lemma1", {"n": n, "h": h})
    rep.completeness["module_complete"] = qs.left.complete
    for i in range(1, n + 1):
        # trivial same-entry commutator
        d = commutator(qs.q(i, i), qs.q(i, i))
        rep.add(f"[Q[{i},{i}],Q[{i},{i}]]=0", d.is_zero())
        for j in range(1, n + 1):
            for l in range(j + 1, n + 1):
                # same column (lower index i)
                d = commutator(qs.q(j, i), qs.q(l, i))
                rep.add(f"same_column[{j},{l};{i}]", d.is_zero(), witness=_witness(d))
                # same row (upper index i)
                d2 = commutator(qs.q(i, j), qs.q(i, l))
                rep.add(f"same_row[{i};{j},{l}]", d2.is_zero(), witness=_witness(d2))
                # denominator-cleared intermediate identities
                m1 = qs.pw(l, j, -1) * d
                rep.add(f"cleared_minus[{j},{l};{i}]", m1.is_zero(), witness=_witness(m1))
                m2 = qs.pw(l, j, +1) * d
                rep.add(f"cleared_plus[{j},{l};{i}]", m2.is_zero(), witness=_witness(m2))
    return rep


# -- Lemma 2 ----------------------------------------------------------------


def _bracket_identities(qs, rep):
    """The mixed-bracket identities used in the Lemma-2 proof, as diagonals."""
    ok_all = {1: True, 2: True, 3: True}
    wit = {1: None, 2: None, 3: None}
    n = qs.n
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for (i, j) in pairs:
        for (l, m) in pairs:
            minus = qs.br_minus(i, j, l, m)
            plus = qs.br_plus(i, j, l, m)
            # [p+1](x)[pbar] - [p](x)[pbar+1] = -[p-pbar]
            d = (qs.pw(i, j, 1) * qs.pbar(l, m) - qs.pw(i, j) * qs.pbar(l, m, 1)) + minus
            if not d.is_zero():
                ok_all[1] = False
                wit[1] = f"({i},{j},{l},{m})"
            # [p+1](x)[pbar] - [p](x)[pbar-1] = +[p+pbar]
            d = (qs.pw(i, j, 1) * qs.pbar(l, m) - qs.pw(i, j) * qs.pbar(l, m, -1)) - plus
            if not d.is_zero():
                ok_all[2] = False
                wit[2] = f"({i},{j},{l},{m})"
            # [p](x)q^{eps pbar} - q^{eps p}(x)[pbar] = [p-pbar], eps = +-1
            for eps in (1, -1):
                d = (
                    qs.pw(i, j) * qs.qpbar(l, m, eps)
                    - qs.qpw(i, j, eps) * qs.pbar(l, m)
                ) - minus
                if not d.is_zero():
                    ok_all[3] = False
                    wit[3] = f"({i},{j},{l},{m},eps={eps})"
    rep.add("bracket_id_minus", ok_all[1], witness=wit[1])
    rep.add("bracket_id_plus", ok_all[2], witness=wit[2])
    rep.add("bracket_id_qp", ok_all[3], witness=wit[3])


def check_lemma2(n, h, qs=None):
    qs = qs if qs is not None else get_system(n, h)
    rep = Report("qcheck-lemma2", {"n": n, "h": h})
    rep.completeness["module_complete"] = qs.left.complete
    _bracket_identities(qs, rep)

    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]

    # main exchange identity for all admissible quadruples
    ok = True
    wit = None
    for (i, j) in pairs:
        for (l, m) in pairs:
            c1 = qs.pw(i, j, -1) * qs.pbar(l, m)
            c2 = qs.pw(i, j) * qs.pbar(l, m, -1)
            lhs = (c1 - c2) * qs.q(i, l) * qs.q(j, m)
            alt = qs.br_minus(i, j, l, m) * qs.q(i, l) * qs.q(j, m)
            rhs = c1 * qs.q(j, l) * qs.q(i, m) - c2 * qs.q(i, m) * qs.q(j, l)
            if lhs != alt or lhs != rhs:
                ok = False
                wit = f"({i},{j};{l},{m})"
    rep.add("exchange_identity", ok, witness=wit)

    # same-row/column specialization with one diagonal entry
    ok = True
    wit = None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            if not commutator(qs.q(j, i), qs.q(i, i)).is_zero():
                ok, wit = False, f"[Q[{j},{i}],Q[{i},{i}]]"
            if not commutator(qs.q(i, j), qs.q(i, i)).is_zero():
                ok, wit = False, f"[Q[{i},{j}],Q[{i},{i}]]"
    rep.add("diagonal_commutation", ok, witness=wit)

    # three-index jump relations (need n >= 3)
    if n >= 3:
        ok = True
        wit = None
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for l in range(1, n + 1):
                    if len({i, j, l}) < 3:
                        continue
                    plus = qs.br_plus(i, j, i, l)
                    lhs = qs.pw(i, j, -1) * qs.pbar(i, l) * qs.q(j, l) * qs.q(i, i)
                    rhs = (
                        qs.pw(i, j) * qs.pbar(i, l, 1) * qs.q(i, i) * qs.q(j, l)
                        - plus * qs.q(i, l) * qs.q(j, i)
                    )
                    if lhs != rhs:
                        ok, wit = False, f"line1({i},{j},{l})"
                    lhs = qs.pw(i, j) * qs.pbar(i, l, -1) * qs.q(j, l) * qs.q(i, i)
                    rhs = (
                        qs.pw(i, j, 1) * qs.pbar(i, l) * qs.q(i, i) * qs.q(j, l)
                        - plus * qs.q(j, i) * qs.q(i, l)
                    )
                    if lhs != rhs:
                        ok, wit = False, f"line2({i},{j},{l})"
        rep.add("offdiag_jump", ok, witness=wit)

    # diagonal-pair exchange with off-diagonal source terms
    ok = True
    wit = None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            plus = qs.br_plus(i, j, i, j)
            lhs = (
                qs.pw(i, j) * qs.pbar(i, j, 1) * qs.q(i, i) * qs.q(j, j)
                - qs.pw(i, j, -1) * qs.pbar(i, j) * qs.q(j, j) * qs.q(i, i)
            )
            if lhs != plus * qs.q(i, j) * qs.q(j, i):
                ok, wit = False, f"line1({i},{j})"
            lhs = (
                qs.pw(i, j, 1) * qs.pbar(i, j) * qs.q(i, i) * qs.q(j, j)
                - qs.pw(i, j) * qs.pbar(i, j, -1) * qs.q(j, j) * qs.q(i, i)
            )
            if lhs != plus * qs.q(j, i) * qs.q(i, j):
                ok, wit = False, f"line2({i},{j})"
    rep.add("diagonal_pair_exchange", ok, witness=wit)

    # exchange with the dynamical R-matrix on both wings, cleared of the
    # [p_ij] and [pbar_lm] denominators.  The identity holds with the
    # a-coefficient [p-1]/[p] on both sides; the sign of the exponent in the
    # b-coefficient q^{-+p}/[p] is free, so both signs are checked.
    pref = qs.ctx.q_power(Fraction(1, n))
    for bp in (-1, 1):
        ok = True
        wit = None
        for (i, j) in pairs:
            for (l, m) in pairs:
                lhs = (
                    qs.pw(i, j, -1) * qs.q(j, l) * qs.q(i, m)
                    + qs.qpw(i, j, bp) * qs.q(i, l) * qs.q(j, m)
                ).scale(pref) * qs.pbar(l, m)
                rhs = qs.pw(i, j) * (
                    qs.q(i, m) * qs.q(j, l) * qs.pbar(l, m, -1)
                    + qs.q(i, l) * qs.q(j, m) * qs.qpbar(l, m, bp)
                ).scale(pref)
                if lhs != rhs:
                    ok, wit = False, f"({i},{j};{l},{m})"
        rep.add(f"rmatrix_exchange[b_sign={bp:+d}]", ok, witness=wit)
    return rep


# -- n = 2 structure suite ---------------------------------------------------


def n2_suite(h, qs=None):
    qs = qs if qs is not None else get_system(2, h)
    if qs.n != 2:
        raise ValueError("n2_suite needs n = 2")
    ctx = qs.ctx
    rep = Report("qcheck-n2-suite", {"n": 2, "h": h})
    rep.completeness["module_complete"] = qs.left.complete
    A, B, C, D = qs.A, qs.B, qs.C, qs.D
    L, Linv = qs.weight_op_L(1), qs.weight_op_L(-1)
    N, Ninv = qs.weight_op_N(1), qs.weight_op_N(-1)
    ident = SparseMat.identity(qs.dim, ctx)

    # diagonal and off-diagonal entries commute
    for name, d in (
        ("[A,B]=0", commutator(A, B)),
        ("[A,C]=0", commutator(A, C)),
        ("[B,D]=0", commutator(B, D)),
        ("[C,D]=0", commutator(C, D)),
    ):
        rep.add(name, d.is_zero(), witness=_witness(d))

    # the two restricted quantum-group triples
    inv_qq = (ctx.q - ctx.qbar).inverse()
    br_L = (L - Linv).scale(inv_qq)
    br_N = (N - Ninv).scale(inv_qq)
    rep.add("[A,D]=[L]", commutator(A, D) == br_L)
    rep.add("[B,C]=[N]", commutator(B, C) == br_N)
    rep.add("LA=q2AL", L * A == (A * L).scale(ctx.q_power(2)))
    rep.add("LD=q-2DL", L * D == (D * L).scale(ctx.q_power(-2)))
    rep.add("NB=q2BN", N * B == (B * N).scale(ctx.q_power(2)))
    rep.add("NC=q-2CN", N * C == (C * N).scale(ctx.q_power(-2)))
    rep.add("L_inverse", L * Linv == ident)
    rep.add("N_inverse", N * Ninv == ident)
    rep.add("L^2h=1", L ** (2 * h) == ident)
    rep.add("N^2h=1", N ** (2 * h) == ident)
    rep.add("A^h=0", (A ** h).is_zero())
    rep.add("B^h=0", (B ** h).is_zero())
    rep.add("C^h=0", (C ** h).is_zero())
    rep.add("D^h=0", (D ** h).is_zero())

    # the (A, D, L) triple commutes with the (B, C, N) triple
    ok = True
    wit = None
    for na, ma in (("A", A), ("D", D), ("L", L)):
        for nb, mb in (("B", B), ("C", C), ("N", N)):
            if not commutator(ma, mb).is_zero():
                ok, wit = False, f"[{na},{nb}]"
    rep.add("triples_commute", ok, witness=wit)

    # vacuum representation of the off-diagonal algebra
    vac = qs.vacuum()
    rep.add("B_vac=0", not B.apply(vac))
    rep.add("C_vac=0", not C.apply(vac))
    rep.add("N_vac=-vac", vec_eq(N.apply(vac), vec_scale(vac, -ctx.one)))

    # Verma vectors |m> = A^m/[m]! |0>
    vs = [dict(vac)]
    for m in range(1, h):
        v = A.apply(vs[-1])
        vs.append(vec_scale(v, ctx.qint(m).inverse()))
    ok_a = ok_d = ok_l = ok_n = ok_ad = ok_w = True
    for m in range(h):
        av = A.apply(vs[m])
        target = vec_scale(vs[m + 1], ctx.qint(m + 1)) if m + 1 < h else {}
        if not vec_eq(av, target):
            ok_a = False
        dv = D.apply(vs[m])
        target = vec_scale(vs[m - 1], ctx.qint(m + 1)) if m else {}
        if not vec_eq(dv, target):
            ok_d = False
        lv = L.apply(vs[m])
        if not vec_eq(lv, vec_scale(vs[m], -ctx.q_power(2 * (m + 1)))):
            ok_l = False
        if not vec_eq(N.apply(vs[m]), vec_scale(vs[m], -ctx.one)):
            ok_n = False
        adv = commutator(A, D).apply(vs[m])
        if not vec_eq(adv, vec_scale(vs[m], -ctx.qint(2 * m + 2))):
            ok_ad = False
        # weight consistency: p and pbar eigenvalues coincide on |m>
        if not vec_eq(qs.qpw(1, 2).apply(vs[m]), qs.qpbar(1, 2).apply(vs[m])):
            ok_w = False
    rep.add("verma_A_action", ok_a)
    rep.add("verma_D_action", ok_d)
    rep.add("verma_L_action", ok_l)
    rep.add("verma_N_eigenvalue", ok_n)
    rep.add("verma_[A,D]=-[2m+2]", ok_ad)
    rep.add("verma_weight_consistency", ok_w)
    rep.add("A_top_state_zero", not A.apply(vs[h - 1]))

    # explicit isomorphism onto the closed-form module
    cctx, Acf, Dcf, Lcf = n2_closed_form(h, ctx=ctx)
    Vcols = {m: dict(vs[m]) for m in range(h) if vs[m]}
    V = SparseMat(qs.dim, h, Vcols)
    rep.add("basis_map_A", A * V == V * Acf)
    rep.add("basis_map_D", D * V == V * Dcf)
    rep.add("basis_map_L", L * V == V * Lcf)
    okc = all(
        vec_eq(
            commutator(Acf, Dcf).apply({m: ctx.one}),
            {m: -ctx.qint(2 * m + 2)},
        )
        for m in range(h)
    )
    rep.add("closed_form_[A,D]=-[2m+2]", okc)

    # hermitean form on the Verma basis: (m'|m) = [m+1] delta
    G = gram(h, ctx)
    rep.add("gram_adjoint_A_is_D", Acf.conj_transpose() * G == G * Dcf)
    Lcfinv = SparseMat.diagonal(
        [-ctx.q_power(Fraction(-2 * (m + 1))) for m in range(h)]
    )
    rep.add("gram_adjoint_L_is_Linv", Lcf.conj_transpose() * G == G * Lcfinv)
    rep.add("gram_isotropic_top", G.get(h - 1, h - 1, ctx.zero).is_zero())
    ok = True
    for m in range(h):
        exact = ctx.qint(m + 1).numeric().real
        ref = math.sin((m + 1) * math.pi / h) / math.sin(math.pi / h)
        if abs(exact - ref) > 1e-10:
            ok = False
    rep.add("gram_float_crosscheck", ok)
    rep.info("quotient_sector_count", detail={"value": h - 1})
    return rep


# -- conjecture scan ---------------------------------------------------------


def conjecture_scan(n, h, max_len, qs=None):
    qs = qs if qs is not None else get_system(n, h)
    ctx = qs.ctx
    rep = Report("conjecture", {"n": n, "h": h, "max_len": max_len})
    rep.completeness["module_complete"] = qs.left.complete
    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    ndiag = n
    nall = n * n

    def ext_offdiag_counts(depth_left, has_off):
        """Strict extensions of a prefix that qualify as off-diagonal."""
        total = 0
        if has_off:
            for e in range(1, depth_left + 1):
                total += nall ** e
        else:
            for e in range(1, depth_left + 1):
                total += nall ** e - ndiag ** e
        return total

    counts = {"total": 0, "annihilating": 0}
    counterexamples = []

    def walk(vec, depth, has_off, seq):
        for (i, j) in gens:
            off2 = has_off or i != j
            v2 = qs.q(i, j).apply(vec)
            d2 = depth + 1
            seq2 = seq + [[i, j]]
            if off2:
                counts["total"] += 1
                if not v2:
                    counts["annihilating"] += 1
                elif len(counterexamples) < 20:
                    counterexamples.append(
                        {"monomial": seq2, "support": len(v2)}
                    )
            if not v2:
                # every extension annihilates too; count without walking
                extra = ext_offdiag_counts(max_len - d2, off2)
                counts["total"] += extra
                counts["annihilating"] += extra
                continue
            if d2 < max_len:
                walk(v2, d2, off2, seq2)

    walk(qs.vacuum(), 0, False, [])

    rep.info(
        "scan_counts",
        detail={
            "total_offdiag_monomials": counts["total"],
            "annihilating": counts["annihilating"],
            "counterexamples": counterexamples,
        },
    )
    holds = counts["annihilating"] == counts["total"]
    if n == 2:
        # proved for n = 2: failure here is an error
        rep.add("n2_all_offdiag_annihilate", holds)
    else:
        rep.info("conjecture_holds_on_scan", detail={"value": holds})

    # length-1 off-diagonal operators must kill the vacuum for every n
    ok = all(not qs.q(i, j).apply(qs.vacuum()) for (i, j) in gens if i != j)
    rep.add("offdiag_kill_vacuum", ok)

    # obstruction vectors: diagonal-sector states on which both shifted
    # brackets vanish for some triple of distinct indices
    sector, _ = diag_sector(n, h, max_len, qs=qs, report=False)
    obstructions = []
    for k, v in enumerate(sector.basis):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for l in range(1, n + 1):
                    if len({i, j, l}) < 3:
                        continue
                    if not qs.pw(i, j, -1).apply(v) and not qs.pbar(i, l, -1).apply(v):
                        obstructions.append({"vector": k, "triple": [i, j, l]})
    rep.info("obstruction_vectors", detail={"list": obstructions})
    return rep


# -- diagonal sector ---------------------------------------------------------


class DiagSector:
    def __init__(self, basis, fprime_coords, fprime_basis):
        self.basis = basis  # ambient sparse vectors spanning F^diag
        self.fprime_coords = fprime_coords  # coefficient vectors over basis
        self.fprime_basis = fprime_basis  # ambient sparse vectors
        self.dim = len(basis)
        self.dim_fprime = len(fprime_basis)


def diag_sector(n, h, max_len, qs=None, report=True):
    qs = qs if qs is not None else get_system(n, h)
    ctx = qs.ctx
    diag_ops = [qs.q(i, i) for i in range(1, n + 1)]
    off_ops = [qs.q(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]

    red = VecReducer()
    basis = []
    vac = qs.vacuum()
    red.add(vac)
    basis.append(vac)
    frontier = [vac]
    for _ in range(max_len):
        nxt = []
        for v in frontier:
            for op in diag_ops:
                w = op.apply(v)
                if not w:
                    continue
                got = red.add(w)
                if got is not None:
                    basis.append(w)
                    nxt.append(w)
        frontier = nxt
        if not frontier:
            break

    # F' = vectors in span(basis) killed by every off-diagonal operator
    rows = []
    for op in off_ops:
        images = [op.apply(v) for v in basis]
        ambient = set()
        for im in images:
            ambient.update(im)
        for r in ambient:
            rows.append({k: im[r] for k, im in enumerate(images) if r in im})
    coords = kernel_basis(rows, len(basis), ctx)
    fprime = []
    for c in coords:
        v = {}
        for k, f in c.items():
            v = vec_add(v, vec_scale(basis[k], f))
        fprime.append(v)
    sector = DiagSector(basis, coords, fprime)
    if not report:
        return sector, None

    rep = Report("diag", {"n": n, "h": h, "max_len": max_len})
    rep.completeness["module_complete"] = qs.left.complete
    rep.info("dimensions", detail={
        "F_diag": sector.dim,
        "F_prime": sector.dim_fprime,
        "equal": sector.dim == sector.dim_fprime,
    })
    if n == 2 and max_len >= h - 1:
        rep.add("n2_Fdiag_dim_h", sector.dim == h,
                witness=f"dim={sector.dim}")
        rep.add("n2_Fprime_equals_Fdiag", sector.dim == sector.dim_fprime,
                witness=f"{sector.dim_fprime}!={sector.dim}")

    # off-diagonal operators kill F' (definition; sanity of the kernel)
    ok = all(not op.apply(v) for op in off_ops for v in fprime)
    rep.add("offdiag_kill_Fprime", ok)

    # the weak diagonal exchange identity on F'
    ok = True
    wit = None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            mat = (
                qs.pw(i, j, 1) * qs.q(i, i) * qs.q(j, j)
                - qs.pw(i, j, -1) * qs.q(j, j) * qs.q(i, i)
            )
            for k, v in enumerate(fprime):
                if mat.apply(v):
                    ok, wit = False, f"({i},{j}) vector {k}"
    rep.add("weak_diagonal_exchange_on_Fprime", ok, witness=wit)

    # weight consistency on the diagonal sector
    ok = True
    for v in basis:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if not vec_eq(qs.qpw(i, j).apply(v), qs.qpbar(i, j).apply(v)):
                    ok = False
    rep.add("weight_consistency_on_Fdiag", ok)
    return sector, rep


# -- plactic comparison ------------------------------------------------------


def plactic_compare(n, h, max_len=None, qs=None):
    qs = qs if qs is not None else get_system(n, h)
    if max_len is None:
        max_len = n * (h - 1)
    rep = Report("plactic", {"n": n, "h": h, "max_len": max_len})
    rep.completeness["module_complete"] = qs.left.complete
    sector, _ = diag_sector(n, h, max_len, qs=qs, report=False)

    def holds_on(mat, vectors):
        return all(not mat.apply(v) for v in vectors)

    Qd = {i: qs.q(i, i) for i in range(1, n + 1)}
    rep.add("sanity_[Q1,Q1]=0", commutator(Qd[1], Qd[1]).is_zero())

    far_pairs = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i < j and (i - j) % n not in (1, n - 1)
    ]
    if not far_pairs:
        rep.info("far_commutation", detail={"note": "vacuous for this n"})
    for (i, j) in far_pairs:
        d = commutator(Qd[i], Qd[j])
        rep.info(
            f"far_commutation[{i},{j}]",
            detail={
                "on_F_diag": holds_on(d, sector.basis),
                "on_F_prime": holds_on(d, sector.fprime_basis),
            },
        )
    for i in range(1, n + 1):
        j = (i - 2) % n + 1  # the index with i = j + 1 mod n
        if i == j:
            continue
        r1 = Qd[i] * Qd[j] * Qd[j] - Qd[j] * Qd[i] * Qd[j]
        r2 = Qd[i] * Qd[i] * Qd[j] - Qd[i] * Qd[j] * Qd[i]
        rep.info(
            f"hop_relations[i={i},j={j}]",
            detail={
                "QiQj2=QjQiQj": {
                    "on_F_diag": holds_on(r1, sector.basis),
                    "on_F_prime": holds_on(r1, sector.fprime_basis),
                },
                "Qi2Qj=QiQjQi": {
                    "on_F_diag": holds_on(r2, sector.basis),
                    "on_F_prime": holds_on(r2, sector.fprime_basis),
                },
            },
        )
    return rep
