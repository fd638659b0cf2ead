"""The chiral zero-mode algebras as symbolic rewrite systems.

Left algebra: generators a^i_alpha (i = dynamical index, alpha = quantum-group
index) and the invertible weights q^{p_j}.  Right algebra: abar^alpha_i and
q^{pbar_j}; its relations have the same shape with the index roles transposed,
so both chiralities share one engine.

Elements are stored as {word: PCoeff} with the weight coefficient standing on
the far left of each word; a letter is the pair (upper, lower).  Normal form
sorts upper indices nondecreasing, and lower indices nondecreasing inside a
run of equal uppers.  Out-of-order pairs are eliminated with the quadratic
exchange relations; the coefficients [p_ij]/[p_ij - 1] are formal rational
functions, so rewriting is total here (poles are a representation-level
concern, not an algebra-level one).
"""

from __future__ import annotations

import random
from itertools import permutations

from .field import FieldContext
from .pcoeff import PCoeff, SymbolRing
from .report import Report
from .tensors import eps_component, eps_sign, rhat, rhat_dyn


class Algebra:
    """One chirality of the zero-mode algebra, with memoized normal ordering."""

    def __init__(self, ctx: FieldContext, chirality="left"):
        if chirality not in ("left", "right"):
            raise ValueError("chirality must be 'left' or 'right'")
        self.ctx = ctx
        self.chirality = chirality
        self.ring = SymbolRing(ctx)
        self._top_cache = {}
        self.one_coeff = PCoeff(self.ring.one)
        self.zero_coeff = PCoeff(self.ring.zero)

    # -- elements ----------------------------------------------------------

    def element(self, terms=None):
        return AlgElement(self, dict(terms or {}))

    def zero(self):
        return self.element()

    def unit(self):
        return self.element({(): self.one_coeff})

    def gen(self, upper, lower):
        n = self.ctx.n
        if not (1 <= upper <= n and 1 <= lower <= n):
            raise ValueError("generator index out of range")
        return self.element({((upper, lower),): self.one_coeff})

    def qp_symbol(self, j, power=1):
        """The weight generator q^{p_j} (or its inverse) as an element."""
        return self.element({(): PCoeff(self.ring.x(j, power=power))})

    def coeff_through_word(self, f: PCoeff, word):
        """Move a coefficient leftward through a word (w * f = f' * w)."""
        for upper, _ in word:
            f = f.shift(upper, inverse=True)
        return f

    # -- normal ordering ---------------------------------------------------

    def act_letter(self, g, terms):
        """Left-multiply {word: coeff} terms by the generator g."""
        out = {}
        for word, coeff in terms.items():
            shifted = coeff.shift(g[0], inverse=True)
            for w2, c2 in self.top_reduce(g, word).items():
                c = shifted * c2
                if w2 in out:
                    c = out[w2] + c
                if c.is_zero():
                    out.pop(w2, None)
                else:
                    out[w2] = c
        return out

    def top_reduce(self, g, word):
        """Normal-order g * word for an already-normal word."""
        key = (g, word)
        cached = self._top_cache.get(key)
        if cached is not None:
            return cached
        j, beta = g
        if not word:
            res = {(g,): self.one_coeff}
        else:
            i, alpha = word[0]
            rest = word[1:]
            if j < i or (j == i and beta <= alpha):
                res = {(g,) + word: self.one_coeff}
            elif j == i:  # beta > alpha: q-commute within an upper run
                inner = self.act_letter((j, beta), {rest: self.one_coeff})
                res = self._scale(
                    self.act_letter((i, alpha), inner), PCoeff(self.ring.scalar(self.ctx.q))
                )
            elif alpha == beta:  # [a^j_alpha, a^i_alpha] = 0
                inner = self.act_letter((j, beta), {rest: self.one_coeff})
                res = self.act_letter((i, alpha), inner)
            else:
                # a^j_b a^i_a = ( a^i_a a^j_b [p_ij] - a^i_b a^j_a q^{eps_ab p_ij} ) / [p_ij - 1]
                ring = self.ring
                br = PCoeff(ring.bracket(i, j))
                br1 = PCoeff(ring.bracket(i, j, shift=-1))
                eps = eps_sign(alpha, beta)
                qp_eps = PCoeff(ring.qp(i, j, power=eps))
                rest_t = {rest: self.one_coeff}
                t1 = self.act_letter(
                    (i, alpha), self.act_letter((j, beta), self._scale(rest_t, br / br1))
                )
                t2 = self.act_letter(
                    (i, beta), self.act_letter((j, alpha), self._scale(rest_t, qp_eps / br1))
                )
                res = self._sub(t1, t2)
        self._top_cache[key] = res
        return res

    @staticmethod
    def _scale(terms, f):
        return {w: c * f for w, c in terms.items()}

    @staticmethod
    def _sub(t1, t2):
        out = dict(t1)
        for w, c in t2.items():
            c = out[w] - c if w in out else -c
            if c.is_zero():
                out.pop(w, None)
            else:
                out[w] = c
        return out

    def normal_terms(self, terms):
        out = {}
        one = PCoeff(self.ring.one)
        for word, coeff in terms.items():
            # reduce the bare word first; the stored coefficient sits on the
            # far left of the whole term, so it must not be shifted
            red = {(): one}
            for g in reversed(word):
                red = self.act_letter(g, red)
            for w, c in red.items():
                c = coeff * c
                c = out[w] + c if w in out else c
                if c.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = c
        return out

    # -- distinguished elements -------------------------------------------

    def det(self):
        """The quantum determinant (1/[n]!) eps_{i..} a..a eps^{a..}."""
        ctx = self.ctx
        n = ctx.n
        norm = PCoeff(self.ring.scalar(ctx.one / ctx.qfact(n)))
        terms = {}
        for iperm in permutations(range(1, n + 1)):
            ci = eps_component(ctx, iperm, "classical")
            if ci.is_zero():
                continue
            for aperm in permutations(range(1, n + 1)):
                ca = eps_component(ctx, aperm, "upper")
                word = tuple(zip(iperm, aperm))
                c = PCoeff(self.ring.scalar(ci * ca)) * norm
                if word in terms:
                    terms[word] = terms[word] + c
                else:
                    terms[word] = c
        return self.element(terms)

    def dq_p(self):
        """The weight function D_q(p) = prod_{i<j} [p_ij]."""
        acc = self.ring.one
        for i in range(1, self.ctx.n + 1):
            for j in range(i + 1, self.ctx.n + 1):
                acc = acc * self.ring.bracket(i, j)
        return PCoeff(acc)


class AlgElement:
    """Finite sum of (coefficient, word) terms of a single chirality."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            c = out[w] + c if w in out else c
            if c.is_zero():
                out.pop(w, None)
            else:
                out[w] = c
        return AlgElement(self.algebra, out)

    def __neg__(self):
        return AlgElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            self._check(other)
            alg = self.algebra
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    c = c1 * alg.coeff_through_word(c2, w1)
                    w = w1 + w2
                    c = out[w] + c if w in out else c
                    if c.is_zero():
                        out.pop(w, None)
                    else:
                        out[w] = c
            return AlgElement(alg, out)
        # plain scalars commute with everything, so side is irrelevant
        return self.scaled(other)

    __rmul__ = __mul__

    def _to_pcoeff(self, f):
        if isinstance(f, PCoeff):
            return f
        lp = self.algebra.ring.one._coerce(f)
        if lp is None:
            raise TypeError(f"cannot use {f!r} as a coefficient")
        return PCoeff(lp)

    def scaled(self, f):
        """Multiply by a coefficient placed on the LEFT of every term."""
        f = self._to_pcoeff(f)
        if f.is_zero():
            return self.algebra.zero()
        return AlgElement(self.algebra, {w: f * c for w, c in self.terms.items()})

    def rscaled(self, f):
        """Multiply by a coefficient placed on the RIGHT of every term."""
        f = self._to_pcoeff(f)
        alg = self.algebra
        out = {}
        for w, c in self.terms.items():
            c2 = c * alg.coeff_through_word(f, w)
            if not c2.is_zero():
                out[w] = c2
        return AlgElement(alg, out)

    def __pow__(self, m):
        acc = self.algebra.unit()
        for _ in range(m):
            acc = acc * self
        return acc

    def normal_form(self):
        return AlgElement(self.algebra, self.algebra.normal_terms(self.terms))

    def is_zero(self):
        return not self.normal_form().terms

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("AlgElement is not hashable")

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise ValueError("cannot mix elements of different algebras/chiralities")

    def __str__(self):
        if not self.terms:
            return "0"
        gname = "a" if self.algebra.chirality == "left" else "abar"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            if self.algebra.chirality == "left":
                mon = "*".join(f"{gname}[{u},{l}]" for u, l in w)
            else:
                mon = "*".join(f"{gname}[{l},{u}]" for u, l in w)
            cs = str(c)
            if mon:
                parts.append(f"({cs})*{mon}" if cs != "1" else mon)
            else:
                parts.append(f"({cs})" if ("+" in cs or " " in cs) else cs)
        return " + ".join(parts)

    __repr__ = __str__


# -- single-step rewriting (for the confluence suite) ------------------------


def rewrite_positions(word):
    """Positions where an adjacent pair is out of normal order."""
    pos = []
    for k in range(len(word) - 1):
        (j, beta), (i, alpha) = word[k], word[k + 1]
        if j > i or (j == i and beta > alpha):
            pos.append(k)
    return pos


def order_measure(word):
    """(upper inversions, lower inversions within equal uppers); each rewrite
    step must strictly decrease this lexicographic measure."""
    up = lo = 0
    for k in range(len(word)):
        for l in range(k + 1, len(word)):
            if word[k][0] > word[l][0]:
                up += 1
            elif word[k][0] == word[l][0] and word[k][1] > word[l][1]:
                lo += 1
    return (up, lo)


def rewrite_at(algebra: Algebra, coeff, word, k):
    """Apply one admissible rewrite at junction k of a single term.

    Returns a list of (coeff, word) terms; asserts that the termination
    measure strictly decreases for every produced term.
    """
    (j, beta), (i, alpha) = word[k], word[k + 1]
    w1, w2 = word[:k], word[k + 2 :]
    ring = algebra.ring
    before = order_measure(word)

    def through_prefix(f):
        for upper, _ in w1:
            f = f.shift(upper, inverse=True)
        return f

    out = []
    if j == i:
        if beta <= alpha:
            raise ValueError("junction is already in order")
        q = PCoeff(ring.scalar(algebra.ctx.q))
        out.append((coeff * through_prefix(q), w1 + ((i, alpha), (j, beta)) + w2))
    elif j > i:
        if alpha == beta:
            out.append((coeff, w1 + ((i, alpha), (j, beta)) + w2))
        else:
            br = PCoeff(ring.bracket(i, j))
            br1 = PCoeff(ring.bracket(i, j, shift=-1))
            qp_eps = PCoeff(ring.qp(i, j, power=eps_sign(alpha, beta)))
            out.append((coeff * through_prefix(br / br1), w1 + ((i, alpha), (j, beta)) + w2))
            out.append((coeff * (-through_prefix(qp_eps / br1)), w1 + ((i, beta), (j, alpha)) + w2))
    else:
        raise ValueError("junction is already in order")
    for _, w in out:
        assert order_measure(w) < before, "termination measure failed to decrease"
    return out


def reduce_random_order(algebra: Algebra, element: AlgElement, rng: random.Random):
    """Fully reduce an element choosing admissible junctions at random."""
    pending = list(element.terms.items())
    done = {}
    while pending:
        word, coeff = pending.pop()
        pos = rewrite_positions(word)
        if not pos:
            c = done[word] + coeff if word in done else coeff
            if c.is_zero():
                done.pop(word, None)
            else:
                done[word] = c
            continue
        k = rng.choice(pos)
        for c2, w2 in rewrite_at(algebra, coeff, word, k):
            pending.append((w2, c2))
    return AlgElement(algebra, done)


# -- verification suites -----------------------------------------------------


def check_genex(ctx: FieldContext, max_m=4, chirality="left") -> Report:
    """The power-generalized exchange relation, normal-ordered on both sides."""
    rep = Report("genex", {"n": ctx.n, "h": ctx.h, "max_m": max_m, "chirality": chirality})
    alg = Algebra(ctx, chirality)
    ring = alg.ring
    n = ctx.n
    cases = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for alpha in range(1, n + 1):
                for beta in range(1, n + 1):
                    if alpha != beta:
                        cases.append((i, j, alpha, beta))
    for m in range(1, max_m + 1):
        ok_all = True
        witness = None
        for (i, j, alpha, beta) in cases:
            a_jb = alg.gen(j, beta)
            a_ia = alg.gen(i, alpha)
            lhs = ((a_jb ** m) * a_ia).scaled(PCoeff(ring.bracket(i, j, shift=-1)))
            rhs = (a_ia * (a_jb ** m)).rscaled(PCoeff(ring.bracket(i, j)))
            corr = (a_jb ** (m - 1)) * alg.gen(i, beta) * alg.gen(j, alpha)
            corr = corr.rscaled(PCoeff(ring.qp(i, j, power=eps_sign(alpha, beta))))
            corr = corr.scaled(PCoeff(ring.scalar(ctx.qint(m))))
            diff = lhs - rhs + corr
            if not diff.is_zero():
                ok_all = False
                witness = f"(i,j,alpha,beta)=({i},{j},{alpha},{beta}): {diff.normal_form()}"
                break
        rep.add(f"genex_m{m}", ok_all, witness)
    return rep


def check_confluence_samples(ctx: FieldContext, count=100, seed=0, lengths=(3, 4), chirality="left") -> Report:
    """Reduce random words along random rewrite orders; all orders must agree."""
    rep = Report(
        "confluence",
        {"n": ctx.n, "h": ctx.h, "count": count, "seed": seed, "lengths": list(lengths)},
    )
    alg = Algebra(ctx, chirality)
    rng = random.Random(seed)
    gens = [(i, a) for i in range(1, ctx.n + 1) for a in range(1, ctx.n + 1)]
    bad = None
    for trial in range(count):
        length = rng.choice(lengths)
        word = tuple(rng.choice(gens) for _ in range(length))
        elem = alg.element({word: alg.one_coeff})
        canonical = elem.normal_form()
        alt = reduce_random_order(alg, elem, rng)
        if not (canonical - alt).is_zero():
            bad = f"word {word}"
            break
    rep.add("confluence_samples", bad is None, bad)
    return rep


def check_rmatrix_exchange(ctx: FieldContext) -> Report:
    """Equivalence of the rewrite rules with the R-matrix exchange relations.

    Left sector:  Rhat(p)_{12} a_1 a_2 = a_1 a_2 Rhat_{12} (entrywise).
    Right sector: Rhat_{12} abar_1 abar_2 = abar_1 abar_2 Rhatbar(pbar)_{12}
    with Rhatbar the alpha-ratio dynamical matrix, which must also equal the
    transpose of the alpha=1 one.
    """
    rep = Report("rmatrix_exchange", {"n": ctx.n, "h": ctx.h})
    n = ctx.n
    Rc = rhat(ctx)

    left = Algebra(ctx, "left")
    Rd = rhat_dyn(ctx, "unit", ring=left.ring)
    ok = True
    witness = None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for al in range(1, n + 1):
                for be in range(1, n + 1):
                    lhs = left.zero()
                    for ip in range(1, n + 1):
                        for jp in range(1, n + 1):
                            c = Rd[(i, j), (ip, jp)]
                            if not c.is_zero():
                                lhs = lhs + (left.gen(ip, al) * left.gen(jp, be)).scaled(c)
                    rhs = left.zero()
                    for ap in range(1, n + 1):
                        for bp in range(1, n + 1):
                            c = Rc[(ap, bp), (al, be)]
                            if not c.is_zero():
                                rhs = rhs + (left.gen(i, ap) * left.gen(j, bp)).scaled(
                                    PCoeff(left.ring.scalar(c))
                                )
                    if not (lhs - rhs).is_zero():
                        ok = False
                        witness = f"(i,j,alpha,beta)=({i},{j},{al},{be})"
                        break
    rep.add("exchange_left_dynamical", ok, witness)

    # transpose identity: t(Rhat^(1)(p)) == Rhat^(alpha)(p) with the ratio alpha
    ring = SymbolRing(ctx)
    R1 = rhat_dyn(ctx, "unit", ring=ring)
    Ra = rhat_dyn(ctx, "ratio", ring=ring)
    d = n * n
    ok = all(R1.entries[r][c] == Ra.entries[c][r] for r in range(d) for c in range(d))
    rep.add("alpha_ratio_is_transpose", ok)

    right = Algebra(ctx, "right")
    Rbar = rhat_dyn(ctx, "ratio", ring=right.ring)
    ok = True
    witness = None
    for al in range(1, n + 1):
        for be in range(1, n + 1):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    lhs = right.zero()
                    for ap in range(1, n + 1):
                        for bp in range(1, n + 1):
                            c = Rc[(al, be), (ap, bp)]
                            if not c.is_zero():
                                lhs = lhs + (right.gen(i, ap) * right.gen(j, bp)).scaled(
                                    PCoeff(right.ring.scalar(c))
                                )
                    rhs = right.zero()
                    for ip in range(1, n + 1):
                        for jp in range(1, n + 1):
                            c = Rbar[(ip, jp), (i, j)]
                            if not c.is_zero():
                                rhs = rhs + (right.gen(ip, al) * right.gen(jp, be)).rscaled(c)
                    if not (lhs - rhs).is_zero():
                        ok = False
                        witness = f"(alpha,beta,i,j)=({al},{be},{i},{j})"
                        break
    rep.add("exchange_right_dynamical", ok, witness)
    return rep
