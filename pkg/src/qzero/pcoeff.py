"""Coefficient ring of the weight operators: Laurent polynomials in the
commuting symbols x_j = q^{p_j} over the cyclotomic field, modulo the
constraint x_1 * ... * x_n = 1, together with the shift action that models
moving a zero mode through a weight factor.

A SymbolRing can carry several independent groups of symbols (e.g. one group
for p and one for pbar) so that two-sided identities like
[p+1] (x) [pbar] - [p] (x) [pbar+1] = -[p - pbar] are decidable here.
Groups may be 'constrained' (the product of their symbols is 1; the last
symbol is eliminated) or free single symbols.
"""

from __future__ import annotations

from fractions import Fraction

from .field import CycNum, FieldContext


class SymbolRing:
    """Laurent-polynomial ring over Q(zeta) in grouped symbols."""

    def __init__(self, ctx: FieldContext, groups=None):
        self.ctx = ctx
        if groups is None:
            groups = [(ctx.n, True)]
        self.groups = list(groups)  # list of (size, constrained)
        self.offsets = []
        off = 0
        for size, _ in self.groups:
            self.offsets.append(off)
            off += size
        self.nvars = off
        self.zero = LaurentP(self, {})
        self.one = LaurentP(self, {(0,) * self.nvars: ctx.one})

    def canon(self, expo):
        """Canonicalize an exponent tuple: in each constrained group subtract
        the last symbol's exponent from the whole group (x_n eliminated)."""
        expo = list(expo)
        for (size, constrained), off in zip(self.groups, self.offsets):
            if constrained and size > 1:
                last = expo[off + size - 1]
                if last:
                    for j in range(size):
                        expo[off + j] -= last
        return tuple(expo)

    def monomial(self, expo, coeff=None):
        coeff = self.ctx.one if coeff is None else coeff
        if coeff.is_zero():
            return self.zero
        return LaurentP(self, {self.canon(expo): coeff})

    def scalar(self, c):
        if isinstance(c, (int, Fraction)):
            c = self.ctx.from_fraction(Fraction(c))
        return LaurentP(self, {(0,) * self.nvars: c} if not c.is_zero() else {})

    def x(self, i, group=0, power=1):
        """The symbol x_i = q^{p_i} of a group (i is 1-based)."""
        size, _ = self.groups[group]
        if not 1 <= i <= size:
            raise ValueError("symbol index out of range")
        expo = [0] * self.nvars
        expo[self.offsets[group] + i - 1] = power
        return self.monomial(tuple(expo))

    def qp(self, i, j, group=0, power=1):
        """q^{p_ij} = x_i / x_j (to the given power)."""
        expo = [0] * self.nvars
        expo[self.offsets[group] + i - 1] += power
        expo[self.offsets[group] + j - 1] -= power
        return self.monomial(tuple(expo))

    def bracket(self, i, j, group=0, shift=0):
        """[p_ij + shift] as a Laurent polynomial."""
        ctx = self.ctx
        qden = ctx.q - ctx.qbar
        a = self.qp(i, j, group) * self.scalar(ctx.q_power(shift) / qden)
        b = self.qp(i, j, group, power=-1) * self.scalar(ctx.q_power(-shift) / qden)
        return a - b

    def bracket1(self, group=0, shift=0):
        """[p + shift] for a free single-symbol group (symbol u = q^p)."""
        ctx = self.ctx
        qden = ctx.q - ctx.qbar
        a = self.x(1, group) * self.scalar(ctx.q_power(shift) / qden)
        b = self.x(1, group, power=-1) * self.scalar(ctx.q_power(-shift) / qden)
        return a - b


class LaurentP:
    """Laurent polynomial: dict {exponent tuple: CycNum}, zeros dropped."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, LaurentP):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        if isinstance(other, CycNum):
            return LaurentP(self.ring, {(0,) * self.ring.nvars: other} if not other.is_zero() else {})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return LaurentP(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentP(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ring = self.ring
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = ring.canon(tuple(a + b for a, b in zip(e1, e2)))
                c = c1 * c2
                if e in out:
                    c = out[e] + c
                if c.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = c
        return LaurentP(ring, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def shift(self, i, group=0, inverse=False):
        """Apply x_j -> q^{delta_ij - 1/size} x_j on one constrained group.

        This is the substitution picked up when a weight function crosses a
        zero mode with dynamical index i from left to right.
        """
        ring = self.ring
        size, constrained = ring.groups[group]
        if not constrained:
            raise ValueError("shift acts on constrained symbol groups")
        off = ring.offsets[group]
        out = {}
        for e, c in self.terms.items():
            # exponent of the eliminated symbol is 0 in canonical form, so the
            # sum below ranges over the stored representative
            expo = Fraction(0)
            for j in range(size):
                k = e[off + j]
                if k:
                    expo += (Fraction(int(j + 1 == i)) - Fraction(1, size)) * k
            if inverse:
                expo = -expo
            c2 = c * ring.ctx.q_power(expo)
            if not c2.is_zero():
                out[e] = c2
        return LaurentP(ring, out)

    def subs(self, values):
        """Evaluate at x_j = q^{values[group][j]} (Fractions); returns CycNum."""
        ring = self.ring
        acc = ring.ctx.zero
        for e, c in self.terms.items():
            expo = Fraction(0)
            for (size, _), off, vals in zip(ring.groups, ring.offsets, values):
                for j in range(size):
                    k = e[off + j]
                    if k:
                        expo += Fraction(vals[j]) * k
            acc = acc + c * ring.ctx.q_power(expo)
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        names = []
        for gi, (size, _) in enumerate(self.ring.groups):
            for j in range(size):
                base = "x" if gi == 0 else f"x{'bar' * gi}"
                names.append(f"{base}{j + 1}")
        parts = []
        for e, c in sorted(self.terms.items()):
            mon = "*".join(
                f"{names[k]}^{p}" if p != 1 else names[k] for k, p in enumerate(e) if p
            )
            cs = str(c)
            if "+" in cs or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(f"{cs}*{mon}" if mon else cs)
        return " + ".join(parts)

    __repr__ = __str__


class PCoeff:
    """Rational function num/den over a SymbolRing (den nonzero)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.ring.one
        if den.is_zero():
            raise ZeroDivisionError("PCoeff with zero denominator")
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, PCoeff):
            return other
        lp = self.num._coerce(other)
        if lp is None:
            return None
        return PCoeff(lp)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den is o.den or self.den == o.den:
            return PCoeff(self.num + o.num, self.den)
        return PCoeff(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return PCoeff(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PCoeff(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero PCoeff")
        return PCoeff(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("PCoeff is not hashable (equality is semantic)")

    def shift(self, i, group=0, inverse=False):
        return PCoeff(self.num.shift(i, group, inverse), self.den.shift(i, group, inverse))

    def subs(self, values):
        d = self.den.subs(values)
        if d.is_zero():
            raise ZeroDivisionError("pole in PCoeff evaluation")
        return self.num.subs(values) / d

    def __str__(self):
        if self.den == self.ring.one:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def pcoeff_shift(f: PCoeff, i: int, group: int = 0) -> PCoeff:
    """Shift action x_j -> q^{delta_ij - 1/n} x_j (spec operation name)."""
    return f.shift(i, group)


def verify_q_identities(ctx: FieldContext):
    """Check the two-variable q-number identities used throughout the proofs.

    Returns a list of (name, ok, witness) triples; witness is the nonzero
    difference when a check fails.
    """
    from .report import Check

    ring = SymbolRing(ctx, groups=[(1, False), (1, False)])
    qden = ctx.q - ctx.qbar

    def br(shift, group):
        return ring.bracket1(group=group, shift=shift)

    u = ring.x(1, group=0)
    uinv = ring.x(1, group=0, power=-1)
    v = ring.x(1, group=1)
    vinv = ring.x(1, group=1, power=-1)
    p_minus_pbar = (u * vinv - uinv * v) * ring.scalar(ctx.one / qden)
    p_plus_pbar = (u * v - uinv * vinv) * ring.scalar(ctx.one / qden)

    checks = []

    def add(name, diff):
        ok = diff.is_zero()
        checks.append(Check(name, "pass" if ok else "fail", None if ok else str(diff)))

    # [p+-1] (x) [pbar] - [p] (x) [pbar+-1] = -+ [p - pbar]
    add("ids_minus_plus", br(1, 0) * br(0, 1) - br(0, 0) * br(1, 1) + p_minus_pbar)
    add("ids_minus_minus", br(-1, 0) * br(0, 1) - br(0, 0) * br(-1, 1) - p_minus_pbar)
    # [p+-1] (x) [pbar] - [p] (x) [pbar-+1] = +- [p + pbar]
    add("ids_plus_plus", br(1, 0) * br(0, 1) - br(0, 0) * br(-1, 1) - p_plus_pbar)
    add("ids_plus_minus", br(-1, 0) * br(0, 1) - br(0, 0) * br(1, 1) + p_plus_pbar)
    # [p] (x) q^{eps pbar} - q^{eps p} (x) [pbar] = [p - pbar], eps = +-1
    for eps, vpow, upow in ((1, v, u), (-1, vinv, uinv)):
        add(
            f"ids_eps_{eps:+d}",
            br(0, 0) * vpow - upow * br(0, 1) - p_minus_pbar,
        )

    # single-variable identities, on the p group alone
    for m in range(0, 5):
        # [p+m] = [p][m+1] - [p-1][m]
        diff = br(m, 0) - (br(0, 0) * ring.scalar(ctx.qint(m + 1)) - br(-1, 0) * ring.scalar(ctx.qint(m)))
        add(f"qnum_recursion_m{m}", diff)
    for eps in (1, -1):
        # q^eps [p] - q^{eps p} = [p-1]
        upow = u if eps == 1 else uinv
        add(
            f"lemma1_identity_eps{eps:+d}",
            br(0, 0) * ring.scalar(ctx.q_power(eps)) - upow - br(-1, 0),
        )
        # [p-1] - q^{+-1}[p] = -q^{+-p}
        add(
            f"denominator_identity_eps{eps:+d}",
            br(-1, 0) - br(0, 0) * ring.scalar(ctx.q_power(eps)) + upow,
        )
    return checks
