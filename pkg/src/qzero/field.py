"""Exact arithmetic in the cyclotomic field containing q = exp(-i*pi/h).

Everything downstream (tensors, rewriting, module matrices) runs over a single
field Q(zeta) where zeta is a primitive N-th root of unity.  N is chosen so
that all fractional powers of q that ever appear (q^{1/n} from the weight
shifts, q^{1/2} from the epsilon-tensor prefactor) are genuine field elements:
N = 2*h*lcm(2, n).  For even n this is the familiar 2nh.

Elements are stored as integer coordinate vectors over the power basis
1, z, ..., z^(d-1) (d = deg of the N-th cyclotomic polynomial) with a single
positive integer denominator, so equality and zero-testing are exact.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache


def _poly_divmod_int(num, den):
    """Exact division of integer polynomials (den monic). Returns quotient."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    assert all(c == 0 for c in num[: len(den) - 1])
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Coefficient list (low to high) of the m-th cyclotomic polynomial."""
    # x^m - 1 divided by the product of all proper cyclotomic divisors
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divmod_int(poly, cyclotomic_poly(d))
    return tuple(poly)


class FieldContext:
    """Fixed parameters (n, h) plus the cyclotomic machinery for Q(zeta_N)."""

    def __init__(self, n, h, conjugate=False):
        if n < 1:
            raise ValueError("n must be >= 1")
        if h < n + 1:
            raise ValueError("h must exceed n")
        self.n = n
        self.h = h
        # default sign convention q = e^{-i pi/h}; conjugate flips to e^{+i pi/h}
        self.conjugate = conjugate
        self.root_denom = 2 * ((2 * n) // math.gcd(2, n))  # exponent LCD, as 2*lcm(2,n)... see below
        # q-exponents live in (1/lcm(2,n)) Z; zeta has order N = 2*h*lcm(2,n)
        self.lcm2n = (2 * n) // math.gcd(2, n)
        self.N = 2 * h * self.lcm2n
        phi = cyclotomic_poly(self.N)
        self.degree = len(phi) - 1
        self._phi = phi
        self._pow_table = self._build_pow_table()
        self.zero = CycNum(self, (0,) * self.degree, 1)
        self.one = self.from_int(1)
        self.q = self.q_power(1)
        self.qbar = self.q_power(-1)

    def _build_pow_table(self):
        # z^k mod Phi_N for k = 0 .. 2N-1, integer rows
        d = self.degree
        phi = self._phi
        rows = []
        for k in range(2 * self.N):
            if k < d:
                row = [0] * d
                row[k] = 1
            else:
                # z * previous row, reduce z^d via Phi (monic)
                prev = rows[k - 1]
                row = [0] + list(prev[: d - 1])
                lead = prev[d - 1]
                if lead:
                    for j in range(d):
                        row[j] -= lead * phi[j]
            rows.append(tuple(row))
        return rows

    # -- constructors ------------------------------------------------------

    def from_int(self, a):
        row = [0] * self.degree
        row[0] = a
        return CycNum(self, tuple(row), 1)

    def from_fraction(self, fr):
        fr = Fraction(fr)
        row = [0] * self.degree
        row[0] = fr.numerator
        return CycNum(self, tuple(row), fr.denominator)

    def zeta_power(self, k):
        k %= self.N
        return CycNum(self, self._pow_table[k], 1)

    def q_power(self, e):
        """q^e for e in (1/lcm(2,n)) Z, as an exact field element."""
        e = Fraction(e)
        ze = e * Fraction(self.N, 2 * self.h)  # exponent of zeta
        if ze.denominator != 1:
            raise ValueError(f"q^{e} is not in the field (n={self.n}, h={self.h})")
        k = ze.numerator
        if self.conjugate:
            k = -k
        return self.zeta_power(k)

    # -- q-combinatorics ---------------------------------------------------

    def qint(self, m):
        """[m] = (q^m - q^-m)/(q - q^-1), exactly."""
        # geometric form avoids any division: [m] = sum q^{m-1-2s}
        if m == 0:
            return self.zero
        if m < 0:
            return -self.qint(-m)
        acc = self.zero
        for s in range(m):
            acc = acc + self.q_power(m - 1 - 2 * s)
        return acc

    def qfact(self, m):
        """[m]! = [m][m-1]...[1]."""
        if m < 0:
            raise ValueError("qfact of negative integer")
        acc = self.one
        for s in range(1, m + 1):
            acc = acc * self.qint(s)
        return acc

    def qplus(self, r):
        """(r)_+ = (q^{2r} - 1)/(q^2 - 1) = sum_{s<r} q^{2s}."""
        if r < 0:
            raise ValueError("(r)_+ needs r >= 0")
        acc = self.zero
        for s in range(r):
            acc = acc + self.q_power(2 * s)
        return acc

    def qplus_fact(self, r):
        acc = self.one
        for s in range(1, r + 1):
            acc = acc * self.qplus(s)
        return acc

    def qplus_binom(self, m, r):
        """(m r)_+ via the Pascal-type recursion, valid at roots of unity."""
        if r < 0 or r > m:
            raise ValueError(f"binomial ({m} {r})_+ out of range")
        return self._qplus_binom_cached(m, r)

    @lru_cache(maxsize=None)
    def _qplus_binom_cached(self, m, r):
        if r == 0 or r == m:
            return self.one
        # (m r)_+ = (m-1 r-1)_+ + q^{2r} (m-1 r)_+
        return self._qplus_binom_cached(m - 1, r - 1) + self.q_power(2 * r) * self._qplus_binom_cached(m - 1, r)

    # -- numerics ----------------------------------------------------------

    def zeta_numeric(self):
        sign = 1 if self.conjugate else -1
        return cmath.exp(sign * 2j * cmath.pi / self.N)

    def __repr__(self):
        return f"FieldContext(n={self.n}, h={self.h}, N={self.N})"


class CycNum:
    """Element of Q(zeta_N): integer coordinates over a common denominator."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num, den, normalize=False):
        self.ctx = ctx
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    # construction helpers keep 'den' positive and gcd-reduced
    @staticmethod
    def _make(ctx, num, den):
        num, den = _normalize(num, den)
        return CycNum(ctx, num, den)

    def is_zero(self):
        return not any(self.num)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self, other
        num = tuple(x * b.den + y * a.den for x, y in zip(a.num, b.num))
        return CycNum._make(self.ctx, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.ctx, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.num, other.num
        d = self.ctx.degree
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        table = self.ctx._pow_table
        out = [0] * d
        for k, c in enumerate(conv):
            if c:
                if k < d:
                    out[k] += c
                else:
                    row = table[k]
                    for j in range(d):
                        out[j] += c * row[j]
        return CycNum._make(self.ctx, tuple(out), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # extended Euclid in Q[x] against Phi_N
        phi = [Fraction(c) for c in self.ctx._phi]
        a = [Fraction(x, self.den) for x in self.num]
        inv = _poly_modinv(a, phi)
        den = 1
        for c in inv:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = tuple(int(c * den) for c in inv)
        return CycNum._make(self.ctx, num, den)

    def conj(self):
        """Complex conjugate: zeta -> zeta^{-1}, exactly."""
        table = self.ctx._pow_table
        N = self.ctx.N
        d = self.ctx.degree
        out = [0] * d
        for k, c in enumerate(self.num):
            if c:
                row = table[(N - k) % N]
                for j in range(d):
                    out[j] += c * row[j]
        return CycNum._make(self.ctx, tuple(out), self.den)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        acc = self.ctx.one
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, CycNum):
            return other
        if isinstance(other, int):
            return self.ctx.from_int(other)
        if isinstance(other, Fraction):
            return self.ctx.from_fraction(other)
        raise TypeError(f"cannot coerce {other!r} into CycNum")

    def as_rational(self):
        """Return self as a Fraction if it is rational, else None."""
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def numeric(self):
        z = self.ctx.zeta_numeric()
        acc = 0j
        zp = 1 + 0j
        for c in self.num:
            if c:
                acc += c * zp
            zp *= z
        return acc / self.den

    # textual form: polynomial in z with rational coefficients
    def __str__(self):
        terms = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            fr = Fraction(c, self.den)
            coeff = str(fr)
            if k == 0:
                terms.append(coeff)
            else:
                mon = "z" if k == 1 else f"z^{k}"
                if fr == 1:
                    terms.append(mon)
                elif fr == -1:
                    terms.append(f"-{mon}")
                else:
                    terms.append(f"{coeff}*{mon}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" + {t}" if not t.startswith("-") else f" - {t[1:]}"
        return out

    __repr__ = __str__


def _normalize(num, den):
    if den < 0:
        num = tuple(-x for x in num)
        den = -den
    g = den
    for x in num:
        g = math.gcd(g, x)
        if g == 1:
            break
    if g > 1:
        num = tuple(x // g for x in num)
        den //= g
    return num, den


def _poly_modinv(a, mod):
    """Inverse of polynomial a modulo the monic polynomial mod, over Q."""

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def pdivmod(u, v):
        u = u[:]
        q = [Fraction(0)] * max(1, len(u) - len(v) + 1)
        while len(u) >= len(v) and any(u):
            if u[-1] == 0:
                u.pop()
                continue
            c = u[-1] / v[-1]
            k = len(u) - len(v)
            q[k] += c
            for j in range(len(v)):
                u[k + j] -= c * v[j]
            u.pop()
        return trim(q), trim(u)

    r0, r1 = trim(mod[:]), trim(a[:])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = pdivmod(r0, r1)
        # s = s0 - q*s1
        s = s0[:] + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
        for i, qc in enumerate(q):
            if qc:
                for j, sc in enumerate(s1):
                    if sc:
                        s[i + j] -= qc * sc
        r0, r1 = r1, r
        s0, s1 = s1, trim(s)
    # r0 = gcd (a constant, since Phi_N is irreducible and a != 0)
    assert len(r0) == 1 and r0[0] != 0
    inv = [c / r0[0] for c in s0]
    inv += [Fraction(0)] * (len(mod) - 1 - len(inv))
    return inv[: len(mod) - 1]
