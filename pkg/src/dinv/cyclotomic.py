"""Exact arithmetic in Q(zeta_b) with certified sign evaluation.

Elements are polynomials in zeta = exp(2*pi*i/b) reduced modulo the b-th
cyclotomic polynomial, with Fraction coefficients.  Two facts make signature
computations over this field fully rigorous:

* equality (in particular vanishing) is decided exactly by reduction mod
  Phi_b;
* a nonzero real element Sum a_j zeta^j equals Sum a_j cos(2*pi*j/b), which
  is evaluated with certified rational enclosures (Machin pi interval plus
  Taylor tails), refined until the interval excludes zero.

No floating point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _poly_div(num, den):
    """Polynomial division over Q: num = q*den + r, returns (q, r)."""
    num = list(num)
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        c = Fraction(num[-1]) / den[-1]
        d = len(num) - len(den)
        q[d] = c
        for i, x in enumerate(den):
            num[i + d] -= c * x
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(b: int):
    """Coefficients (low to high) of Phi_b, computed by exact division of
    x^b - 1 by the Phi_d for proper divisors d."""
    poly = [Fraction(-1)] + [Fraction(0)] * (b - 1) + [Fraction(1)]
    for d in range(1, b):
        if b % d == 0:
            q, r = _poly_div(poly, cyclotomic_polynomial(d))
            assert not any(r), f"Phi_{d} must divide x^{b}-1 exactly"
            poly = q
    return tuple(poly)


# --- certified enclosures -------------------------------------------------

def _arctan_interval(inv_x: int, terms: int):
    """Enclosure of arctan(1/inv_x) by alternating partial sums."""
    x = Fraction(1, inv_x)
    total = Fraction(0)
    p = x
    for k in range(terms):
        term = p / (2 * k + 1)
        total += term if k % 2 == 0 else -term
        p *= x * x
    tail = p / (2 * terms + 1)
    return total - tail, total + tail


@lru_cache(maxsize=None)
def pi_interval(terms: int = 60):
    """Rational enclosure of pi via Machin: pi = 16 atan(1/5) - 4 atan(1/239)."""
    a5 = _arctan_interval(5, terms)
    a239 = _arctan_interval(239, terms)
    lo = 16 * a5[0] - 4 * a239[1]
    hi = 16 * a5[1] - 4 * a239[0]
    assert lo < hi
    return lo, hi


@lru_cache(maxsize=None)
def cos_2pi_interval(j: int, b: int, prec: int):
    """Certified rational enclosure of cos(2*pi*j/b), width about 10^-prec."""
    t = Fraction(j % b, b)
    if t > Fraction(1, 2):
        t = 1 - t                       # cos(2 pi (1-t)) = cos(2 pi t)
    pl, ph = pi_interval()
    th_lo, th_hi = 2 * t * pl, 2 * t * ph
    width = th_hi - th_lo
    # midpoint, rounded to denominator 10^prec to keep Taylor arithmetic small
    scale = 10 ** prec
    mid = (th_lo + th_hi) / 2
    mid = Fraction(round(mid * scale), scale)
    round_err = Fraction(1, scale) + width / 2
    # Taylor at mid with enough terms that the tail bound is < 10^-prec
    total = Fraction(1)
    term = Fraction(1)
    k = 0
    m2 = mid * mid
    while True:
        k += 1
        term = term * m2 / ((2 * k - 1) * (2 * k))
        total += term if k % 2 == 0 else -term
        # once terms decrease, the absolute tail is bounded by the next term
        if 2 * k * (2 * k + 1) > m2 and term < Fraction(1, 10 ** (prec + 2)):
            break
    tail = term
    err = round_err + tail              # |cos| is 1-Lipschitz
    return total - err, total + err


class CyclotomicField:
    """Q(zeta_b) with elements as coefficient tuples modulo Phi_b."""

    def __init__(self, b: int):
        if b < 1:
            raise ValueError("b must be positive")
        self.b = b
        self.phi = cyclotomic_polynomial(b)
        self.deg = len(self.phi) - 1
        # power table: zeta^m reduced, for 0 <= m < b, built iteratively
        pows = [self._unit_poly(0)]
        for _ in range(1, b):
            pows.append(self._shift_reduce(pows[-1]))
        self._pows = pows

    # -- representation helpers
    def _unit_poly(self, k):
        v = [Fraction(0)] * self.deg
        if self.deg:
            v[k] = Fraction(1)
        return tuple(v)

    def _shift_reduce(self, coeffs):
        """Multiply by zeta and reduce mod Phi_b."""
        v = [Fraction(0)] + list(coeffs)
        return tuple(self._reduce(v))

    def _reduce(self, v):
        v = list(v)
        lead = [-c for c in self.phi[:-1]]    # x^deg = -(phi - x^deg)
        for i in range(len(v) - 1, self.deg - 1, -1):
            c = v[i]
            if c:
                v[i] = Fraction(0)
                for j, l in enumerate(lead):
                    v[i - self.deg + j] += c * l
        v = v[:self.deg]
        while len(v) < self.deg:
            v.append(Fraction(0))
        return v

    # -- constructors
    def zero(self):
        return tuple([Fraction(0)] * self.deg)

    def one(self):
        return self.from_rational(1)

    def from_rational(self, x):
        if self.deg == 0:
            return ()
        v = [Fraction(0)] * self.deg
        v[0] = Fraction(x)
        return tuple(v)

    def zeta_power(self, k: int):
        return self._pows[k % self.b]

    # -- arithmetic
    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def neg(self, x):
        return tuple(-a for a in x)

    def mul(self, x, y):
        n = self.deg
        prod = [Fraction(0)] * (2 * n - 1 if n else 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        prod[i + j] += a * b
        return tuple(self._reduce(prod))

    def scalar_mul(self, c, x):
        c = Fraction(c)
        return tuple(c * a for a in x)

    def inv(self, x):
        """Inverse by extended Euclid against Phi_b."""
        if not any(x):
            raise ZeroDivisionError("inverse of zero")
        # extended gcd over Q[x]
        r0, r1 = list(self.phi), list(x) + [Fraction(0)]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        def trim(p):
            p = list(p)
            while p and p[-1] == 0:
                p.pop()
            return p
        r0, r1 = trim(r0), trim(r1)
        while r1:
            q, r = _poly_div(r0, r1)
            r0, r1 = r1, trim(r)
            # s = s0 - q*s1
            prod = [Fraction(0)] * (len(q) + len(s1))
            for i, a in enumerate(q):
                for j, b in enumerate(s1):
                    prod[i + j] += a * b
            news = [Fraction(0)] * max(len(s0), len(prod))
            for i, a in enumerate(s0):
                news[i] += a
            for i, a in enumerate(prod):
                news[i] -= a
            s0, s1 = s1, trim(news)
        # r0 = gcd (a nonzero constant since Phi_b is irreducible)
        assert len(r0) == 1 and r0[0] != 0
        c = r0[0]
        out = [a / c for a in s0]
        return tuple(self._reduce(out + [Fraction(0)] * self.deg))

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def conj(self, x):
        """Complex conjugation: zeta -> zeta^{-1}."""
        out = self.zero()
        for j, a in enumerate(x):
            if a:
                out = self.add(out, self.scalar_mul(a, self.zeta_power(-j % self.b)))
        return out

    def is_zero(self, x):
        return not any(x)

    def is_real(self, x):
        return self.conj(x) == x

    # -- certified sign of a real element
    def sign_real(self, x) -> int:
        """Sign (-1, 0, +1) of a real element; exact and certified."""
        if not self.is_real(x):
            raise ValueError("sign_real requires a real element")
        if self.is_zero(x):
            return 0
        if self.deg <= 1:
            # b in {1, 2}: the field is Q and zeta = +-1 is the constant term's unit
            val = x[0] if self.deg else Fraction(0)
            return -1 if val < 0 else (1 if val > 0 else 0)
        prec = 30
        while True:
            lo = Fraction(0)
            hi = Fraction(0)
            for j, a in enumerate(x):
                if not a:
                    continue
                clo, chi = cos_2pi_interval(j, self.b, prec)
                if a > 0:
                    lo += a * clo
                    hi += a * chi
                else:
                    lo += a * chi
                    hi += a * clo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2
            if prec > 10000:             # unreachable for nonzero input
                raise AssertionError("sign refinement failed to converge")
