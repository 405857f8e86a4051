"""Exact arithmetic primitives.

Arbitrary-precision 2x2 integer matrices, canonical quadratic irrationals
(p + q*sqrt(D))/r with a total exact order, and regular continued-fraction
machinery (convergent matrices, periodic expansion of quadratic surds).

All values are immutable; every operation is pure and thread-safe.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence

__all__ = [
    "Mat2",
    "QuadSurd",
    "cf_matrix",
    "surd_canonicalize",
    "surd_cmp",
    "periodic_cf_expansion",
    "cf_eval_periodic",
    "period_divides_block",
    "decimal_str",
]


# ---------------------------------------------------------------------------
# integer helpers
# ---------------------------------------------------------------------------

def _sign(n) -> int:
    return (n > 0) - (n < 0)


def _is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, strong probable prime above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    """One nontrivial factor of composite odd n (Brent's cycle variant)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


# Full square-part extraction is attempted only below this bound; larger
# radicands keep any square factor that bounded trial division misses.
# Comparisons never rely on square-freeness, so this is purely cosmetic.
_FULL_FACTOR_BOUND = 10**14
_TRIAL_PRIMES: list[int] = []


def _trial_primes() -> list[int]:
    if not _TRIAL_PRIMES:
        sieve = bytearray([1]) * 10000
        sieve[0] = sieve[1] = 0
        for i in range(2, 100):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        _TRIAL_PRIMES.extend(i for i in range(10000) if sieve[i])
    return _TRIAL_PRIMES


def _factor(n: int, rng: random.Random) -> dict[int, int]:
    """Prime factorization of n >= 1 (n assumed within rho's practical reach)."""
    out: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return out


def _square_split(n: int) -> tuple[int, int]:
    """Return (s, d) with n = s*s*d, extracting the square part of n >= 1.

    Exhaustive for n < _FULL_FACTOR_BOUND; above it only square factors found
    by a perfect-square test plus small trial division are extracted.
    """
    if n == 1:
        return 1, 1
    s = 1
    r = math.isqrt(n)
    if r * r == n:
        return r, 1
    if n < _FULL_FACTOR_BOUND:
        rng = random.Random(0xC0FFEE)
        d = 1
        for p, e in _factor(n, rng).items():
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        return s, d
    for p in (2, 3, 5, 7, 11, 13):
        while n % (p * p) == 0:
            n //= p * p
            s *= p
    r = math.isqrt(n)
    if r * r == n:
        return s * r, 1
    return s, n


# ---------------------------------------------------------------------------
# 2x2 integer matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix [[a, b], [c, d]], entries of unbounded size."""

    a: int
    b: int
    c: int
    d: int

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def to_list(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    @staticmethod
    def identity() -> "Mat2":
        return Mat2(1, 0, 0, 1)


def cf_matrix(entries: Sequence[int] | Iterable[int]) -> Mat2:
    """Product of continued-fraction matrices [[a,1],[1,0]] over the entries.

    The empty product is the identity.  The columns of the result are the
    last two convergents of the continued fraction with these partial
    quotients.
    """
    a = d = 1
    b = c = 0
    for x in entries:
        if x <= 0:
            raise ValueError(f"continued-fraction entry must be >= 1, got {x}")
        # multiply on the right by [[x,1],[1,0]]
        a, b = a * x + b, a
        c, d = c * x + d, c
    return Mat2(a, b, c, d)


# ---------------------------------------------------------------------------
# quadratic surds
# ---------------------------------------------------------------------------

@total_ordering
class QuadSurd:
    """The real number (p + q*sqrt(D))/r in canonical form.

    Canonical means: r > 0, gcd(p, q, r) = 1, square factors of D moved into
    q (exhaustively for moderate D, best-effort for very large D), and D = 1
    whenever q = 0.  Equality and ordering are exact and total, and do not
    depend on how much of D's square part was extracted.
    """

    __slots__ = ("p", "q", "D", "r")

    def __init__(self, p: int, q: int, D: int, r: int) -> None:
        if D < 0:
            raise ValueError("radicand must be nonnegative")
        if r == 0:
            raise ValueError("denominator must be nonzero")
        if D == 0:
            q, D = 0, 1
        if q != 0 and D > 1:
            s, d = _square_split(D)
            q *= s
            D = d
        if D == 1:
            p, q = p + q, 0
        if q == 0:
            D = 1
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(abs(p), abs(q)), r)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "r", r // g)

    def __setattr__(self, *_):  # immutable
        raise AttributeError("QuadSurd is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_fraction(x: Fraction | int) -> "QuadSurd":
        f = Fraction(x)
        return QuadSurd(f.numerator, 0, 1, f.denominator)

    @staticmethod
    def sqrt_ratio(D: int, n: int) -> "QuadSurd":
        """sqrt(D)/n for D >= 0, n != 0."""
        return QuadSurd(0, 1, D, n)

    # -- basic structure -----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational value")
        return Fraction(self.p, self.r)

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.p, -self.q, self.D, self.r)

    def squared_fraction(self) -> Fraction:
        """Exact value of x**2, defined only when p = 0 or q = 0."""
        if self.p == 0:
            return Fraction(self.q * self.q * self.D, self.r * self.r)
        if self.q == 0:
            return Fraction(self.p * self.p, self.r * self.r)
        raise ValueError("square is irrational for mixed surds")

    def _minpoly(self) -> tuple[int, int, int]:
        # r^2 x^2 - 2 p r x + (p^2 - q^2 D) = 0, normalized; a representation
        # invariant, so equality tests survive partially extracted radicands.
        A = self.r * self.r
        B = -2 * self.p * self.r
        C = self.p * self.p - self.q * self.q * self.D
        g = math.gcd(math.gcd(A, abs(B)), abs(C))
        return A // g, B // g, C // g

    # -- interval evaluation -------------------------------------------------

    def interval(self, bits: int) -> tuple[Fraction, Fraction]:
        """Enclosing rational interval with ~bits fractional bits."""
        if self.q == 0:
            v = Fraction(self.p, self.r)
            return v, v
        t = math.isqrt(self.D << (2 * bits))
        lo = Fraction(t, 1 << bits)
        hi = Fraction(t + 1, 1 << bits)
        if self.q > 0:
            slo, shi = self.q * lo, self.q * hi
        else:
            slo, shi = self.q * hi, self.q * lo
        return (self.p + slo) / self.r, (self.p + shi) / self.r

    def __float__(self) -> float:
        lo, hi = self.interval(80)
        return float((lo + hi) / 2)

    def floor(self) -> int:
        bits = 16
        while True:
            lo, hi = self.interval(bits)
            flo, fhi = lo.__floor__(), hi.__floor__()
            if flo == fhi:
                return flo
            bits *= 2

    # -- comparison ----------------------------------------------------------

    def _cmp(self, other: "QuadSurd") -> int:
        if self.is_rational and other.is_rational:
            return _sign(self.p * other.r - other.p * self.r)
        if (
            not self.is_rational
            and not other.is_rational
            and _sign(self.q) == _sign(other.q)
            and self._minpoly() == other._minpoly()
        ):
            return 0
        bits = 64
        while True:
            alo, ahi = self.interval(bits)
            blo, bhi = other.interval(bits)
            if ahi < blo:
                return -1
            if bhi < alo:
                return 1
            bits *= 2

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadSurd.from_fraction(other)
        if not isinstance(other, QuadSurd):
            return NotImplemented
        return self._cmp(other) == 0

    def __lt__(self, other: "QuadSurd | int | Fraction") -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadSurd.from_fraction(other)
        return self._cmp(other) < 0

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(Fraction(self.p, self.r))
        return hash((self._minpoly(), _sign(self.q)))

    # -- field operations within one radicand --------------------------------

    def _coerce(self, other) -> "QuadSurd | None":
        if isinstance(other, (int, Fraction)):
            return QuadSurd.from_fraction(other)
        if isinstance(other, QuadSurd):
            return other
        return None

    def _same_field(self, other: "QuadSurd") -> int:
        if self.is_rational:
            return other.D
        if other.is_rational:
            return self.D
        if self.D != other.D:
            raise ValueError("surd arithmetic requires matching radicands")
        return self.D

    def __add__(self, other) -> "QuadSurd":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self._same_field(o)
        return QuadSurd(
            self.p * o.r + o.p * self.r,
            self.q * o.r + o.q * self.r,
            D,
            self.r * o.r,
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadSurd":
        return QuadSurd(-self.p, -self.q, self.D, self.r)

    def __sub__(self, other) -> "QuadSurd":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "QuadSurd":
        return (-self) + other

    def __mul__(self, other) -> "QuadSurd":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self._same_field(o)
        return QuadSurd(
            self.p * o.p + self.q * o.q * D,
            self.p * o.q + self.q * o.p,
            D,
            self.r * o.r,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadSurd":
        norm = self.p * self.p - self.q * self.q * self.D
        if norm == 0:
            raise ZeroDivisionError("surd is zero")
        return QuadSurd(self.p * self.r, -self.q * self.r, self.D, norm)

    def __truediv__(self, other) -> "QuadSurd":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._same_field(o)
        return self * o.inverse()

    def __rtruediv__(self, other) -> "QuadSurd":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        sgn = "-" if self.q < 0 else "+"
        return f"({self.p} {sgn} {abs(self.q)}√{self.D})/{self.r}"

    def __repr__(self) -> str:
        return f"QuadSurd({self.p}, {self.q}, {self.D}, {self.r})"

    def decimal(self, sig: int = 12) -> str:
        return decimal_str(self, sig)

    def to_json(self) -> dict[str, int]:
        return {"p": self.p, "q": self.q, "D": self.D, "r": self.r}


def surd_canonicalize(p: int, q: int, D: int, r: int) -> QuadSurd:
    """Canonical form of (p + q*sqrt(D))/r; D >= 0, r != 0."""
    return QuadSurd(p, q, D, r)


def surd_cmp(x: QuadSurd, y: QuadSurd) -> int:
    """Exact three-way comparison: -1, 0, or 1."""
    return x._cmp(y)


def decimal_str(x: QuadSurd, sig: int = 12) -> str:
    """Correctly rounded decimal string with `sig` significant digits."""
    if x.is_rational and x.p == 0:
        return "0." + "0" * (sig - 1)
    bits = 8 * sig
    while True:
        lo, hi = x.interval(bits)
        rlo, rhi = _round_sig(lo, sig), _round_sig(hi, sig)
        if rlo == rhi:
            return rlo
        bits *= 2


def _round_sig(v: Fraction, sig: int) -> str:
    neg = v < 0
    if neg:
        v = -v
    if v == 0:
        return "0." + "0" * (sig - 1)
    # exponent e with 10^e <= v < 10^(e+1)
    e = 0
    while v >= 10:
        v /= 10
        e += 1
    while v < 1:
        v *= 10
        e -= 1
    scaled = v * 10 ** (sig - 1)
    n = scaled.numerator // scaled.denominator
    if 2 * (scaled - n) >= 1:
        n += 1
    digits = str(n)
    if len(digits) > sig:  # rounding bumped 999.. to 1000..
        digits = digits[:sig]
        e += 1
    mantissa = digits[0] + "." + digits[1:]
    out = f"{mantissa}e{e:+03d}" if (e < -4 or e >= sig) else _place_point(digits, e)
    return ("-" if neg else "") + out


def _place_point(digits: str, e: int) -> str:
    if e >= len(digits) - 1:
        return digits + "0" * (e - len(digits) + 1)
    if e >= 0:
        return digits[: e + 1] + "." + digits[e + 1 :]
    return "0." + "0" * (-e - 1) + digits


# ---------------------------------------------------------------------------
# periodic continued fractions
# ---------------------------------------------------------------------------

def periodic_cf_expansion(x: QuadSurd) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Regular continued fraction of a quadratic irrational.

    Returns (preperiod, period) with the minimal period, detected by the
    first recurrence of the complete-quotient state (P, Q) of the standard
    surd expansion; purely periodic inputs give an empty preperiod.
    """
    if x.is_rational:
        raise ValueError("continued-fraction expansion requires an irrational input")
    # normalize to (P + sqrt(N))/Q with Q | N - P^2
    if x.q > 0:
        P, Q, N = x.p, x.r, x.q * x.q * x.D
    else:
        P, Q, N = -x.p, -x.r, x.q * x.q * x.D
    if (N - P * P) % Q != 0:
        P *= abs(Q)
        N *= Q * Q
        Q *= abs(Q)
    sq = math.isqrt(N)
    digits: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    while True:
        state = (P, Q)
        if state in seen:
            i = seen[state]
            return tuple(digits[:i]), tuple(digits[i:])
        seen[state] = len(digits)
        a = (P + sq) // Q
        if Q < 0 and (P + sq) % Q == 0:
            a -= 1
        digits.append(a)
        P = a * Q - P
        Q = (N - P * P) // Q


def cf_eval_periodic(preperiod: Sequence[int], period: Sequence[int]) -> QuadSurd:
    """Exact value of the continued fraction [preperiod; period, period, ...]."""
    if not period:
        raise ValueError("period must be nonempty")
    m = cf_matrix(period)
    disc = m.trace() ** 2 - 4 * m.det()
    if m.c == 0:
        raise ValueError("degenerate period")
    x = QuadSurd(m.a - m.d, 1, disc, 2 * m.c)
    for a in reversed(list(preperiod)):
        x = a + 1 / x
    return x


def period_divides_block(period: Sequence[int], block: Sequence[int]) -> bool:
    """True iff block is period repeated a whole number of times."""
    p, b = tuple(period), tuple(block)
    if not p or len(b) % len(p):
        return False
    return p * (len(b) // len(p)) == b
