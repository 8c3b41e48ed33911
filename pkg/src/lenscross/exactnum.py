"""Exact decision procedures for expressions mixing rationals, log2, and
square roots.

The bound formulas evaluated by this package contain terms such as
``64 n^2 log2(n)`` and ``c / log2(e/n)`` that are irrational for most
inputs.  Verdicts about them must still be exact, so comparisons are
decided in three tiers:

1. when the log argument is a power of two the logarithm is an integer
   and plain rational arithmetic decides;
2. when the exponents stay small the comparison is lifted to an integer
   power comparison (``log2(R) >= u/v  iff  R^v >= 2^u``), which is exact;
3. otherwise interval arithmetic (mpmath) at doubling precision narrows
   an enclosure until the sign is determined.  Tier 3 terminates because
   the tier 1 screen removes every input where the compared quantities
   could be equal: log2 of a rational that is not a power of two is
   irrational, hence never equal to a rational.

Nothing here ever decides a verdict from the midpoint of an uncertain
interval; an undecided interval is always refined further.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath

Number = Union[int, Fraction]

# beyond this many bits the integer-power tier would allocate silly
# amounts of memory; fall through to intervals instead
_POWER_BIT_BUDGET = 4_000_000

_INTERVAL_PREC_START = 64
_INTERVAL_PREC_LIMIT = 1 << 16


def _is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def log2_exact(r: Fraction) -> Optional[int]:
    """The integer log2(r) when r is an exact power of two, else None.

    log2 of a positive rational is rational only if the value is a power
    of two with an integer exponent, so this screen is complete.
    """
    num, den = r.numerator, r.denominator
    if _is_power_of_two(num) and _is_power_of_two(den):
        return num.bit_length() - den.bit_length()
    return None


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _interval_sign(make_interval) -> int:
    """Sign of a quantity known to be nonzero, via refined enclosures.

    ``make_interval(ctx)`` must return an mpmath interval for the
    quantity under the interval context ``ctx``.
    """
    prec = _INTERVAL_PREC_START
    while prec <= _INTERVAL_PREC_LIMIT:
        ctx = mpmath.iv
        old = ctx.prec
        try:
            ctx.prec = prec
            enclosure = make_interval(ctx)
            if enclosure.a > 0:
                return 1
            if enclosure.b < 0:
                return -1
        finally:
            ctx.prec = old
        prec *= 2
    raise ArithmeticError("interval refinement failed to separate a nonzero quantity")


def _iv_fraction(ctx, q: Fraction):
    return ctx.mpf(q.numerator) / ctx.mpf(q.denominator)


def cmp_log2(r: Fraction, c: Fraction) -> int:
    """Sign of ``log2(r) - c`` for rational r > 0 and rational c.  Exact."""
    if r <= 0:
        raise ValueError("log2 argument must be positive")
    exact = log2_exact(r)
    if exact is not None:
        return _sign(exact - c)

    u, v = c.numerator, c.denominator
    # tier 2: R^v versus 2^u in plain integers, when affordable
    bits = (r.numerator.bit_length() + r.denominator.bit_length()) * v + abs(u)
    if bits <= _POWER_BIT_BUDGET:
        num_pow = r.numerator**v
        den_pow = r.denominator**v
        if u >= 0:
            return _sign(num_pow - (den_pow << u))
        return _sign((num_pow << (-u)) - den_pow)

    # tier 3: log2(r) is irrational here, so the difference is nonzero
    def enclose(ctx):
        rv = _iv_fraction(ctx, r)
        cv = _iv_fraction(ctx, c)
        return ctx.log(rv) / ctx.log(2) - cv

    return _interval_sign(enclose)


def sign_linear_log(a: Fraction, r: Fraction, b: Fraction) -> int:
    """Sign of ``a * log2(r) - b`` for rational a, b and rational r > 0."""
    if a == 0:
        return _sign(-b)
    s = cmp_log2(r, b / a)
    return s if a > 0 else -s


@dataclass(frozen=True)
class _ExactValue:
    """Shared comparison plumbing for the two lazy log forms below."""

    def _cmp(self, other) -> int:
        raise NotImplementedError

    def _coerce(self, other) -> Optional[Fraction]:
        if isinstance(other, bool):
            return None
        if isinstance(other, int):
            return Fraction(other)
        if isinstance(other, Fraction):
            return other
        return None

    def __eq__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._cmp(q) == 0

    def __le__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._cmp(q) <= 0

    def __lt__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._cmp(q) < 0

    def __ge__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._cmp(q) >= 0

    def __gt__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._cmp(q) > 0

    def __hash__(self):
        exact = self.exact()
        if exact is not None:
            return hash(exact)
        return object.__hash__(self)

    def exact(self) -> Optional[Fraction]:
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class LogProduct(_ExactValue):
    """The exact value ``coeff * log2(arg)``, comparable against rationals.

    Comparisons are decided exactly (see the module docstring); ``exact()``
    collapses to a Fraction when ``arg`` is a power of two.
    """

    coeff: Fraction
    arg: Fraction

    def __post_init__(self):
        if self.arg <= 0:
            raise ValueError("log argument must be positive")

    def _cmp(self, q: Fraction) -> int:
        return sign_linear_log(self.coeff, self.arg, q)

    def exact(self) -> Optional[Fraction]:
        if self.coeff == 0:
            return Fraction(0)
        k = log2_exact(self.arg)
        if k is None:
            return None
        return self.coeff * k

    def __float__(self) -> float:
        return float(self.coeff) * float(mpmath.log(
            mpmath.mpf(self.arg.numerator) / self.arg.denominator, 2))

    def approx(self, digits: int = 30) -> str:
        with mpmath.workdps(digits + 10):
            val = (mpmath.mpf(self.coeff.numerator) / self.coeff.denominator
                   * mpmath.log(mpmath.mpf(self.arg.numerator) / self.arg.denominator, 2))
            return mpmath.nstr(val, digits)

    def __repr__(self):
        exact = self.exact()
        if exact is not None:
            return f"LogProduct({exact})"
        return f"LogProduct({self.coeff} * log2({self.arg}))"


@dataclass(frozen=True, eq=False)
class LogQuotient(_ExactValue):
    """The exact value ``coeff / log2(arg)`` for ``arg > 1``."""

    coeff: Fraction
    arg: Fraction

    def __post_init__(self):
        if self.arg <= 1:
            raise ValueError("quotient form needs arg > 1 so the log is positive")

    def _cmp(self, q: Fraction) -> int:
        # sign(coeff / L - q) with L = log2(arg) > 0 equals sign(coeff - q L)
        return -sign_linear_log(q, self.arg, self.coeff)

    def exact(self) -> Optional[Fraction]:
        if self.coeff == 0:
            return Fraction(0)
        k = log2_exact(self.arg)
        if k is None:
            return None
        return self.coeff / k

    def __float__(self) -> float:
        return float(self.coeff) / float(mpmath.log(
            mpmath.mpf(self.arg.numerator) / self.arg.denominator, 2))

    def approx(self, digits: int = 30) -> str:
        with mpmath.workdps(digits + 10):
            val = (mpmath.mpf(self.coeff.numerator) / self.coeff.denominator
                   / mpmath.log(mpmath.mpf(self.arg.numerator) / self.arg.denominator, 2))
            return mpmath.nstr(val, digits)

    def __repr__(self):
        exact = self.exact()
        if exact is not None:
            return f"LogQuotient({exact})"
        return f"LogQuotient({self.coeff} / log2({self.arg}))"


BoundValue = Union[Fraction, LogProduct, LogQuotient]


def le_sqrt_sum(lhs: Number, a: Fraction, b: Fraction) -> bool:
    """Exact test of ``lhs <= sqrt(a) + sqrt(b)`` for rational a, b >= 0.

    Decided by squaring twice; every intermediate stays rational.
    """
    if a < 0 or b < 0:
        raise ValueError("radicands must be nonnegative")
    if lhs <= 0:
        return True
    # lhs^2 <= a + b + 2 sqrt(ab)
    t = Fraction(lhs) ** 2 - a - b
    if t <= 0:
        return True
    return t * t <= 4 * a * b


def le_scaled_sqrt_sum(lhs: Number, scale: Number, ke, v: Number) -> bool:
    """Exact test of ``lhs <= scale * (sqrt(ke) + sqrt(v))``.

    ``ke`` may be a Fraction or a :class:`LogQuotient` (a rational divided
    by a positive log2).  The LogQuotient path uses interval refinement;
    it terminates because equality would force a transcendental log2
    value to be algebraic.
    """
    s = Fraction(scale)
    if s <= 0:
        raise ValueError("scale must be positive")
    vq = Fraction(v)
    if isinstance(ke, Fraction) or isinstance(ke, int):
        return le_sqrt_sum(lhs, s * s * Fraction(ke), s * s * vq)
    if not isinstance(ke, LogQuotient):
        raise TypeError(f"unsupported radicand type {type(ke)!r}")
    exact = ke.exact()
    if exact is not None:
        return le_sqrt_sum(lhs, s * s * exact, s * s * vq)
    if ke.coeff == 0:
        return le_sqrt_sum(lhs, Fraction(0), s * s * vq)
    if ke.coeff < 0:
        raise ValueError("radicand must be nonnegative")
    lhs_q = Fraction(lhs)
    if lhs_q <= 0:
        return True

    def enclose(ctx):
        karg = _iv_fraction(ctx, ke.arg)
        kcoeff = _iv_fraction(ctx, ke.coeff)
        sv = _iv_fraction(ctx, s)
        rhs = sv * (ctx.sqrt(kcoeff / (ctx.log(karg) / ctx.log(2))) +
                    ctx.sqrt(_iv_fraction(ctx, vq)))
        return rhs - _iv_fraction(ctx, lhs_q)

    return _interval_sign(enclose) > 0
