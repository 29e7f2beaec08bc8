"""Exact truncated p-adic arithmetic.

Valuations, expansions of rationals, decidable ball membership and a
Chinese Remainder solver.  Every value is backed by an exact rational;
truncation happens only when digits are extracted, so all predicates in
this module are decidable.  All types are immutable and all operations
are pure functions, safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple, Union

from .errors import NoIntegerSolution, NonCoprimeModuli

Rational = Union[int, Fraction]

#: Valuation of zero.  ``math.inf`` absorbs addition and compares
#: correctly against every integer, which is all we need of it.
INFINITE_VALUATION = math.inf

Valuation = Union[int, float]

_MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_PRIMALITY_LIMIT = 2**64


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test, exact below 2**64."""
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
    for a in _MILLER_RABIN_BASES:
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


class Prime(int):
    """A verified prime number.

    Constructing ``Prime(n)`` runs a deterministic primality test; values
    at or above 2**64 are rejected outright.  Instances behave as plain
    integers everywhere else.
    """

    __slots__ = ()

    def __new__(cls, value) -> "Prime":
        if isinstance(value, Prime):
            return value
        v = int(value)
        if v != value:
            raise ValueError(f"prime must be an integer, got {value!r}")
        if v >= _PRIMALITY_LIMIT:
            raise ValueError(f"{v} is too large: primality is only verified below 2**64")
        if not is_prime(v):
            raise ValueError(f"{v} is not prime")
        return super().__new__(cls, v)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"


class _InfinitePlace:
    """The archimedean place, the extra point of the extended primes."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _InfinitePlace()

ExtendedPrime = Union[Prime, _InfinitePlace]


def is_infinite_place(p: object) -> bool:
    return isinstance(p, _InfinitePlace)


def extended_prime_key(p: ExtendedPrime) -> Tuple[int, int]:
    """Sort key placing the finite primes in order and INFINITY last."""
    if is_infinite_place(p):
        return (1, 0)
    return (0, int(p))


def iter_primes(start: int = 2) -> Iterator[Prime]:
    """Yield the primes >= start in increasing order, forever."""
    n = max(2, start)
    while True:
        if is_prime(n):
            yield Prime(n)
        n += 1


def prime_factors(n: int) -> dict:
    """Factor a nonzero integer into {Prime: multiplicity} by trial division."""
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    out = {}
    for d in (2, 3):
        while n % d == 0:
            out[Prime(d)] = out.get(Prime(d), 0) + 1
            n //= d
    d = 5
    while d * d <= n:
        for step in (d, d + 2):
            while n % step == 0:
                out[Prime(step)] = out.get(Prime(step), 0) + 1
                n //= step
        d += 6
    if n > 1:
        out[Prime(n)] = out.get(Prime(n), 0) + 1
    return out


def primes_dividing(q: Rational) -> frozenset:
    """The primes dividing the numerator or denominator of q (empty for 0)."""
    q = Fraction(q)
    if q == 0:
        return frozenset()
    support = set(prime_factors(q.numerator))
    support.update(prime_factors(q.denominator))
    return frozenset(support)


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(q: Rational, p) -> Valuation:
    """The p-adic valuation of a rational.

    Returns the unique integer v such that q * p**-v is a p-adic unit,
    and INFINITE_VALUATION exactly when q is zero.  Negative values occur
    when p divides the denominator.

    >>> valuation(12, 2)
    2
    >>> valuation(Fraction(2, 9), 3)
    -2
    """
    p = Prime(p)
    q = Fraction(q)
    if q == 0:
        return INFINITE_VALUATION
    return _int_valuation(abs(q.numerator), p) - _int_valuation(q.denominator, p)


@dataclass(frozen=True)
class TruncatedPadic:
    """A p-adic value split as p**valuation * unit, the unit kept mod p**precision.

    ``unit_residue`` is absent exactly when the value is zero (infinite
    valuation); otherwise it lies in [1, p**precision - 1] and is coprime
    to p.
    """

    prime: Prime
    valuation: Valuation
    unit_residue: Optional[int]
    precision: int

    def __post_init__(self):
        object.__setattr__(self, "prime", Prime(self.prime))
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if self.valuation == INFINITE_VALUATION:
            if self.unit_residue is not None:
                raise ValueError("zero has no unit residue")
        else:
            if not isinstance(self.valuation, int):
                raise ValueError("finite valuation must be an integer")
            r = self.unit_residue
            if r is None or not 1 <= r < self.prime**self.precision or r % self.prime == 0:
                raise ValueError("unit residue must lie in [1, p^k - 1] and be coprime to p")

    @property
    def is_zero(self) -> bool:
        return self.unit_residue is None

    def reconstruct(self) -> Fraction:
        """The rational p**valuation * unit_residue (zero for the zero value)."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.prime) ** self.valuation * self.unit_residue


def expand(q: Rational, p, precision: int) -> TruncatedPadic:
    """Expand a rational at p: valuation plus the unit part mod p**precision.

    The reconstruction p**v * unit_residue agrees with q modulo p**(v + precision).
    """
    p = Prime(p)
    if precision < 1:
        raise ValueError("precision must be >= 1")
    q = Fraction(q)
    v = valuation(q, p)
    if v == INFINITE_VALUATION:
        return TruncatedPadic(p, INFINITE_VALUATION, None, precision)
    unit = q * Fraction(p) ** -v
    modulus = int(p) ** precision
    residue = unit.numerator * pow(unit.denominator, -1, modulus) % modulus
    return TruncatedPadic(p, v, residue, precision)


@dataclass(frozen=True)
class PadicBall:
    """The set {x : |x - center|_p <= p**-radius_exponent}.

    Membership of a rational x is decided exactly via
    valuation(x - center, p) >= radius_exponent.
    """

    prime: Prime
    center: Fraction
    radius_exponent: int

    def __post_init__(self):
        object.__setattr__(self, "prime", Prime(self.prime))
        object.__setattr__(self, "center", Fraction(self.center))

    def contains(self, x: Rational) -> bool:
        return valuation(Fraction(x) - self.center, self.prime) >= self.radius_exponent


def ball_contains(ball: PadicBall, x: Rational) -> bool:
    """Exact ball membership for a rational point."""
    return ball.contains(x)


def integer_in_ball(ball: PadicBall) -> int:
    """The smallest nonnegative integer inside a p-adic ball.

    Raises NoIntegerSolution when the center has negative valuation and
    the radius is too small for any integer to reach it.
    """
    p = ball.prime
    ell = ball.radius_exponent
    v_center = valuation(ball.center, p)
    if v_center < 0:
        # every integer sits at distance exactly p**-v_center from the center
        if ell <= v_center:
            return 0
        raise NoIntegerSolution(
            f"no integer within p^-{ell} of {ball.center} at p={int(p)}"
        )
    if ell <= 0:
        return 0
    modulus = int(p) ** ell
    c = Fraction(ball.center)
    return c.numerator * pow(c.denominator, -1, modulus) % modulus


def crt_solve(congruences: Sequence[Tuple[int, int]]) -> int:
    """Solve simultaneous congruences n = r_i (mod m_i) with coprime moduli.

    Takes (residue, modulus) pairs whose moduli are pairwise coprime
    (prime powers in every use here) and returns the smallest nonnegative
    solution; the full solution set is that value plus multiples of the
    product of the moduli.  An empty system yields 0.
    """
    x = 0
    modulus = 1
    for residue, m in congruences:
        if m < 1:
            raise ValueError(f"modulus must be positive, got {m}")
        if math.gcd(modulus, m) != 1:
            raise NonCoprimeModuli(f"modulus {m} shares a factor with {modulus}")
        k = (residue - x) * pow(modulus, -1, m) % m
        x += modulus * k
        modulus *= m
    return x % modulus
