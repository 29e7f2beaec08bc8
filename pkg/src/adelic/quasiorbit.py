"""Orbits of the rational scaling action and their closures.

The positive rationals act on finite adeles and the nonzero rationals on
full adeles, componentwise at every place.  Everything here is exact:
orbit-closure membership is decided from zero sets and idele
factorizations, and ``approx_witness`` *constructs* a rational r placing
r*a inside a requested neighbourhood, via a Chinese Remainder argument,
then verifies the result before returning it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .adele import (
    Adele,
    FiniteAdele,
    FullAdele,
    Neighbourhood,
    PrimeSet,
    RATIONAL,
    TIMES_P,
    UnitIdele,
    ZERO,
    factor_idele,
    is_invertible,
    scale,
    zero_set,
)
from .errors import (
    ClosedOrbitMiss,
    Infeasible,
    NotIntegral,
    SearchBoundExceeded,
)
from .padic import (
    PadicBall,
    Prime,
    crt_solve,
    integer_in_ball,
    iter_primes,
    valuation,
)

# isotropy tags
TRIVIAL = "trivial"
FULL_GROUP = "full_group"

# parameter point kinds
PRIME_SET = "prime_set"
UNIT_CLASS = "unit_class"

DEFAULT_SCAN_CAP = 200_000


@dataclass(frozen=True, eq=False)
class ParameterPoint:
    """A point of the quasi-orbit parameter space: either the zero set of
    a noninvertible class or the canonical unit representative of a closed
    invertible orbit."""

    kind: str
    prime_set: Optional[PrimeSet] = None
    unit: Optional[UnitIdele] = None

    def __post_init__(self):
        if self.kind == PRIME_SET:
            if not isinstance(self.prime_set, PrimeSet) or self.unit is not None:
                raise ValueError("prime-set point carries exactly a PrimeSet")
        elif self.kind == UNIT_CLASS:
            if not isinstance(self.unit, UnitIdele) or self.prime_set is not None:
                raise ValueError("unit-class point carries exactly a UnitIdele")
        else:
            raise ValueError(f"unknown parameter point kind {self.kind!r}")

    @classmethod
    def of_prime_set(cls, s: PrimeSet) -> "ParameterPoint":
        return cls(PRIME_SET, prime_set=s)

    @classmethod
    def of_unit(cls, u: UnitIdele) -> "ParameterPoint":
        return cls(UNIT_CLASS, unit=u)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParameterPoint):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind == PRIME_SET:
            return self.prime_set == other.prime_set
        return self.unit == other.unit

    __hash__ = None

    def __repr__(self) -> str:
        payload = self.prime_set if self.kind == PRIME_SET else self.unit
        return f"ParameterPoint({self.kind}, {payload!r})"


def isotropy(a: Adele) -> str:
    """FULL_GROUP exactly at the zero adele, TRIVIAL everywhere else."""
    return FULL_GROUP if a.is_zero else TRIVIAL


def _require_same_kind(a: Adele, b: Adele) -> bool:
    fa, fb = isinstance(a, FullAdele), isinstance(b, FullAdele)
    if fa != fb:
        raise ValueError("adeles must both be finite or both be full")
    return fa


def orbit_closure_contains(a: Adele, b: Adele) -> bool:
    """Whether b lies in the closure of the scaling orbit of a.

    Finite adeles: the closure is cut out by the zero set, so the test is
    zero_set(a) <= zero_set(b).  Full adeles: invertible orbits are closed
    (membership means an exact witness exists), noninvertible closures are
    again cut out by the extended zero set.
    """
    full = _require_same_kind(a, b)
    if full and is_invertible(a):
        return exact_orbit_witness(a, b) is not None
    return zero_set(a).is_subset_of(zero_set(b))


def same_quasi_orbit(a: Adele, b: Adele) -> bool:
    """Whether a and b have identical orbit closures."""
    return orbit_closure_contains(a, b) and orbit_closure_contains(b, a)


def chi(a: FullAdele) -> ParameterPoint:
    """The quasi-orbit parametrization of a full adele.

    Invertible adeles map to their unique unit-idele representative,
    noninvertible ones to their extended zero set.
    """
    if not isinstance(a, FullAdele):
        raise ValueError("chi is defined on full adeles")
    if is_invertible(a):
        return ParameterPoint.of_unit(factor_idele(a)[1])
    return ParameterPoint.of_prime_set(zero_set(a))


def exact_orbit_witness(a: Adele, b: Adele) -> Optional[Fraction]:
    """The rational r with scale(r, a) == b, if one exists.

    Unique for a != 0.  For finite adeles only positive witnesses count
    (the acting group is the positive rationals); full adeles admit both
    signs.
    """
    full = _require_same_kind(a, b)
    candidate = None
    if full and a.real_part != 0:
        candidate = b.real_part / a.real_part
    else:
        fin_a = a.finite_part if full else a
        fin_b = b.finite_part if full else b
        for p in sorted(set(fin_a.explicit) | set(fin_b.explicit)):
            va = fin_a.component(p)
            if va != 0:
                candidate = fin_b.component(p) / va
                break
        else:
            if fin_a.default.kind in (RATIONAL, TIMES_P):
                if fin_b.default.kind == fin_a.default.kind:
                    candidate = fin_b.default.q / fin_a.default.q
            else:
                # a vanishes identically; only b == a keeps it in the orbit
                return Fraction(1) if a == b else None
    if candidate is None or candidate == 0:
        return None
    if not full and candidate <= 0:
        return None
    return candidate if scale(candidate, a) == b else None


def is_zero_divisor(a: FiniteAdele) -> bool:
    """Whether an integral finite adele kills something componentwise.

    Equivalent to a component vanishing somewhere; the negation is the
    criterion for the rational orbit to be dense among the integral
    adeles.  Raises NotIntegral off the integral ones.
    """
    if not isinstance(a, FiniteAdele):
        raise ValueError("zero divisors live among the finite adeles")
    for p, v in a.explicit.items():
        if v != 0 and valuation(v, p) < 0:
            raise NotIntegral(f"component {v} at p={int(p)} has negative valuation")
    return a.default.kind == ZERO or any(v == 0 for v in a.explicit.values())


def _default_primes(fin: FiniteAdele, skip=frozenset()) -> Iterator[Prime]:
    """The primes governed by the default rule, ascending, minus skips."""
    for p in iter_primes():
        if p not in fin.explicit and p not in skip:
            yield p


def _smallest_vanishing_finite_prime(fin: FiniteAdele) -> Optional[Prime]:
    explicit_zeros = [p for p, v in fin.explicit.items() if v == 0]
    best = min(explicit_zeros) if explicit_zeros else None
    if fin.default.kind == ZERO:
        d = next(_default_primes(fin))
        if best is None or d < best:
            best = d
    return best


def _check_neighbourhood_kind(a: Adele, nbhd: Neighbourhood) -> bool:
    full = isinstance(a, FullAdele)
    if full and nbhd.real_interval is None:
        raise ValueError("full-adele witnesses need a real interval")
    if not full and nbhd.real_interval is not None:
        raise ValueError("finite-adele neighbourhoods admit no real interval")
    return full


def approx_witness(a: Adele, nbhd: Neighbourhood, scan_cap: int = DEFAULT_SCAN_CAP) -> Fraction:
    """Construct a rational r with scale(r, a) inside the neighbourhood.

    The algorithm mirrors the constructive orbit-closure proofs.  Each
    ball constraint at a prime p with nonvanishing component is rewritten
    as a ball for r itself; its minimal integer solution comes from
    integer_in_ball and the congruences are merged by crt_solve.  For full
    adeles with a nonzero real coordinate the denominator is enlarged,
    through powers of the smallest vanishing prime (Case I) or through the
    default primes dividing a TIMES_P adele (Case II), until the solution
    progression is dense enough to hit the real interval; the progression
    is then scanned in ascending order.

    All free choices are pinned so the returned witness is canonical and
    reproducible.  The result is verified exactly before being returned.

    Raises Infeasible on a zero-pattern conflict, ClosedOrbitMiss when an
    invertible full adele's closed orbit misses the neighbourhood, and
    SearchBoundExceeded if the configurable scan cap is hit.
    """
    full = _check_neighbourhood_kind(a, nbhd)
    if scan_cap < 1:
        raise ValueError("scan cap must be positive")

    if full and is_invertible(a):
        return _closed_orbit_search(a, nbhd, scan_cap)

    # feasibility: a vanishing coordinate can only meet a ball through 0
    for p, ball in nbhd.balls.items():
        if a.component(p) == 0 and not ball.contains(0):
            raise Infeasible(
                f"component at p={int(p)} vanishes but the ball excludes 0"
            )
    if full:
        lo, hi = nbhd.real_interval
        if a.real_part == 0 and not lo < 0 < hi:
            raise Infeasible("real part vanishes but the interval excludes 0")

    fin = a.finite_part if full else a

    # rewrite each ball constraint as a congruence datum for r
    cong_data = []  # (p, exponent, center of the r-ball scaled by D later)
    denominator_core = 1
    for p, ball in nbhd.balls.items():
        a_p = a.component(p)
        if a_p == 0:
            continue  # feasible ball, satisfied by every r
        gamma = ball.center / a_p
        m = ball.radius_exponent - valuation(a_p, p)
        beta = valuation(gamma, p)
        d_p = max(0, -beta) if beta < m else 0
        denominator_core *= int(p) ** d_p
        e_p = m + d_p
        if e_p >= 1:
            cong_data.append((p, e_p, gamma))

    # integrality at unconstrained explicit primes with negative valuation
    extra_congruences = []
    for p, v in fin.explicit.items():
        if p in nbhd.balls or v == 0:
            continue
        alpha = valuation(v, p)
        if alpha < 0:
            extra_congruences.append((0, int(p) ** -alpha))

    modulus = math.prod(int(p) ** e for p, e, _ in cong_data)
    modulus *= math.prod(m for _, m in extra_congruences)

    # denominator growth for real-interval control (full case only)
    need_interval = full and a.real_part != 0
    tail_factor = 1
    case_one_prime = None
    case_two_primes: Iterator[Prime] = iter(())
    if need_interval:
        lo, hi = nbhd.real_interval
        threshold = abs(a.real_part) * modulus / ((hi - lo) * denominator_core)
        case_one_prime = _smallest_vanishing_finite_prime(fin)
        if case_one_prime is not None:
            while tail_factor <= threshold:
                tail_factor *= int(case_one_prime)
        elif fin.default.kind == TIMES_P:
            case_two_primes = _default_primes(fin, skip=frozenset(nbhd.balls))
            while tail_factor <= threshold:
                tail_factor *= int(next(case_two_primes))
        else:
            raise AssertionError("noninvertible full adele with no vanishing prime must be TIMES_P")

    for _ in range(scan_cap):
        denominator = denominator_core * tail_factor
        congruences = [
            (integer_in_ball(PadicBall(p, gamma * denominator, e)), int(p) ** e)
            for p, e, gamma in cong_data
        ] + extra_congruences
        base = crt_solve(congruences)
        numerator = _pick_numerator(a, nbhd, base, modulus, denominator, full)
        if numerator is not None:
            r = Fraction(numerator, denominator)
            break
        # only a numerator of 0 can fall in range; refine the progression
        if case_one_prime is not None:
            tail_factor *= int(case_one_prime)
        else:
            tail_factor *= int(next(case_two_primes))
    else:
        raise SearchBoundExceeded(f"no witness after {scan_cap} progression refinements")

    scaled = scale(r, a)
    if not nbhd.contains(scaled):
        raise AssertionError(f"constructed witness {r} failed verification")
    return r


def _pick_numerator(
    a: Adele,
    nbhd: Neighbourhood,
    base: int,
    modulus: int,
    denominator: int,
    full: bool,
) -> Optional[int]:
    """First admissible numerator in the CRT solution progression."""
    if not full or a.real_part == 0:
        # no interval constraint: smallest positive solution
        return base if base > 0 else base + modulus
    lo, hi = nbhd.real_interval
    bounds = sorted((lo * denominator / a.real_part, hi * denominator / a.real_part))
    k = (bounds[0] - base) // modulus + 1  # Fraction floor division is exact
    n = base + k * modulus
    while n < bounds[1]:
        if n != 0:
            return int(n)
        n += modulus
    return None


def _closed_orbit_search(a: FullAdele, nbhd: Neighbourhood, scan_cap: int) -> Fraction:
    """Exhaustive exact search for invertible full adeles.

    The orbit is closed, so either some exact r lands in the
    neighbourhood or none does.  Factoring a = r0 * u reduces the search
    to scalings t of the unit u; the ball and integrality constraints
    force the denominator of t to divide a fixed integer, and the real
    interval bounds the numerator, so the candidate set is finite.
    """
    r0, u = factor_idele(a)
    lo, hi = nbhd.real_interval
    lo, hi = lo / u.real_part, hi / u.real_part
    denominator = 1
    for p, ball in nbhd.balls.items():
        floor = min(ball.radius_exponent, valuation(ball.center, p))
        if floor < 0:
            denominator *= int(p) ** -floor
    first = math.floor(lo * denominator) + 1
    last = math.ceil(hi * denominator) - 1
    if last - first + 1 > scan_cap:
        raise SearchBoundExceeded(
            f"{last - first + 1} candidates exceed the scan cap {scan_cap}"
        )
    for n in range(first, last + 1):
        if n == 0:
            continue
        t = Fraction(n, denominator)
        if not lo < t < hi:
            continue
        if nbhd.contains(scale(t, u)):
            return t / r0
    raise ClosedOrbitMiss("the closed orbit misses the neighbourhood")
