"""Finitely described finite and full adeles.

An adele is stored as a finite map of explicit rational components plus a
default rule covering every other prime.  Three default rules suffice for
the whole library: ZERO (the component vanishes), RATIONAL(q) (the
component is q, a unit at every default prime) and TIMES_P(q) (the
component at the default prime p is q*p, so p divides the adele there).
The archimedean coordinate of a full adele is an exact rational.

Equality of adeles is semantic: two descriptions are equal when they have
the same component at every place, decided by comparing defaults and the
union of explicit keys.  Values are immutable and operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple, Union

from .errors import (
    InfinityOnFiniteAdele,
    NotInvertible,
    ZeroComponent,
)
from .padic import (
    INFINITY,
    PadicBall,
    Prime,
    Rational,
    expand,
    extended_prime_key,
    is_infinite_place,
    primes_dividing,
    valuation,
)

# default rule kinds
ZERO = "zero"
RATIONAL = "rational"
TIMES_P = "times_p"

# prime set bases
FINITE_PRIMES = "finite_primes"
EXTENDED_PRIMES = "extended_primes"


@dataclass(frozen=True)
class DefaultSpec:
    """The rule giving the component at every non-explicit prime."""

    kind: str
    q: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in (ZERO, RATIONAL, TIMES_P):
            raise ValueError(f"unknown default kind {self.kind!r}")
        if self.kind == ZERO:
            if self.q is not None:
                raise ValueError("zero default carries no rational")
        else:
            q = Fraction(self.q)
            if q == 0:
                raise ValueError("rational/times_p default must be nonzero")
            object.__setattr__(self, "q", q)

    @classmethod
    def zero(cls) -> "DefaultSpec":
        return cls(ZERO)

    @classmethod
    def rational(cls, q: Rational) -> "DefaultSpec":
        return cls(RATIONAL, Fraction(q))

    @classmethod
    def times_p(cls, q: Rational) -> "DefaultSpec":
        return cls(TIMES_P, Fraction(q))

    def value_at(self, p: Prime) -> Fraction:
        if self.kind == ZERO:
            return Fraction(0)
        if self.kind == RATIONAL:
            return self.q
        return self.q * p


def _normalize_explicit(explicit) -> Dict[Prime, Fraction]:
    out = {}
    for p, v in dict(explicit).items():
        p = Prime(p)
        if p in out:
            raise ValueError(f"duplicate explicit prime {int(p)}")
        out[p] = Fraction(v)
    return dict(sorted(out.items()))


@dataclass(frozen=True, eq=False)
class FiniteAdele:
    """An element of the restricted product of the p-adic fields.

    Invariant: every prime dividing the default rational appears among
    the explicit keys, so the component at each default prime is a unit
    (RATIONAL) or has valuation exactly one (TIMES_P).  Only explicit
    primes can carry a negative valuation, which keeps the element inside
    the restricted product.
    """

    explicit: Dict[Prime, Fraction]
    default: DefaultSpec

    def __post_init__(self):
        object.__setattr__(self, "explicit", _normalize_explicit(self.explicit))
        if not isinstance(self.default, DefaultSpec):
            raise ValueError("default must be a DefaultSpec")
        if self.default.kind != ZERO:
            missing = [p for p in primes_dividing(self.default.q) if p not in self.explicit]
            if missing:
                raise ValueError(
                    f"default rational {self.default.q} has support {sorted(map(int, missing))} "
                    "outside the explicit map"
                )

    @classmethod
    def _trusted(cls, explicit: Dict[Prime, Fraction], default: DefaultSpec) -> "FiniteAdele":
        # internal fast path for callers that maintain the invariants
        # themselves (scaling never breaks them); skips re-factoring
        obj = object.__new__(cls)
        object.__setattr__(obj, "explicit", dict(sorted(explicit.items())))
        object.__setattr__(obj, "default", default)
        return obj

    def component(self, p) -> Fraction:
        """The exact rational component at a finite prime."""
        p = Prime(p)
        if p in self.explicit:
            return self.explicit[p]
        return self.default.value_at(p)

    @property
    def is_zero(self) -> bool:
        return self.default.kind == ZERO and all(v == 0 for v in self.explicit.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteAdele):
            return NotImplemented
        return _finite_parts_equal(self, other)

    __hash__ = None

    def __repr__(self) -> str:
        parts = ", ".join(f"{int(p)}: {v}" for p, v in self.explicit.items())
        tail = self.default.kind if self.default.kind == ZERO else f"{self.default.kind}({self.default.q})"
        return f"FiniteAdele({{{parts}}}, default={tail})"


def _finite_parts_equal(a: FiniteAdele, b: FiniteAdele) -> bool:
    if a.default != b.default:
        # distinct default rules disagree at infinitely many primes: ZERO
        # vs nonzero everywhere, RATIONAL(q) vs RATIONAL(q'), and
        # RATIONAL vs TIMES_P cannot coincide at more than one prime
        return False
    keys = set(a.explicit) | set(b.explicit)
    return all(a.component(p) == b.component(p) for p in keys)


@dataclass(frozen=True, eq=False)
class FullAdele:
    """A finite adele together with an exact rational archimedean coordinate."""

    finite_part: FiniteAdele
    real_part: Fraction

    def __post_init__(self):
        if not isinstance(self.finite_part, FiniteAdele):
            raise ValueError("finite_part must be a FiniteAdele")
        object.__setattr__(self, "real_part", Fraction(self.real_part))

    @property
    def explicit(self) -> Dict[Prime, Fraction]:
        return self.finite_part.explicit

    @property
    def default(self) -> DefaultSpec:
        return self.finite_part.default

    def component(self, p) -> Fraction:
        """The exact component at a finite prime or at INFINITY."""
        if is_infinite_place(p):
            return self.real_part
        return self.finite_part.component(p)

    @property
    def is_zero(self) -> bool:
        return self.real_part == 0 and self.finite_part.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, FullAdele):
            return NotImplemented
        return self.real_part == other.real_part and _finite_parts_equal(
            self.finite_part, other.finite_part
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"FullAdele({self.finite_part!r}, real={self.real_part})"


class UnitIdele(FullAdele):
    """A full adele in the canonical unit set: every finite component is a
    unit, the default rule is RATIONAL and the real coordinate is positive.

    These are the canonical orbit representatives of invertible adeles.
    """

    def __post_init__(self):
        super().__post_init__()
        if self.default.kind != RATIONAL:
            raise ValueError("unit idele default must be rational")
        if self.real_part <= 0:
            raise ValueError("unit idele real part must be positive")
        for p, v in self.explicit.items():
            if valuation(v, p) != 0:
                raise ValueError(f"component {v} at p={int(p)} is not a unit")

    def __repr__(self) -> str:
        return f"UnitIdele({self.finite_part!r}, real={self.real_part})"


Adele = Union[FiniteAdele, FullAdele]


@dataclass(frozen=True)
class PrimeSet:
    """A finite or cofinite set of (extended) primes.

    ``members`` lists the elements for kind "finite" and the excluded
    elements for kind "cofinite".
    """

    base: str
    kind: str
    members: frozenset

    def __post_init__(self):
        if self.base not in (FINITE_PRIMES, EXTENDED_PRIMES):
            raise ValueError(f"unknown base {self.base!r}")
        if self.kind not in ("finite", "cofinite"):
            raise ValueError(f"unknown kind {self.kind!r}")
        normalized = set()
        for p in self.members:
            if is_infinite_place(p):
                if self.base != EXTENDED_PRIMES:
                    raise ValueError("INFINITY only belongs to the extended primes")
                normalized.add(INFINITY)
            else:
                normalized.add(Prime(p))
        object.__setattr__(self, "members", frozenset(normalized))

    @classmethod
    def finite(cls, members: Iterable = (), base: str = FINITE_PRIMES) -> "PrimeSet":
        return cls(base, "finite", frozenset(members))

    @classmethod
    def cofinite(cls, excluded: Iterable = (), base: str = FINITE_PRIMES) -> "PrimeSet":
        return cls(base, "cofinite", frozenset(excluded))

    def contains(self, p) -> bool:
        p = p if is_infinite_place(p) else Prime(p)
        if self.kind == "finite":
            return p in self.members
        return p not in self.members

    @property
    def is_empty(self) -> bool:
        return self.kind == "finite" and not self.members

    @property
    def is_whole_base(self) -> bool:
        return self.kind == "cofinite" and not self.members

    def is_subset_of(self, other: "PrimeSet") -> bool:
        if self.base != other.base:
            raise ValueError("cannot compare prime sets over different bases")
        if self.kind == "finite":
            if other.kind == "finite":
                return self.members <= other.members
            return not (self.members & other.members)
        # a cofinite set is infinite, so it never fits inside a finite one
        if other.kind == "finite":
            return False
        return other.members <= self.members

    def restrict(self, window: Iterable) -> frozenset:
        """Intersection with a finite window of places."""
        window = frozenset(window)
        if self.kind == "finite":
            return self.members & window
        return window - self.members

    def sort_key(self):
        return (
            0 if self.kind == "finite" else 1,
            self.base,
            tuple(sorted(extended_prime_key(p) for p in self.members)),
        )

    def __repr__(self) -> str:
        names = sorted(self.members, key=extended_prime_key)
        body = "{" + ", ".join("inf" if is_infinite_place(p) else str(int(p)) for p in names) + "}"
        return f"PrimeSet({self.kind} {body})"


@dataclass(frozen=True)
class Neighbourhood:
    """A basic open set: p-adic balls at finitely many primes, integrality
    everywhere else, and (for full adeles) an open rational interval for
    the real coordinate."""

    balls: Dict[Prime, PadicBall]
    real_interval: Optional[Tuple[Fraction, Fraction]] = None

    def __post_init__(self):
        normalized = {}
        for p, ball in dict(self.balls).items():
            p = Prime(p)
            if not isinstance(ball, PadicBall) or ball.prime != p:
                raise ValueError(f"ball at {int(p)} must be a PadicBall at that prime")
            normalized[p] = ball
        object.__setattr__(self, "balls", dict(sorted(normalized.items())))
        if self.real_interval is not None:
            lo, hi = self.real_interval
            lo, hi = Fraction(lo), Fraction(hi)
            if not lo < hi:
                raise ValueError("real interval must be nonempty")
            object.__setattr__(self, "real_interval", (lo, hi))

    def contains(self, a: Adele) -> bool:
        """Exact membership of a finitely described adele."""
        full = isinstance(a, FullAdele)
        if full and self.real_interval is None:
            raise ValueError("full-adele membership needs a real interval")
        if not full and self.real_interval is not None:
            raise ValueError("finite-adele membership admits no real interval")
        for p, ball in self.balls.items():
            if not ball.contains(a.component(p)):
                return False
        fin = a.finite_part if full else a
        # defaults are integral by construction; only explicit entries can stray
        for p, v in fin.explicit.items():
            if p not in self.balls and valuation(v, p) < 0:
                return False
        if full:
            lo, hi = self.real_interval
            if not lo < a.real_part < hi:
                return False
        return True


def embed_rational(q: Rational, kind: str = "finite") -> Adele:
    """Diagonally embed a rational: the component is q at every place."""
    q = Fraction(q)
    explicit = {p: q for p in primes_dividing(q)}
    default = DefaultSpec.zero() if q == 0 else DefaultSpec.rational(q)
    fin = FiniteAdele(explicit, default)
    if kind == "finite":
        return fin
    if kind == "full":
        return FullAdele(fin, q)
    raise ValueError(f"kind must be 'finite' or 'full', got {kind!r}")


def scale(r: Rational, a: Adele) -> Adele:
    """Multiply an adele by a nonzero rational, componentwise at every place.

    Primes dividing r migrate into the explicit map so the default-rule
    invariant survives.
    """
    r = Fraction(r)
    if r == 0:
        raise ValueError("scaling factor must be nonzero")
    if isinstance(a, FullAdele):
        return FullAdele(_scale_finite(r, a.finite_part), a.real_part * r)
    return _scale_finite(r, a)


def _scale_finite(r: Fraction, a: FiniteAdele) -> FiniteAdele:
    explicit = {p: v * r for p, v in a.explicit.items()}
    for p in primes_dividing(r):
        if p not in explicit:
            explicit[p] = a.default.value_at(p) * r
    if a.default.kind == ZERO:
        default = a.default
    else:
        default = DefaultSpec(a.default.kind, a.default.q * r)
    # the support of q*r sits inside the old support plus the primes of r,
    # all of which are explicit now, so the invariant holds by construction
    return FiniteAdele._trusted(explicit, default)


def component(a: Adele, p, precision: Optional[int] = None):
    """Truncated view of the component at an extended prime.

    Finite primes give a TruncatedPadic at the requested precision; the
    archimedean place of a full adele gives the exact rational real part.
    """
    if is_infinite_place(p):
        if not isinstance(a, FullAdele):
            raise InfinityOnFiniteAdele("finite adeles have no archimedean component")
        return a.real_part
    if precision is None:
        raise ValueError("precision is required at a finite prime")
    return expand(a.component(p), Prime(p), precision)


def zero_set(a: Adele) -> PrimeSet:
    """The exact set of places where the component vanishes.

    The description is finite when the default rule is nonzero and
    cofinite when the default is ZERO; for a full adele the set lives in
    the extended primes and contains INFINITY exactly when the real part
    is zero.
    """
    full = isinstance(a, FullAdele)
    base = EXTENDED_PRIMES if full else FINITE_PRIMES
    fin = a.finite_part if full else a
    if fin.default.kind == ZERO:
        excluded = {p for p, v in fin.explicit.items() if v != 0}
        if full and a.real_part != 0:
            excluded.add(INFINITY)
        return PrimeSet.cofinite(excluded, base)
    members = {p for p, v in fin.explicit.items() if v == 0}
    if full and a.real_part == 0:
        members.add(INFINITY)
    return PrimeSet.finite(members, base)


def is_invertible(a: FullAdele) -> bool:
    """True when no component vanishes and only finitely many primes divide a.

    A TIMES_P default has valuation one at infinitely many primes, which
    already rules out invertibility even though nothing vanishes.
    """
    if not isinstance(a, FullAdele):
        raise ValueError("invertibility is a full-adele notion")
    if a.real_part == 0 or a.default.kind != RATIONAL:
        return False
    return all(v != 0 for v in a.explicit.values())


def absolute_value(a: FullAdele) -> Fraction:
    """The product of the normalized absolute values over all places.

    Vanishes exactly on the noninvertible adeles; for an invertible adele
    only the explicit primes contribute factors different from one.
    """
    if not is_invertible(a):
        return Fraction(0)
    result = abs(a.real_part)
    for p, v in a.explicit.items():
        result *= Fraction(p) ** -valuation(v, p)
    return result


def xi_partial(a: FullAdele, primes: Iterable) -> Fraction:
    """The partial product |a_oo| * prod_{p in F} p^-v_p(a) over a finite F.

    These partial products form the nonincreasing tail net converging to
    the absolute value.  Raises ZeroComponent when the real part or a
    component at F vanishes.
    """
    if not isinstance(a, FullAdele):
        raise ValueError("xi_partial is a full-adele operation")
    if a.real_part == 0:
        raise ZeroComponent("real part vanishes")
    result = abs(a.real_part)
    for p in sorted({Prime(p) for p in primes}):
        v = a.component(p)
        if v == 0:
            raise ZeroComponent(f"component at p={int(p)} vanishes")
        result *= Fraction(p) ** -valuation(v, p)
    return result


def factor_idele(a: FullAdele) -> Tuple[Fraction, UnitIdele]:
    """Split an invertible adele as r * u with r rational and u a unit idele.

    r collects the sign of the real part and the prime powers p^v_p(a);
    the factorization is unique.
    """
    if not isinstance(a, FullAdele) or not is_invertible(a):
        raise NotInvertible("only invertible full adeles factor through the units")
    r = Fraction(1 if a.real_part > 0 else -1)
    for p, v in a.explicit.items():
        r *= Fraction(p) ** valuation(v, p)
    u = scale(1 / r, a)
    return r, UnitIdele(u.finite_part, u.real_part)
