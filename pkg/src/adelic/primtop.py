"""The topology of the quasi-orbit parameter spaces.

Four spaces share one closure engine:

* ``pc``       -- a power set of (extended) primes with the power-cofinite
                  topology, whose basic opens are U_G = {T : T does not
                  meet G} for finite G;
* ``tau``      -- prime sets together with the unit ideles, carrying the
                  quotient topology of the full-adele action;
* ``primcq``   -- proper prime sets together with characters of the
                  positive rationals (the finite-adele parametrization);
* ``primfull`` -- characters of the nonzero rationals, proper extended
                  prime sets, and unit ideles (the full-adele
                  parametrization).

Subsets are finite symbolic descriptions (``SetDescriptor``), closures are
again finite descriptions (``ClosedSetDescriptor``), and the closure
operators are total functions on descriptors, so the Kuratowski axioms
can be checked by exact descriptor equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from .adele import EXTENDED_PRIMES, FINITE_PRIMES, PrimeSet, UnitIdele
from .errors import ImproperPoint, MalformedDescriptor, NegativeForQPlus
from .padic import Prime, Rational, is_infinite_place, valuation

# character groups
Q_PLUS = "q_plus"
Q_FULL = "q_full"


class Character:
    """A finitely supported character of the (positive) rationals.

    The positive rationals are free abelian on the primes, so a character
    is pinned by a finite map of prime angles; the full rational group
    adds a sign angle in {0, 1/2} for the value at -1.  Angles are exact
    rationals in [0, 1), denoting points of the unit circle.
    """

    __slots__ = ("group", "sign_angle", "prime_angles")

    def __init__(self, group: str, prime_angles=None, sign_angle: Rational = 0):
        if group not in (Q_PLUS, Q_FULL):
            raise ValueError(f"unknown character group {group!r}")
        sign = Fraction(sign_angle) % 1
        if group == Q_PLUS:
            if sign != 0:
                raise ValueError("characters of the positive rationals have no sign angle")
        elif sign not in (Fraction(0), Fraction(1, 2)):
            raise ValueError("the sign angle must be 0 or 1/2")
        angles = {}
        for p, angle in dict(prime_angles or {}).items():
            angle = Fraction(angle) % 1
            if angle != 0:
                angles[Prime(p)] = angle
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "sign_angle", sign)
        object.__setattr__(self, "prime_angles", tuple(sorted(angles.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Character is immutable")

    def angle_at(self, p) -> Fraction:
        p = Prime(p)
        for q, angle in self.prime_angles:
            if q == p:
                return angle
        return Fraction(0)

    @property
    def is_trivial(self) -> bool:
        return self.sign_angle == 0 and not self.prime_angles

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return (
            self.group == other.group
            and self.sign_angle == other.sign_angle
            and self.prime_angles == other.prime_angles
        )

    def __hash__(self):
        return hash((self.group, self.sign_angle, self.prime_angles))

    def sort_key(self):
        return (
            self.group,
            self.sign_angle,
            tuple((int(p), a.numerator, a.denominator) for p, a in self.prime_angles),
        )

    def __repr__(self) -> str:
        angles = ", ".join(f"{int(p)}: {a}" for p, a in self.prime_angles)
        sign = f", sign={self.sign_angle}" if self.group == Q_FULL else ""
        return f"Character({self.group}, {{{angles}}}{sign})"


def character_eval(c: Character, r: Rational) -> Fraction:
    """Evaluate a character at a nonzero rational, as an angle in [0, 1)."""
    r = Fraction(r)
    if r == 0:
        raise ValueError("characters are evaluated at nonzero rationals")
    if r < 0 and c.group == Q_PLUS:
        raise NegativeForQPlus("this character lives on the positive rationals")
    angle = c.sign_angle if r < 0 else Fraction(0)
    for p, a in c.prime_angles:
        angle += valuation(r, p) * a
    return angle % 1


# ---------------------------------------------------------------------------
# descriptor atoms


@dataclass(frozen=True)
class PrimeSetPoint:
    """A single point of a power-set space."""

    point: PrimeSet


@dataclass(frozen=True)
class SingletonFamily:
    """The infinite family {{p} : p not excluded}; always power-cofinite dense."""

    excluded: frozenset
    base: str = EXTENDED_PRIMES

    def __post_init__(self):
        members = frozenset(
            p if is_infinite_place(p) else Prime(p) for p in self.excluded
        )
        if self.base not in (FINITE_PRIMES, EXTENDED_PRIMES):
            raise ValueError(f"unknown base {self.base!r}")
        if self.base == FINITE_PRIMES and any(is_infinite_place(p) for p in members):
            raise ValueError("INFINITY only belongs to the extended primes")
        object.__setattr__(self, "excluded", members)


@dataclass(frozen=True, eq=False)
class UnitPoint:
    """A single unit idele."""

    unit: UnitIdele

    def __eq__(self, other):
        if not isinstance(other, UnitPoint):
            return NotImplemented
        return self.unit == other.unit

    __hash__ = None


@dataclass(frozen=True, eq=False)
class UnitFamily:
    """An infinite family of unit ideles known only through a finite prefix.

    Whether the real coordinates accumulate at zero is an asserted
    attribute (it is not decidable from finite data); when asserted, the
    prefix must witness it by strictly decreasing real coordinates.  For
    closure purposes an unflagged family stands for its prefix.
    """

    prefix: Tuple[UnitIdele, ...]
    inf_abs_zero: bool = False

    def __post_init__(self):
        prefix = tuple(self.prefix)
        if not all(isinstance(u, UnitIdele) for u in prefix):
            raise ValueError("the prefix must consist of unit ideles")
        if self.inf_abs_zero:
            reals = [u.real_part for u in prefix]
            if len(reals) < 2 or any(x <= y for x, y in zip(reals, reals[1:])):
                raise ValueError(
                    "an accumulation-at-zero assertion needs a strictly "
                    "decreasing prefix of real coordinates"
                )
        object.__setattr__(self, "prefix", prefix)

    __hash__ = None


@dataclass(frozen=True)
class CharacterPoint:
    """A single character."""

    character: Character


@dataclass(frozen=True)
class AllCharacters:
    """The whole character group of the space."""


ALL_CHARACTERS = AllCharacters()

Atom = Union[PrimeSetPoint, SingletonFamily, UnitPoint, UnitFamily, CharacterPoint, AllCharacters]


@dataclass(frozen=True, eq=False)
class SetDescriptor:
    """A finite union of atoms describing a subset of a parameter space."""

    atoms: Tuple[Atom, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))

    @classmethod
    def of(cls, *atoms: Atom) -> "SetDescriptor":
        return cls(atoms)

    def union(self, other: "SetDescriptor") -> "SetDescriptor":
        return SetDescriptor(self.atoms + other.atoms)

    __hash__ = None


def _unit_sort_key(u: UnitIdele):
    # prune entries that restate the default rule so semantically equal
    # units share one canonical key
    pruned = tuple(
        (int(p), v.numerator, v.denominator)
        for p, v in u.explicit.items()
        if v != u.default.value_at(p)
    )
    q = u.default.q
    return (pruned, q.numerator, q.denominator, u.real_part.numerator, u.real_part.denominator)


def _dedupe_units(units: Iterable[UnitIdele]) -> Tuple[UnitIdele, ...]:
    out: List[UnitIdele] = []
    for u in units:
        if not any(u == seen for seen in out):
            out.append(u)
    return tuple(sorted(out, key=_unit_sort_key))


@dataclass(frozen=True, eq=False)
class ClosedSetDescriptor:
    """A canonical finite description of a closed subset.

    Either the whole space, or a union of up-sets of prime sets (each
    denoting its supersets inside the space), finitely many unit points,
    finitely many characters, and optionally the whole character group.
    Canonical form makes equality of closed sets decidable.
    """

    whole_space: bool = False
    up_sets: Tuple[PrimeSet, ...] = ()
    unit_points: Tuple[UnitIdele, ...] = ()
    character_points: Tuple[Character, ...] = ()
    all_characters: bool = False

    def __post_init__(self):
        if self.whole_space:
            object.__setattr__(self, "up_sets", ())
            object.__setattr__(self, "unit_points", ())
            object.__setattr__(self, "character_points", ())
            object.__setattr__(self, "all_characters", False)
            return
        # absorb redundant up-sets: supersets of a kept base add nothing
        kept: List[PrimeSet] = []
        for s in sorted(set(self.up_sets), key=lambda t: t.sort_key()):
            if not any(o.base == s.base and o.is_subset_of(s) for o in kept):
                kept = [t for t in kept if not (t.base == s.base and s.is_subset_of(t))]
                kept.append(s)
        object.__setattr__(self, "up_sets", tuple(sorted(kept, key=lambda t: t.sort_key())))
        object.__setattr__(self, "unit_points", _dedupe_units(self.unit_points))
        chars = () if self.all_characters else tuple(
            sorted(set(self.character_points), key=Character.sort_key)
        )
        object.__setattr__(self, "character_points", chars)

    @property
    def is_empty(self) -> bool:
        return not (
            self.whole_space
            or self.up_sets
            or self.unit_points
            or self.character_points
            or self.all_characters
        )

    def union(self, other: "ClosedSetDescriptor") -> "ClosedSetDescriptor":
        if self.whole_space or other.whole_space:
            return ClosedSetDescriptor(whole_space=True)
        return ClosedSetDescriptor(
            up_sets=self.up_sets + other.up_sets,
            unit_points=self.unit_points + other.unit_points,
            character_points=self.character_points + other.character_points,
            all_characters=self.all_characters or other.all_characters,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosedSetDescriptor):
            return NotImplemented
        return (
            self.whole_space == other.whole_space
            and self.up_sets == other.up_sets
            and self.all_characters == other.all_characters
            and self.character_points == other.character_points
            and len(self.unit_points) == len(other.unit_points)
            and all(a == b for a, b in zip(self.unit_points, other.unit_points))
        )

    __hash__ = None

    def __repr__(self) -> str:
        if self.whole_space:
            return "ClosedSetDescriptor(WHOLE_SPACE)"
        parts = []
        if self.up_sets:
            parts.append(f"up_sets={list(self.up_sets)}")
        if self.unit_points:
            parts.append(f"units={len(self.unit_points)}")
        if self.all_characters:
            parts.append("all_characters")
        elif self.character_points:
            parts.append(f"characters={len(self.character_points)}")
        return f"ClosedSetDescriptor({', '.join(parts) or 'empty'})"


EMPTY_CLOSED = ClosedSetDescriptor()
WHOLE_SPACE = ClosedSetDescriptor(whole_space=True)


# ---------------------------------------------------------------------------
# the closure engine


def pc_basic_open(excluded: Iterable) -> Callable[[PrimeSet], bool]:
    """The membership predicate of the basic open U_G = {T : T meets no G}."""
    members = frozenset(p if is_infinite_place(p) else Prime(p) for p in excluded)

    def predicate(t: PrimeSet) -> bool:
        return not any(t.contains(p) for p in members)

    return predicate


_DescriptorInput = Union[SetDescriptor, ClosedSetDescriptor, Sequence]


def _coerce_atoms(data: _DescriptorInput) -> Tuple[Optional[ClosedSetDescriptor], Tuple[Atom, ...]]:
    """Normalize input into atoms; closed input is passed through whole."""
    if isinstance(data, ClosedSetDescriptor):
        return data, ()
    if isinstance(data, SetDescriptor):
        return None, data.atoms
    atoms = []
    for item in data:
        if isinstance(item, PrimeSet):
            atoms.append(PrimeSetPoint(item))
        elif isinstance(
            item, (PrimeSetPoint, SingletonFamily, UnitPoint, UnitFamily, CharacterPoint, AllCharacters)
        ):
            atoms.append(item)
        else:
            raise MalformedDescriptor(f"not a descriptor atom: {item!r}")
    return None, tuple(atoms)


def _split_atoms(atoms: Sequence[Atom]):
    prime_points: List[PrimeSet] = []
    families: List[SingletonFamily] = []
    units: List[UnitIdele] = []
    unit_families: List[UnitFamily] = []
    characters: List[Character] = []
    all_chars = False
    for atom in atoms:
        if isinstance(atom, PrimeSetPoint):
            prime_points.append(atom.point)
        elif isinstance(atom, SingletonFamily):
            families.append(atom)
        elif isinstance(atom, UnitPoint):
            units.append(atom.unit)
        elif isinstance(atom, UnitFamily):
            unit_families.append(atom)
        elif isinstance(atom, CharacterPoint):
            characters.append(atom.character)
        elif isinstance(atom, AllCharacters):
            all_chars = True
        else:
            raise MalformedDescriptor(f"not a descriptor atom: {atom!r}")
    return prime_points, families, units, unit_families, characters, all_chars


def pc_dense(data: _DescriptorInput) -> bool:
    """Whether a prime-set description meets every basic open U_G.

    A finite list of points is dense exactly when it contains the empty
    set; a singleton family is always dense because cofinitely many
    singletons dodge any finite G.
    """
    closed, atoms = _coerce_atoms(data)
    if closed is not None:
        if closed.whole_space:
            return True
        return any(s.is_empty for s in closed.up_sets)
    prime_points, families, units, unit_families, characters, all_chars = _split_atoms(atoms)
    if units or unit_families or characters or all_chars:
        raise MalformedDescriptor("density is asked of prime-set descriptions only")
    return bool(families) or any(s.is_empty for s in prime_points)


def _up_set_closure(prime_points, families) -> Tuple[PrimeSet, ...]:
    up = list(prime_points)
    for fam in families:
        # the power-cofinite closure of a singleton family is everything
        up.append(PrimeSet.finite((), base=fam.base))
    return tuple(up)


def pc_closure(data: _DescriptorInput) -> ClosedSetDescriptor:
    """Closure in the bare power-cofinite space.

    The closure of a point is its up-set of supersets; a list closes to
    the union of up-sets, and the whole space appears as the up-set of
    the empty set.
    """
    closed, atoms = _coerce_atoms(data)
    if closed is not None:
        if closed.unit_points or closed.character_points or closed.all_characters:
            raise MalformedDescriptor("the power-cofinite space holds prime sets only")
        return ClosedSetDescriptor(up_sets=closed.up_sets) if not closed.whole_space else WHOLE_SPACE
    prime_points, families, units, unit_families, characters, all_chars = _split_atoms(atoms)
    if units or unit_families or characters or all_chars:
        raise MalformedDescriptor("the power-cofinite space holds prime sets only")
    return ClosedSetDescriptor(up_sets=_up_set_closure(prime_points, families))


def tau_closure(data: _DescriptorInput) -> ClosedSetDescriptor:
    """Closure in the quotient topology on prime sets joined with units.

    A power-cofinite dense prime-set part, or a unit family whose real
    coordinates accumulate at zero, closes to the whole space.  Otherwise
    the prime-set part closes power-cofinitely and finite unit sets, being
    bounded away from zero, are already closed.
    """
    closed, atoms = _coerce_atoms(data)
    if closed is not None:
        if closed.character_points or closed.all_characters:
            raise MalformedDescriptor("the tau space has no characters")
        if not closed.whole_space and any(s.is_empty for s in closed.up_sets):
            return WHOLE_SPACE  # the up-set of the empty set is dense
        return closed
    prime_points, families, units, unit_families, characters, all_chars = _split_atoms(atoms)
    if characters or all_chars:
        raise MalformedDescriptor("the tau space has no characters")
    for s in prime_points:
        if s.base != EXTENDED_PRIMES:
            raise MalformedDescriptor("tau prime sets live over the extended primes")
    for fam in families:
        if fam.base != EXTENDED_PRIMES:
            raise MalformedDescriptor("tau prime sets live over the extended primes")
    if bool(families) or any(s.is_empty for s in prime_points):
        return WHOLE_SPACE
    if any(f.inf_abs_zero for f in unit_families):
        return WHOLE_SPACE
    for f in unit_families:
        units.extend(f.prefix)
    return ClosedSetDescriptor(
        up_sets=_up_set_closure(prime_points, families), unit_points=tuple(units)
    )


def _validate_proper(prime_points, families, base: str, space: str):
    for s in prime_points:
        if s.base != base:
            raise MalformedDescriptor(
                f"{space} prime sets live over the {base}, got {s.base}"
            )
        if s.is_whole_base:
            raise ImproperPoint(f"the full prime set is not a point of {space}")
    for fam in families:
        if fam.base != base:
            raise MalformedDescriptor(
                f"{space} prime sets live over the {base}, got {fam.base}"
            )


def primcq_closure(data: _DescriptorInput) -> ClosedSetDescriptor:
    """Closure in the finite-adele parametrization: proper prime sets
    joined with characters of the positive rationals.

    Every neighbourhood of a character contains all the proper prime
    sets, so any nonempty prime-set part drags the whole character group
    into its closure; finite character sets are closed.
    """
    closed, atoms = _coerce_atoms(data)
    if closed is not None:
        if closed.unit_points:
            raise MalformedDescriptor("this space has no unit points")
        if closed.whole_space:
            return WHOLE_SPACE
        prime_points = list(closed.up_sets)
        families: List[SingletonFamily] = []
        characters = list(closed.character_points)
        all_chars = closed.all_characters
    else:
        prime_points, families, units, unit_families, characters, all_chars = _split_atoms(atoms)
        if units or unit_families:
            raise MalformedDescriptor("this space has no unit points")
    _validate_proper(prime_points, families, FINITE_PRIMES, "this space")
    for c in characters:
        if c.group != Q_PLUS:
            raise MalformedDescriptor("characters here live on the positive rationals")
    if bool(families) or any(s.is_empty for s in prime_points):
        return WHOLE_SPACE
    up_sets = _up_set_closure(prime_points, families)
    if up_sets:
        all_chars = True
    return ClosedSetDescriptor(
        up_sets=up_sets,
        character_points=tuple(characters),
        all_characters=all_chars,
    )


def prim_full_closure(data: _DescriptorInput) -> ClosedSetDescriptor:
    """Closure in the full-adele parametrization: characters of the
    rationals, proper extended prime sets, and unit ideles.

    Prime-set parts behave as in the finite-adele space (dragging in all
    characters); unit parts bounded away from zero are closed as they
    stand, while an accumulating unit family closes to everything.
    """
    closed, atoms = _coerce_atoms(data)
    if closed is not None:
        if closed.whole_space:
            return WHOLE_SPACE
        prime_points = list(closed.up_sets)
        families: List[SingletonFamily] = []
        units = list(closed.unit_points)
        unit_families: List[UnitFamily] = []
        characters = list(closed.character_points)
        all_chars = closed.all_characters
    else:
        prime_points, families, units, unit_families, characters, all_chars = _split_atoms(atoms)
    _validate_proper(prime_points, families, EXTENDED_PRIMES, "the full-adele Prim space")
    for c in characters:
        if c.group != Q_FULL:
            raise MalformedDescriptor("characters here live on the full rational group")
    if bool(families) or any(s.is_empty for s in prime_points):
        return WHOLE_SPACE
    if any(f.inf_abs_zero for f in unit_families):
        return WHOLE_SPACE
    for f in unit_families:
        units.extend(f.prefix)
    up_sets = _up_set_closure(prime_points, families)
    if up_sets:
        all_chars = True
    return ClosedSetDescriptor(
        up_sets=up_sets,
        unit_points=tuple(units),
        character_points=tuple(characters),
        all_characters=all_chars,
    )


def closed_contains_atom(closed: ClosedSetDescriptor, atom: Atom) -> bool:
    """Whether the set an atom denotes sits inside a closed description."""
    if closed.whole_space:
        return True
    if isinstance(atom, PrimeSetPoint):
        return any(up.is_subset_of(atom.point) for up in closed.up_sets)
    if isinstance(atom, SingletonFamily):
        return any(up.is_empty for up in closed.up_sets)
    if isinstance(atom, UnitPoint):
        return any(atom.unit == u for u in closed.unit_points)
    if isinstance(atom, UnitFamily):
        if atom.inf_abs_zero:
            return False  # only the whole space swallows an accumulating family
        return all(
            any(u == v for v in closed.unit_points) for u in atom.prefix
        )
    if isinstance(atom, CharacterPoint):
        return closed.all_characters or atom.character in closed.character_points
    if isinstance(atom, AllCharacters):
        return closed.all_characters
    raise MalformedDescriptor(f"not a descriptor atom: {atom!r}")


def point_specializes(x, y) -> bool:
    """Whether y lies in the tau-closure of the single point x.

    Both arguments are quasi-orbit parameter points.  The empty prime set
    is dense, so it specializes to everything; a nonempty prime set
    specializes exactly to its supersets; a unit class only to itself.
    """
    return closed_contains_atom(tau_closure([_parameter_atom(x)]), _parameter_atom(y))


def _parameter_atom(point) -> Atom:
    # local import: quasiorbit already imports the adele layer
    from .quasiorbit import PRIME_SET, ParameterPoint

    if not isinstance(point, ParameterPoint):
        raise ValueError("expected a quasi-orbit parameter point")
    if point.kind == PRIME_SET:
        return PrimeSetPoint(point.prime_set)
    return UnitPoint(point.unit)


def prim_equal(
    left: Tuple[PrimeSet, Character], right: Tuple[PrimeSet, Character]
) -> bool:
    """The identification of (prime set, character) pairs in the
    finite-adele primitive space.

    Pairs agree when the prime sets agree, except over the full prime set
    where the characters must also match.
    """
    (s, gamma), (t, chi_) = left, right
    for c in (gamma, chi_):
        if c.group != Q_PLUS:
            raise MalformedDescriptor("characters here live on the positive rationals")
    for ps in (s, t):
        if ps.base != FINITE_PRIMES:
            raise MalformedDescriptor("prime sets here live over the finite primes")
    if s != t:
        return False
    if s.is_whole_base:
        return gamma == chi_
    return True
