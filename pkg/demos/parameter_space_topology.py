#!/usr/bin/env python3
"""The parameter spaces of the quasi-orbits and their closure operators.

Quasi-orbits of full adeles are parametrized by extended prime sets
(noninvertible classes) together with unit ideles (closed invertible
orbits).  Closures of finitely described subsets are again finitely
described, and the specialization order is decidable, so the topology is
fully computable at this level.
"""

from fractions import Fraction

from adelic import (
    Character,
    DefaultSpec,
    EXTENDED_PRIMES,
    FiniteAdele,
    FullAdele,
    ParameterPoint,
    PrimeSet,
    Q_PLUS,
    SetDescriptor,
    UnitFamily,
    UnitPoint,
    character_eval,
    chi,
    iter_primes,
    pc_closure,
    point_specializes,
    prim_equal,
    prim_full_closure,
    primcq_closure,
    tau_closure,
    window_closure,
)

F = Fraction


def ext(*members):
    return PrimeSet.finite(members, base=EXTENDED_PRIMES)


print("== chi sends adeles to parameter points ==")
inv = FullAdele(FiniteAdele({2: F(8)}, DefaultSpec.rational(1)), F(-3))
noninv = FullAdele(FiniteAdele({2: F(0)}, DefaultSpec.rational(1)), F(0))
print("invertible   ->", chi(inv))
print("noninvertible->", chi(noninv))

print()
print("== specialization is superset order on zero sets ==")
x = ParameterPoint.of_prime_set(ext(2))
y = ParameterPoint.of_prime_set(ext(2, 3))
print("{2} specializes to {2,3}:", point_specializes(x, y))
print("{2,3} specializes to {2}:", point_specializes(y, x))
print("the empty set is dense:", point_specializes(ParameterPoint.of_prime_set(ext()), y))

print()
print("== power-cofinite closures are up-sets ==")
print("closure of {{2}} :", pc_closure([PrimeSet.finite({2})]))
print("window check over {2,3}:", window_closure([PrimeSet.finite({2})], {2, 3}))

print()
print("== the famous escaping sequence ==")
units = []
for p, _ in zip(iter_primes(), range(8)):
    a = FullAdele(FiniteAdele({p: F(p)}, DefaultSpec.rational(1)), F(1))
    units.append(chi(a).unit)
print("real coordinates:", [u.real_part for u in units])
finite_prefix = tau_closure(SetDescriptor.of(*(UnitPoint(u) for u in units)))
print("a finite prefix is already closed:", not finite_prefix.whole_space)
family = SetDescriptor.of(UnitFamily(tuple(units), inf_abs_zero=True))
print("declared accumulation at zero makes it dense:", tau_closure(family).whole_space)

print()
print("== the two primitive-space parametrizations ==")
print("primcq closure of {{2}}    :", primcq_closure([PrimeSet.finite({2})]))
print("primfull closure of {{2}}  :", prim_full_closure([ext(2)]))
print("a single unit idele is closed:", prim_full_closure(SetDescriptor.of(UnitPoint(units[0]))))

print()
print("== characters and the identification over the full prime set ==")
gamma = Character(Q_PLUS, {2: F(1, 4), 3: F(1, 3)})
print("gamma(2/3) has angle", character_eval(gamma, F(2, 3)))
whole = PrimeSet.cofinite()
other = Character(Q_PLUS, {2: F(3, 4)})
print("off the full set characters collapse:",
      prim_equal((PrimeSet.finite({2}), gamma), (PrimeSet.finite({2}), other)))
print("over the full set they separate:",
      prim_equal((whole, gamma), (whole, other)))
