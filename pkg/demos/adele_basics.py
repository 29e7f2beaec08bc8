#!/usr/bin/env python3
"""Finitely described adeles: embedding, scaling, zero sets, absolute value
and the factorization of invertibles through the unit ideles."""

from fractions import Fraction

from adelic import (
    DefaultSpec,
    FiniteAdele,
    FullAdele,
    absolute_value,
    embed_rational,
    factor_idele,
    is_invertible,
    scale,
    xi_partial,
    zero_set,
)

F = Fraction

print("== diagonal embedding ==")
a = embed_rational(6, kind="full")
print("6 embeds as", a)
print("zero set:", zero_set(a))

print()
print("== the product formula ==")
for q in (F(6), F(-7, 3), F(1024, 45)):
    print(f"  ||{q}|| =", absolute_value(embed_rational(q, kind="full")))

print()
print("== scaling acts componentwise ==")
b = FullAdele(FiniteAdele({2: F(0), 5: F(4)}, DefaultSpec.rational(1)), F(3))
print("b          =", b)
print("(2/7) * b  =", scale(F(2, 7), b))
print("zero sets match:", zero_set(scale(F(2, 7), b)) == zero_set(b))

print()
print("== invertibility and the unit factorization ==")
c = FullAdele(FiniteAdele({2: F(8), 3: F(1, 9)}, DefaultSpec.rational(1)), F(-5))
print("c =", c, " invertible:", is_invertible(c))
r, u = factor_idele(c)
print("c = r * u with r =", r, "and u =", u)
print("reconstruction ok:", scale(r, u) == c)

print()
print("== a divisible tail is never invertible ==")
tail = FullAdele(FiniteAdele({}, DefaultSpec.times_p(1)), F(1))
print("every prime divides", tail)
print("invertible:", is_invertible(tail), " absolute value:", absolute_value(tail))

print()
print("== partial absolute values decrease along the tail net ==")
for primes in [set(), {2}, {2, 3}, {2, 3, 5, 7}]:
    print(f"  xi_F(c) over F={sorted(primes)}:", xi_partial(c, primes))
print("limit (the absolute value):", absolute_value(c))
