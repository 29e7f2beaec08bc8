#!/usr/bin/env python3
"""Orbit closures under rational scaling, and the constructive witnesses.

The closure of a scaling orbit is cut out by the zero set (noninvertible
case) or is the orbit itself (invertible full adeles).  Membership of a
neighbourhood in the closure is witnessed by an explicit rational, built
from ball congruences and the Chinese Remainder Theorem and verified
exactly before it is returned.
"""

from fractions import Fraction

from adelic import (
    ClosedOrbitMiss,
    DefaultSpec,
    FiniteAdele,
    FullAdele,
    Neighbourhood,
    PadicBall,
    SearchBudget,
    UnitIdele,
    approx_witness,
    embed_rational,
    exact_orbit_witness,
    orbit_closure_contains,
    same_quasi_orbit,
    scale,
    witness_by_search,
    zero_set,
)

F = Fraction

print("== closures via zero sets ==")
a = FiniteAdele({2: F(0)}, DefaultSpec.rational(1))
b = FiniteAdele({2: F(0), 3: F(0)}, DefaultSpec.rational(1))
print("S(a) =", zero_set(a), " S(b) =", zero_set(b))
print("b in closure(orbit(a)):", orbit_closure_contains(a, b))
print("a in closure(orbit(b)):", orbit_closure_contains(b, a))
print("same quasi-orbit:", same_quasi_orbit(a, b))

print()
print("== an exact witness when the orbits literally meet ==")
print("2 -> 6 by r =", exact_orbit_witness(embed_rational(2), embed_rational(6)))

print()
print("== a CRT witness for a finite-adele neighbourhood ==")
one = embed_rational(1)
nbhd = Neighbourhood({2: PadicBall(2, F(0), 3), 3: PadicBall(3, F(1), 1)})
r = approx_witness(one, nbhd)
print("need r = 0 (mod 8) and r = 1 (mod 3):  r =", r)
print("verified:", nbhd.contains(scale(r, one)))
print("the brute-force search agrees:", witness_by_search(one, nbhd, SearchBudget(height_bound=50)))

print()
print("== full adeles: the real coordinate is steered by the denominator ==")
case_one = FullAdele(FiniteAdele({2: F(0)}, DefaultSpec.rational(1)), F(1))
v = Neighbourhood({3: PadicBall(3, F(2), 1)}, real_interval=(F(5), F(6)))
r = approx_witness(case_one, v)
print("a vanishes at 2, target wants r = 2 (mod 3) and r in (5,6):  r =", r)
print("verified:", v.contains(scale(r, case_one)))

print()
print("== divisible tails supply denominators instead ==")
case_two = FullAdele(FiniteAdele({}, DefaultSpec.times_p(1)), F(1))
w = Neighbourhood(
    {2: PadicBall(2, F(5), 2), 3: PadicBall(3, F(1), 1)},
    real_interval=(F(10), F(21, 2)),
)
r = approx_witness(case_two, w)
print("witness:", r, " verified:", w.contains(scale(r, case_two)))

print()
print("== invertible orbits are closed: approximation can genuinely fail ==")
ones = embed_rational(1, kind="full")
stray = UnitIdele(FiniteAdele({2: F(3)}, DefaultSpec.rational(1)), F(1))
tight = Neighbourhood({2: PadicBall(2, F(1), 3)}, real_interval=(F(7, 8), F(9, 8)))
print("target pins the orbit of 1 at r = 1, which misses", stray)
try:
    approx_witness(stray, tight)
except ClosedOrbitMiss as exc:
    print("ClosedOrbitMiss:", exc)
