from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from adelic.adele import (
    EXTENDED_PRIMES,
    FINITE_PRIMES,
    DefaultSpec,
    FiniteAdele,
    FullAdele,
    Neighbourhood,
    PrimeSet,
    UnitIdele,
    absolute_value,
    component,
    embed_rational,
    factor_idele,
    is_invertible,
    scale,
    xi_partial,
    zero_set,
)
from adelic.errors import InfinityOnFiniteAdele, NotInvertible, ZeroComponent
from adelic.padic import INFINITE_VALUATION, INFINITY, PadicBall, Prime

F = Fraction

small_nonzero = st.fractions(
    min_value=F(-60), max_value=F(60), max_denominator=50
).filter(lambda q: q != 0)


def finite(explicit, default):
    return FiniteAdele(explicit, default)


def full(explicit, default, real):
    return FullAdele(FiniteAdele(explicit, default), real)


class TestConstruction:
    def test_default_support_must_be_explicit(self):
        with pytest.raises(ValueError):
            finite({}, DefaultSpec.rational(F(1, 3)))
        finite({Prime(3): F(1, 3)}, DefaultSpec.rational(F(1, 3)))  # fine

    def test_times_p_component(self):
        a = finite({}, DefaultSpec.times_p(1))
        assert a.component(7) == 7
        assert a.component(2) == 2

    def test_zero_default_carries_no_q(self):
        with pytest.raises(ValueError):
            DefaultSpec(("zero"), F(1))
        with pytest.raises(ValueError):
            DefaultSpec.rational(0)

    def test_semantic_equality_ignores_redundant_entries(self):
        a = finite({2: F(6), 3: F(6)}, DefaultSpec.rational(6))
        b = finite({2: F(6), 3: F(6), 5: F(6)}, DefaultSpec.rational(6))
        assert a == b
        c = finite({2: F(6), 3: F(6), 5: F(7)}, DefaultSpec.rational(6))
        assert a != c

    def test_unit_idele_validation(self):
        UnitIdele(FiniteAdele({}, DefaultSpec.rational(1)), F(1))
        with pytest.raises(ValueError):
            UnitIdele(FiniteAdele({2: F(2)}, DefaultSpec.rational(1)), F(1))
        with pytest.raises(ValueError):
            UnitIdele(FiniteAdele({}, DefaultSpec.rational(1)), F(-1))
        with pytest.raises(ValueError):
            UnitIdele(FiniteAdele({}, DefaultSpec.zero()), F(1))


class TestEmbed:
    def test_six(self):
        a = embed_rational(6)
        assert set(a.explicit) == {2, 3}
        assert a.explicit[Prime(2)] == 6
        assert a.default == DefaultSpec.rational(6)

    def test_zero(self):
        a = embed_rational(0)
        assert a.explicit == {}
        assert a.default == DefaultSpec.zero()
        assert a.is_zero

    def test_one_third_full(self):
        a = embed_rational(F(1, 3), kind="full")
        assert set(a.explicit) == {3}
        assert a.real_part == F(1, 3)


class TestScale:
    def test_half_of_two_is_one(self):
        assert scale(F(1, 2), embed_rational(2)) == embed_rational(1)

    def test_preserves_zero_sets_of_zero_default(self):
        a = finite({5: F(1)}, DefaultSpec.zero())
        assert zero_set(scale(3, a)) == zero_set(a)

    def test_migrates_denominator_prime(self):
        a = finite({3: F(1)}, DefaultSpec.rational(1))
        b = scale(F(1, 3), a)
        assert b.component(3) == F(1, 3)
        assert b.default == DefaultSpec.rational(F(1, 3))

    @given(small_nonzero, small_nonzero)
    def test_action_composes(self, r, s):
        a = full({5: F(5), 7: F(0)}, DefaultSpec.rational(5), F(3))
        assert scale(r, scale(s, a)) == scale(r * s, a)
        assert scale(1, a) == a

    @given(small_nonzero)
    def test_zero_set_invariant(self, r):
        a = full({2: F(0), 5: F(4)}, DefaultSpec.rational(1), F(2))
        assert zero_set(scale(r, a)) == zero_set(a)


class TestComponent:
    def test_truncated_view(self):
        t = component(embed_rational(6), 5, 2)
        assert t.valuation == 0 and t.unit_residue == 6

    def test_times_p_view(self):
        t = component(finite({}, DefaultSpec.times_p(1)), 7, 1)
        assert t.valuation == 1 and t.unit_residue == 1

    def test_infinity(self):
        a = embed_rational(F(5, 2), kind="full")
        assert component(a, INFINITY) == F(5, 2)
        with pytest.raises(InfinityOnFiniteAdele):
            component(embed_rational(1), INFINITY)


class TestZeroSet:
    def test_finite_description(self):
        a = finite({2: F(0), 3: F(0)}, DefaultSpec.rational(1))
        s = zero_set(a)
        assert s == PrimeSet.finite({2, 3})

    def test_embedded_six_has_no_zeros(self):
        assert zero_set(embed_rational(6)) == PrimeSet.finite()

    def test_cofinite_description(self):
        a = finite({5: F(1)}, DefaultSpec.zero())
        assert zero_set(a) == PrimeSet.cofinite({5})

    def test_full_adele_includes_infinity(self):
        a = full({2: F(0)}, DefaultSpec.rational(1), F(0))
        s = zero_set(a)
        assert s.base == EXTENDED_PRIMES
        assert s.contains(INFINITY) and s.contains(2) and not s.contains(3)


class TestPrimeSet:
    def test_subset_rules(self):
        fin = PrimeSet.finite({2})
        assert fin.is_subset_of(PrimeSet.finite({2, 3}))
        assert not PrimeSet.finite({2, 3}).is_subset_of(fin)
        assert fin.is_subset_of(PrimeSet.cofinite({3}))
        assert not fin.is_subset_of(PrimeSet.cofinite({2}))
        assert not PrimeSet.cofinite({2}).is_subset_of(fin)
        assert PrimeSet.cofinite({2, 3}).is_subset_of(PrimeSet.cofinite({2}))
        assert not PrimeSet.cofinite({2}).is_subset_of(PrimeSet.cofinite({2, 3}))

    def test_base_mismatch(self):
        with pytest.raises(ValueError):
            PrimeSet.finite({2}).is_subset_of(PrimeSet.finite({2}, base=EXTENDED_PRIMES))
        with pytest.raises(ValueError):
            PrimeSet.finite({INFINITY})

    def test_restrict(self):
        assert PrimeSet.cofinite({3}).restrict({2, 3, 5}) == {2, 5}
        assert PrimeSet.finite({2, 7}).restrict({2, 3}) == {2}


class TestInvertibility:
    def test_embedded_rational_is_invertible(self):
        assert is_invertible(embed_rational(6, kind="full"))

    def test_zero_component_blocks(self):
        assert not is_invertible(full({2: F(0)}, DefaultSpec.rational(1), F(1)))

    def test_times_p_blocks(self):
        a = full({}, DefaultSpec.times_p(1), F(1))
        assert all(a.component(p) != 0 for p in (2, 3, 5))
        assert not is_invertible(a)

    def test_zero_real_blocks(self):
        assert not is_invertible(full({}, DefaultSpec.rational(1), F(0)))


class TestAbsoluteValue:
    @given(small_nonzero)
    def test_product_formula(self, q):
        assert absolute_value(embed_rational(q, kind="full")) == 1

    def test_explicit_example(self):
        assert absolute_value(full({2: F(8)}, DefaultSpec.rational(1), F(3))) == F(3, 8)

    def test_noninvertible_gives_zero(self):
        assert absolute_value(full({}, DefaultSpec.times_p(1), F(1))) == 0

    @given(small_nonzero)
    def test_scaling_invariance(self, r):
        a = full({2: F(8), 3: F(1, 9)}, DefaultSpec.rational(1), F(5))
        assert absolute_value(scale(r, a)) == absolute_value(a)


class TestXiPartial:
    def setup_method(self):
        self.a = embed_rational(6, kind="full")

    def test_partial_products(self):
        assert xi_partial(self.a, {2}) == 3
        assert xi_partial(self.a, {2, 3}) == 1
        assert xi_partial(self.a, set()) == 6

    def test_zero_component_error(self):
        bad = full({2: F(0)}, DefaultSpec.rational(1), F(1))
        with pytest.raises(ZeroComponent):
            xi_partial(bad, {2})
        with pytest.raises(ZeroComponent):
            xi_partial(full({}, DefaultSpec.rational(1), F(0)), set())

    def test_tail_net_monotone(self):
        a = full({2: F(4), 3: F(1, 3), 5: F(0)}, DefaultSpec.rational(4), F(7))
        # once F contains the negative-valuation prime 3, growing F shrinks xi
        chain = [{3}, {2, 3}, {2, 3, 7}, {2, 3, 7, 11}]
        values = [xi_partial(a, fs) for fs in chain]
        assert values == sorted(values, reverse=True)


class TestFactorIdele:
    def test_embedded_six(self):
        r, u = factor_idele(embed_rational(6, kind="full"))
        assert r == 6
        assert u == embed_rational(1, kind="full")

    def test_negative_sign(self):
        r, u = factor_idele(embed_rational(-2, kind="full"))
        assert r == -2
        assert u == embed_rational(1, kind="full")

    def test_unit_maps_to_itself(self):
        u0 = UnitIdele(FiniteAdele({2: F(3)}, DefaultSpec.rational(1)), F(2))
        r, u = factor_idele(u0)
        assert r == 1 and u == u0

    def test_not_invertible(self):
        with pytest.raises(NotInvertible):
            factor_idele(full({2: F(0)}, DefaultSpec.rational(1), F(1)))

    @given(small_nonzero, st.fractions(min_value=F(1, 9), max_value=F(9), max_denominator=9))
    def test_roundtrip(self, r, real):
        u = UnitIdele(FiniteAdele({2: F(7), 5: F(1, 3)}, DefaultSpec.rational(1)), real)
        a = scale(r, u)
        r2, u2 = factor_idele(FullAdele(a.finite_part, a.real_part))
        assert r2 == r and u2 == u
        assert scale(r2, u2) == a


class TestNeighbourhood:
    def test_membership(self):
        v = Neighbourhood({2: PadicBall(2, F(0), 3), 3: PadicBall(3, F(1), 1)})
        assert v.contains(embed_rational(16))
        assert not v.contains(embed_rational(4))
        # integrality is enforced outside the constrained primes
        assert not v.contains(FiniteAdele({5: F(1, 5)}, DefaultSpec.rational(1)))

    def test_interval_discipline(self):
        v = Neighbourhood({}, real_interval=(F(5), F(7)))
        assert v.contains(embed_rational(6, kind="full"))
        assert not v.contains(embed_rational(7, kind="full"))  # endpoints excluded
        with pytest.raises(ValueError):
            v.contains(embed_rational(1))
        with pytest.raises(ValueError):
            Neighbourhood({}).contains(embed_rational(1, kind="full"))

    def test_ball_admits_non_integral_member(self):
        v = Neighbourhood({2: PadicBall(2, F(11, 2), -1)}, real_interval=(F(5), F(6)))
        assert v.contains(embed_rational(F(11, 2), kind="full"))

    def test_interval_must_be_nonempty(self):
        with pytest.raises(ValueError):
            Neighbourhood({}, real_interval=(F(1), F(1)))
