"""Groebner kernel: division, Buchberger, ideal operations, self-checks."""

from fractions import Fraction
from math import gcd

import pytest
from conftest import (
    pideal,
    poly,
    random_monomial_ideal,
    random_poly_ideal,
    random_polynomial,
    seeded,
)

import sympow.groebner as gb
from sympow import (
    DEGREVLEX,
    LEX,
    BlockElimination,
    MonomialIdeal,
    PolyIdeal,
    Polynomial,
    Ring,
    buchberger,
    divide_exact,
    ideal_equals,
    ideal_intersect,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    normal_form,
)
from sympow.counterexamples import builtin_case_A6
from sympow.ideal_files import monomial_ideal_from_poly


@pytest.fixture
def R3():
    return Ring(("x", "y", "z"))


def poly_ideal_of(I: MonomialIdeal) -> PolyIdeal:
    return PolyIdeal(I.ring, [Polynomial.from_monomial(g) for g in I.generators])


class TestOrders:
    def test_degrevlex_vs_lex(self, R3):
        # x*z^2 vs y^3: degrevlex ranks by degree first, lex by the x-exponent
        a = (1, 0, 2)
        b = (0, 3, 0)
        assert DEGREVLEX.key(a) < DEGREVLEX.key(b)
        assert LEX.key(a) > LEX.key(b)

    def test_degrevlex_tie_break(self):
        # equal degree: the smaller last exponent wins
        assert DEGREVLEX.key((1, 1, 0)) > DEGREVLEX.key((0, 2, 0)) > DEGREVLEX.key((1, 0, 1))

    def test_block_elimination(self):
        # anything with the first variable beats anything without it
        assert BlockElimination(1).key((1, 0, 0)) > BlockElimination(1).key((0, 9, 9))

    def test_multiplicative_random(self, R3):
        rng = seeded(401)
        for order in (DEGREVLEX, LEX, BlockElimination(1)):
            for _ in range(50):
                u = tuple(rng.randint(0, 4) for _ in range(3))
                v = tuple(rng.randint(0, 4) for _ in range(3))
                w = tuple(rng.randint(0, 4) for _ in range(3))
                if order.key(u) < order.key(v):
                    uw = tuple(a + b for a, b in zip(u, w))
                    vw = tuple(a + b for a, b in zip(v, w))
                    assert order.key(uw) < order.key(vw)


class TestPolynomialArithmetic:
    def test_str_and_parse_shapes(self, R3):
        p = poly(R3, "x^2*y - 2*x + 1")
        assert str(p) == "x^2*y - 2*x + 1"
        assert poly(R3, "-x + y") == poly(R3, "y - x")

    def test_product_expands(self, R3):
        p = poly(R3, "(x - y) * (x + y)")
        assert p == poly(R3, "x^2 - y^2")

    def test_pow(self, R3):
        assert poly(R3, "x + y") ** 2 == poly(R3, "x^2 + 2*x*y + y^2")

    def test_exactness_random(self, R3):
        rng = seeded(402)
        for _ in range(50):
            p = random_polynomial(rng, R3)
            q = random_polynomial(rng, R3)
            for c in (p * q + p - q).coeffs.values():
                assert gcd(c.numerator, c.denominator) == 1
                assert c.denominator > 0

    def test_content_normalized(self, R3):
        p = poly(R3, "4*x - 6*y") * Fraction(1, 3)
        q = p.content_normalized()
        assert q == poly(R3, "2*x - 3*y")


class TestNormalForm:
    def test_self_reduction(self, R3):
        f = poly(R3, "x^2*y - z")
        assert normal_form(f, [f]).is_zero()

    def test_monomial_divisor(self, R3):
        assert normal_form(poly(R3, "x^2"), [poly(R3, "x")]).is_zero()

    def test_no_leading_divisibility(self):
        R = Ring(("x", "y", "a", "b", "t"))
        f = poly(R, "y*a - t*b")
        assert normal_form(f, [poly(R, "x*y*a*b")]) == f

    def test_remainder_terms_irreducible(self, R3):
        rng = seeded(403)
        for _ in range(30):
            f = random_polynomial(rng, R3, max_degree=4, max_terms=4)
            G = [random_polynomial(rng, R3) for _ in range(2)]
            G = [g for g in G if not g.is_zero()]
            r = normal_form(f, G)
            for e in r.coeffs:
                for g in G:
                    le, _ = g.leading(DEGREVLEX)
                    assert not all(a <= b for a, b in zip(le, e))


class TestBuchberger:
    def test_monomial_input(self, R3):
        basis = buchberger([poly(R3, "2*x*y"), poly(R3, "4*x^2"), poly(R3, "x^2*y")])
        assert set(basis) == {poly(R3, "x*y"), poly(R3, "x^2")}

    def test_two_linear_forms_lex(self, R3):
        basis = buchberger([poly(R3, "x - y"), poly(R3, "y - z")], LEX)
        assert set(basis) == {poly(R3, "x - z"), poly(R3, "y - z")}

    def test_generators_reduce_to_zero(self):
        case = builtin_case_A6()
        basis = case.ideal.groebner_basis()
        for g in case.ideal.generators:
            assert normal_form(g, list(basis)).is_zero()

    def test_spoly_postcondition_random(self):
        rng = seeded(404)
        log = []
        old = gb.BASIS_LOG
        gb.BASIS_LOG = log
        try:
            for _ in range(20):
                I = random_poly_ideal(rng)
                buchberger(I.generators)
        finally:
            gb.BASIS_LOG = old
        assert log
        for record in log:
            gb.verify_basis(record, recompute=False)

    def test_canonicity_random(self):
        rng = seeded(405)
        for _ in range(20):
            I = random_poly_ideal(rng)
            gens = list(I.generators)
            basis = buchberger(gens)
            rng.shuffle(gens)
            scaled = [g * rng.choice([1, 2, -1, Fraction(1, 2)]) for g in gens]
            assert buchberger(scaled) == basis


class TestIdealOps:
    def test_sum_with_zero(self, R3):
        I = pideal(R3, "x*y - z")
        assert ideal_sum(I, PolyIdeal.zero(R3)).generators == I.generators

    def test_product(self, R3):
        K = ideal_product(pideal(R3, "x"), pideal(R3, "y"))
        assert ideal_equals(K, pideal(R3, "x*y"))

    def test_square_of_three_generators(self):
        case = builtin_case_A6()
        assert len(case.square().generators) == 6

    def test_member(self, R3):
        I = pideal(R3, "x^2 - y", "y*z")
        for g in I.generators:
            assert I.member(g)
        assert I.member(Polynomial.zero(R3))
        assert not I.member(poly(R3, "x"))

    def test_witness_outside_square(self):
        case = builtin_case_A6()
        assert not case.square().member(case.witness)


class TestIntersect:
    def test_principal(self, R3):
        K = ideal_intersect(pideal(R3, "x"), pideal(R3, "y"))
        assert ideal_equals(K, pideal(R3, "x*y"))

    def test_two_planes(self, R3):
        K = ideal_intersect(pideal(R3, "x", "y"), pideal(R3, "x", "z"))
        expected = pideal(R3, "x", "y*z")
        assert ideal_equals(K, expected)
        # both inclusions by brute membership
        for g in K.generators:
            assert pideal(R3, "x", "y").member(g)
            assert pideal(R3, "x", "z").member(g)
        for g in expected.generators:
            assert K.member(g)

    def test_monomial_inputs_match_lcm_formula(self):
        rng = seeded(406)
        for _ in range(50):
            K = random_monomial_ideal(rng, max_vars=5, max_gens=3, max_degree=4)
            L = random_monomial_ideal(rng, max_vars=5, max_gens=3, max_degree=4)
            if K.ring != L.ring or K.is_zero() or L.is_zero():
                continue
            by_kernel = ideal_intersect(poly_ideal_of(K), poly_ideal_of(L))
            assert monomial_ideal_from_poly(by_kernel) == K.intersect(L)

    def test_soundness_random(self):
        rng = seeded(407)
        for _ in range(10):
            I = random_poly_ideal(rng)
            J = random_poly_ideal(rng)
            if I.ring != J.ring:
                continue
            K = ideal_intersect(I, J)
            for g in K.generators:
                assert I.member(g) and J.member(g)


class TestQuotient:
    def test_examples(self, R3):
        x = poly(R3, "x")
        assert ideal_equals(ideal_quotient(pideal(R3, "x^2"), x), pideal(R3, "x"))
        I = pideal(R3, "x*y - z^2", "y^3")
        one = Polynomial.constant(R3, 1)
        assert ideal_equals(ideal_quotient(I, one), I)

    def test_recorded_colon(self):
        case = builtin_case_A6()
        colon = ideal_quotient(case.square(), case.witness)
        assert ideal_equals(colon, case.expected_colon)

    def test_quotient_laws_random(self, R3):
        rng = seeded(408)
        for _ in range(10):
            I = random_poly_ideal(rng, max_vars=3)
            f = random_polynomial(rng, I.ring)
            if f.is_zero():
                continue
            Q = ideal_quotient(I, f)
            for g in Q.generators:
                assert I.member(g * f)
            for g in I.generators:
                assert Q.member(g)

    def test_divide_exact_raises_on_remainder(self, R3):
        with pytest.raises(gb.InternalInvariantError):
            divide_exact(poly(R3, "x^2 + y"), poly(R3, "x"))


class TestEquals:
    def test_permuted_and_scaled(self, R3):
        I = pideal(R3, "x*y - z", "z^2")
        J = PolyIdeal(R3, (poly(R3, "z^2") * 3, poly(R3, "x*y - z") * -2))
        assert ideal_equals(I, J)
        assert ideal_equals(pideal(R3, "x"), PolyIdeal(R3, (poly(R3, "x") * 2,)))

    def test_recorded_square_identity(self):
        from sympow.counterexamples import (
            intersection_of_squared_primes,
            symbolic_square_generators,
        )

        case = builtin_case_A6()
        assert ideal_equals(
            intersection_of_squared_primes(case),
            symbolic_square_generators(case),
        )

    def test_order_invariance_random(self):
        rng = seeded(409)
        cases = 0
        while cases < 20:
            I = random_poly_ideal(rng)
            J = random_poly_ideal(rng)
            if I.ring != J.ring:
                continue
            cases += 1
            v1 = ideal_equals(I, J, DEGREVLEX)
            v2 = ideal_equals(I, J, LEX)
            assert v1 == v2
            # an ideal equals its rescaled self under both orders
            K = PolyIdeal(I.ring, tuple(g * -3 for g in I.generators))
            assert ideal_equals(I, K, DEGREVLEX) and ideal_equals(I, K, LEX)
