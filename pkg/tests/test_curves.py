import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edwards_count.curves import (
    AffinePoint,
    EdwardsCurve,
    ExceptionalAdditionError,
    MontgomeryCurve,
    NotOnCurveError,
    count_edwards,
    count_product_curve,
    edwards_add,
    edwards_contains,
    enumerate_edwards,
    enumerate_montgomery,
    point_order,
    scalar_mul,
)
from edwards_count.field import EnumerationBudgetError, FieldError, build_extension, legendre

from conftest import PRIMES_200, chord_tangent_add, naive_montgomery_points, naive_points

P13_D7 = {
    (0, 1), (0, 12), (1, 0), (2, 4), (2, 9), (4, 2), (4, 11), (5, 6), (5, 7), (6, 5),
    (6, 8), (7, 5), (7, 8), (8, 6), (8, 7), (9, 2), (9, 11), (11, 4), (11, 9), (12, 0),
}
P13_D2 = {(0, 1), (0, 12), (1, 0), (4, 4), (4, 9), (9, 4), (9, 9), (12, 0)}


def as_ints(points):
    return {(P.x.value, P.y.value) for P in points}


class TestConstruction:
    @pytest.mark.parametrize("d", [0, 1, 14])
    def test_rejects_degenerate_d(self, d):
        with pytest.raises(FieldError):
            EdwardsCurve.over_prime(13, d)

    def test_point_validation(self):
        E = EdwardsCurve.over_prime(13, 2)
        with pytest.raises(NotOnCurveError):
            E.point(2, 2)
        assert E.point(4, 4).x == 4

    def test_montgomery_coefficients_for_d2(self):
        M = EdwardsCurve.over_prime(13, 2).montgomery()
        assert (M.c3.value, M.c2.value, M.c1.value) == (1, 6, 1)

    def test_montgomery_needs_cubic(self):
        E = EdwardsCurve.over_prime(7, 2)
        with pytest.raises(FieldError):
            MontgomeryCurve(E.field, 0, 1, 1)


class TestContains:
    def test_examples(self):
        assert edwards_contains(EdwardsCurve.over_prime(7, 2), 1, 0)
        assert edwards_contains(EdwardsCurve.over_prime(13, 2), 4, 4)
        for p, d in [(7, 3), (13, 5), (101, 17)]:
            assert edwards_contains(EdwardsCurve.over_prime(p, d), 0, 1)


class TestEnumeration:
    def test_p7_d4(self):
        assert as_ints(enumerate_edwards(EdwardsCurve.over_prime(7, 4))) == {(0, 1), (0, 6), (1, 0), (6, 0)}

    def test_p13_d7_listed_set(self):
        assert as_ints(enumerate_edwards(EdwardsCurve.over_prime(13, 7))) == P13_D7

    def test_p13_d2_listed_set(self):
        assert as_ints(enumerate_edwards(EdwardsCurve.over_prime(13, 2))) == P13_D2

    def test_sorted_and_distinct(self):
        pts = enumerate_edwards(EdwardsCurve.over_prime(13, 7))
        keys = [P.key() for P in pts]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)

    def test_f9_point_set(self):
        F = build_extension(3, 2)
        a = lambda c0, c1: F([c0, c1])  # c0 + c1 * alpha
        one, zero = a(1, 0), a(0, 0)
        ap1, am1 = a(1, 1), a(2, 1)  # alpha + 1, alpha - 1
        expected = {(one, zero), (-one, zero), (zero, one), (zero, -one)}
        for s, t in itertools.product((1, -1), repeat=2):
            expected.add((s * ap1, t * am1))
            expected.add((s * am1, t * ap1))
        got = {(P.x, P.y) for P in enumerate_edwards(EdwardsCurve(F, 2))}
        assert len(expected) == 12
        assert got == expected

    @pytest.mark.parametrize("p", [p for p in PRIMES_200 if p <= 43])
    def test_matches_double_loop(self, p):
        for d in range(2, p):
            assert as_ints(enumerate_edwards(EdwardsCurve.over_prime(p, d))) == set(naive_points(p, d))
            assert count_edwards(EdwardsCurve.over_prime(p, d)) == len(naive_points(p, d))

    def test_budget(self):
        with pytest.raises(EnumerationBudgetError):
            enumerate_edwards(EdwardsCurve.over_prime(101, 2), budget=50)


class TestProductCurve:
    @pytest.mark.parametrize("p,d,expected", [(13, 2, 8), (7, 2, 6), (11, 2, 12)])
    def test_examples(self, p, d, expected):
        brute = sum(1 for x in range(p) for y in range(p) if (y * y - (x * x - 1) * (d * x * x - 1)) % p == 0)
        assert brute == expected
        assert count_product_curve(p, d) == expected

    @pytest.mark.parametrize("p", PRIMES_200)
    def test_relation_to_edwards(self, p, counts):
        for d in range(2, p - 1):
            M = count_product_curve(p, d)
            assert M == counts[p, d] + legendre(d, p) + 1
            assert 2 <= M <= 2 * p - 2


class TestMontgomeryEnumeration:
    @pytest.mark.parametrize("p,expected", [(11, 11), (7, 7)])
    def test_d2(self, p, expected):
        pts = enumerate_montgomery(EdwardsCurve.over_prime(p, 2).montgomery())
        assert len(pts) == expected
        assert (0, 0) in as_ints(pts)

    @pytest.mark.parametrize("p", [5, 13, 17, 31])
    def test_matches_double_loop(self, p):
        for d in range(2, p):
            pts = enumerate_montgomery(EdwardsCurve.over_prime(p, d).montgomery())
            assert as_ints(pts) == set(naive_montgomery_points(p, d))


class TestSymmetry:
    @pytest.mark.parametrize("p", PRIMES_200[:20])
    def test_sign_symmetry_and_cofactor(self, p):
        for d in range(2, p):
            pts = as_ints(enumerate_edwards(EdwardsCurve.over_prime(p, d)))
            for x, y in pts:
                assert {(-x % p, y), (x, -y % p), (-x % p, -y % p)} <= pts
            assert {(0, 1), (0, p - 1), (1, 0), (p - 1, 0)} <= pts
            assert len(pts) % 4 == 0


class TestGroupLaw:
    def test_doubling_example(self):
        E = EdwardsCurve.over_prime(13, 2)
        P = E.point(4, 4)
        R = edwards_add(E, P, P)
        assert (R.x.value, R.y.value) == chord_tangent_add(13, 2, (4, 4), (4, 4)) == (1, 0)

    def test_identity_and_inverse(self):
        E = EdwardsCurve.over_prime(13, 7)
        for P in enumerate_edwards(E):
            assert edwards_add(E, P, E.identity) == P
            assert edwards_add(E, P, AffinePoint(-P.x, P.y)) == E.identity

    def test_scalar_mul(self):
        E = EdwardsCurve.over_prime(13, 2)
        P = E.point(4, 4)
        assert scalar_mul(E, 0, P) == E.identity
        assert scalar_mul(E, 1, P) == P
        assert scalar_mul(E, 8, P) == E.identity
        assert point_order(E, P, 8) == 8
        assert scalar_mul(E, -3, P) == scalar_mul(E, 5, P)

    def test_exceptional_addition(self):
        E = EdwardsCurve.over_prime(17, 2)  # (2/17) = 1
        hits = 0
        for P, Q in itertools.product(enumerate_edwards(E), repeat=2):
            try:
                edwards_add(E, P, Q)
            except ExceptionalAdditionError:
                hits += 1
        assert hits > 0

    @pytest.mark.parametrize("p", [p for p in PRIMES_200 if p <= 61])
    def test_complete_when_nonsquare(self, p):
        for d in range(2, p):
            if legendre(d, p) != -1:
                continue
            E = EdwardsCurve.over_prime(p, d)
            pts = enumerate_edwards(E)
            for P, Q in itertools.product(pts, repeat=2):
                edwards_add(E, P, Q)

    @pytest.mark.parametrize("p", [13, 29, 37])
    def test_agrees_with_chord_tangent(self, p):
        for d in range(2, p):
            if legendre(d, p) != -1:
                continue
            E = EdwardsCurve.over_prime(p, d)
            pts = enumerate_edwards(E)
            for P, Q in itertools.product(pts, repeat=2):
                ref = chord_tangent_add(p, d, (P.x.value, P.y.value), (Q.x.value, Q.y.value))
                if ref is not None:
                    R = edwards_add(E, P, Q)
                    assert (R.x.value, R.y.value) == ref


@st.composite
def curve_and_points(draw):
    p = draw(st.sampled_from([13, 29, 43, 61]))
    d = draw(st.sampled_from([d for d in range(2, p) if legendre(d, p) == -1]))
    E = EdwardsCurve.over_prime(p, d)
    pts = enumerate_edwards(E)
    idx = st.integers(0, len(pts) - 1)
    return E, pts[draw(idx)], pts[draw(idx)], pts[draw(idx)]


@settings(max_examples=200, deadline=None)
@given(curve_and_points(), st.integers(-50, 50), st.integers(-50, 50))
def test_group_laws_hypothesis(data, k, m):
    E, P, Q, R = data
    add = lambda A, B: edwards_add(E, A, B)
    assert add(P, Q) == add(Q, P)
    assert add(add(P, Q), R) == add(P, add(Q, R))
    assert scalar_mul(E, k + m, P) == add(scalar_mul(E, k, P), scalar_mul(E, m, P))
    S = add(P, Q)
    assert E.contains(S.x, S.y)
