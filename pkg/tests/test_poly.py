import itertools

import pytest

from alg2d import (
    ALL_ELEMENTS,
    GF,
    QQ,
    Poly,
    RationalSplittingUnsupported,
    RootCount,
    ZeroPolynomial,
    cubic_root_count,
    distinct_root_count,
    parse_poly,
    poly_gcd,
    roots_in_field,
    splitting_field,
    sqrt_in_ext,
)


def P(field, *ints):
    return Poly.from_ints(field, ints)


def test_gcd_shared_linear_factor():
    F = GF(5)
    g = poly_gcd(P(F, -1, 0, 1), P(F, -1, 1))  # y^2-1, y-1
    assert g == P(F, -1, 1)


def test_gcd_cubic_cyclotomic():
    F = GF(7)
    g = poly_gcd(P(F, -1, 0, 0, 1), P(F, 1, 1, 1))  # y^3-1 = (y-1)(y^2+y+1)
    assert g == P(F, 1, 1, 1)


def test_gcd_of_zeros_is_zero():
    F = GF(3)
    assert poly_gcd(Poly.zero(F), Poly.zero(F)).is_zero


def test_gcd_is_monic_and_divides():
    F = GF(5)
    f = P(F, 2, 1) * P(F, 3, 1) * P(F, 1, 2)
    g = P(F, 2, 1) * P(F, 4, 3)
    h = poly_gcd(f, g)
    assert h.lead() == F.one
    assert (f % h).is_zero and (g % h).is_zero


def test_roots_double_root_at_zero():
    F = GF(11)
    assert roots_in_field(P(F, 0, 0, 3)) == [F.zero]


def test_roots_3y2_minus_1_mod_11():
    F = GF(11)
    assert roots_in_field(P(F, -1, 0, 3)) == [F.el(2), F.el(9)]


def test_roots_irreducible_quadratic_gf2():
    F = GF(2)
    assert roots_in_field(P(F, 1, 1, 1)) == []


def test_roots_zero_polynomial_marker():
    assert roots_in_field(Poly.zero(GF(3))) is ALL_ELEMENTS


def test_roots_over_q_rational_root_search():
    f = P(QQ, -2, 1) * P(QQ, 3, 2) * P(QQ, 1, 0, 1)  # roots 2 and -3/2
    roots = roots_in_field(f)
    assert [r.text() for r in roots] == ["-3/2", "2"]
    assert roots_in_field(P(QQ, 1, 0, 1)) == []


def test_roots_satisfy_polynomial_no_duplicates():
    for F in (GF(5), GF(2, 2), GF(3, 2)):
        for idx in range(0, F.order**3, 7):
            coeffs = []
            rem = idx
            for _ in range(3):
                coeffs.append(F.from_index(rem % F.order))
                rem //= F.order
            f = Poly(F, coeffs)
            if f.is_zero:
                continue
            roots = roots_in_field(f)
            assert len(set(roots)) == len(roots)
            assert all(f(r).is_zero for r in roots)


def test_splitting_field_examples():
    F2 = GF(2)
    ext, roots = splitting_field(P(F2, 1, 1, 1))
    assert ext == GF(2, 2)
    assert [r.text() for r in roots] == ["w", "1+w"]

    F5 = GF(5)
    ext, roots = splitting_field(P(F5, -3, 1))
    assert ext == F5 and roots == [F5.el(3)]

    ext, roots = splitting_field(P(F5, 0, -1, 0, 1))  # y^3 - y
    assert ext == F5 and roots == [F5.zero, F5.one, F5.el(4)]


def test_splitting_field_degree_divides_six():
    F = GF(5)
    for idx in range(0, 5**4, 3):
        coeffs = []
        rem = idx
        for _ in range(4):
            coeffs.append(F.from_index(rem % 5))
            rem //= 5
        f = Poly(F, coeffs)
        if f.is_zero:
            continue
        ext, roots = splitting_field(f)
        assert 6 % (ext.k // F.k) == 0
        lifted = f.lift(ext)
        assert all(lifted(r).is_zero for r in roots)


def test_splitting_field_rejects_q_and_zero():
    with pytest.raises(RationalSplittingUnsupported):
        splitting_field(P(QQ, 1, 1, 1))
    with pytest.raises(ZeroPolynomial):
        splitting_field(Poly.zero(GF(3)))


def test_classifier_examples():
    F7 = GF(7)
    assert cubic_root_count(F7.zero, F7.zero, F7.zero, F7.el(5)) is RootCount.ZERO
    assert cubic_root_count(F7.one, F7.zero, F7.zero, F7.zero) is RootCount.ONE
    assert cubic_root_count(F7.zero, F7.zero, F7.zero, F7.zero) is RootCount.INFINITE
    F5 = GF(5)
    assert cubic_root_count(F5.one, F5.zero, F5.el(-1), F5.zero) is RootCount.THREE


@pytest.mark.parametrize("field", [(2, 1), (3, 1)])
def test_classifier_matches_splitting_field_exhaustively(field):
    F = GF(*field)
    for a, b, c, d in itertools.product(F.elements(), repeat=4):
        got = cubic_root_count(a, b, c, d)
        f = Poly(F, [d, c, b, a])
        if f.is_zero:
            assert got is RootCount.INFINITE
            continue
        _, roots = splitting_field(f)
        assert got is RootCount.of(len(roots)), (a.text(), b.text(), c.text(), d.text())


def test_classifier_over_q_uses_symmetric_product():
    # y^3 - 3y + 2 = (y-1)^2 (y+2): two distinct roots
    assert cubic_root_count(QQ.el(1), QQ.el(0), QQ.el(-3), QQ.el(2)) is RootCount.TWO
    # y^3 - y: three distinct roots
    assert cubic_root_count(QQ.el(1), QQ.el(0), QQ.el(-1), QQ.el(0)) is RootCount.THREE
    # (y-1)^3
    assert cubic_root_count(QQ.el(1), QQ.el(-3), QQ.el(3), QQ.el(-1)) is RootCount.ONE


def test_sqrt_in_ext_deterministic_and_symmetric():
    F = GF(5)
    r, fld = sqrt_in_ext(F.el(4))
    assert fld == F and r == F.el(2)  # lex-smaller of {2, 3}
    r2, fld2 = sqrt_in_ext(F.el(2))  # 2 is not a square mod 5
    assert fld2 == GF(5, 2)
    from alg2d import embed

    assert (r2 * r2 - embed(F.el(2), fld2)).is_zero
    # both square roots give the same product-style conditions
    assert sqrt_in_ext(F.el(2)) == sqrt_in_ext(F.el(2))


def test_distinct_root_count_matches_splitting_exhaustive_gf4():
    F = GF(2, 2)
    for idx in range(F.order**4):
        coeffs = []
        rem = idx
        for _ in range(4):
            coeffs.append(F.from_index(rem % F.order))
            rem //= F.order
        f = Poly(F, coeffs)
        if f.is_zero:
            continue
        _, roots = splitting_field(f)
        assert distinct_root_count(f) is RootCount.of(len(roots))


def test_poly_text_round_trip():
    F = GF(3, 2)
    f = Poly(F, [F.el([1, 2]), F.zero, F.el([0, 1])])
    assert parse_poly(F, f.text()) == f
