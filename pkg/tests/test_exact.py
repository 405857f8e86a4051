import random

import pytest

from gmspec.exact import (
    Mat2,
    QuadSurd,
    cf_eval_periodic,
    cf_matrix,
    decimal_str,
    period_divides_block,
    periodic_cf_expansion,
    surd_canonicalize,
    surd_cmp,
)

FREIMAN = QuadSurd(2221564096, 283748, 462, 491993569)


def test_cf_matrix_fixtures():
    assert cf_matrix((2, 1, 1, 2)) == Mat2(13, 5, 5, 2)
    assert cf_matrix((5, 4)) == Mat2(21, 5, 4, 1)
    assert cf_matrix(()) == Mat2.identity()


def test_cf_matrix_rejects_nonpositive():
    with pytest.raises(ValueError):
        cf_matrix((2, 0, 1))
    with pytest.raises(ValueError):
        cf_matrix((-1,))


def test_cf_matrix_concatenation_homomorphism():
    rng = random.Random(7)
    for _ in range(50):
        s = tuple(rng.randint(1, 9) for _ in range(rng.randint(0, 6)))
        t = tuple(rng.randint(1, 9) for _ in range(rng.randint(0, 6)))
        assert cf_matrix(s) * cf_matrix(t) == cf_matrix(s + t)


def test_cf_matrix_determinant_parity():
    rng = random.Random(8)
    for _ in range(50):
        s = tuple(rng.randint(1, 9) for _ in range(rng.randint(0, 8)))
        assert cf_matrix(s).det() == (-1) ** len(s)


def test_canonicalize_fixtures():
    x = surd_canonicalize(0, 18, 723, 81)
    assert (x.p, x.q, x.D, x.r) == (0, 2, 723, 9)
    y = surd_canonicalize(0, 1, 234252, 81)
    assert (y.p, y.q, y.D, y.r) == (0, 2, 723, 9)
    z = surd_canonicalize(3, 0, 5, 3)
    assert (z.p, z.q, z.D, z.r) == (1, 0, 1, 1)


def test_canonicalize_negative_denominator_and_gcd():
    x = QuadSurd(-4, 2, 8, -6)
    # (-4 + 2*sqrt(8))/(-6) = (4 - 4*sqrt(2))/6 = (2 - 2*sqrt(2))/3
    assert (x.p, x.q, x.D, x.r) == (2, -2, 2, 3)


def test_cmp_fixtures():
    assert surd_cmp(QuadSurd(0, 1, 5, 1), QuadSurd(3, 0, 1, 1)) == -1
    assert surd_cmp(QuadSurd(0, 2, 5, 1), FREIMAN) == -1
    assert surd_cmp(QuadSurd(11, 1, 221, 10), QuadSurd(11, 1, 221, 10)) == 0
    # equality across representations with unextracted square parts
    assert QuadSurd(0, 1, 12, 2) == QuadSurd(0, 1, 3, 1)


def test_cmp_total_order_properties():
    rng = random.Random(11)
    vals = [
        QuadSurd(rng.randint(-9, 9), rng.randint(-5, 5), rng.randint(1, 40), rng.choice([1, 2, 3, 5]))
        for _ in range(40)
    ]
    for x in vals:
        for y in vals:
            assert surd_cmp(x, y) == -surd_cmp(y, x)
    for x in vals:
        for y in vals:
            for z in vals:
                if surd_cmp(x, y) <= 0 and surd_cmp(y, z) <= 0:
                    assert surd_cmp(x, z) <= 0


def test_surd_arithmetic_and_ordering_agree_with_floats():
    rng = random.Random(13)
    for _ in range(100):
        x = QuadSurd(rng.randint(-20, 20), rng.randint(-9, 9), rng.randint(2, 50), rng.randint(1, 9))
        y = QuadSurd(rng.randint(-20, 20), rng.randint(-9, 9), rng.randint(2, 50), rng.randint(1, 9))
        if surd_cmp(x, y) != 0:
            assert (float(x) < float(y)) == (surd_cmp(x, y) < 0)


def test_surd_field_ops():
    phi = QuadSurd(1, 1, 5, 2)
    assert phi * phi == phi + 1  # golden ratio identity
    assert 1 / phi == phi - 1
    assert phi + phi.conjugate() == 1
    assert phi * phi.conjugate() == -1


def test_periodic_cf_fixtures():
    assert periodic_cf_expansion(QuadSurd(11, 1, 221, 10)) == ((), (2, 1, 1, 2))
    assert periodic_cf_expansion(QuadSurd(1, 1, 2, 1)) == ((), (2,))
    assert periodic_cf_expansion(QuadSurd(17, 2, 210, 29)) == ((), (1, 1, 1, 2, 2, 2))
    with pytest.raises(ValueError):
        periodic_cf_expansion(QuadSurd(3, 0, 1, 2))


def test_periodic_cf_nontrivial_preperiod():
    pre, per = periodic_cf_expansion(QuadSurd(0, 1, 7, 1))
    assert pre == (2,)
    assert per == (1, 1, 1, 4)


def test_cf_roundtrip_random():
    rng = random.Random(17)
    for _ in range(80):
        q = rng.choice([i for i in range(-6, 7) if i])
        x = QuadSurd(rng.randint(-8, 8), q, rng.choice([2, 3, 5, 7, 13, 19]), rng.randint(1, 9))
        pre, per = periodic_cf_expansion(x)
        assert cf_eval_periodic(pre, per) == x
        assert all(a >= 1 for a in per)


def test_period_divides_block():
    assert period_divides_block((2,), (2, 2))
    assert period_divides_block((2, 1), (2, 1, 2, 1))
    assert not period_divides_block((2, 1), (2, 1, 2))
    assert not period_divides_block((2, 1), (1, 2, 1, 2))


def test_decimal_rendering():
    assert decimal_str(QuadSurd(0, 1, 2, 1), 12) == "1.41421356237"
    assert decimal_str(FREIMAN, 12) == "4.52782956616"
    assert decimal_str(QuadSurd(-3, 0, 1, 2), 3) == "-1.50"
    assert decimal_str(QuadSurd(0, 1, 5, 1), 4) == "2.236"


def test_str_format():
    assert str(QuadSurd(0, 4, 210, 19)) == "(0 + 4√210)/19"
    assert str(QuadSurd(1, 0, 1, 1)) == "(1 + 0√1)/1"
    assert str(QuadSurd(2, -2, 2, 3)) == "(2 - 2√2)/3"


def test_floor():
    assert QuadSurd(0, 1, 2, 1).floor() == 1
    assert QuadSurd(0, -1, 2, 1).floor() == -2
    assert QuadSurd(7, 0, 1, 2).floor() == 3


def test_huge_radicand_comparisons_stay_exact():
    # squares differing by one unit at ~10^40 scale
    n = 10**20 + 7
    a = QuadSurd(0, 1, n * n - 1, n)
    b = QuadSurd(0, 1, n * n, n)
    assert surd_cmp(a, b) == -1
    assert b == QuadSurd(1, 0, 1, 1)
