import random

from gmspec.cohn import cohn_closed_form, cohn_recursive, d_matrix
from gmspec.exact import Mat2, cf_matrix
from gmspec.farey import IrreducibleFraction
from gmspec.gmtree import ALL_SIGMAS, GMParams, gm_pair
from gmspec.lattice import admissible_sequence
from gmspec.verify import grid_fractions

F = IrreducibleFraction.parse


def test_d_matrix():
    assert d_matrix(0, 9) == Mat2(0, 0, 0, 0)
    assert d_matrix(2, 6) == Mat2(2, 12, 0, 2)
    assert d_matrix(1, 6) == Mat2(1, 6, 0, 1)


def test_recursive_fixtures():
    assert cohn_recursive(F("1/1"), GMParams(0, 0, 0)) == Mat2(5, 2, 2, 1)
    assert cohn_recursive(F("1/1"), GMParams(1, 2, 0)) == Mat2(21, 5, 4, 1)
    assert cohn_recursive(F("1/2"), GMParams(0, 0, 0)) == Mat2(13, 5, 5, 2)
    # deeper vertices from the example tree
    assert cohn_recursive(F("1/2"), GMParams(1, 2, 0)) == Mat2(98, 23, 17, 4)
    assert cohn_recursive(F("2/1"), GMParams(1, 2, 0)) == Mat2(109, 83, 21, 16)
    assert cohn_recursive(F("2/3"), GMParams(1, 2, 0)) == Mat2(2149, 507, 373, 88)
    # upper-left entry forced by det = 1 and trace = 6*81 - 2
    assert cohn_recursive(F("1/3"), GMParams(1, 2, 0)) == Mat2(467, 98, 81, 17)


def test_closed_form_fixtures():
    assert cohn_closed_form(F("1/2"), GMParams(0, 0, 0)) == Mat2(13, 5, 5, 2)
    assert cohn_closed_form(F("1/1"), GMParams(1, 2, 0)) == Mat2(21, 5, 4, 1)
    assert cohn_closed_form(F("1/0"), GMParams(0, 0, 0)) == Mat2(2, 1, 1, 1)
    assert cohn_closed_form(F("0/1"), GMParams(0, 0, 0)) == Mat2(3, -1, 1, 0)
    assert cohn_closed_form(F("0/1"), GMParams(1, 2, 0)) == Mat2(6, -7, 1, -1)
    assert cohn_closed_form(F("1/0"), GMParams(1, 2, 0)) == Mat2(5, 4, 1, 1)


def test_recursive_equals_closed_form():
    rng = random.Random(21)
    fractions = grid_fractions(4) + [F("0/1"), F("1/0")]
    for _ in range(8):
        params = GMParams(
            rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3), rng.choice(ALL_SIGMAS)
        )
        for t in fractions:
            assert cohn_recursive(t, params) == cohn_closed_form(t, params)


def test_trace_and_determinant():
    rng = random.Random(22)
    for _ in range(6):
        params = GMParams(
            rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3), rng.choice(ALL_SIGMAS)
        )
        for t in grid_fractions(4) + [F("0/1"), F("1/0")]:
            m = cohn_closed_form(t, params)
            pair = gm_pair(t, params)
            assert m.det() == 1
            assert m.trace() == params.coeff_sum * pair.value - params.k_at(pair.pos)
            assert m.c == pair.value


def test_factorization_identity_small_grid():
    rng = random.Random(23)
    for _ in range(6):
        params = GMParams(
            rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2), rng.choice(ALL_SIGMAS)
        )
        for t in grid_fractions(4) + [F("1/0")]:
            assert cf_matrix(admissible_sequence(t, params)) == cohn_closed_form(t, params)


def test_factorization_identity_large_coefficients():
    # spot-check well beyond the acceptance grid's coefficient range
    for params in (GMParams(7, 5, 6), GMParams(0, 11, 4, (2, 3, 1)), GMParams(9, 9, 9)):
        for t in grid_fractions(3) + [F("1/0")]:
            assert cf_matrix(admissible_sequence(t, params)) == cohn_closed_form(t, params)


def test_zero_label_is_excluded_from_factorization():
    # the closed form at 0/1 is not the convergent matrix of its sequence
    params = GMParams(0, 0, 0)
    s = admissible_sequence(F("0/1"), params)
    assert cf_matrix(s) != cohn_closed_form(F("0/1"), params)


def test_sequence_recovery_from_matrix_ratio():
    # expanding (1,1)/(2,1) as an even-length continued fraction returns s(t)
    rng = random.Random(24)
    for _ in range(10):
        params = GMParams(rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3))
        t = rng.choice(grid_fractions(4))
        s = admissible_sequence(t, params)
        m = cohn_closed_form(t, params)
        num, den = m.a, m.c
        digits = []
        while den:
            digits.append(num // den)
            num, den = den, num % den
        if len(digits) % 2:  # force even length: [.., a] = [.., a-1, 1]
            digits[-1] -= 1
            digits.append(1)
        assert tuple(digits) == s
