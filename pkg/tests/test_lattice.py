import random
from fractions import Fraction

import pytest

from gmspec.exact import cf_matrix
from gmspec.farey import IrreducibleFraction
from gmspec.gmtree import ALL_SIGMAS, GMParams, gm_pair, parse_sigma
from gmspec.lattice import (
    admissible_sequence,
    admissible_sequence_with_delta,
    gm_distance,
    gm_length,
    segment_sign_sequence,
)
from gmspec.verify import grid_fractions

F = IrreducibleFraction.parse
P120 = GMParams(1, 2, 0)


def test_admissible_fixtures():
    assert admissible_sequence(F("2/5"), GMParams(0, 0, 0)) == (2, 1, 1, 1, 1, 2, 2, 1, 1, 2)
    assert admissible_sequence(F("3/2"), GMParams(0, 0, 0)) == (2, 2, 2, 2, 1, 1)
    assert admissible_sequence(F("2/5"), P120) == (5, 1, 3, 3, 1, 5, 4, 1, 3, 4)
    assert admissible_sequence(F("0/1"), P120) == (3, 1)
    assert admissible_sequence(F("1/0"), P120) == (4, 1)
    assert admissible_sequence(F("0/1"), GMParams(0, 0, 0)) == (1, 1)
    assert admissible_sequence(F("2/3"), GMParams(1, 2, 0, parse_sigma("(1 2 3)"))) == (
        5, 1, 1, 5, 3, 2,
    )


def test_admissible_structure():
    rng = random.Random(41)
    for _ in range(40):
        params = GMParams(
            rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3), rng.choice(ALL_SIGMAS)
        )
        t = rng.choice(grid_fractions(5))
        s = admissible_sequence(t, params)
        assert len(s) % 2 == 0
        assert s[0] == 2 + params.k1 + params.k2 + params.k3
        if t.num < t.den:
            assert s[1] == 1 and s[-1] != 1
        elif t.num > t.den:
            assert s[1] != 1 and s[-1] == 1


def test_admissible_semi_palindrome_structure():
    # interior entries mirror around the middle with a coefficient correction
    rng = random.Random(42)
    half, one, two = F("1/2"), F("1/1"), F("2/1")
    for _ in range(120):
        params = GMParams(rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3))
        t = rng.choice(grid_fractions(6))
        s = admissible_sequence(t, params)
        n = len(s)
        k_t = params.k_at(gm_pair(t, params).pos)
        if t == one:
            assert s == (2 + params.k1 + params.k2 + params.k3, 2 + params.kappa[1])
        elif t == half:
            assert n == 4 and s[3] == s[2] + 1 + k_t
        elif t == two:
            assert n == 4 and s[1] == s[2] + 1 + k_t
        elif t < one:
            assert s[2] + 1 == s[-1]
            for i in range(1, n // 2 - 2):
                assert s[2 + i] == s[n - 1 - i]
            assert s[n // 2] == s[n // 2 + 1] + (-1) ** (n // 2 + 1) * k_t
        else:
            assert s[1] == s[-2] + 1
            for i in range(1, n // 2 - 2):
                assert s[1 + i] == s[n - 2 - i]
            assert s[n // 2 - 1] == s[n // 2] + (-1) ** (n // 2) * k_t


def test_admissible_duality():
    # the reversed-arrangement sequence of 1/t is (a1, an, a_{n-1}, ..., a2)
    rng = random.Random(43)
    for _ in range(60):
        params = GMParams(
            rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3), rng.choice(ALL_SIGMAS)
        )
        t = rng.choice(grid_fractions(5))
        s = admissible_sequence(t, params)
        s_star = admissible_sequence(t.reciprocal(), params.dual())
        assert s_star == (s[0],) + s[1:][::-1]


def test_concrete_delta_matches_symbolic():
    rng = random.Random(44)
    for _ in range(30):
        params = GMParams(
            rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3), rng.choice(ALL_SIGMAS)
        )
        t = rng.choice(grid_fractions(5))
        want = admissible_sequence(t, params)
        delta = Fraction(1, 4 * (t.num + t.den) ** 2)
        assert admissible_sequence_with_delta(t, params, delta) == want
        assert admissible_sequence_with_delta(t, params, delta / 2) == want


def test_segment_fixtures():
    assert segment_sign_sequence((0, 0), (3, 2), P120) == (4, 4, 5, 4)
    assert segment_sign_sequence((0, 0), (6, 4), P120) == (4, 5, 4, 4, 5, 1, 3, 5, 4, 4)
    assert segment_sign_sequence((0, 0), (3, 2), P120, endpoints=(1, -1)) == (
        1, 3, 4, 5, 3, 1,
    )
    assert gm_length((1, 3, 4, 5, 3, 1)) == 373


def test_segment_unit_steps():
    for d in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)):
        assert segment_sign_sequence((2, 3), (2 + d[0], 3 + d[1]), P120) == ()
    with pytest.raises(ValueError):
        segment_sign_sequence((1, 1), (1, 1), P120)


def test_gm_length_fixtures():
    assert gm_length((1, 7, 1, 8, 1, 1, 2, 2, 6, 5)) == 33848
    assert gm_length((4, 4, 5, 4)) == 373
    assert gm_length(()) == 1


def test_gm_distance_fixtures():
    assert gm_distance((0, 0), (3, 2), P120) == 373
    assert gm_distance((1, 1), (1, 1), P120) == 0
    assert gm_distance((5, -2), (6, -2), P120) == 1


def test_distance_equals_tree_value_for_coprime_segments():
    rng = random.Random(45)
    for _ in range(40):
        params = GMParams(
            rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3), rng.choice(ALL_SIGMAS)
        )
        t = rng.choice(grid_fractions(5))
        d = gm_distance((0, 0), (t.den, t.num), params)
        assert d == gm_pair(t, params).value


def test_segment_side_independence():
    rng = random.Random(46)
    cases = 0
    while cases < 30:
        params = GMParams(rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3))
        ax, ay = rng.randint(-4, 4), rng.randint(-4, 4)
        dx, dy = rng.randint(-8, 8), rng.randint(-8, 8)
        import math

        if (dx, dy) == (0, 0) or math.gcd(dx, dy) == 1:
            continue
        cases += 1
        b = (ax + dx, ay + dy)
        left = gm_length(segment_sign_sequence((ax, ay), b, params, "left"))
        right = gm_length(segment_sign_sequence((ax, ay), b, params, "right"))
        assert left == right


def test_segment_endpoint_sign_independence():
    rng = random.Random(47)
    for _ in range(30):
        params = GMParams(rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3))
        dx, dy = rng.randint(1, 7), rng.randint(1, 7)
        lengths = {
            gm_length(segment_sign_sequence((0, 0), (dx, dy), params, endpoints=(e0, e1)))
            for e0 in (1, -1, "merge")
            for e1 in (1, -1, "merge")
        }
        assert len(lengths) == 1


def test_segment_translation_invariance():
    rng = random.Random(48)
    for _ in range(30):
        params = GMParams(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2))
        ax, ay = rng.randint(-5, 5), rng.randint(-5, 5)
        dx, dy = rng.randint(-6, 6), rng.randint(-6, 6)
        if (dx, dy) == (0, 0):
            continue
        d0 = gm_distance((0, 0), (dx, dy), params)
        assert gm_distance((ax, ay), (ax + dx, ay + dy), params) == d0


def test_distance_symmetry():
    rng = random.Random(50)
    for _ in range(30):
        params = GMParams(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2))
        a = (rng.randint(-4, 4), rng.randint(-4, 4))
        b = (rng.randint(-4, 4), rng.randint(-4, 4))
        assert gm_distance(a, b, params) == gm_distance(b, a, params)


def test_segment_length_against_bruteforce_matchings():
    from gmspec.snake import build_snake_graph, count_matchings_bruteforce

    rng = random.Random(51)
    checked = 0
    while checked < 20:
        params = GMParams(rng.randint(0, 1), rng.randint(0, 1), rng.randint(0, 1))
        b = (rng.randint(-3, 3), rng.randint(-3, 3))
        if b == (0, 0):
            continue
        seq = segment_sign_sequence((0, 0), b, params)
        if sum(seq) > 16:
            continue
        checked += 1
        assert gm_length(seq) == count_matchings_bruteforce(build_snake_graph(seq))


def test_tail_of_sequence_is_segment_sequence_length():
    # the straight segment's matching count equals the tail continuant of s(t)
    rng = random.Random(49)
    for _ in range(30):
        params = GMParams(
            rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3), rng.choice(ALL_SIGMAS)
        )
        t = rng.choice(grid_fractions(5))
        s = admissible_sequence(t, params)
        assert gm_distance((0, 0), (t.den, t.num), params) == cf_matrix(s).c
