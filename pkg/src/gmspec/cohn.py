"""Generalized Cohn matrices.

Two constructions of the matrix C_t attached to a fraction label t: a tree
recursion with a correction term, and a closed form built from the tree value
n_t, its position, and the characteristic number u_t.  The closed form is the
reference implementation; the recursion is the cross-check.
"""

from __future__ import annotations

from .exact import Mat2
from .farey import IrreducibleFraction, farey_path
from .gmtree import GMParams, characteristic_number, gm_pair

__all__ = ["d_matrix", "cohn_recursive", "cohn_closed_form", "closed_form_entries"]


def d_matrix(k: int, coeff_sum: int) -> Mat2:
    """Correction matrix [[k, k*coeff_sum], [0, k]]."""
    return Mat2(k, k * coeff_sum, 0, k)


def _root_matrices(params: GMParams) -> tuple[Mat2, Mat2, Mat2]:
    K = params.coeff_sum
    ka, kb, kc = params.kappa
    left = Mat2(K, -K * ka - 1, 1, -ka)
    mid = Mat2(K * (kb + 2) - kb - 1, K - 1, kb + 2, 1)
    right = Mat2(K - 1 - kc, K - 2 - kc, 1, 1)
    return left, mid, right


def cohn_recursive(t: IrreducibleFraction, params: GMParams) -> Mat2:
    """C_t by descending the matrix tree from the three root matrices.

    Each step subtracts the correction matrix for the coefficient at the
    position of the fraction that drops out of the parent triple, so position
    indices travel with the matrices.
    """
    K = params.coeff_sum
    s = params.sigma
    left, mid, right = _root_matrices(params)
    triple = ((left, s[0]), (mid, s[1]), (right, s[2]))
    if t.is_zero:
        return triple[0][0]
    if t.is_infinity:
        return triple[2][0]
    for step in farey_path(t):
        (mr, pr), (mt, pt), (ms, ps) = triple
        if step == "L":
            new = mr * mt - d_matrix(params.k_at(ps), K)
            triple = ((mr, pr), (new, ps), (mt, pt))
        else:
            new = mt * ms - d_matrix(params.k_at(pr), K)
            triple = ((mt, pt), (new, pr), (ms, ps))
    return triple[1][0]


def closed_form_entries(n: int, u: int, k: int, coeff_sum: int) -> Mat2:
    """[[K*n - k - u, (K*n*u - k*u - u^2 - 1)/n], [n, u]] for K = coeff_sum.

    The division in the upper-right entry is asserted exact.
    """
    b_num = coeff_sum * n * u - k * u - u * u - 1
    b, rem = divmod(b_num, n)
    if rem:
        raise AssertionError(f"inexact division {b_num}/{n} in closed form")
    return Mat2(coeff_sum * n - k - u, b, n, u)


def cohn_closed_form(t: IrreducibleFraction, params: GMParams) -> Mat2:
    """C_t from the tree value n_t, its position coefficient, and the
    characteristic number u_t."""
    pair = gm_pair(t, params)
    return closed_form_entries(
        pair.value,
        characteristic_number(t, params),
        params.k_at(pair.pos),
        params.coeff_sum,
    )
