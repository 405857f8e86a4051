"""Exact elements of the generalized discrete Markov spectra.

Values are quadratic surds sqrt(Delta)/n with
Delta(n, i) = ((3 + k1 + k2 + k3) * n - k_i)^2 - 4.  Enumeration walks the
solution trees for the even permutations only (the full union is unchanged),
deduplicates by exact value, and sorts ascending.  The window scan compares
exactly against the stored transition-interval upper endpoint.

Finite-depth enumeration can only certify membership: a scan lists every
enumerated element inside the window but cannot by itself exhaust the
spectra, although values grow toward 3 + k1 + k2 + k3 along every branch and
leave the window once n is large.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import QuadSurd, cf_matrix
from .farey import IrreducibleFraction
from .gmtree import ALTERNATING, GMParams, enumerate_tree, gm_pair

__all__ = [
    "FREIMAN_CONSTANT",
    "TRANSITION_CAVEAT",
    "QForm",
    "SpectrumElement",
    "ell_periodic",
    "lagrange_value",
    "alpha_fixed_point",
    "markov_value",
    "qform_of",
    "markov_sup_numeric",
    "markov_sup_exact",
    "enumerate_spectrum",
    "transition_scan",
]

# upper end of the transition window [3, c_F)
FREIMAN_CONSTANT = QuadSurd(2221564096, 283748, 462, 491993569)

TRANSITION_CAVEAT = (
    "finite-depth enumeration certifies membership only; deeper tree levels "
    "cannot add window elements once their values exceed the upper endpoint, "
    "but the scan is exhaustive only over the enumerated vertices"
)


@dataclass(frozen=True)
class QForm:
    """Indefinite binary quadratic form a*x^2 + b*xy + c*y^2, exact rationals."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        if self.discriminant <= 0:
            raise ValueError("form must be indefinite (positive discriminant)")

    @property
    def discriminant(self) -> Fraction:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x: int, y: int) -> Fraction:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __str__(self) -> str:
        return f"x^2 + ({self.b})xy + ({self.c})y^2" if self.a == 1 else (
            f"({self.a})x^2 + ({self.b})xy + ({self.c})y^2"
        )


@dataclass(frozen=True)
class SpectrumElement:
    """A spectrum value together with one witness (tree, label, pair)."""

    value: QuadSurd
    n: int
    pos: int
    t: IrreducibleFraction
    params: GMParams

    def sort_key(self) -> Fraction:
        return self.value.squared_fraction()

    def to_json(self) -> dict:
        from .gmtree import format_sigma

        return {
            "k1": self.params.k1,
            "k2": self.params.k2,
            "k3": self.params.k3,
            "sigma": format_sigma(self.params.sigma),
            "t": str(self.t),
            "n": self.n,
            "pos": self.pos,
            **self.value.to_json(),
            "decimal": self.value.decimal(),
        }


def ell_periodic(entries: Sequence[int]) -> QuadSurd:
    """Bi-infinite periodization value sqrt(tr^2 - (-1)^n * 4) / c for the
    convergent matrix [[a,b],[c,d]] of the block."""
    seq = tuple(entries)
    if not seq:
        raise ValueError("block must be nonempty")
    m = cf_matrix(seq)
    if m.c == 0:
        raise ValueError("block has zero lower-left convergent entry")
    disc = m.trace() ** 2 - (4 if len(seq) % 2 == 0 else -4)
    return QuadSurd(0, 1, disc, m.c)


def lagrange_value(entries: Sequence[int]) -> QuadSurd:
    """Maximum periodization value over all splittings of the repeated block.

    All cyclic rotations share the trace, so the maximum is the trace surd
    over the minimal lower-left convergent entry among rotations.
    """
    seq = tuple(entries)
    if not seq:
        raise ValueError("block must be nonempty")
    n = len(seq)
    c_min = None
    for i in range(n):
        rot = seq[i:] + seq[:i]
        c = cf_matrix(rot).c
        if c_min is None or c < c_min:
            c_min = c
    disc = cf_matrix(seq).trace() ** 2 - (4 if n % 2 == 0 else -4)
    return QuadSurd(0, 1, disc, c_min)


def alpha_fixed_point(entries: Sequence[int]) -> QuadSurd:
    """Positive fixed point (a - d + sqrt((a+d)^2 - 4 det))/(2c) of the
    Moebius action of the block's convergent matrix; equals the value of the
    purely periodic continued fraction with this block."""
    m = cf_matrix(tuple(entries))
    if m.c == 0:
        raise ValueError("block has zero lower-left convergent entry")
    disc = m.trace() ** 2 - 4 * m.det()
    return QuadSurd(m.a - m.d, 1, disc, 2 * m.c)


def markov_value(t: IrreducibleFraction, params: GMParams) -> SpectrumElement:
    """Spectrum element sqrt(Delta(n_t, i_t)) / n_t at the label t."""
    pair = gm_pair(t, params)
    n = pair.value
    delta = (params.coeff_sum * n - params.k_at(pair.pos)) ** 2 - 4
    return SpectrumElement(QuadSurd(0, 1, delta, n), n, pair.pos, t, params)


def qform_of(entries: Sequence[int]) -> QForm:
    """Monic form x^2 - ((a-d)/c) xy - (b/c) y^2 whose root pair is the fixed
    point of the block and its conjugate."""
    m = cf_matrix(tuple(entries))
    if m.c == 0:
        raise ValueError("block has zero lower-left convergent entry")
    return QForm(Fraction(1), -Fraction(m.a - m.d, m.c), -Fraction(m.b, m.c))


# ---------------------------------------------------------------------------
# numeric supremum scan for a form
# ---------------------------------------------------------------------------

def _int_form(q: QForm) -> tuple[int, int, int, int]:
    """(R, A, B, C) with q(x,y) = (A x^2 + B xy + C y^2)/R and R > 0."""
    r = math.lcm(q.a.denominator, q.b.denominator, q.c.denominator)
    return r, int(q.a * r), int(q.b * r), int(q.c * r)


def markov_sup_numeric(q: QForm, bound: int) -> float:
    """Max of sqrt(disc)/|q(x,y)| over 0 < max(|x|,|y|) <= bound.

    A lower bound for the supremum over all lattice points.  Returns inf when
    the form vanishes at a scanned point.
    """
    exact = markov_sup_exact(q, bound)
    if exact is None:
        return math.inf
    return float(exact)


def markov_sup_exact(q: QForm, bound: int) -> QuadSurd | None:
    """Exact value of the bounded-box supremum, or None if the form vanishes.

    The minimizing x for each y is adjacent to one of the two real roots, so
    only a few candidates per y are evaluated; the minimum |q| itself is
    exact.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    r, A, B, C = _int_form(q)
    if A == 0:
        raise ValueError("form must have a nonzero x^2 coefficient")
    disc = B * B - 4 * A * C

    # rational approximations of the two roots of A z^2 + B z + C, with error
    # far below 1/bound so candidate floors are off by at most one
    prec = 80
    sq = Fraction(math.isqrt(disc << (2 * prec)), 1 << prec)
    roots = ((-B + sq) / (2 * A), (-B - sq) / (2 * A))

    best: int | None = None
    for y in range(0, bound + 1):
        if y == 0:
            candidates: list[int] = [1]
        else:
            candidates = []
            for root in roots:
                base = math.floor(root * y)
                candidates.extend(
                    x for x in range(base - 1, base + 3) if -bound <= x <= bound
                )
        for x in candidates:
            val = abs(A * x * x + B * x * y + C * y * y)
            if val == 0:
                return None
            if best is None or val < best:
                best = val
    assert best is not None
    # value sqrt(disc_int)/best == sqrt(disc(q))/min|q| since disc_int = R^2 disc(q)
    return QuadSurd(0, 1, disc, best)


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------

def _boundary_elements(params: GMParams) -> list[SpectrumElement]:
    zero = IrreducibleFraction(0, 1)
    inf = IrreducibleFraction(1, 0)
    return [markov_value(zero, params), markov_value(inf, params)]


def enumerate_spectrum(
    k: tuple[int, int, int], depth: int
) -> list[SpectrumElement]:
    """Distinct spectrum values from all trees of k at tree depth <= depth.

    The permutation ranges over the even permutations (the union over all
    six is the same set); both boundary labels feed every tree and exact
    value equality deduplicates across trees.  Ascending order.
    """
    seen: dict[Fraction, SpectrumElement] = {}
    for sigma in ALTERNATING:
        params = GMParams(*k, sigma)
        elems = _boundary_elements(params)
        for t, node in enumerate_tree(params, depth):
            n, pos = node.mid.value, node.mid.pos
            delta = (params.coeff_sum * n - params.k_at(pos)) ** 2 - 4
            elems.append(
                SpectrumElement(QuadSurd(0, 1, delta, n), n, pos, t, params)
            )
        for el in elems:
            key = el.sort_key()
            if key not in seen:
                seen[key] = el
    return [seen[key] for key in sorted(seen)]


def _max_workers() -> int:
    try:
        return max(1, int(os.environ.get("GMSPEC_THREADS", "1")))
    except ValueError:
        return 1


def transition_scan(
    kmax: int, depth: int
) -> list[tuple[tuple[int, int, int], SpectrumElement]]:
    """Every enumerated spectrum element with value in [3, c_F), over all
    coefficient triples with max component <= kmax.

    Results are (triple, element) pairs sorted by triple then value; see
    TRANSITION_CAVEAT for what a finite scan does and does not certify.
    """
    triples = [
        (i, j, l)
        for i in range(kmax + 1)
        for j in range(kmax + 1)
        for l in range(kmax + 1)
    ]
    three = QuadSurd.from_fraction(3)

    def scan_one(k: tuple[int, int, int]):
        hits = []
        for el in enumerate_spectrum(k, depth):
            if el.value < three:
                continue
            if el.value < FREIMAN_CONSTANT:
                hits.append((k, el))
        return hits

    workers = _max_workers()
    out: list[tuple[tuple[int, int, int], SpectrumElement]] = []
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for hits in pool.map(scan_one, triples):
                out.extend(hits)
    else:
        for k in triples:
            out.extend(scan_one(k))
    return out
