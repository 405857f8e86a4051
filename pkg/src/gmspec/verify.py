"""Desk-scale verification suites bundling the library's cross-identities.

The heavy suites share one cached grid: for each fraction label t (tree depth
up to 7) and each coefficient arrangement kappa = (k_sigma(1), k_sigma(2),
k_sigma(3)), a single entry holds the admissible sequence, the tree data
(n, u, position), the convergent matrix of the sequence, the closed-form
matrix, and the minimal lower-left entry over all cyclic rotations.  Trees
with the same kappa are identical up to a relabeling of positions, so every
(triple, permutation) pair resolves to one cached entry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .cohn import closed_form_entries
from .exact import QuadSurd
from .farey import FAREY_ROOT, FareyTriple, IrreducibleFraction
from .gmtree import ALL_SIGMAS, GMParams, IDENTITY, Sigma, enumerate_tree
from .lattice import admissible_sequence
from .snake import build_snake_graph, continuant, count_matchings_bruteforce, rotation_tails
from .spectrum import (
    FREIMAN_CONSTANT,
    ell_periodic,
    enumerate_spectrum,
    lagrange_value,
    markov_value,
    transition_scan,
)

__all__ = ["CheckResult", "SUITE_NAMES", "run_suite", "grid_triples", "grid_fractions"]

GRID_SEED = 20250809
GRID_DEPTH = 7


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def describe(self) -> str:
        return f"[{'pass' if self.ok else 'FAIL'}] {self.name}" + (
            f": {self.detail}" if self.detail else ""
        )


def grid_triples(seed: int = GRID_SEED, extra: int = 20) -> list[tuple[int, int, int]]:
    """All coefficient triples with max <= 1 plus `extra` seeded draws from
    {0..3}^3."""
    low = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    rng = random.Random(seed)
    rand = [
        (rng.randrange(4), rng.randrange(4), rng.randrange(4)) for _ in range(extra)
    ]
    return low + rand


def grid_fractions(depth: int = GRID_DEPTH) -> list[IrreducibleFraction]:
    """All interior tree labels with depth <= depth (2^(depth+1) - 1 of them)."""
    out: list[IrreducibleFraction] = []
    level: list[FareyTriple] = [FAREY_ROOT]
    for d in range(depth + 1):
        out.extend(tr.mid for tr in level)
        if d < depth:
            level = [tr.child(s) for tr in level for s in ("L", "R")]
    return out


# ---------------------------------------------------------------------------
# cached grid entries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridEntry:
    s: tuple[int, ...]
    n: int
    pos_id: int  # position under the identity arrangement
    u: int
    k_t: int
    coeff_sum: int
    cf: tuple[int, int, int, int]  # convergent matrix of s, row-major
    closed: tuple[int, int, int, int]
    rot_min_c: int  # minimal (2,1) entry over cyclic rotations of s


@lru_cache(maxsize=None)
def _node_map(kappa: tuple[int, int, int], depth: int):
    params = GMParams(*kappa, IDENTITY)
    return {t: node for t, node in enumerate_tree(params, depth)}


def _rotation_min_c(seq: tuple[int, ...], m: tuple[int, int, int, int]) -> int:
    m11, m12, m21, m22 = m
    best = m21
    pa, pc = 1, 0
    pb, pd = 0, 1
    sign = 1
    for x in seq[:-1]:
        pa, pb = pa * x + pb, pa
        pc, pd = pc * x + pd, pc
        sign = -sign
        # (2,1) entry of P^-1 M P for the prefix P = [[pa,pb],[pc,pd]]
        val = sign * (m21 * pa * pa - m12 * pc * pc + (m22 - m11) * pa * pc)
        assert val > 0, "rotation entry must be a positive matching count"
        if val < best:
            best = val
    return best


@lru_cache(maxsize=None)
def _grid_entry(t: IrreducibleFraction, kappa: tuple[int, int, int]) -> GridEntry:
    params = GMParams(*kappa, IDENTITY)
    if t.is_boundary:
        from .gmtree import characteristic_number, gm_pair

        pair = gm_pair(t, params)
        n, pos, u = pair.value, pair.pos, characteristic_number(t, params)
    else:
        node = _node_map(kappa, GRID_DEPTH)[t]
        n, pos = node.mid.value, node.mid.pos
        u = node.right.value * pow(node.left.value, -1, n) % n
    k_t = kappa[pos - 1]
    K = params.coeff_sum
    s = admissible_sequence(t, params)
    pa, pb, pc, pd = 1, 0, 0, 1
    for x in s:
        pa, pb = pa * x + pb, pa
        pc, pd = pc * x + pd, pc
    cf = (pa, pb, pc, pd)
    closed = closed_form_entries(n, u, k_t, K)
    rot_min = _rotation_min_c(s, cf)
    return GridEntry(s, n, pos, u, k_t, K, cf, (closed.a, closed.b, closed.c, closed.d), rot_min)


def _kappa(triple: tuple[int, int, int], sigma: Sigma) -> tuple[int, int, int]:
    return GMParams(*triple, sigma).kappa


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def factorization_suite(
    depth: int = GRID_DEPTH,
    triples: Iterable[tuple[int, int, int]] | None = None,
) -> list[CheckResult]:
    """Convergent-matrix factorization of the closed form, with determinant
    and trace identities, over the full (t, triple, sigma) grid.

    The label 0/1 is excluded from the factorization identity (the closed
    form there is not a convergent product); 1/0 is included.
    """
    fractions = grid_fractions(depth) + [IrreducibleFraction(1, 0)]
    triples = list(triples) if triples is not None else grid_triples()
    n_fact = n_det = n_tr = 0
    for triple in triples:
        for sigma in ALL_SIGMAS:
            kap = _kappa(triple, sigma)
            for t in fractions:
                e = _grid_entry(t, kap)
                if e.cf != e.closed:
                    return [
                        CheckResult(
                            "factorization",
                            False,
                            f"t={t} k={triple} sigma={sigma}: {e.cf} != {e.closed}",
                        )
                    ]
                n_fact += 1
                m11, m12, m21, m22 = e.closed
                if m11 * m22 - m12 * m21 != 1:
                    return [CheckResult("determinant", False, f"t={t} k={triple}")]
                n_det += 1
                if m11 + m22 != e.coeff_sum * e.n - e.k_t:
                    return [CheckResult("trace", False, f"t={t} k={triple}")]
                n_tr += 1
    return [
        CheckResult("factorization", True, f"{n_fact} cases"),
        CheckResult("determinant", True, f"{n_det} cases"),
        CheckResult("trace", True, f"{n_tr} cases"),
    ]


def snake_suite(
    exhaustive_sum: int = 12, random_count: int = 200, random_sum: int = 16,
    seed: int = GRID_SEED,
) -> list[CheckResult]:
    """Continuant equals brute-force matching count: every composition with
    entry sum <= exhaustive_sum, plus seeded random sequences with larger sums."""

    def compositions(total: int):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                yield (first, *rest)

    checked = 0
    for total in range(0, exhaustive_sum + 1):
        for seq in compositions(total):
            if continuant(seq) != count_matchings_bruteforce(build_snake_graph(seq)):
                return [CheckResult("snake-oracle", False, f"seq={seq}")]
            checked += 1
    rng = random.Random(seed)
    for _ in range(random_count):
        total = rng.randint(exhaustive_sum + 1, random_sum)
        seq = []
        while total:
            x = rng.randint(1, min(total, 6))
            seq.append(x)
            total -= x
        if continuant(seq) != count_matchings_bruteforce(build_snake_graph(seq)):
            return [CheckResult("snake-oracle", False, f"seq={tuple(seq)}")]
        checked += 1
    return [CheckResult("snake-oracle", True, f"{checked} sequences")]


_PAPER_TAILS_EXPECTED = (8227, 32957, 12039, 12041, 32937, 8261, 9997, 31881, 12199, 11127)


def rotation_suite(
    depth: int = GRID_DEPTH,
    triples: Iterable[tuple[int, int, int]] | None = None,
) -> list[CheckResult]:
    """The tail of the sequence itself minimizes the rotation-tail matching
    counts, on the same grid as the factorization suite; plus the fixed
    ten-tail example at t = 2/5 under (1,2,0)."""
    fractions = grid_fractions(depth)
    triples = list(triples) if triples is not None else grid_triples()
    checked = 0
    for triple in triples:
        for sigma in ALL_SIGMAS:
            kap = _kappa(triple, sigma)
            for t in fractions:
                e = _grid_entry(t, kap)
                if e.rot_min_c != e.cf[2]:
                    return [
                        CheckResult(
                            "rotation-minimality", False, f"t={t} k={triple} sigma={sigma}"
                        )
                    ]
                checked += 1
    out = [CheckResult("rotation-minimality", True, f"{checked} cases")]
    s = admissible_sequence(IrreducibleFraction(2, 5), GMParams(1, 2, 0))
    tails = tuple(continuant(w) for w in rotation_tails(s))
    ok = tails == _PAPER_TAILS_EXPECTED
    out.append(
        CheckResult(
            "rotation-tails-fixture", ok, f"{tails}" if not ok else "ten tail values match"
        )
    )
    return out


def duality_suite(
    depth: int = GRID_DEPTH,
    triples: Iterable[tuple[int, int, int]] | None = None,
    surd_sample_depth: int = 3,
) -> list[CheckResult]:
    """Main-theorem checks on the grid:

    * the spectrum value of t equals both periodization values of s(t)
      (equivalently the sequence tail continuant equals n_t and the identity
      rotation minimizes);
    * the value is invariant under t -> 1/t with the reversed arrangement;
    * characteristic numbers satisfy u(1/t) = n(t) - u*(t) - k(t).

    A small subsample recomputes the three values as full surds through the
    public API.
    """
    fractions = grid_fractions(depth)
    triples = list(triples) if triples is not None else grid_triples()
    n_main = n_dual = n_char = 0
    for triple in triples:
        for sigma in ALL_SIGMAS:
            kap = _kappa(triple, sigma)
            kap_star = kap[::-1]
            for t in fractions:
                e = _grid_entry(t, kap)
                if e.cf[2] != e.n or e.rot_min_c != e.n:
                    return [CheckResult("main-theorem", False, f"t={t} k={triple}")]
                n_main += 1
                recip = t.reciprocal()
                e_star = _grid_entry(recip, kap_star)
                tr = e.cf[0] + e.cf[3]
                tr_s = e_star.cf[0] + e_star.cf[3]
                if (tr * tr - 4) * e_star.rot_min_c**2 != (tr_s * tr_s - 4) * e.rot_min_c**2:
                    return [CheckResult("lagrange-duality", False, f"t={t} k={triple}")]
                n_dual += 1
                # u_t = n_t - u*(1/t) - k_t; the starred value lives in the
                # tree with the reversed arrangement at the reciprocal label
                u_star_recip = _grid_entry(recip, kap_star).u
                if e.u != e.n - u_star_recip - e.k_t:
                    return [CheckResult("characteristic-duality", False, f"t={t} k={triple}")]
                n_char += 1
    out = [
        CheckResult("main-theorem", True, f"{n_main} cases"),
        CheckResult("lagrange-duality", True, f"{n_dual} cases"),
        CheckResult("characteristic-duality", True, f"{n_char} cases"),
    ]
    sampled = 0
    for triple in grid_triples(extra=2):
        params = GMParams(*triple, (2, 3, 1))
        for t in grid_fractions(surd_sample_depth):
            s = admissible_sequence(t, params)
            lv = lagrange_value(s)
            if not (lv == ell_periodic(s) == markov_value(t, params).value):
                return out + [CheckResult("surd-sample", False, f"t={t} k={triple}")]
            sampled += 1
    out.append(CheckResult("surd-sample", True, f"{sampled} exact surd triples"))
    return out


def squares_suite(depth: int = 8) -> list[CheckResult]:
    """Squares of the plain tree values sit at the same positions in the
    all-twos tree, and tripling is a bijection between the enumerated
    spectra."""
    plain = enumerate_tree(GMParams(0, 0, 0), depth)
    twos = enumerate_tree(GMParams(2, 2, 2), depth)
    for (t1, node1), (t2, node2) in zip(plain, twos):
        assert t1 == t2
        if (
            node1.mid.value ** 2 != node2.mid.value
            or node1.mid.pos != node2.mid.pos
        ):
            return [CheckResult("squares", False, f"t={t1}")]
    out = [CheckResult("squares", True, f"{len(plain)} vertices")]
    s0 = enumerate_spectrum((0, 0, 0), depth)
    s2 = enumerate_spectrum((2, 2, 2), depth)
    tripled = {9 * el.sort_key() for el in s0}
    keys2 = {el.sort_key() for el in s2}
    ok = tripled == keys2
    out.append(
        CheckResult(
            "triple-bijection",
            ok,
            f"{len(s0)} values map onto {len(s2)}" if ok else "value sets differ",
        )
    )
    return out


def transition_suite(kmax: int = 5, depth: int = 8) -> list[CheckResult]:
    """The window scan over all triples up to kmax reproduces the enumerated
    (0,0,1) spectrum minus sqrt(5), plus 2*sqrt(5) witnessed at n = 4."""
    scan = transition_scan(kmax, depth)
    scanned = {el.sort_key() for _, el in scan}
    sqrt5 = QuadSurd(0, 1, 5, 1)
    expected = {
        el.sort_key()
        for el in enumerate_spectrum((0, 0, 1), depth)
        if el.value != sqrt5
    }
    two_sqrt5 = QuadSurd(0, 2, 5, 1)
    expected.add(two_sqrt5.squared_fraction())
    out = [
        CheckResult(
            "transition-window",
            scanned == expected,
            f"{len(scanned)} window values"
            if scanned == expected
            else f"scan {len(scanned)} values, expected {len(expected)}",
        )
    ]
    witnesses = [
        el
        for k, el in scan
        if k == (0, 0, 2) and el.value == two_sqrt5 and el.params.k1 == 0
        and el.params.k2 == 0 and el.params.k3 == 2
    ]
    ok = any(el.n == 4 and el.pos == el.params.sigma[1] for el in witnesses)
    out.append(
        CheckResult(
            "transition-witness",
            ok,
            "2*sqrt(5) from (n, i) = (4, sigma(2)) under (0,0,2)" if ok else "witness missing",
        )
    )
    # window bounds are exact surd comparisons against the stored endpoint
    lo_ok = all(el.value >= 3 and el.value < FREIMAN_CONSTANT for _, el in scan)
    out.append(CheckResult("transition-bounds", lo_ok, f"{len(scan)} scan hits"))
    return out


SUITE_NAMES = ("factorization", "snake", "rotation", "duality", "squares", "transition")

_SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "factorization": factorization_suite,
    "snake": snake_suite,
    "rotation": rotation_suite,
    "duality": duality_suite,
    "squares": squares_suite,
    "transition": transition_suite,
}


def run_suite(name: str) -> list[CheckResult]:
    """Run one named suite, or all of them."""
    if name == "all":
        out: list[CheckResult] = []
        for suite in SUITE_NAMES:
            out.extend(_SUITES[suite]())
        return out
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")
    return _SUITES[name]()
