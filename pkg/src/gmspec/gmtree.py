"""Generalized Markov equation, its solution trees, and characteristic numbers.

A parameter set is a triple (k1, k2, k3) of nonnegative integers together
with a permutation sigma of {1, 2, 3}.  Tree vertices carry number-position
pairs; the three values of a vertex, placed at their positions, always solve
the generalized equation, and all divisions in the Vieta recursion are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .farey import FAREY_ROOT, IrreducibleFraction, farey_path

__all__ = [
    "Sigma",
    "IDENTITY",
    "ALL_SIGMAS",
    "ALTERNATING",
    "parse_sigma",
    "format_sigma",
    "sigma_star",
    "GMParams",
    "GMPair",
    "GMNode",
    "gm_check",
    "gm_node",
    "gm_pair",
    "characteristic_number",
    "enumerate_tree",
]

# a permutation of {1,2,3} stored as (sigma(1), sigma(2), sigma(3))
Sigma = tuple[int, int, int]

IDENTITY: Sigma = (1, 2, 3)
ALL_SIGMAS: tuple[Sigma, ...] = (
    (1, 2, 3), (2, 3, 1), (3, 1, 2), (2, 1, 3), (3, 2, 1), (1, 3, 2),
)
# the even permutations; spectra are unchanged when sigma ranges over these only
ALTERNATING: tuple[Sigma, ...] = ((1, 2, 3), (2, 3, 1), (3, 1, 2))

_CYCLE_NAMES: dict[str, Sigma] = {
    "id": (1, 2, 3),
    "(1 2)": (2, 1, 3),
    "(1 3)": (3, 2, 1),
    "(2 3)": (1, 3, 2),
    "(1 2 3)": (2, 3, 1),
    "(1 3 2)": (3, 1, 2),
}


def parse_sigma(text: str) -> Sigma:
    """Parse cycle notation: id, (1 2), (1 3), (2 3), (1 2 3), (1 3 2)."""
    key = " ".join(text.strip().split())
    if key in _CYCLE_NAMES:
        return _CYCLE_NAMES[key]
    raise ValueError(f"unknown permutation {text!r}")


def format_sigma(sigma: Sigma) -> str:
    for name, s in _CYCLE_NAMES.items():
        if s == sigma:
            return name
    raise ValueError(f"not a permutation of (1,2,3): {sigma}")


def sigma_star(sigma: Sigma) -> Sigma:
    """The unique other permutation with the same image of 2.

    Equals sigma composed with the domain transposition swapping 1 and 3;
    an involution.
    """
    return (sigma[2], sigma[1], sigma[0])


@dataclass(frozen=True)
class GMParams:
    """Equation coefficients (k1, k2, k3) plus a permutation of {1, 2, 3}."""

    k1: int
    k2: int
    k3: int
    sigma: Sigma = IDENTITY

    def __post_init__(self) -> None:
        if min(self.k1, self.k2, self.k3) < 0:
            raise ValueError("coefficients must be nonnegative")
        if sorted(self.sigma) != [1, 2, 3]:
            raise ValueError(f"sigma must permute (1,2,3), got {self.sigma}")

    @property
    def coeff_sum(self) -> int:
        """3 + k1 + k2 + k3, the multiplier of xyz in the equation."""
        return 3 + self.k1 + self.k2 + self.k3

    def k_at(self, pos: int) -> int:
        return (self.k1, self.k2, self.k3)[pos - 1]

    @property
    def kappa(self) -> tuple[int, int, int]:
        """(k_sigma(1), k_sigma(2), k_sigma(3)): coefficients seen from the root."""
        return (self.k_at(self.sigma[0]), self.k_at(self.sigma[1]), self.k_at(self.sigma[2]))

    def dual(self) -> "GMParams":
        return GMParams(self.k1, self.k2, self.k3, sigma_star(self.sigma))

    def __str__(self) -> str:
        return f"k=({self.k1},{self.k2},{self.k3}) sigma={format_sigma(self.sigma)}"


@dataclass(frozen=True)
class GMPair:
    value: int
    pos: int


@dataclass(frozen=True)
class GMNode:
    left: GMPair
    mid: GMPair
    right: GMPair

    def triple_at_positions(self) -> tuple[int, int, int]:
        """The three values arranged into equation slots 1, 2, 3."""
        slot = [0, 0, 0]
        for pair in (self.left, self.mid, self.right):
            slot[pair.pos - 1] = pair.value
        return tuple(slot)  # type: ignore[return-value]

    def __str__(self) -> str:
        return "({},{},{})".format(
            *(f"({p.value},{p.pos})" for p in (self.left, self.mid, self.right))
        )


def gm_check(x: int, y: int, z: int, k: tuple[int, int, int]) -> bool:
    """Exact test of x^2+y^2+z^2+k1*yz+k2*zx+k3*xy = (3+k1+k2+k3)xyz."""
    k1, k2, k3 = k
    lhs = x * x + y * y + z * z + k1 * y * z + k2 * z * x + k3 * x * y
    return lhs == (3 + k1 + k2 + k3) * x * y * z


def _root(params: GMParams) -> GMNode:
    s = params.sigma
    return GMNode(
        GMPair(1, s[0]),
        GMPair(params.k_at(s[1]) + 2, s[1]),
        GMPair(1, s[2]),
    )


def _child(node: GMNode, params: GMParams, direction: str) -> GMNode:
    (a, h), (b, i), (c, j) = (
        (node.left.value, node.left.pos),
        (node.mid.value, node.mid.pos),
        (node.right.value, node.right.pos),
    )
    if direction == "L":
        num = a * a + params.k_at(j) * a * b + b * b
        val, rem = divmod(num, c)
        if rem:
            raise AssertionError(f"inexact division {num}/{c} in tree recursion")
        return GMNode(node.left, GMPair(val, j), node.mid)
    num = b * b + params.k_at(h) * b * c + c * c
    val, rem = divmod(num, a)
    if rem:
        raise AssertionError(f"inexact division {num}/{a} in tree recursion")
    return GMNode(node.mid, GMPair(val, h), node.right)


@lru_cache(maxsize=1 << 14)
def gm_node(t: IrreducibleFraction, params: GMParams) -> GMNode:
    """Tree vertex whose middle pair is labeled by t.

    For the boundary labels 0/1 and 1/0 the root vertex is returned; their
    pairs of interest are its left and right entries.
    """
    if t.is_boundary:
        return _root(params)
    node = _root(params)
    for step in farey_path(t):
        node = _child(node, params, step)
    return node


def gm_pair(t: IrreducibleFraction, params: GMParams) -> GMPair:
    """Number-position pair (n_t, i_t) for any t in [0, oo]."""
    node = gm_node(t, params)
    if t.is_zero:
        return node.left
    if t.is_infinity:
        return node.right
    return node.mid


def characteristic_number(t: IrreducibleFraction, params: GMParams) -> int:
    """The residue u_t with n_left * u_t = n_right (mod n_t), 0 < u_t < n_t.

    Boundary values: u at 0/1 is -k_sigma(1), u at 1/0 is 1.
    """
    if t.is_zero:
        return -params.k_at(params.sigma[0])
    if t.is_infinity:
        return 1
    node = gm_node(t, params)
    n_r, n_t, n_s = node.left.value, node.mid.value, node.right.value
    u = n_s * pow(n_r, -1, n_t) % n_t
    assert 0 < u < n_t, "characteristic number out of range"
    return u


def enumerate_tree(
    params: GMParams, depth: int
) -> list[tuple[IrreducibleFraction, GMNode]]:
    """All vertices with tree depth <= depth, breadth-first, left before right.

    Each vertex is paired with the fraction labeling its middle entry.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    out: list[tuple[IrreducibleFraction, GMNode]] = []
    level = [(FAREY_ROOT, _root(params))]
    for d in range(depth + 1):
        for ftriple, node in level:
            out.append((ftriple.mid, node))
        if d < depth:
            level = [
                (ftriple.child(step), _child(node, params, step))
                for ftriple, node in level
                for step in ("L", "R")
            ]
    return out
