"""Irreducible fractions, the Farey tree, and Christoffel lattice words.

Fractions live in [0, oo]; 1/0 stands for the point at infinity and compares
greater than every finite fraction.  Tree navigation runs along the
continued-fraction digits of the target, so a lookup costs O(log) arithmetic
steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering

__all__ = [
    "IrreducibleFraction",
    "FareyTriple",
    "FAREY_ROOT",
    "mediant",
    "farey_locate",
    "farey_path",
    "christoffel_word",
]


@total_ordering
@dataclass(frozen=True)
class IrreducibleFraction:
    """Reduced fraction num/den with num, den >= 0; 1/0 is infinity."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.num < 0 or self.den < 0:
            raise ValueError("numerator and denominator must be nonnegative")
        if self.num == 0 and self.den == 0:
            raise ValueError("0/0 is not a fraction")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not reduced")

    @staticmethod
    def parse(text: str) -> "IrreducibleFraction":
        t = text.strip()
        if t in ("inf", "infinity", "1/0"):
            return IrreducibleFraction(1, 0)
        if "/" in t:
            a, b = t.split("/", 1)
            return IrreducibleFraction(int(a), int(b))
        return IrreducibleFraction(int(t), 1)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __lt__(self, other: "IrreducibleFraction") -> bool:
        return self.num * other.den < other.num * self.den

    def reciprocal(self) -> "IrreducibleFraction":
        return IrreducibleFraction(self.den, self.num)

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    @property
    def is_boundary(self) -> bool:
        return self.num == 0 or self.den == 0


def _det(x: IrreducibleFraction, y: IrreducibleFraction) -> int:
    return x.num * y.den - x.den * y.num


@dataclass(frozen=True)
class FareyTriple:
    """Triple (left, mid, right) of pairwise adjacent fractions, left < mid < right."""

    left: IrreducibleFraction
    mid: IrreducibleFraction
    right: IrreducibleFraction

    def __post_init__(self) -> None:
        for x, y in ((self.left, self.mid), (self.mid, self.right), (self.right, self.left)):
            if abs(_det(x, y)) != 1:
                raise ValueError(f"{x}, {y} are not adjacent")

    def child(self, direction: str) -> "FareyTriple":
        if direction == "L":
            return FareyTriple(self.left, mediant(self.left, self.mid), self.mid)
        if direction == "R":
            return FareyTriple(self.mid, mediant(self.mid, self.right), self.right)
        raise ValueError(f"direction must be 'L' or 'R', got {direction!r}")

    def __str__(self) -> str:
        return f"({self.left}, {self.mid}, {self.right})"


FAREY_ROOT = FareyTriple(
    IrreducibleFraction(0, 1), IrreducibleFraction(1, 1), IrreducibleFraction(1, 0)
)


def mediant(x: IrreducibleFraction, y: IrreducibleFraction) -> IrreducibleFraction:
    """Componentwise sum of two adjacent fractions (always reduced)."""
    if abs(_det(x, y)) != 1:
        raise ValueError(f"mediant requires adjacent fractions, got {x}, {y}")
    return IrreducibleFraction(x.num + y.num, x.den + y.den)


def _cf_digits(num: int, den: int) -> list[int]:
    out = []
    while den:
        out.append(num // den)
        num, den = den, num % den
    return out


def farey_path(t: IrreducibleFraction) -> tuple[str, ...]:
    """Binary descent path from the root triple to the vertex with middle t."""
    if t.is_boundary:
        raise ValueError(f"{t} is not the middle entry of any tree vertex")
    digits = _cf_digits(t.num, t.den)
    digits[-1] -= 1
    path: list[str] = []
    for i, d in enumerate(digits):
        path.extend(("R" if i % 2 == 0 else "L") * d)
    return tuple(path)


def farey_locate(t: IrreducibleFraction) -> tuple[tuple[str, ...], FareyTriple]:
    """Path and tree vertex whose middle entry is t, for t in (0, oo)."""
    path = farey_path(t)
    node = FAREY_ROOT
    for step in path:
        node = node.child(step)
    assert node.mid == t
    return path, node


def christoffel_word(t: IrreducibleFraction) -> str:
    """Lattice-path word over {p, q, r} for the segment (0,0) -> (den, num).

    At each grid-line crossing the lattice point immediately to the right of
    the crossing is recorded; joining consecutive recorded points gives unit
    steps of slope 0 (letter p), 1 (letter q) or infinity (letter r).
    """
    a, b = t.num, t.den
    if a == 0:
        return "p"
    if b == 0:
        return "r"
    points: list[tuple[int, int]] = [(0, 0)]
    crossings: list[tuple[int, int, tuple[int, int]]] = []
    for i in range(1, b):
        # vertical line x=i, point below the crossing; key = position * a*b
        crossings.append((i * a, 0, (i, a * i // b)))
    for j in range(1, a):
        # horizontal line y=j, point right of the crossing
        crossings.append((j * b, 1, (-(-b * j // a), j)))
    crossings.sort()
    for _, _, pt in crossings:
        if pt != points[-1]:
            points.append(pt)
    if points[-1] != (b, a):
        points.append((b, a))
    letters = []
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        dx, dy = x1 - x0, y1 - y0
        if dy == 0:
            letters.append("p" * dx)
        elif dx == 0:
            letters.append("r" * dy)
        else:
            assert dx == dy, f"non-unit step {(dx, dy)} in Christoffel path"
            letters.append("q" * dx)
    return "".join(letters)
