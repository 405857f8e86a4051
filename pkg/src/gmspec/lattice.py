"""Sign sequences from curves on the triangulated square lattice.

The lattice is the integer grid together with all slope -1 diagonals through
lattice points.  A directed curve crossing it picks up signs three ways:

* each crossed edge contributes k copies of a sign (k depends on the edge
  direction: horizontal, diagonal, or vertical, matched to the parameter
  positions sigma(1), sigma(2), sigma(3)), plus for the edge iff its midpoint
  lies strictly right of the curve, minus otherwise;
* each triangle cut between two consecutive edge crossings contributes minus
  iff the vertex shared by the entry and exit edges lies strictly right of
  the curve, plus otherwise;
* a triangle whose corner is a curve endpoint (opposite edge crossed)
  contributes one sign of either choice; the run-length count is unchanged,
  and by default it merges with the adjacent run.

Run-length encoding the sign string gives the admissible sequence of a
fraction label, and the length/distance of a lattice segment.

Infinitesimal offsets are carried exactly to first order, so every side
decision and every event ordering is exact integer arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Literal, Sequence

from .farey import IrreducibleFraction
from .gmtree import GMParams
from .snake import continuant

__all__ = [
    "admissible_sequence",
    "admissible_sequence_with_delta",
    "segment_sign_sequence",
    "gm_length",
    "gm_distance",
]

Point = tuple[int, int]
_KINDS = "hdv"  # horizontal, diagonal, vertical


def _rle(signs: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    prev = 0
    for s in signs:
        if s == prev:
            out[-1] += 1
        else:
            out.append(1)
            prev = s
    return tuple(out)


def _shared_vertex(e1: tuple[Point, Point], e2: tuple[Point, Point]) -> Point:
    common = set(e1) & set(e2)
    assert len(common) == 1, f"edges {e1}, {e2} do not bound one triangle"
    return common.pop()


# ---------------------------------------------------------------------------
# admissible sequence of a fraction label (hot path, integer arithmetic)
# ---------------------------------------------------------------------------

def admissible_sequence(t: IrreducibleFraction, params: GMParams) -> tuple[int, ...]:
    """Sign sequence of the leftward-shifted segment (0,0) -> (den, num).

    The segment is displaced horizontally by an infinitesimal (-delta, 0), so
    its start has already passed through the bottom edge (that edge is
    signed) while its end stays inside the top edge (left unsigned).  For the
    boundary labels the defining pairs are returned directly:
    s(0/1) = (1 + k_sigma(2) + k_sigma(3), 1) and
    s(1/0) = (1 + k_sigma(1) + k_sigma(2), 1).
    """
    kap = params.kappa
    if t.is_zero:
        return (1 + kap[1] + kap[2], 1)
    if t.is_infinity:
        return (1 + kap[0] + kap[1], 1)
    a, b = t.num, t.den
    # events: (sort key, kind, edge endpoints, doubled midpoint); keys are the
    # crossing x-positions scaled by a*(a+b), first-order in delta
    M = a * (a + b)
    events: list[tuple[tuple[int, int], str, tuple[Point, Point], Point]] = []
    for i in range(b):
        y0 = a * i // b
        events.append(
            ((i * M, 0), "v", ((i, y0), (i, y0 + 1)), (2 * i, 2 * y0 + 1))
        )
    for j in range(a):
        xf = -1 if j == 0 else b * j // a
        events.append(
            (((b * j) * (a + b), -M), "h", ((xf, j), (xf + 1, j)), (2 * xf + 1, 2 * j))
        )
    for m in range(a + b):
        bm = b * m
        c = bm // (a + b) - (0 if bm % (a + b) else 1)
        events.append(
            (
                (a * bm, -a * a),
                "d",
                ((c, m - c), (c + 1, m - c - 1)),
                (2 * c + 1, 2 * (m - c) - 1),
            )
        )
    events.sort(key=lambda e: e[0])

    def right_of(px2: int, py2: int) -> bool:
        # doubled coords; side value is b*y - a*x - a*delta, ties fall right
        return b * py2 - a * px2 <= 0

    mult = dict(zip(_KINDS, kap))
    terminal_edge: tuple[Point, Point] = ((b - 1, a), (b, a))
    signs: list[int] = []
    for idx, (_, kind, edge, mid2) in enumerate(events):
        signs.extend([1 if right_of(*mid2) else -1] * mult[kind])
        nxt = events[idx + 1][2] if idx + 1 < len(events) else terminal_edge
        vx, vy = _shared_vertex(edge, nxt)
        signs.append(-1 if right_of(2 * vx, 2 * vy) else 1)
    return _rle(signs)


def admissible_sequence_with_delta(
    t: IrreducibleFraction, params: GMParams, delta: Fraction | None = None
) -> tuple[int, ...]:
    """Reference construction with a concrete rational shift.

    Same geometry as admissible_sequence but with an explicit delta instead
    of a symbolic infinitesimal; any delta in (0, 1/(4*(num+den)**2)] yields
    the identical sign string.  Used to cross-validate the fast path.
    """
    kap = params.kappa
    if t.is_boundary:
        return admissible_sequence(t, params)
    a, b = t.num, t.den
    if delta is None:
        delta = Fraction(1, 4 * (a + b) ** 2)
    if not 0 < delta <= Fraction(1, 4 * (a + b) ** 2):
        raise ValueError("delta too large for a faithful shift")
    events: list[tuple[Fraction, str, tuple[Point, Point], Point]] = []
    for i in range(b):
        y = Fraction(a * (i + delta), b)
        y0 = y.numerator // y.denominator
        events.append((Fraction(i), "v", ((i, y0), (i, y0 + 1)), (2 * i, 2 * y0 + 1)))
    for j in range(a):
        x = Fraction(b * j, a) - delta
        xf = x.numerator // x.denominator
        events.append((x, "h", ((xf, j), (xf + 1, j)), (2 * xf + 1, 2 * j)))
    for m in range(a + b):
        x = Fraction(b * m - a * delta, a + b)
        c = x.numerator // x.denominator
        events.append(
            (x, "d", ((c, m - c), (c + 1, m - c - 1)), (2 * c + 1, 2 * (m - c) - 1))
        )
    events.sort(key=lambda e: e[0])

    def right_of(px2: int, py2: int) -> bool:
        return b * py2 - a * px2 - 2 * a * delta < 0

    mult = dict(zip(_KINDS, kap))
    terminal_edge: tuple[Point, Point] = ((b - 1, a), (b, a))
    signs: list[int] = []
    for idx, (_, kind, edge, mid2) in enumerate(events):
        signs.extend([1 if right_of(*mid2) else -1] * mult[kind])
        nxt = events[idx + 1][2] if idx + 1 < len(events) else terminal_edge
        vx, vy = _shared_vertex(edge, nxt)
        signs.append(-1 if right_of(2 * vx, 2 * vy) else 1)
    return _rle(signs)


# ---------------------------------------------------------------------------
# lattice segments between arbitrary endpoints
# ---------------------------------------------------------------------------

_UNIT_STEPS = {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}


def _dual_floor(c0: Fraction, c1: Fraction) -> int:
    if c0.denominator != 1:
        return c0.numerator // c0.denominator
    if c1 > 0:
        return int(c0)
    if c1 < 0:
        return int(c0) - 1
    raise AssertionError("curve passes through a lattice point")


def segment_sign_sequence(
    a: Point,
    b: Point,
    params: GMParams,
    side: Literal["left", "right"] = "left",
    endpoints: tuple[int | str, int | str] = ("merge", "merge"),
) -> tuple[int, ...]:
    """Sign sequence of the (possibly perturbed) segment from a to b.

    When the displacement components are coprime the straight segment is
    traced; edge midpoints lying exactly on it count as not strictly right.
    Otherwise the interior is displaced infinitesimally to the given side.
    Both endpoint-rule signs default to merging with their adjacent run;
    passing +1 or -1 pins them instead.  Unit grid steps (including the
    antidiagonal ones) cross nothing and give the empty sequence.
    """
    if a == b:
        raise ValueError("endpoints must differ")
    dx, dy = b[0] - a[0], b[1] - a[1]
    if (dx, dy) in _UNIT_STEPS:
        return ()
    if math.gcd(dx, dy) == 1:
        ux, uy = 0, 0
    elif side == "left":
        ux, uy = -dy, dx
    elif side == "right":
        ux, uy = dy, -dx
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    events: list[tuple[tuple[Fraction, Fraction], str, tuple[Point, Point], Point]] = []

    def between(p: int, q: int) -> range:
        return range(min(p, q) + 1, max(p, q))

    for i in between(a[0], b[0]):
        c0 = Fraction(i - a[0], dx)
        c1 = Fraction(-ux, dx)
        yf = _dual_floor(a[1] + c0 * dy, c1 * dy + uy)
        events.append(((c0, c1), "v", ((i, yf), (i, yf + 1)), (2 * i, 2 * yf + 1)))
    for j in between(a[1], b[1]):
        c0 = Fraction(j - a[1], dy)
        c1 = Fraction(-uy, dy)
        xf = _dual_floor(a[0] + c0 * dx, c1 * dx + ux)
        events.append(((c0, c1), "h", ((xf, j), (xf + 1, j)), (2 * xf + 1, 2 * j)))
    for m in between(a[0] + a[1], b[0] + b[1]):
        s = dx + dy
        c0 = Fraction(m - a[0] - a[1], s)
        c1 = Fraction(-(ux + uy), s)
        xf = _dual_floor(a[0] + c0 * dx, c1 * dx + ux)
        events.append(
            (
                (c0, c1),
                "d",
                ((xf, m - xf), (xf + 1, m - xf - 1)),
                (2 * xf + 1, 2 * (m - xf) - 1),
            )
        )
    if not events:
        return ()
    events.sort(key=lambda e: e[0])

    # side value is cross(d, p - a) - eps*bias; bias > 0 sends ties right
    bias = dx * uy - dy * ux

    def right_of(px2: int, py2: int) -> bool:
        cross0 = dx * (py2 - 2 * a[1]) - dy * (px2 - 2 * a[0])
        return cross0 < 0 or (cross0 == 0 and bias > 0)

    mult = dict(zip(_KINDS, params.kappa))
    parts: list[int] = []
    for idx, (_, kind, edge, mid2) in enumerate(events):
        parts.extend([1 if right_of(*mid2) else -1] * mult[kind])
        if idx + 1 < len(events):
            vx, vy = _shared_vertex(edge, events[idx + 1][2])
            parts.append(-1 if right_of(2 * vx, 2 * vy) else 1)

    first = parts[0] if parts else -1
    last = parts[-1] if parts else first
    start = first if endpoints[0] == "merge" else int(endpoints[0])
    end = last if endpoints[1] == "merge" else int(endpoints[1])
    if abs(start) != 1 or abs(end) != 1:
        raise ValueError("endpoint signs must be 'merge', +1, or -1")
    return _rle([start, *parts, end])


def gm_length(seq: Sequence[int]) -> int:
    """Matching count of the snake graph of a sign sequence (its continuant)."""
    return continuant(seq)


def gm_distance(a: Point, b: Point, params: GMParams) -> int:
    """Minimal length over lattice arcs joining a and b: 0 if equal, else the
    length of the (left-)perturbed straight segment."""
    if a == b:
        return 0
    return gm_length(segment_sign_sequence(a, b, params, "left"))
