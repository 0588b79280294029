"""Placements that attack few squares: blocks, corner hexagons, the
four-corner arrangement and the nine-queen pattern.

Corner hexagons are built in corner-relative coordinates ``(i, j)`` with
``(1, 1)`` at the corner; the "long" diagonals are those with constant
``i - j``, which run toward the opposite corner.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .board import Placement, Square, check_dim
from .errors import DomainError
from .formulas import g_of, m_star


class Corner(str, Enum):
    BOTTOM_LEFT = "bottom-left"
    BOTTOM_RIGHT = "bottom-right"
    TOP_LEFT = "top-left"
    TOP_RIGHT = "top-right"

    def to_board(self, i: int, j: int, n: int) -> Square:
        if self is Corner.BOTTOM_LEFT:
            return Square(i, j)
        if self is Corner.BOTTOM_RIGHT:
            return Square(n + 1 - i, j)
        if self is Corner.TOP_LEFT:
            return Square(i, n + 1 - j)
        return Square(n + 1 - i, n + 1 - j)


@dataclass(frozen=True)
class HexSpec:
    a: int  # columns
    b: int  # rows
    c: int  # long diagonals
    corner: Corner = Corner.BOTTOM_LEFT

    @property
    def m(self) -> int:
        return self.a + self.b + self.c


def diagonal_window(a: int, b: int, c: int) -> range:
    """The ``c`` consecutive values of ``i - j`` kept in an ``a x b`` block.

    The block spans ``i - j`` in ``-(b-1)..(a-1)``; the dropped diagonals are
    split between both ends, the odd one out coming off the high end.
    """
    dropped = max(0, a + b - 1 - c)
    low = -(b - 1) + dropped // 2
    high = (a - 1) - (dropped - dropped // 2)
    return range(low, high + 1)


def _hexagon_cells(a: int, b: int, c: int) -> list[tuple[int, int]]:
    window = diagonal_window(a, b, c)
    return [(i, j) for i in range(1, a + 1) for j in range(1, b + 1) if i - j in window]


def square_block(side: int, corner: Corner | str, n: int) -> Placement:
    check_dim(n)
    corner = Corner(corner)
    if not 1 <= side <= n:
        raise DomainError(f"block side {side} does not fit a {n}x{n} board")
    return Placement(
        n,
        frozenset(corner.to_board(i, j, n) for i in range(1, side + 1) for j in range(1, side + 1)),
    )


def corner_hexagon(spec: HexSpec, n: int) -> Placement:
    """Queens on the first ``a`` columns and ``b`` rows (from the corner) whose
    long diagonal is one of the middle ``c``."""
    check_dim(n)
    a, b, c = spec.a, spec.b, spec.c
    if a < 1 or b < 1:
        raise DomainError("a hexagon needs at least one row and one column")
    if not 1 <= c <= 2 * min(a, b) - 1:
        raise DomainError(f"need 1 <= C <= {2 * min(a, b) - 1}, got C={c}")
    if n < a + b:
        raise DomainError(f"board {n} is smaller than A+B={a + b}")
    corner = Corner(spec.corner)
    return Placement(n, frozenset(corner.to_board(i, j, n) for i, j in _hexagon_cells(a, b, c)))


def hexagon_triple(m: int) -> HexSpec:
    """The unique ``(A, A, C)`` with ``2A + C = m`` and ``|A - C| <= 1``."""
    if m < 3:
        raise DomainError(f"need a line budget of at least 3, got {m}")
    a = (m + 1) // 3
    return HexSpec(a, a, m - 2 * a)


def uneven_hexagon(m: int, n: int) -> Placement:
    check_dim(n)
    spec = hexagon_triple(m)
    if n < m:
        raise DomainError(f"board {n} is smaller than the line budget {m}")
    # m = 4 asks for C = 2 > 2A - 1; the single block square is all there is
    cells = _hexagon_cells(spec.a, spec.b, min(spec.c, 2 * spec.a - 1))
    return Placement(n, frozenset(Square(i, j) for i, j in cells))


def four_corner(m: int, n: int) -> Placement:
    """One ``m/6``-hexagon in each corner, sharing lines pairwise."""
    check_dim(n)
    if m % 12 != 6:
        raise DomainError(f"four-corner construction needs m = 6 mod 12, got {m}")
    h = m // 6
    if n < 4 * h + 2:
        raise DomainError(f"board {n} too small for four hexagons of side {h} (need {4 * h + 2})")
    cells = _hexagon_cells(h, h, h)
    return Placement(n, frozenset(corner.to_board(i, j, n) for corner in Corner for i, j in cells))


def nine_queens(n: int) -> Placement:
    """Corners, side midpoints and centre of an odd board."""
    check_dim(n)
    if n < 5:
        raise DomainError(f"nine-queen pattern needs n >= 5, got {n}")
    if n % 2 == 0:
        raise DomainError("nine-queen pattern is only defined for odd n")
    coords = (1, (n + 1) // 2, n)
    return Placement(n, frozenset(Square(x, y) for x in coords for y in coords))


def _peel_key(sq: Square, n: int) -> tuple[int, int, Square]:
    i = min(sq.x, n + 1 - sq.x)
    j = min(sq.y, n + 1 - sq.y)
    return (i + j, abs(i - j), sq)


def trim(p: Placement, k: int) -> Placement:
    """Drop queens until ``k`` remain, outermost (relative to the nearest
    corner) first, then furthest from that corner's long diagonal."""
    if k > p.k:
        raise DomainError(f"cannot trim {p.k} queens up to {k}")
    keep = sorted(p.queens, key=lambda q: _peel_key(q, p.n))[:k]
    return Placement(p.n, frozenset(keep))


def _embedded_nine(n: int) -> Placement:
    # even n: the odd pattern on the (n-1) sub-board touching (1, 1)
    inner = nine_queens(n - 1)
    return Placement(n, inner.queens)


STRATEGIES = ("auto", "square", "hexagon", "uneven", "four-corner", "nine")


def construct_best(k: int, n: int, strategy: str = "auto") -> Placement:
    """A placement of exactly ``k`` queens covering about ``m_star(k) * n``
    squares (plus O(k))."""
    check_dim(n)
    if not 1 <= k <= n * n:
        raise DomainError(f"need 1 <= k <= n^2, got k={k}")
    if strategy not in STRATEGIES:
        raise DomainError(f"unknown strategy {strategy!r}")

    if strategy == "square":
        side = 1
        while side * side < k:
            side += 1
        return trim(square_block(side, Corner.BOTTOM_LEFT, n), k)
    if strategy == "hexagon":
        t = 1
        while 3 * t * t - 3 * t + 1 < k:
            t += 1
        span = 2 * t - 1
        return trim(corner_hexagon(HexSpec(span, span, span), n), k)
    if strategy == "uneven":
        m = 3
        while (m * m + 3) // 12 < k:
            m += 1
        return trim(uneven_hexagon(m, n), k)
    if strategy == "four-corner":
        m = 6
        while g_of(m) < k:
            m += 12
        return trim(four_corner(m, n), k)
    if strategy == "nine":
        if k > 9:
            raise DomainError("the nine-queen pattern holds at most 9 queens")
        base = nine_queens(n) if n % 2 else _embedded_nine(n)
        return trim(base, k)

    m = m_star(k)
    if k == 9 and n >= 5:
        return nine_queens(n) if n % 2 else _embedded_nine(n)
    if n < m:
        raise DomainError(f"board {n} too small: k={k} needs a line budget of {m}")
    if m % 12 == 6 and k == g_of(m):
        return four_corner(m, n)
    return trim(uneven_hexagon(m, n), k)
