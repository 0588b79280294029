"""Deliberately naive reference computations.

Nothing here shares code with the fast paths it is used to check: no
bitsets, no matching, no closed forms.
"""

from __future__ import annotations

from itertools import combinations, product

from .board import Line, LineKind, Square


def attacks(q: tuple[int, int], sq: tuple[int, int]) -> bool:
    (qx, qy), (x, y) = q, sq
    return qx == x or qy == y or qx - qy == x - y or qx + qy == x + y


def scan_line(line: Line, n: int) -> list[Square]:
    out = []
    for x, y in product(range(1, n + 1), repeat=2):
        value = {
            LineKind.ROW: y,
            LineKind.COL: x,
            LineKind.DIAG_POS: x - y,
            LineKind.DIAG_NEG: x + y,
        }[line.kind]
        if value == line.index:
            out.append(Square(x, y))
    return sorted(out)


def covered(queens, n: int) -> set[Square]:
    return {
        Square(x, y)
        for x, y in product(range(1, n + 1), repeat=2)
        if any(attacks(q, (x, y)) for q in queens)
    }


def min_covered(k: int, n: int) -> int:
    cells = list(product(range(1, n + 1), repeat=2))
    return min(len(covered(c, n)) for c in combinations(cells, k))


def share_diagonal(q1, q2) -> bool:
    return q1[0] - q1[1] == q2[0] - q2[1] or q1[0] + q1[1] == q2[0] + q2[1]


def max_independent(queens) -> int:
    """Largest subset with no two queens on a common diagonal."""
    qs = sorted(queens)
    best = 0

    def go(i: int, chosen: list) -> None:
        nonlocal best
        if len(chosen) + len(qs) - i <= best:
            return
        if i == len(qs):
            best = max(best, len(chosen))
            return
        q = qs[i]
        if all(not share_diagonal(q, c) for c in chosen):
            chosen.append(q)
            go(i + 1, chosen)
            chosen.pop()
        go(i + 1, chosen)

    go(0, [])
    return best


def min_cover(queens) -> int:
    """Fewest diagonals covering every queen: try every set of positive
    diagonals; the negative ones are then forced."""
    qs = list(queens)
    pos = sorted({x - y for x, y in qs})
    best = len(qs)
    for r in range(len(pos) + 1):
        for chosen in combinations(pos, r):
            left = {x + y for x, y in qs if x - y not in chosen}
            best = min(best, r + len(left))
    return best


def literal_f(rc_total: int, c: int) -> int:
    return sum(min(2 * c, 2 * rc_total + 4 - 8 * l) for l in range(1, (rc_total + 2) // 4 + 1))


def literal_corner_bound(a: int, b: int, c: int) -> int:
    return sum(min(c, a + b + 1 - 2 * l) for l in range(1, min(a, b) + 1))


def literal_hexagon_count(a: int, c: int) -> int:
    """Cells of the ``a x a`` block on the ``c`` middle values of ``i - j``,
    found by listing the diagonals and cutting from both ends."""
    diags = list(range(-(a - 1), a))
    while len(diags) > c:
        diags.pop()
        if len(diags) > c:
            diags.pop(0)
    return sum(1 for i in range(1, a + 1) for j in range(1, a + 1) if i - j in diags)


def triple_points(cols, rows, pos, neg) -> int:
    return sum(1 for x in cols for y in rows if x - y in pos or x + y in neg)
