"""Named property suites, each run at fixed desk-scale parameters.

Randomised checks draw from ``random.Random(seed)`` so a run is
reproducible from its seed.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable

from . import oracles
from .analysis import (
    LineSelection,
    lower_bound_certificate,
    max_nonsharing_queens,
    min_diag_cover,
    ring_bound_check,
    ring_diag_hits,
    rings_of,
)
from .board import (
    DIAGONAL_KINDS,
    Line,
    LineKind,
    Placement,
    all_lines,
    attacked_count,
    common_attacked,
    covered_count,
    diag_length_sum,
    edge_distance,
    line_length,
    line_through,
    lines_of,
    share_line,
)
from .constructions import four_corner, hexagon_triple, uneven_hexagon
from .formulas import (
    F_closed,
    F_maximizers,
    corner_bound,
    delta,
    f_bound,
    g_of,
    hexagon_block_count,
    regular_hexagon_count,
)
from .search import max_triple_points

SUITES = ("formulas", "lemma2", "rings", "konig", "eq1", "constructions")


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{status} {self.suite}: {self.name}{tail}"


def _first_failure(items, pred) -> object | None:
    for item in items:
        if not pred(item):
            return item
    return None


def _check(suite: str, name: str, items, pred) -> Check:
    bad = _first_failure(items, pred)
    return Check(suite, name, bad is None, "" if bad is None else f"counterexample {bad}")


# -- formulas -------------------------------------------------------------------


def suite_formulas(seed: int = 0) -> list[Check]:
    s = "formulas"
    out = [
        _check(s, "F maximised == F closed form, 2 <= M <= 2000", range(2, 2001), lambda M: F_maximizers(M)[0] == F_closed(M)),
        _check(
            s,
            "G <= F with equality off m = 2,4,8,10 mod 12 (m = 10 equal)",
            range(2, 2001),
            lambda m: g_of(m) == F_closed(m) - (m % 12 in (2, 4, 8, 10) and m != 10),
        ),
        _check(
            s,
            "max corner bound over A+B+C=m is floor((m^2+3)/12), 3 <= m <= 200",
            range(3, 201),
            lambda m: max(corner_bound(a, b, m - a - b) for a in range(m + 1) for b in range(m + 1 - a))
            == (m * m + 3) // 12,
        ),
        _check(
            s,
            "hexagon block count matches its literal count, A <= 100",
            [(a, c) for a in range(1, 101) for c in range(1, 2 * a)],
            lambda ac: hexagon_block_count(*ac) == oracles.literal_hexagon_count(*ac),
        ),
        _check(
            s,
            "hexagon block count == floor(((2A+C)^2+3)/12) when |A-C| <= 1, A <= 100",
            [(a, c) for a in range(1, 101) for c in (a - 1, a, a + 1) if 1 <= c <= 2 * a - 1],
            lambda ac: hexagon_block_count(*ac) == ((2 * ac[0] + ac[1]) ** 2 + 3) // 12,
        ),
        _check(
            s,
            "regular hexagon count == block count (2m-1, 2m-1), m <= 40",
            range(1, 41),
            lambda m: regular_hexagon_count(m) == hexagon_block_count(2 * m - 1, 2 * m - 1),
        ),
        _check(
            s,
            "optimal C is floor(M/3) (+1 if M = 8,10 mod 12), M <= 500",
            range(2, 501),
            lambda M: M - (M // 3 + (M % 12 in (8, 10))) in F_maximizers(M)[1],
        ),
        _check(
            s,
            "optimal split unique for M = 2,4,8,10 mod 12, M <= 500",
            [M for M in range(2, 501) if M % 12 in (2, 4, 8, 10)],
            lambda M: len(F_maximizers(M)[1]) == 1,
        ),
        _check(
            s,
            "f_bound / corner_bound match their literal sums",
            [(r, c) for r in range(2, 60) for c in range(0, 40)],
            lambda rc: f_bound(*rc) == oracles.literal_f(*rc)
            and corner_bound(rc[0], rc[0] // 2 + 1, rc[1]) == oracles.literal_corner_bound(rc[0], rc[0] // 2 + 1, rc[1]),
        ),
    ]
    return out


# -- diagonal lengths and single-queen counts ------------------------------


def suite_lemma2(seed: int = 0) -> list[Check]:
    s = "lemma2"
    squares = [(n, (x, y)) for n in range(1, 13) for x in range(1, n + 1) for y in range(1, n + 1)]
    pairs = [
        (n, q1, q2)
        for n in range(1, 13)
        for q1, q2 in combinations(product(range(1, n + 1), repeat=2), 2)
        if not share_line(q1, q2)
    ]
    return [
        _check(
            s,
            "diagonal lengths through a square sum to n+1+2*(edge distance), n <= 12",
            squares,
            lambda t: diag_length_sum(t[1], t[0]) == t[0] + 1 + 2 * edge_distance(t[1], t[0]),
        ),
        _check(
            s,
            "single queen attacks between 3n-3 and 4n-4 squares, n <= 12",
            squares,
            lambda t: 3 * t[0] - 3 <= attacked_count(Placement.of(t[0], [t[1]])) <= 4 * t[0] - 4,
        ),
        _check(s, "two queens on no common line share <= 12 covered squares, n <= 12", pairs, lambda t: common_attacked(t[1], t[2], t[0]) <= 12),
        _check(
            s,
            "line lengths match the scanned squares, n <= 12",
            [(n, line) for n in range(1, 13) for line in all_lines(n)],
            lambda t: line_length(t[1], t[0]) == len(oracles.scan_line(t[1], t[0])),
        ),
    ]


# -- rings ----------------------------------------------------------------------


def outer_ring_ok(cols, rows) -> bool:
    """No diagonal meets the outermost ring of the grid three or more times."""
    a, b = len(cols), len(rows)
    pos: Counter[int] = Counter()
    neg: Counter[int] = Counter()
    for i, x in enumerate(cols, 1):
        for j, y in enumerate(rows, 1):
            if min(i, j, a + 1 - i, b + 1 - j) == 1:
                pos[x - y] += 1
                neg[x + y] += 1
    return max(pos.values()) <= 2 and max(neg.values()) <= 2


def reduced_ring_grids(n: int, max_side: int = 8):
    """Grids whose outer-ring check covers every ring of every grid with at
    most ``max_side`` rows and columns inside ``[1, n]``.

    Any ring is the outer ring of the sub-grid cut at its level, and a
    violation needs only three points, so it survives in the sub-grid that
    keeps the four extreme lines plus at most three interior ones.  Grids
    are also translated so the first row and column are 1.
    """
    for xa, yb in product(range(1, n + 1), repeat=2):
        inner = [("x", v) for v in range(2, xa)] + [("y", v) for v in range(2, yb)]
        for t in range(4):
            for extra in combinations(inner, t):
                xs = sorted({1, xa, *(v for axis, v in extra if axis == "x")})
                ys = sorted({1, yb, *(v for axis, v in extra if axis == "y")})
                if len(xs) <= max_side and len(ys) <= max_side:
                    yield tuple(xs), tuple(ys)


def suite_rings(seed: int = 0) -> list[Check]:
    s = "rings"
    shapes = [(a, b) for a in range(1, 13) for b in range(1, 13)]

    def partition_ok(ab) -> bool:
        a, b = ab
        sel = LineSelection(max(a, b), tuple(range(1, a + 1)), tuple(range(1, b + 1)))
        rings = rings_of(sel)
        sizes_ok = all(
            len(r.points) == 2 * a + 2 * b + 4 - 8 * r.level
            for r in rings
            if a >= 2 * r.level and b >= 2 * r.level
        )
        return sum(len(r.points) for r in rings) == a * b and sizes_ok

    def small_board_ok(n: int) -> bool:
        coords = [c for r in range(1, min(n, 8) + 1) for c in combinations(range(1, n + 1), r)]
        for cols in coords:
            if cols[0] != 1:
                continue
            for rows in coords:
                if rows[0] != 1:
                    continue
                sel = LineSelection(n, cols, rows)
                for ring in rings_of(sel):
                    for kind in DIAGONAL_KINDS:
                        hits = Counter(line_through(q, kind) for q in ring.points)
                        if max(hits.values()) > 2:
                            return False
        return True

    return [
        _check(s, "rings partition the grid with 2A+2B+4-8l points, A,B <= 12", shapes, partition_ok),
        _check(s, "every diagonal meets every ring <= 2 times, all grids, n <= 7", range(1, 8), small_board_ok),
        _check(
            s,
            "every diagonal meets every ring <= 2 times, A,B <= 8, n <= 16 (reduced exhaustive)",
            reduced_ring_grids(16),
            lambda g: outer_ring_ok(*g),
        ),
    ]


# -- Konig ------------------------------------------------------------------------


def random_placement(rng: random.Random, max_n: int, max_k: int) -> Placement:
    n = rng.randint(1, max_n)
    k = rng.randint(1, min(max_k, n * n))
    cells = list(product(range(1, n + 1), repeat=2))
    return Placement.of(n, rng.sample(cells, k))


def suite_konig(seed: int = 0, samples: int = 10_000) -> list[Check]:
    s = "konig"
    rng = random.Random(seed)
    placements = [random_placement(rng, 10, 8) for _ in range(samples)]

    def ok(p: Placement) -> bool:
        m, witness = max_nonsharing_queens(p)
        c, cover = min_diag_cover(p)
        covered_all = all(any(line_through(q, d.kind) == d for d in cover) for q in p.queens)
        independent = all(not oracles.share_diagonal(a, b) for a, b in combinations(witness, 2))
        return (
            m == c == oracles.max_independent(p.queens) == oracles.min_cover(p.queens)
            and covered_all
            and independent
            and witness <= p.queens
        )

    return [_check(s, f"matching == cover == exhaustive oracles, {samples} placements (n <= 10, k <= 8)", placements, ok)]


# -- ring-sum bound on triple intersections ---------------------------------


def random_selection(rng: random.Random, n: int = 30, max_ab: int = 6, max_c: int = 8) -> LineSelection:
    a, b = rng.randint(1, max_ab), rng.randint(1, max_ab)
    span = n if rng.random() < 0.3 else rng.randint(max(a, b), min(n, 12))
    cols = tuple(sorted(rng.sample(range(1, span + 1), a)))
    rows = tuple(sorted(rng.sample(range(1, span + 1), b)))
    c = rng.randint(0, max_c)
    through = sorted({line_through((x, y), k) for x in cols for y in rows for k in DIAGONAL_KINDS})
    if rng.random() < 0.8:
        pool = through
    else:
        pool = [line for line in all_lines(n) if line.kind in DIAGONAL_KINDS]
    diags = frozenset(rng.sample(pool, min(c, len(pool))))
    return LineSelection(n, cols, rows, diags)


def suite_eq1(seed: int = 0, samples: int = 10_000) -> list[Check]:
    s = "eq1"
    rng = random.Random(seed)
    sels = [random_selection(rng) for _ in range(samples)]

    def exhaustive_ok(abc) -> bool:
        a, b, c = abc
        best, _ = max_triple_points(a, b, c, 8, "both")
        return best <= f_bound(a + b, c) + delta(a + b) and best <= F_closed(a + b + c)

    cases = [(a, b, c) for a in range(1, 5) for b in range(a, 5) for c in range(1, a + b + 1)]
    return [
        _check(s, f"|S| <= f(A+B,C)+delta and <= F(M), {samples} random selections", sels, lambda sel: ring_bound_check(sel).holds),
        _check(s, "exhaustive max |S| <= f(A+B,C)+delta, A,B <= 4, R = 8", cases, exhaustive_ok),
    ]


# -- constructions -------------------------------------------------------------------


def suite_constructions(seed: int = 0) -> list[Check]:
    s = "constructions"

    def uneven_ok(m: int) -> bool:
        n = 2 * m
        p = uneven_hexagon(m, n)
        spec = hexagon_triple(m)
        ls = lines_of(p)
        return (
            p.k == (m * m + 3) // 12
            and spec.a + spec.b + spec.c == m
            and len(ls.cols) == spec.a
            and len(ls.rows) == spec.b
            and len(ls.pos_diags) == min(spec.c, 2 * spec.a - 1)
            and covered_count(p) <= m * n
        )

    def four_ok(m: int) -> bool:
        p = four_corner(m, m)
        ls = lines_of(p)
        _, cover = min_diag_cover(p)
        return p.k == g_of(m) and len(ls.rows) + len(ls.cols) + len(cover) == m and covered_count(p) <= m * m

    def cert_ok(p: Placement) -> bool:
        cert = lower_bound_certificate(p)
        through = all(any(line_through(q, line.kind) == line for q in p.queens) for line in cert.lines)
        return through and cert.total_length >= p.n * cert.M and p.k <= cert.F_M

    rng = random.Random(seed)
    randoms = [random_placement(rng, 12, 20) for _ in range(1000)]
    return [
        _check(s, "uneven hexagon: floor((m^2+3)/12) queens on A+B+C = m lines, 3 <= m <= 60", range(3, 61), uneven_ok),
        _check(s, "four-corner: G(m) queens on m lines, m = 6 mod 12, m <= 66", range(6, 67, 12), four_ok),
        _check(s, "certificates: lines through queens, total >= n*M, k <= F(M), 1000 placements", randoms, cert_ok),
    ]


RUNNERS: dict[str, Callable[..., list[Check]]] = {
    "formulas": suite_formulas,
    "lemma2": suite_lemma2,
    "rings": suite_rings,
    "konig": suite_konig,
    "eq1": suite_eq1,
    "constructions": suite_constructions,
}


def run_suite(name: str, seed: int = 0) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES for c in RUNNERS[suite](seed=seed)]
    if name not in RUNNERS:
        raise KeyError(name)
    return RUNNERS[name](seed=seed)
