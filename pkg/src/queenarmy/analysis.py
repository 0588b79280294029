"""Lower-bound machinery.

Queens are edges of a bipartite graph between positive and negative
diagonals, so a largest set of queens with no shared diagonal is a maximum
matching and, by Konig's theorem, has the size of a smallest diagonal
cover.  On top of that: ring decompositions of a row/column grid, the ring
inequality, and a reporter for the critical-ring quantities.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .board import (
    DIAGONAL_KINDS,
    Line,
    LineKind,
    Placement,
    Square,
    covered_count,
    diag_length_sum,
    line_length,
    line_through,
    lines_of,
    on_board,
)
from .errors import DomainError
from .formulas import F_closed, delta, f_bound, g_of, m_star


# -- matching -----------------------------------------------------------------


def hopcroft_karp(adj: dict[int, list[int]]) -> dict[int, int]:
    """Maximum matching of a bipartite graph given as left -> sorted rights.

    Left vertices are visited in sorted order, which fixes the result.
    Returns the left -> right pairs.
    """
    left = sorted(adj)
    pair_l: dict[int, int] = {}
    pair_r: dict[int, int] = {}
    inf = len(left) + 1

    while True:
        dist: dict[int, int] = {}
        queue: deque[int] = deque()
        for u in left:
            if u not in pair_l:
                dist[u] = 0
                queue.append(u)
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for v in adj[u]:
                w = pair_r.get(v)
                if w is None:
                    found = min(found, dist[u] + 1)
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if found == inf:
            return pair_l

        for root in left:
            if root in pair_l:
                continue
            # iterative layered DFS for one augmenting path from root
            stack = [(root, iter(adj[root]))]
            path: list[tuple[int, int]] = []
            while stack:
                u, it = stack[-1]
                advanced = False
                for v in it:
                    w = pair_r.get(v)
                    if w is None:
                        if dist[u] + 1 == found:
                            path.append((u, v))
                            stack.clear()
                            advanced = True
                            break
                    elif dist.get(w) == dist[u] + 1:
                        path.append((u, v))
                        stack.append((w, iter(adj[w])))
                        advanced = True
                        break
                if not advanced:
                    stack.pop()
                    dist[u] = inf
                    if path:
                        path.pop()
            if path and path[-1][1] not in pair_r:
                for u, v in path:
                    pair_l[u] = v
                    pair_r[v] = u


def _diagonal_graph(queens: Iterable[Square]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for q in queens:
        adj.setdefault(q.x - q.y, []).append(q.x + q.y)
    for rights in adj.values():
        rights.sort()
    return adj


def max_nonsharing_queens(p: Placement) -> tuple[int, frozenset[Square]]:
    """Largest set of queens pairwise sharing no diagonal, with a witness."""
    matching = hopcroft_karp(_diagonal_graph(p.queens))
    witness = frozenset(Square((d + s) // 2, (s - d) // 2) for d, s in matching.items())
    return len(witness), witness


def min_diag_cover(p: Placement) -> tuple[int, list[Line]]:
    """Fewest diagonals (either direction) such that every queen is on one."""
    adj = _diagonal_graph(p.queens)
    pair_l = hopcroft_karp(adj)
    pair_r = {v: u for u, v in pair_l.items()}
    # alternating reachability from unmatched left vertices
    seen_l = {u for u in adj if u not in pair_l}
    seen_r: set[int] = set()
    queue = deque(sorted(seen_l))
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in seen_r or pair_l.get(u) == v:
                continue
            seen_r.add(v)
            w = pair_r.get(v)
            if w is not None and w not in seen_l:
                seen_l.add(w)
                queue.append(w)
    cover = [Line(LineKind.DIAG_POS, u) for u in sorted(adj) if u not in seen_l]
    cover += [Line(LineKind.DIAG_NEG, v) for v in sorted(seen_r)]
    assert len(cover) == len(pair_l)
    return len(cover), cover


# -- selections and rings -----------------------------------------------------


@dataclass(frozen=True)
class LineSelection:
    """``A`` chosen columns, ``B`` chosen rows and ``C`` chosen diagonals."""

    n: int
    cols: tuple[int, ...]
    rows: tuple[int, ...]
    diags: frozenset[Line] = frozenset()

    def __post_init__(self) -> None:
        for name, coords in (("cols", self.cols), ("rows", self.rows)):
            if not coords:
                raise DomainError(f"selection needs at least one of {name}")
            if any(b <= a for a, b in zip(coords, coords[1:])):
                raise DomainError(f"{name} must be strictly increasing")
            if coords[0] < 1 or coords[-1] > self.n:
                raise DomainError(f"{name} must lie on a {self.n}x{self.n} board")
        for d in self.diags:
            if d.kind not in DIAGONAL_KINDS:
                raise DomainError(f"{d} is not a diagonal")
            line_length(d, self.n)

    @property
    def a(self) -> int:
        return len(self.cols)

    @property
    def b(self) -> int:
        return len(self.rows)

    @property
    def c(self) -> int:
        return len(self.diags)

    def grid(self) -> list[Square]:
        return [Square(x, y) for x in self.cols for y in self.rows]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "cols": list(self.cols),
            "rows": list(self.rows),
            "diags": [d.to_json() for d in sorted(self.diags)],
        }


def selection_of(p: Placement) -> LineSelection:
    """Occupied columns and rows plus a minimum diagonal cover."""
    if not p.queens:
        raise DomainError("empty placement has no line selection")
    ls = lines_of(p)
    _, cover = min_diag_cover(p)
    return LineSelection(p.n, tuple(sorted(ls.cols)), tuple(sorted(ls.rows)), frozenset(cover))


def triple_intersections(sel: LineSelection) -> set[Square]:
    """Grid points lying on at least one selected diagonal."""
    pos = {d.index for d in sel.diags if d.kind == LineKind.DIAG_POS}
    neg = {d.index for d in sel.diags if d.kind == LineKind.DIAG_NEG}
    return {q for q in sel.grid() if q.x - q.y in pos or q.x + q.y in neg}


@dataclass(frozen=True)
class Ring:
    level: int
    points: tuple[Square, ...]


def ring_level(i: int, j: int, a: int, b: int) -> int:
    """Ring of grid position ``(i, j)`` (1-based) in an ``a x b`` grid."""
    return min(i, j, a + 1 - i, b + 1 - j)


def rings_of(sel: LineSelection) -> list[Ring]:
    a, b = sel.a, sel.b
    buckets: dict[int, list[Square]] = {}
    for i, x in enumerate(sel.cols, 1):
        for j, y in enumerate(sel.rows, 1):
            buckets.setdefault(ring_level(i, j, a, b), []).append(Square(x, y))
    return [Ring(level, tuple(buckets[level])) for level in sorted(buckets)]


def ring_diag_hits(ring: Ring, diag: Line) -> int:
    return sum(1 for q in ring.points if line_through(q, diag.kind) == diag)


@dataclass
class RingBoundReport:
    a: int
    b: int
    c: int
    size: int  # |S|
    ring_bound: int  # f(A+B, C) + delta(A+B)
    F_bound: int  # F(A+B+C)

    @property
    def holds(self) -> bool:
        return self.size <= self.ring_bound and self.size <= self.F_bound


def ring_bound_check(sel: LineSelection) -> RingBoundReport:
    rc = sel.a + sel.b
    return RingBoundReport(
        a=sel.a,
        b=sel.b,
        c=sel.c,
        size=len(triple_intersections(sel)),
        ring_bound=f_bound(rc, sel.c) + delta(rc),
        F_bound=F_closed(rc + sel.c),
    )


# -- certificates -------------------------------------------------------------


@dataclass
class Certificate:
    """Occupied lines whose lengths add up to at least ``n * M``."""

    n: int
    k: int
    a: int
    b: int
    c: int
    lines: tuple[Line, ...]
    total_length: int
    witness: frozenset[Square]

    @property
    def M(self) -> int:
        return self.a + self.b + self.c

    @property
    def F_M(self) -> int:
        return F_closed(self.M)

    def to_json(self) -> dict:
        return {
            "lines": [line.to_json() for line in self.lines],
            "total_length": self.total_length,
            "M": self.M,
            "n_times_M": self.n * self.M,
            "F(M)": self.F_M,
            "witness": [[q.x, q.y] for q in sorted(self.witness)],
        }


def lower_bound_certificate(p: Placement) -> Certificate:
    """Every occupied row and column plus both diagonals of each queen in a
    maximum diagonal-independent set.

    Each such queen's two diagonals sum to at least ``n + 1``, so the total
    is at least ``n * (A + B + C)``.
    """
    if not p.queens:
        raise DomainError("a certificate needs at least one queen")
    ls = lines_of(p)
    c, witness = max_nonsharing_queens(p)
    lines = [Line(LineKind.COL, x) for x in sorted(ls.cols)]
    lines += [Line(LineKind.ROW, y) for y in sorted(ls.rows)]
    for q in sorted(witness):
        lines.append(line_through(q, LineKind.DIAG_POS))
        lines.append(line_through(q, LineKind.DIAG_NEG))
    total = sum(line_length(line, p.n) for line in lines)
    return Certificate(p.n, p.k, len(ls.cols), len(ls.rows), c, tuple(lines), total, witness)


# -- critical ring ------------------------------------------------------------


@dataclass
class CriticalRingReport:
    applicable: bool
    reason: str = ""
    level: int = 0
    n: int = 0
    c: int = 0
    d_values: tuple[int, ...] = ()
    side_cols: int = 0  # L measured along columns
    side_rows: int = 0
    skew_diagonals: tuple[Line, ...] = ()
    skew_lengths: tuple[int, ...] = ()
    ring_points: int = 0
    occupied_points: int = 0
    diag_total: int = 0  # distinct diagonals through occupied ring points
    single_hit_total: int = 0
    median_gaps: tuple[int, ...] | None = None
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def D(self) -> int:
        return min(self.d_values)

    @property
    def d_consistent(self) -> bool:
        return len(set(self.d_values)) == 1

    @property
    def L(self) -> int:
        return self.side_cols

    @property
    def is_square(self) -> bool:
        return self.side_cols == self.side_rows

    @property
    def tight(self) -> bool:
        return self.occupied_points == 2 * self.c

    @property
    def skew_total(self) -> int:
        return sum(self.skew_lengths)

    @property
    def half_sum_bound(self) -> Fraction:
        return Fraction(self.occupied_points * (self.n + 2 * self.D) + self.single_hit_total, 2)

    @property
    def skew_bound(self) -> int:
        return 2 * self.n + 4 * self.D - 2 * self.L

    @property
    def combined_bound(self) -> int:
        return (self.c + 1) * self.n + 2 * (self.c + 1) * self.D - self.L

    @property
    def target(self) -> int:
        return (self.c + 1) * self.n

    def to_json(self) -> dict:
        if not self.applicable:
            return {"applicable": False, "reason": self.reason}
        return {
            "applicable": True,
            "level": self.level,
            "D": self.D,
            "D_values": list(self.d_values),
            "D_consistent": self.d_consistent,
            "L": self.L,
            "is_square": self.is_square,
            "tight": self.tight,
            "ring_points": self.ring_points,
            "occupied_points": self.occupied_points,
            "skew_diagonals": [d.to_json() for d in self.skew_diagonals],
            "skew_total": self.skew_total,
            "diag_total": self.diag_total,
            "single_hit_total": self.single_hit_total,
            "half_sum_bound": float(self.half_sum_bound),
            "skew_bound": self.skew_bound,
            "combined_bound": self.combined_bound,
            "target": self.target,
            "median_gaps": None if self.median_gaps is None else list(self.median_gaps),
            "checks": self.checks,
        }


def critical_ring_level(a: int, b: int, c: int) -> int | None:
    """The ``l`` with ``2C = 2A + 2B + 4 - 8l``, if there is one."""
    num = 2 * a + 2 * b + 4 - 2 * c
    if num % 8 or num < 8:
        return None
    return num // 8


def critical_ring_report(sel: LineSelection) -> CriticalRingReport:
    """Measure the critical-ring quantities of a concrete selection and
    evaluate the inequalities the ring argument relies on.

    This checks instances; it proves nothing in general.
    """
    a, b, c, n = sel.a, sel.b, sel.c, sel.n
    if abs(a - b) > 1:
        return CriticalRingReport(False, f"|A-B| = {abs(a - b)} > 1")
    level = critical_ring_level(a, b, c)
    if level is None:
        return CriticalRingReport(False, f"no l with 2C = 2A+2B+4-8l for A={a}, B={b}, C={c}")
    if min(a, b) < 2 * level - 1:
        return CriticalRingReport(False, f"ring {level} is empty for A={a}, B={b}")

    xs, ys = sel.cols, sel.rows
    lo_x, hi_x = xs[level - 1], xs[a - level]
    lo_y, hi_y = ys[level - 1], ys[b - level]
    d_values = (lo_x - xs[0], lo_y - ys[0], xs[-1] - hi_x, ys[-1] - hi_y)
    skew = (
        line_through((lo_x, hi_y), LineKind.DIAG_POS),
        line_through((hi_x, lo_y), LineKind.DIAG_POS),
        line_through((lo_x, lo_y), LineKind.DIAG_NEG),
        line_through((hi_x, hi_y), LineKind.DIAG_NEG),
    )
    ring = rings_of(sel)[level - 1]
    occupied = triple_intersections(sel) & set(ring.points)
    hits: Counter[Line] = Counter()
    for q in occupied:
        for kind in DIAGONAL_KINDS:
            hits[line_through(q, kind)] += 1
    diag_total = sum(line_length(d, n) for d in hits)
    single = sum(line_length(d, n) for d, h in hits.items() if h == 1)

    median_gaps = None
    if a % 2 and b % 2:
        mx, my = xs[(a + 1) // 2 - 1], ys[(b + 1) // 2 - 1]
        median_gaps = (min(hi_x - mx, mx - lo_x), min(hi_y - my, my - lo_y))

    rep = CriticalRingReport(
        applicable=True,
        level=level,
        n=n,
        c=c,
        d_values=d_values,
        side_cols=hi_x - lo_x,
        side_rows=hi_y - lo_y,
        skew_diagonals=skew,
        skew_lengths=tuple(line_length(d, n) for d in skew),
        ring_points=len(ring.points),
        occupied_points=len(occupied),
        diag_total=diag_total,
        single_hit_total=single,
        median_gaps=median_gaps,
    )
    rep.checks = {
        "ring_hits_at_most_2": all(h <= 2 for h in hits.values()),
        "half_sum": diag_total >= rep.half_sum_bound,
        "meets_target": diag_total >= rep.target,
    }
    if rep.tight and rep.is_square and rep.d_consistent:
        rep.checks["skew_claim"] = rep.skew_total >= rep.skew_bound
        rep.checks["combined"] = diag_total >= rep.combined_bound
    if median_gaps is not None:
        rep.checks["median_within_2D"] = all(g <= 2 * rep.D for g in median_gaps)
    return rep


# -- whole-placement report ---------------------------------------------------


def placement_report(p: Placement, certificate: bool = True, rings: bool = False) -> dict:
    """Line counts, covered counts and the bound comparison for one placement."""
    out: dict = {"n": p.n, "k": p.k, "covered": covered_count(p), "attacked": covered_count(p) - p.k}
    if not p.queens:
        return out
    sel = selection_of(p)
    M = sel.a + sel.b + sel.c
    ms = m_star(p.k)
    out.update(
        {
            "A": sel.a,
            "B": sel.b,
            "C": sel.c,
            "M": M,
            "F(M)": F_closed(M),
            "k_le_F(M)": p.k <= F_closed(M),
            "G(M)": g_of(M),
            "m_star(k)": ms,
            "G-comparison": {
                "G(M)": g_of(M),
                "k_le_G(M)": p.k <= g_of(M),
                "m_star(k)": ms,
                "covered_minus_m_star_n": covered_count(p) - ms * p.n,
            },
            "cover_diagonals": [d.to_json() for d in sorted(sel.diags)],
        }
    )
    if certificate:
        out["certificate"] = lower_bound_certificate(p).to_json()
    if rings:
        s = triple_intersections(sel)
        out["rings"] = [
            {"level": r.level, "points": len(r.points), "occupied": sum(q in s for q in r.points)}
            for r in rings_of(sel)
        ]
        out["critical_ring"] = critical_ring_report(sel).to_json()
    return out


def queens_on_board(squares: Iterable[tuple[int, int]], n: int) -> bool:
    return all(on_board(q, n) for q in squares)
