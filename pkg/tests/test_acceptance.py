"""Acceptance gate: one PASS/FAIL line per criterion, with its time limit."""

from __future__ import annotations

import random
import time
from itertools import product

from queenarmy import oracles, verify
from queenarmy.analysis import lower_bound_certificate, min_diag_cover
from queenarmy.board import LineKind, Placement, covered_count, covered_squares, line_length, lines_of
from queenarmy.constructions import construct_best, diagonal_window, hexagon_triple, nine_queens, uneven_hexagon
from queenarmy.formulas import F_closed, F_of, corner_bound, g_of, hexagon_block_count, m_star, regular_hexagon_count
from queenarmy.search import exact_min_covered, max_triple_points

RESULTS: dict[int, str] = {}


def record(number: int, title: str, ok: bool, elapsed: float, limit: float, detail: str = "") -> None:
    passed = ok and elapsed < limit
    why = detail if not ok else ("" if elapsed < limit else f"over time limit {limit}s")
    line = f"criterion {number} {'PASS' if passed else 'FAIL'}: {title} [{elapsed:.2f}s < {limit:g}s]"
    if why:
        line += f" {why}"
    RESULTS[number] = line
    print(line)
    assert ok, detail
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


def timed(fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t0


def test_criterion_1_bound_table():
    def run():
        fixed = [g_of(3) == 1, g_of(10) == 9, g_of(18) == 28, F_of(14) == 17 == F_closed(14)]
        bad = [M for M in range(2, 2001) if F_of(M) != F_closed(M)]
        return all(fixed) and not bad, f"fixed values {fixed}, mismatches {bad[:5]}"

    ok, detail, dt = timed(run)
    record(1, "G(3)=1, G(10)=9, G(18)=28, F(14)=17, F_of = F_closed for M <= 2000", ok, dt, 1.0, detail)


def test_criterion_2_construction_counts():
    def run():
        bad = []
        for m in range(3, 61):
            p = uneven_hexagon(m, 2 * m)
            spec = hexagon_triple(m)
            ls = lines_of(p)
            window = set(diagonal_window(spec.a, spec.b, spec.c))
            designated = len(ls.cols) + len(ls.rows) + spec.c
            ok = (
                p.k == (m * m + 3) // 12
                and designated == m
                and len(ls.cols) == spec.a
                and len(ls.rows) == spec.b
                and ls.pos_diags <= window
            )
            if not ok:
                bad.append(m)
        hexes = [m for m in range(1, 41) if not (regular_hexagon_count(m) == 3 * m * m - 3 * m + 1 == hexagon_block_count(2 * m - 1, 2 * m - 1))]
        return not bad and not hexes, f"uneven failures {bad}, hexagon failures {hexes}"

    ok, detail, dt = timed(run)
    record(2, "uneven_hexagon(m, 2m) counts and lines for 3 <= m <= 60; regular hexagon identity m <= 40", ok, dt, 1.0, detail)


def test_criterion_3_nine_queens():
    def run():
        p = nine_queens(11)
        ls = lines_of(p)
        brute = oracles.covered(p.queens, 11)
        # long diagonals have length 11, half diagonals length 6; the rest are single corner cells
        pos = [line_length(line, 11) for line in ls.lines() if line.kind is LineKind.DIAG_POS]
        neg = [line_length(line, 11) for line in ls.lines() if line.kind is LineKind.DIAG_NEG]
        diag_lengths = sorted(x for x in pos + neg if x > 1)
        profile = len(ls.rows) == 3 and len(ls.cols) == 3 and diag_lengths == [6, 6, 6, 6, 11, 11]
        union = set()
        for line in ls.lines():
            union |= set(oracles.scan_line(line, 11))
        count_ok = covered_count(p) == len(brute) == len(union) == 89 and covered_squares(p) == brute
        return profile and count_ok and 89 <= 10 * 11, f"profile {profile}, counts {covered_count(p)}/{len(brute)}"

    ok, detail, dt = timed(run)
    record(3, "nine_queens(11): 3 rows, 3 cols, 2 long + 4 half diagonals, covered 89 <= 110", ok, dt, 1.0, detail)


def test_criterion_4_upper_bound():
    def run():
        n = 50
        bad = []
        for k in range(1, 31):
            p = construct_best(k, n)
            if p.k != k or covered_count(p) > m_star(k) * n + 3 * k:
                bad.append((k, covered_count(p), m_star(k) * n + 3 * k))
        return not bad, f"violations {bad}"

    ok, detail, dt = timed(run)
    record(4, "covered(construct_best(k, 50)) <= m_star(k)*50 + 3k for k <= 30", ok, dt, 5.0, detail)


def test_criterion_5_exact_search():
    def run():
        bad = []
        for n in range(4, 9):
            res = exact_min_covered(1, n)
            corner = {(1, 1), (1, n), (n, 1), (n, n)}
            if res.optimum != 3 * n - 2 or not all(set(w.queens) <= corner for w in res.witnesses):
                bad.append(("k=1", n))
        for n in range(1, 7):
            for k in range(1, 4):
                if k <= n * n and exact_min_covered(k, n).optimum != oracles.min_covered(k, n):
                    bad.append((k, n))
        return not bad, f"mismatches {bad}"

    ok, detail, dt = timed(run)
    record(5, "exact_min_covered(1, n) = 3n-2 at a corner, n = 4..8; equals enumeration for k <= 3, n <= 6", ok, dt, 60.0, detail)


def test_criterion_6_lower_bound_machinery():
    def run():
        checks = (
            verify.suite_lemma2(seed=0)[:1]
            + verify.suite_konig(seed=0, samples=10_000)
            + verify.suite_rings(seed=0)[1:]
            + verify.suite_eq1(seed=0, samples=10_000)
        )
        failed = [c.line() for c in checks if not c.passed]
        return not failed, f"failed checks {failed}"

    ok, detail, dt = timed(run)
    record(6, "diagonal-length identity n <= 12; Konig 10^4; ring hits <= 2 (A,B <= 8, n <= 16); ring-sum bound 10^4 + exhaustive", ok, dt, 120.0, detail)


def test_criterion_7_tightness():
    def run():
        best, sel = max_triple_points(5, 5, 4, 9, "both")
        bad = []
        for m in range(3, 10):
            values = []
            for a in range(1, (m - 1) // 2 + 1):
                c = m - 2 * a
                value, _ = max_triple_points(a, a, c, 8, "long")
                if value != corner_bound(a, a, c):
                    bad.append((a, a, c, value))
                values.append(value)
            corner_opt = max(corner_bound(a, b, m - a - b) for a in range(m + 1) for b in range(m + 1 - a))
            if not max(values) == corner_opt == (m * m + 3) // 12:
                bad.append((m, max(values), corner_opt))
        return best == 17 and sel.c == 4 and not bad, f"best {best}, long-only failures {bad}"

    ok, detail, dt = timed(run)
    record(7, "max_triple_points(5,5,4, both, R=9) = 17; long-only optimum = floor((m^2+3)/12) for m <= 9", ok, dt, 600.0, detail)


def test_criterion_8_certificates():
    def run():
        rng = random.Random(2024)
        bad = []
        for _ in range(1000):
            n = rng.randint(1, 12)
            cells = list(product(range(1, n + 1), repeat=2))
            k = rng.randint(1, min(len(cells), 20))
            p = Placement.of(n, rng.sample(cells, k))
            cert = lower_bound_certificate(p)
            through = all(p.queens & set(oracles.scan_line(line, n)) for line in cert.lines)
            c = min_diag_cover(p)[0]
            if not (through and cert.c == c and cert.M == len(lines_of(p).cols) + len(lines_of(p).rows) + c and cert.total_length >= n * cert.M):
                bad.append(p.to_json())
        return not bad, f"{len(bad)} unsound certificates, first {bad[:1]}"

    ok, detail, dt = timed(run)
    record(8, "1000 random certificates: lines through queens, total_length >= n*M", ok, dt, 30.0, detail)
