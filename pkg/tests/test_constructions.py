from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from queenarmy import oracles
from queenarmy.analysis import min_diag_cover
from queenarmy.board import Line, LineKind, Square, covered_count, lines_of
from queenarmy.constructions import (
    STRATEGIES,
    Corner,
    HexSpec,
    construct_best,
    corner_hexagon,
    diagonal_window,
    four_corner,
    hexagon_triple,
    nine_queens,
    square_block,
    trim,
    uneven_hexagon,
)
from queenarmy.errors import DomainError
from queenarmy.formulas import g_of, hexagon_block_count, m_star


def test_square_block_examples():
    p = square_block(3, Corner.BOTTOM_LEFT, 11)
    ls = lines_of(p)
    assert p.k == 9 and len(ls.rows) == len(ls.cols) == 3
    assert square_block(1, "top-right", 8).queens == {Square(8, 8)}
    two = square_block(2, Corner.BOTTOM_LEFT, 8)
    assert covered_count(two) == len(oracles.covered(two.queens, 8))
    with pytest.raises(DomainError):
        square_block(9, Corner.BOTTOM_LEFT, 8)


@pytest.mark.parametrize("corner", list(Corner))
def test_corner_hexagon_every_corner(corner):
    p = corner_hexagon(HexSpec(3, 3, 3, corner), 20)
    assert p.k == 7 == hexagon_block_count(3, 3)
    assert covered_count(p) == len(oracles.covered(p.queens, 20))


def test_corner_hexagon_examples():
    assert corner_hexagon(HexSpec(1, 1, 1), 5).queens == {Square(1, 1)}
    p = corner_hexagon(HexSpec(5, 5, 5), 30)
    ls = lines_of(p)
    assert p.k == 19
    assert (len(ls.rows), len(ls.cols), len(ls.pos_diags)) == (5, 5, 5)
    with pytest.raises(DomainError):
        corner_hexagon(HexSpec(3, 3, 6), 20)
    with pytest.raises(DomainError):
        corner_hexagon(HexSpec(3, 3, 3), 5)


def test_diagonal_window_is_centred():
    for a in range(1, 12):
        for c in range(1, 2 * a):
            w = diagonal_window(a, a, c)
            assert len(w) == c
            assert abs((w[0] + w[-1])) <= 1


@pytest.mark.parametrize("m, n, k, abc", [(9, 20, 7, (3, 3, 3)), (10, 20, 8, (3, 3, 4)), (3, 8, 1, (1, 1, 1))])
def test_uneven_hexagon_examples(m, n, k, abc):
    p = uneven_hexagon(m, n)
    spec = hexagon_triple(m)
    assert p.k == k and (spec.a, spec.b, spec.c) == abc
    assert min_diag_cover(p)[0] == min(spec.c, k)


def test_uneven_hexagon_counts():
    for m in range(3, 61):
        p = uneven_hexagon(m, 2 * m)
        spec = hexagon_triple(m)
        ls = lines_of(p)
        assert p.k == (m * m + 3) // 12
        assert spec.m == m and abs(spec.a - spec.c) <= 1
        assert (len(ls.cols), len(ls.rows)) == (spec.a, spec.b)
        window = set(diagonal_window(spec.a, spec.b, spec.c))
        assert ls.pos_diags <= window
        assert len(ls.pos_diags) == min(spec.c, 2 * spec.a - 1)


@pytest.mark.parametrize("m, n", [(2, 10), (10, 9)])
def test_uneven_hexagon_domain(m, n):
    with pytest.raises(DomainError):
        uneven_hexagon(m, n)


def test_four_corner_examples():
    p = four_corner(6, 11)
    assert p.queens == {Square(1, 1), Square(1, 11), Square(11, 1), Square(11, 11)} and p.k == g_of(6)
    ls = lines_of(p)
    assert ls.rows == ls.cols == {1, 11}
    _, cover = min_diag_cover(p)
    assert set(cover) == {Line(LineKind.DIAG_POS, 0), Line(LineKind.DIAG_NEG, 12)}
    assert four_corner(18, 25).k == 28
    with pytest.raises(DomainError):
        four_corner(18, 12)
    with pytest.raises(DomainError):
        four_corner(12, 40)


def test_nine_queens_examples():
    p = nine_queens(11)
    assert p.queens == {Square(x, y) for x in (1, 6, 11) for y in (1, 6, 11)}
    assert covered_count(p) == 89 <= 110
    small = nine_queens(5)
    assert small.k == 9 and covered_count(small) <= 50
    for bad in (8, 3):
        with pytest.raises(DomainError):
            nine_queens(bad)


def test_trim_keeps_inner_queens():
    p = trim(uneven_hexagon(9, 20), 5)
    assert p.k == 5 and p.queens <= uneven_hexagon(9, 20).queens
    with pytest.raises(DomainError):
        trim(p, 6)


@pytest.mark.parametrize("k, n, covered", [(1, 8, 22), (9, 11, 89)])
def test_construct_best_examples(k, n, covered):
    p = construct_best(k, n)
    assert p.k == k and covered_count(p) == covered


def test_construct_best_seven():
    p = construct_best(7, 12)
    assert p.k == 7 and covered_count(p) <= 9 * 12


@given(st.integers(1, 40), st.integers(0, 20))
def test_construct_best_bound(k, extra):
    n = m_star(k) + extra
    p = construct_best(k, n)
    assert p.k == k
    assert covered_count(p) <= m_star(k) * n + 3 * k


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_every_strategy_gives_k_queens(strategy):
    k = 4 if strategy == "four-corner" else 7
    n = 30
    assert construct_best(k, n, strategy).k == k


def test_construct_best_domain():
    with pytest.raises(DomainError):
        construct_best(30, 5)
    with pytest.raises(DomainError):
        construct_best(0, 5)
    with pytest.raises(DomainError):
        construct_best(3, 8, "spiral")
    with pytest.raises(DomainError):
        construct_best(10, 11, "nine")
