from __future__ import annotations

import csv
import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from queenarmy import oracles
from queenarmy.errors import DomainError
from queenarmy.formulas import (
    BoundTable,
    F_argmax,
    F_closed,
    F_maximizers,
    F_of,
    corner_bound,
    delta,
    f_bound,
    g_of,
    hexagon_block_count,
    m_star,
    m_star_csv,
    regular_hexagon_count,
)


def brute_F(M: int) -> int:
    """Literal ring sums maximised over every row+column total."""
    return max(oracles.literal_f(r, M - r) + (r % 4 == 2) for r in range(2, M + 1))


@pytest.mark.parametrize("m, g", [(1, 0), (2, 0), (3, 1), (6, 4), (9, 7), (10, 9), (12, 12), (18, 28)])
def test_g_of(m, g):
    assert g_of(m) == g


@pytest.mark.parametrize("k, m", [(1, 3), (9, 10), (28, 18), (7, 9), (8, 10)])
def test_m_star(k, m):
    assert m_star(k) == m


def test_m_star_is_least():
    for k in range(1, 400):
        m = m_star(k)
        assert g_of(m) >= k and (m == 1 or g_of(m - 1) < k)


@pytest.mark.parametrize("a, c, count", [(3, 3, 7), (2, 2, 3), (3, 4, 8), (1, 1, 1)])
def test_hexagon_block_count(a, c, count):
    assert hexagon_block_count(a, c) == count == oracles.literal_hexagon_count(a, c)


@pytest.mark.parametrize("a, c", [(3, 0), (3, 6), (0, 1)])
def test_hexagon_block_count_domain(a, c):
    with pytest.raises(DomainError):
        hexagon_block_count(a, c)


@pytest.mark.parametrize("side, count", [(1, 1), (3, 19), (4, 37)])
def test_regular_hexagon(side, count):
    assert regular_hexagon_count(side) == count == hexagon_block_count(2 * side - 1, 2 * side - 1)


@pytest.mark.parametrize("abc, bound", [((2, 2, 2), 3), ((3, 3, 3), 7), ((1, 1, 4), 1)])
def test_corner_bound(abc, bound):
    assert corner_bound(*abc) == bound


@given(st.integers(0, 40), st.integers(0, 40), st.integers(0, 80))
def test_corner_bound_matches_sum(a, b, c):
    assert corner_bound(a, b, c) == oracles.literal_corner_bound(a, b, c)


@given(st.integers(2, 300), st.integers(0, 300))
def test_f_bound_matches_sum(r, c):
    assert f_bound(r, c) == oracles.literal_f(r, c)


def test_delta():
    assert [delta(r) for r in range(2, 10)] == [1, 0, 0, 0, 1, 0, 0, 0]


def test_f_bound_zero_diagonals():
    assert all(f_bound(r, 0) == 0 for r in range(2, 50))


@pytest.mark.parametrize("M, F", [(14, 17), (12, 12), (10, 9), (2, 1), (3, 1)])
def test_F_examples(M, F):
    assert F_of(M) == F_closed(M) == F


def test_F_against_literal_sums():
    for M in range(2, 120):
        assert F_of(M) == brute_F(M) == F_closed(M)


@pytest.mark.parametrize("M", [0, 1, -3])
def test_F_domain(M):
    with pytest.raises(DomainError):
        F_of(M)
    with pytest.raises(DomainError):
        F_closed(M)


def test_F_argmax_tie_rule():
    for M in range(2, 200):
        a, c = F_argmax(M)
        assert a + c == M and a == F_maximizers(M)[1][0]
        assert f_bound(a, c) + delta(a) == F_of(M)


def test_optimal_split_location():
    for M in range(2, 501):
        c = M // 3 + (M % 12 in (8, 10))
        assert M - c in F_maximizers(M)[1]


def test_G_at_most_F():
    for m in range(2, 1000):
        gap = F_closed(m) - g_of(m)
        assert gap == (1 if m % 12 in (2, 4, 8, 10) and m != 10 else 0)


def test_bound_table_csv():
    text = BoundTable.build(20).to_csv()
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["m", "G", "F", "source"]
    assert [int(r["m"]) for r in rows] == list(range(2, 21))
    row18 = next(r for r in rows if r["m"] == "18")
    assert row18["G"] == "28" and row18["F"] == "28"
    assert BoundTable.build(20, "closed-form").rows[-1].source == "closed-form"


def test_bound_table_domain():
    with pytest.raises(DomainError):
        BoundTable.build(1)
    with pytest.raises(DomainError):
        BoundTable.build(10, "guess")


def test_m_star_csv():
    lines = m_star_csv(9).splitlines()
    assert lines[0] == "k,m_star" and lines[-1] == "9,10"
