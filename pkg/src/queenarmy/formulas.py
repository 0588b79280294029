"""Closed-form bound functions and their maximise-over-splits counterparts.

Everything here is exact integer arithmetic.  ``G`` counts what the
constructions achieve for a line budget ``m``; ``F`` is the ring-counting
upper bound on how many points ``M`` rows, columns and diagonals can
triple-intersect in.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .errors import DomainError


def g_of(m: int) -> int:
    """Most queens the constructions fit on a budget of ``m`` lines."""
    if m < 1:
        raise DomainError(f"G is defined for m >= 1, got {m}")
    base = m * m // 12
    if m % 12 in (3, 6, 9) or m == 10:
        return base + 1
    return base


def m_star(k: int) -> int:
    """Smallest ``m`` with ``g_of(m) >= k``."""
    if k < 1:
        raise DomainError(f"m_star is defined for k >= 1, got {k}")
    # g_of(m) <= (m^2 + 12) / 12, so nothing below this can reach k
    m = max(1, isqrt(max(0, 12 * k - 12)))
    while g_of(m) < k:
        m += 1
    return m


def hexagon_block_count(a: int, c: int) -> int:
    """Squares of an ``a x a`` corner block lying on the middle ``c`` long diagonals."""
    if a < 1:
        raise DomainError(f"need at least one column, got {a}")
    if not 1 <= c <= 2 * a - 1:
        raise DomainError(f"need 1 <= C <= 2A-1 = {2 * a - 1}, got C={c}")
    t1 = (2 * a - c - 1) // 2
    t2 = (2 * a - c) // 2
    return a * a - t1 * (t1 + 1) // 2 - t2 * (t2 + 1) // 2


def regular_hexagon_count(side: int) -> int:
    if side < 1:
        raise DomainError(f"hexagon side must be >= 1, got {side}")
    return 3 * side * side - 3 * side + 1


def corner_bound(a: int, b: int, c: int) -> int:
    """Sum over L-shells of ``min(c, a + b + 1 - 2l)``, l = 1..min(a, b).

    Evaluated in O(1): the first ``l0`` shells are capped at ``c`` and the
    rest form an arithmetic series.
    """
    if min(a, b, c) < 0:
        raise DomainError("line counts must be non-negative")
    top = min(a, b)
    l0 = max(0, min(top, (a + b + 1 - c) // 2))
    tail = (top - l0) * (a + b + 1) - (top * (top + 1) - l0 * (l0 + 1))
    return c * l0 + tail


def delta(rc_total: int) -> int:
    return 1 if rc_total % 4 == 2 else 0


def f_bound(rc_total: int, c: int) -> int:
    """Sum over rings of ``min(2c, 2R + 4 - 8l)`` with ``R = rc_total``."""
    if rc_total < 2:
        raise DomainError(f"need at least one row and one column, got A+B={rc_total}")
    if c < 0:
        raise DomainError("diagonal count must be non-negative")
    top = (rc_total + 2) // 4
    l0 = max(0, min(top, (rc_total + 2 - c) // 4))
    tail = (top - l0) * (2 * rc_total + 4) - 4 * (top * (top + 1) - l0 * (l0 + 1))
    return 2 * c * l0 + tail


def _split_values(m: int) -> np.ndarray:
    """``f_bound(A, m - A) + delta(A)`` for A = 2..m, as int64."""
    r = np.arange(2, m + 1, dtype=np.int64)
    c = m - r
    top = (r + 2) // 4
    l0 = np.clip((r + 2 - c) // 4, 0, top)
    vals = 2 * c * l0 + (top - l0) * (2 * r + 4) - 4 * (top * (top + 1) - l0 * (l0 + 1))
    return vals + (r % 4 == 2)


def F_maximizers(M: int) -> tuple[int, list[int]]:
    """The maximum of ``f + delta`` over splits ``A + C = M`` and every
    row+column total ``A`` attaining it (ascending)."""
    if M < 2:
        raise DomainError(f"F is defined for M >= 2, got {M}")
    vals = _split_values(M)
    best = int(vals.max())
    return best, [int(i) + 2 for i in np.flatnonzero(vals == best)]


def F_of(M: int) -> int:
    return F_maximizers(M)[0]


def F_argmax(M: int) -> tuple[int, int]:
    """``(A, C)`` maximising ``F``; ties go to the smallest ``A``."""
    _, splits = F_maximizers(M)
    a = splits[0]
    return a, M - a


def F_closed(M: int) -> int:
    if M < 2:
        raise DomainError(f"F is defined for M >= 2, got {M}")
    base = M * M // 12
    return base if M % 12 in (0, 1, 5, 7, 11) else base + 1


@dataclass
class BoundRow:
    m: int
    G: int
    F: int
    source: str


@dataclass
class BoundTable:
    rows: list[BoundRow] = field(default_factory=list)

    @classmethod
    def build(cls, max_m: int, source: str = "maximized") -> BoundTable:
        """Rows for m = 2..max_m.

        With ``source="maximized"`` F comes from the split maximisation and is
        checked against the closed form; ``"closed-form"`` skips the search.
        """
        if source not in ("maximized", "closed-form"):
            raise DomainError(f"unknown table source {source!r}")
        if max_m < 2:
            raise DomainError("max_m must be at least 2")
        rows = []
        for m in range(2, max_m + 1):
            closed = F_closed(m)
            if source == "maximized":
                value = F_of(m)
                if value != closed:
                    raise AssertionError(f"F({m}): maximised {value} != closed form {closed}")
            rows.append(BoundRow(m, g_of(m), closed, source))
        return cls(rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "G", "F", "source"])
        for r in self.rows:
            w.writerow([r.m, r.G, r.F, r.source])
        return buf.getvalue()


def m_star_csv(max_k: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "m_star"])
    for k in range(1, max_k + 1):
        w.writerow([k, m_star(k)])
    return buf.getvalue()
