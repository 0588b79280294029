"""Board geometry: squares, the four line families and attack counting.

Coordinates are 1-based with ``(1, 1)`` in the bottom-left corner.  A
positive diagonal is indexed by ``x - y`` and a negative one by ``x + y``.
Queens attack whole lines; nothing blocks.

Covered sets are held as Python ints used as bitsets over the ``n * n``
cells, with one precomputed mask per line.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import DomainError


class LineKind(IntEnum):
    ROW = 0
    COL = 1
    DIAG_POS = 2
    DIAG_NEG = 3

    @property
    def label(self) -> str:
        return _KIND_LABELS[self]

    @classmethod
    def parse(cls, text: str) -> LineKind:
        try:
            return _LABEL_KINDS[text]
        except KeyError:
            raise DomainError(f"unknown line kind {text!r}") from None

    @property
    def is_diagonal(self) -> bool:
        return self >= LineKind.DIAG_POS


_KIND_LABELS = {
    LineKind.ROW: "row",
    LineKind.COL: "col",
    LineKind.DIAG_POS: "diag_pos",
    LineKind.DIAG_NEG: "diag_neg",
}
_LABEL_KINDS = {v: k for k, v in _KIND_LABELS.items()}

DIAGONAL_KINDS = (LineKind.DIAG_POS, LineKind.DIAG_NEG)


class Square(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True, order=True)
class Line:
    kind: LineKind
    index: int

    def to_json(self) -> dict:
        return {"kind": self.kind.label, "index": self.index}

    @classmethod
    def from_json(cls, obj: dict) -> Line:
        return cls(LineKind.parse(obj["kind"]), int(obj["index"]))

    def __str__(self) -> str:
        return f"{self.kind.label}[{self.index}]"


def check_dim(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"board size must be a positive integer, got {n!r}")


def on_board(sq: tuple[int, int], n: int) -> bool:
    return 1 <= sq[0] <= n and 1 <= sq[1] <= n


def index_range(kind: LineKind, n: int) -> range:
    """Valid indices for lines of ``kind`` on an ``n`` board."""
    if kind in (LineKind.ROW, LineKind.COL):
        return range(1, n + 1)
    if kind == LineKind.DIAG_POS:
        return range(-(n - 1), n)
    return range(2, 2 * n + 1)


def all_lines(n: int) -> list[Line]:
    """Every line on the board; there are ``6n - 2`` of them."""
    return [Line(kind, i) for kind in LineKind for i in index_range(kind, n)]


def line_through(sq: tuple[int, int], kind: LineKind) -> Line:
    x, y = sq
    if kind == LineKind.ROW:
        return Line(kind, y)
    if kind == LineKind.COL:
        return Line(kind, x)
    if kind == LineKind.DIAG_POS:
        return Line(kind, x - y)
    return Line(kind, x + y)


def lines_through(sq: tuple[int, int]) -> tuple[Line, Line, Line, Line]:
    return tuple(line_through(sq, kind) for kind in LineKind)  # type: ignore[return-value]


def _check_line(line: Line, n: int) -> None:
    if line.index not in index_range(line.kind, n):
        raise DomainError(f"{line} is not a line of a {n}x{n} board")


def line_length(line: Line, n: int) -> int:
    _check_line(line, n)
    if line.kind in (LineKind.ROW, LineKind.COL):
        return n
    if line.kind == LineKind.DIAG_POS:
        return n - abs(line.index)
    s = line.index
    return min(s - 1, 2 * n + 1 - s)


def squares_on(line: Line, n: int) -> list[Square]:
    """Squares of ``line`` sorted by x."""
    _check_line(line, n)
    i = line.index
    if line.kind == LineKind.ROW:
        return [Square(x, i) for x in range(1, n + 1)]
    if line.kind == LineKind.COL:
        return [Square(i, y) for y in range(1, n + 1)]
    if line.kind == LineKind.DIAG_POS:
        return [Square(x, x - i) for x in range(max(1, 1 + i), min(n, n + i) + 1)]
    return [Square(x, i - x) for x in range(max(1, i - n), min(n, i - 1) + 1)]


def diag_length_sum(sq: tuple[int, int], n: int) -> int:
    """Total length of the two diagonals through ``sq``."""
    if not on_board(sq, n):
        raise DomainError(f"{sq} is off a {n}x{n} board")
    return line_length(line_through(sq, LineKind.DIAG_POS), n) + line_length(
        line_through(sq, LineKind.DIAG_NEG), n
    )


def edge_distance(sq: tuple[int, int], n: int) -> int:
    x, y = sq
    return min(x - 1, y - 1, n - x, n - y)


@dataclass(frozen=True)
class Placement:
    """A set of queen squares on an ``n x n`` board."""

    n: int
    queens: frozenset[Square]

    def __post_init__(self) -> None:
        check_dim(self.n)
        for q in self.queens:
            if not on_board(q, self.n):
                raise DomainError(f"queen {tuple(q)} is off a {self.n}x{self.n} board")

    @classmethod
    def of(cls, n: int, squares: Iterable[tuple[int, int]]) -> Placement:
        """Build a placement, rejecting duplicate squares."""
        sqs = [Square(int(x), int(y)) for x, y in squares]
        queens = frozenset(sqs)
        if len(queens) != len(sqs):
            raise DomainError("duplicate queen squares")
        return cls(n, queens)

    @property
    def k(self) -> int:
        return len(self.queens)

    def sorted_queens(self) -> list[Square]:
        return sorted(self.queens)

    def to_json(self) -> dict:
        return {"n": self.n, "queens": [[q.x, q.y] for q in self.sorted_queens()]}

    @classmethod
    def from_json(cls, obj: dict) -> Placement:
        """Parse ``{"n": int, "queens": [[x, y], ...]}``; other keys are ignored."""
        try:
            n = obj["n"]
            queens = obj["queens"]
        except (KeyError, TypeError):
            raise DomainError('placement JSON needs "n" and "queens"') from None
        if not isinstance(n, int) or isinstance(n, bool):
            raise DomainError('"n" must be an integer')
        pairs = []
        for item in queens:
            if not (isinstance(item, (list, tuple)) and len(item) == 2):
                raise DomainError(f"queen entry {item!r} is not an [x, y] pair")
            pairs.append(item)
        return cls.of(n, pairs)

    def dumps(self, **kwargs) -> str:
        return json.dumps(self.to_json(), **kwargs)

    @classmethod
    def loads(cls, text: str) -> Placement:
        return cls.from_json(json.loads(text))


@dataclass(frozen=True)
class LineSet:
    rows: frozenset[int]
    cols: frozenset[int]
    pos_diags: frozenset[int]
    neg_diags: frozenset[int]

    def lines(self) -> list[Line]:
        out = [Line(LineKind.ROW, i) for i in sorted(self.rows)]
        out += [Line(LineKind.COL, i) for i in sorted(self.cols)]
        out += [Line(LineKind.DIAG_POS, i) for i in sorted(self.pos_diags)]
        out += [Line(LineKind.DIAG_NEG, i) for i in sorted(self.neg_diags)]
        return out


def lines_of(p: Placement) -> LineSet:
    qs = p.queens
    return LineSet(
        rows=frozenset(q.y for q in qs),
        cols=frozenset(q.x for q in qs),
        pos_diags=frozenset(q.x - q.y for q in qs),
        neg_diags=frozenset(q.x + q.y for q in qs),
    )


# -- bitsets ------------------------------------------------------------------


def cell_bit(sq: tuple[int, int], n: int) -> int:
    """Bit position of a square; ordering matches (x, y) lexicographic order."""
    return (sq[0] - 1) * n + (sq[1] - 1)


def bit_square(bit: int, n: int) -> Square:
    x, y = divmod(bit, n)
    return Square(x + 1, y + 1)


class BoardMasks:
    """Precomputed line and per-square attack masks for one board size."""

    def __init__(self, n: int):
        check_dim(n)
        self.n = n
        self.line: dict[Line, int] = {}
        for line in all_lines(n):
            mask = 0
            for sq in squares_on(line, n):
                mask |= 1 << cell_bit(sq, n)
            self.line[line] = mask
        # indexed by cell bit
        self.square: list[int] = [0] * (n * n)
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                mask = 0
                for line in lines_through((x, y)):
                    mask |= self.line[line]
                self.square[cell_bit((x, y), n)] = mask


@lru_cache(maxsize=64)
def board_masks(n: int) -> BoardMasks:
    return BoardMasks(n)


def mask_squares(mask: int, n: int) -> set[Square]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(bit_square(low.bit_length() - 1, n))
        mask ^= low
    return out


def covered_mask(p: Placement) -> int:
    masks = board_masks(p.n)
    mask = 0
    for line in lines_of(p).lines():
        mask |= masks.line[line]
    return mask


def covered_squares(p: Placement) -> set[Square]:
    """Union of every line holding a queen, queen squares included."""
    return mask_squares(covered_mask(p), p.n)


def covered_count(p: Placement) -> int:
    return covered_mask(p).bit_count()


def attacked_count(p: Placement) -> int:
    """Covered squares that are not themselves occupied."""
    return covered_count(p) - p.k


def common_attacked(q1: tuple[int, int], q2: tuple[int, int], n: int) -> int:
    """Squares covered by both a queen on ``q1`` and a queen on ``q2``."""
    if tuple(q1) == tuple(q2):
        raise DomainError("common_attacked needs two distinct squares")
    for q in (q1, q2):
        if not on_board(q, n):
            raise DomainError(f"{tuple(q)} is off a {n}x{n} board")
    masks = board_masks(n)
    return (masks.square[cell_bit(q1, n)] & masks.square[cell_bit(q2, n)]).bit_count()


def share_line(q1: tuple[int, int], q2: tuple[int, int]) -> bool:
    return any(line_through(q1, k) == line_through(q2, k) for k in LineKind)
