"""Exhaustive searches used as optimality oracles at desk scale.

``exact_min_covered`` is a depth-first branch and bound over k-subsets of
squares.  Covered sets are int bitsets; the covered count of a partial
placement never decreases as queens are added, so it is the lower bound.

Symmetry: the canonical form of a placement is the lexicographically least
of its eight dihedral images.  Its first square is the smallest square of
its own orbit and every other square has an orbit minimum no smaller than
that, so the search only branches on such squares.
"""

from __future__ import annotations

import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .analysis import LineSelection
from .board import Line, LineKind, Placement, Square, board_masks, cell_bit, check_dim
from .errors import BudgetExceeded, DomainError

DEFAULT_BUDGET = 10**8
_FLUSH = 4096


def dihedral_images(squares, n: int) -> list[tuple[Square, ...]]:
    """The eight images of a square set, each as a sorted tuple."""
    maps = (
        lambda x, y: (x, y),
        lambda x, y: (n + 1 - x, y),
        lambda x, y: (x, n + 1 - y),
        lambda x, y: (n + 1 - x, n + 1 - y),
        lambda x, y: (y, x),
        lambda x, y: (n + 1 - y, x),
        lambda x, y: (y, n + 1 - x),
        lambda x, y: (n + 1 - y, n + 1 - x),
    )
    return [tuple(sorted(Square(*f(x, y)) for x, y in squares)) for f in maps]


def canonical(p: Placement) -> Placement:
    return Placement(p.n, frozenset(min(dihedral_images(p.queens, p.n))))


@dataclass
class SearchResult:
    k: int
    n: int
    optimum: int
    witnesses: list[Placement]
    nodes_explored: int
    wall_time: float
    symmetry: bool = True
    threads: int = 1

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "optimum": self.optimum,
            "attacked": self.optimum - self.k,
            "witnesses": [w.to_json()["queens"] for w in self.witnesses],
            "nodes_explored": self.nodes_explored,
            "wall_time": round(self.wall_time, 6),
            "symmetry": self.symmetry,
            "threads": self.threads,
        }


class _Local:
    """Single-process stand-in for a shared ``multiprocessing.Value``."""

    def __init__(self, value: int):
        self.value = value

    def get_lock(self):
        return _NoLock()


class _NoLock:
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


_shared_best = None
_shared_nodes = None


def _init_worker(best, nodes) -> None:
    global _shared_best, _shared_nodes
    _shared_best, _shared_nodes = best, nodes


@dataclass
class _Item:
    root: int
    k: int
    n: int
    symmetry: bool
    all_witnesses: bool
    budget: int


@dataclass
class _ItemResult:
    root: int
    best: int
    leaves: list[tuple[int, ...]] = field(default_factory=list)
    nodes: int = 0


def _orbit_min(n: int) -> list[int]:
    out = []
    for bit in range(n * n):
        x, y = divmod(bit, n)
        sq = (x + 1, y + 1)
        out.append(min(cell_bit(img[0], n) for img in dihedral_images([sq], n)))
    return out


def _run_item(item: _Item, best_ref=None, nodes_ref=None) -> _ItemResult:
    best_ref = best_ref if best_ref is not None else _shared_best
    nodes_ref = nodes_ref if nodes_ref is not None else _shared_nodes
    n, k = item.n, item.k
    total = n * n
    sq_mask = board_masks(n).square
    if item.symmetry:
        omin = _orbit_min(n)
        allowed = [b for b in range(item.root + 1, total) if omin[b] >= item.root]
    else:
        allowed = list(range(item.root + 1, total))

    res = _ItemResult(item.root, total + 1)
    pending = 0
    keep_all = item.all_witnesses
    chosen = [item.root]

    def flush() -> None:
        nonlocal pending
        with nodes_ref.get_lock():
            nodes_ref.value += pending
            seen = nodes_ref.value
        res.nodes += pending
        pending = 0
        if seen > item.budget:
            raise BudgetExceeded(f"search exceeded node budget {item.budget}", seen, item.budget)

    def dfs(start: int, covered: int) -> None:
        nonlocal pending
        pending += 1
        if pending >= _FLUSH:
            flush()
        count = covered.bit_count()
        if keep_all:
            if count > res.best or count > best_ref.value:
                return
        elif count >= res.best or count > best_ref.value:
            return
        need = k - len(chosen)
        if need == 0:
            if count < res.best:
                res.best = count
                res.leaves = []
                with best_ref.get_lock():
                    if count < best_ref.value:
                        best_ref.value = count
            res.leaves.append(tuple(chosen))
            return
        for pos in range(start, len(allowed) - need + 1):
            b = allowed[pos]
            chosen.append(b)
            dfs(pos + 1, covered | sq_mask[b])
            chosen.pop()

    dfs(0, sq_mask[item.root])
    flush()
    return res


def exact_min_covered(
    k: int,
    n: int,
    threads: int = 1,
    budget: int = DEFAULT_BUDGET,
    symmetry: bool = True,
    all_witnesses: bool = False,
) -> SearchResult:
    """Minimum covered count over all placements of ``k`` queens.

    Witnesses are canonical forms.  By default only the witness reached
    first in lexicographic search order is returned; ``all_witnesses``
    returns one canonical placement per optimal symmetry class.  Output
    does not depend on ``threads``.
    """
    check_dim(n)
    if not 1 <= k <= n * n:
        raise DomainError(f"need 1 <= k <= n^2, got k={k}, n={n}")
    if threads < 1:
        raise DomainError("threads must be >= 1")
    t0 = time.perf_counter()
    total = n * n
    roots = range(total - k + 1)
    if symmetry:
        omin = _orbit_min(n)
        roots = [b for b in roots if omin[b] == b]
    items = [_Item(r, k, n, symmetry, all_witnesses, budget) for r in roots]

    if threads == 1:
        best, nodes = _Local(total + 1), _Local(0)
        results = [_run_item(it, best, nodes) for it in items]
    else:
        method = "fork" if "fork" in mp.get_all_start_methods() else "spawn"
        ctx = mp.get_context(method)
        best, nodes = ctx.Value("q", total + 1), ctx.Value("q", 0)
        with ProcessPoolExecutor(threads, mp_context=ctx, initializer=_init_worker, initargs=(best, nodes)) as ex:
            results = list(ex.map(_run_item, items))

    optimum = min(r.best for r in results)
    explored = sum(r.nodes for r in results)
    leaves = [leaf for r in results if r.best == optimum for leaf in r.leaves]
    if not all_witnesses:
        first = min((r for r in results if r.best == optimum), key=lambda r: r.root)
        leaves = first.leaves[:1]
    forms = sorted({min(dihedral_images(_leaf_squares(leaf, n), n)) for leaf in leaves})
    witnesses = [Placement(n, frozenset(f)) for f in forms]
    return SearchResult(k, n, optimum, witnesses, explored, time.perf_counter() - t0, symmetry, threads)


def _leaf_squares(leaf: tuple[int, ...], n: int) -> list[Square]:
    return [Square(b // n + 1, b % n + 1) for b in leaf]


# -- triple-intersection maximisation ------------------------------------------


KINDS = ("both", "long")


def _axis_choices(count: int, r: int):
    # translation invariance: the first chosen coordinate is always 1
    for rest in combinations(range(2, r + 1), count - 1):
        yield (1,) + rest


def _max_triple_core(a, b, c, r, kinds, target, budget):
    if kinds not in KINDS:
        raise DomainError(f"kinds must be one of {KINDS}, got {kinds!r}")
    if min(a, b) < 1 or c < 0:
        raise DomainError("need A, B >= 1 and C >= 0")
    if a > r or b > r:
        raise DomainError(f"A={a}, B={b} do not fit in coordinate range {r}")

    best = -1
    best_sel = None
    nodes = 0
    for cols in _axis_choices(a, r):
        for rows in _axis_choices(b, r):
            groups: dict[Line, int] = {}
            for i, x in enumerate(cols):
                for j, y in enumerate(rows):
                    bit = 1 << (i * b + j)
                    key = Line(LineKind.DIAG_POS, x - y)
                    groups[key] = groups.get(key, 0) | bit
                    if kinds == "both":
                        key = Line(LineKind.DIAG_NEG, x + y)
                        groups[key] = groups.get(key, 0) | bit
            cand = sorted(groups.items(), key=lambda kv: (-kv[1].bit_count(), kv[0]))
            sizes = [m.bit_count() for _, m in cand]
            pick = min(c, len(cand))
            if min(a * b, sum(sizes[:pick])) <= best:
                continue

            chosen: list[Line] = []
            found: list = [best, None]

            def grow(idx: int, covered: int) -> None:
                nonlocal nodes
                nodes += 1
                if nodes > budget:
                    raise BudgetExceeded(f"triple search exceeded node budget {budget}", nodes, budget)
                have = covered.bit_count()
                left = pick - len(chosen)
                if left == 0 or idx == len(cand):
                    if have > found[0]:
                        found[0] = have
                        found[1] = list(chosen)
                    return
                if have + sum(sizes[idx : idx + left]) <= found[0]:
                    return
                if target is not None and found[0] >= target:
                    return
                line, mask = cand[idx]
                chosen.append(line)
                grow(idx + 1, covered | mask)
                chosen.pop()
                if len(cand) - idx - 1 >= left:
                    grow(idx + 1, covered)

            grow(0, 0)
            if found[1] is not None and found[0] > best:
                best = found[0]
                best_sel = LineSelection(r, cols, rows, frozenset(found[1]))
                if target is not None and best >= target:
                    return best, best_sel
    return best, best_sel


def max_triple_points(
    a: int, b: int, c: int, r: int, kinds: str = "both", budget: int = DEFAULT_BUDGET
) -> tuple[int, LineSelection]:
    """Most grid points on ``a`` columns x ``b`` rows inside ``[1, r]`` that
    ``c`` diagonals can pass through, with a selection achieving it.

    ``kinds="long"`` restricts the diagonals to one direction (positive).
    """
    best, sel = _max_triple_core(a, b, c, r, kinds, None, budget)
    return best, sel


def find_packed_arrangement(
    a: int, b: int, c: int, target: int, r: int, kinds: str = "both", budget: int = DEFAULT_BUDGET
) -> tuple[LineSelection, list[Square]] | None:
    """First selection whose triple-intersection set has at least ``target``
    points, or ``None``."""
    from .analysis import triple_intersections

    best, sel = _max_triple_core(a, b, c, r, kinds, target, budget)
    if sel is None or best < target:
        return None
    return sel, sorted(triple_intersections(sel))
