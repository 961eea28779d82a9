"""Exhaustive enumeration and counting of H, W and S paths.

H and W paths are found by a Hamiltonian search on the inscribed grid, S
paths by a tile-covering search on the overall grid; the two searches share
no state, so equality of the W and S counts is a genuine cross-check.

The compiled kernels in `_kernels` try direction codes in increasing order,
hence produce paths lexicographically.  The search tree is split into
independent subtrees by fixed-depth digit prefixes; tasks are run inline or
on a thread pool (the kernels release the GIL) and their results are merged
in prefix order, which makes counts and streams deterministic and
independent of the worker count.

`iter_paths` is a direct pure Python implementation of the definitions,
kept as a slow reference oracle for the kernels.
"""

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

import numpy as np

from . import _kernels
from .lattice import GridSpec, dark_tiles, edge_to_tile, step, triangular_number
from .paths import (
    DegenerateOrderError,
    PATH_KINDS,
    h_pair_allowed,
    s_pair_allowed,
    w_pair_allowed,
)

__all__ = [
    "MAX_ORDER",
    "TABLE2_MAX_ORDER",
    "EnumerationReport",
    "enumerate_paths",
    "count_paths",
    "count_equality_check",
    "iter_paths",
]

# Orders above 12 are outside any practical exhaustive search.
MAX_ORDER = 12
# Largest order with an independently published count; beyond this the
# results are reported as unverified.
TABLE2_MAX_ORDER = 9

DEFAULT_PREFIX_DEPTH = 3


@dataclass(frozen=True)
class EnumerationReport:
    """Outcome of one enumeration run."""

    order: int
    kind: str
    count: int
    elapsed_s: float
    conjectural: bool
    paths: tuple[str, ...] | None = None

    def summary_record(self) -> dict:
        record = {
            "n": self.order,
            "kind": self.kind,
            "count": self.count,
            "elapsed_s": round(self.elapsed_s, 6),
        }
        if self.conjectural:
            record["unverified"] = True
        return record


def _check_order(n: int) -> None:
    if n < 2:
        raise DegenerateOrderError(f"no paths of order {n}, orders start at 2")
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the practical enumeration bound {MAX_ORDER}")


def _check_kind(kind: str) -> str:
    k = kind.upper()
    if k not in PATH_KINDS:
        raise ValueError(f"unknown path kind {kind!r}")
    return k


class _HamProblem(NamedTuple):
    nbr: np.ndarray
    adjmask: np.ndarray
    pair_ok: np.ndarray
    last_ok: np.ndarray
    start: int
    goal: int
    target: int
    use_mask: int


class _TilingProblem(NamedTuple):
    nbr: np.ndarray
    etile: np.ndarray
    tnbr: np.ndarray
    tmask: np.ndarray
    pair_ok: np.ndarray
    start: int
    goal: int
    goal_tile: int
    target: int
    use_mask: int


def _vertex_arrays(grid: GridSpec):
    pts = list(grid.points())
    index = {p: i for i, p in enumerate(pts)}
    nbr = np.full((len(pts), 6), -1, np.int16)
    for i, p in enumerate(pts):
        for d in range(6):
            j = index.get(step(p, d))
            if j is not None:
                nbr[i, d] = j
    return pts, index, nbr


def _adjacency_masks(nbr: np.ndarray) -> np.ndarray:
    count = nbr.shape[0]
    masks = np.zeros(count, np.uint64)
    if count > 64:
        return masks
    for i in range(count):
        m = 0
        for d in range(6):
            if nbr[i, d] >= 0:
                m |= 1 << int(nbr[i, d])
        masks[i] = m
    return masks


def _pair_table(allowed: Callable[[int, int], bool]) -> np.ndarray:
    table = np.zeros((6, 6), np.uint8)
    for a in range(6):
        for b in range(6):
            table[a, b] = 1 if allowed(a, b) else 0
    return table


def _ham_problem(kind: str, n: int) -> _HamProblem:
    grid = GridSpec(n, "inscribed")
    pts, index, nbr = _vertex_arrays(grid)
    allowed = h_pair_allowed if kind == "H" else w_pair_allowed
    pair_ok = _pair_table(allowed)
    if kind == "W":
        last_ok = np.array([w_pair_allowed(d, 0) for d in range(6)], np.uint8)
    else:
        last_ok = np.ones(6, np.uint8)
    return _HamProblem(
        nbr=nbr,
        adjmask=_adjacency_masks(nbr),
        pair_ok=pair_ok,
        last_ok=last_ok,
        start=index[(0, 0)],
        goal=index[(n - 1, 0)],
        target=len(pts) - 1,
        use_mask=1 if len(pts) <= 64 else 0,
    )


def _tiling_problem(n: int) -> _TilingProblem:
    grid = GridSpec(n, "overall")
    pts, index, nbr = _vertex_arrays(grid)
    tiles = list(dark_tiles(n))
    tile_index = {t: i for i, t in enumerate(tiles)}
    etile = np.full((len(pts), 6), -1, np.int16)
    for i, p in enumerate(pts):
        for d in range(6):
            if nbr[i, d] >= 0:
                t = tile_index.get(edge_to_tile(p, d))
                etile[i, d] = -1 if t is None else t
    # Tiles sharing exactly one corner sit one axial unit step apart, the
    # same adjacency the inscribed grid has.
    tnbr = np.full((len(tiles), 6), -1, np.int16)
    for t, i in tile_index.items():
        for d in range(6):
            j = tile_index.get(step(t, d))
            if j is not None:
                tnbr[i, d] = j
    return _TilingProblem(
        nbr=nbr,
        etile=etile,
        tnbr=tnbr,
        tmask=_adjacency_masks(tnbr),
        pair_ok=_pair_table(s_pair_allowed),
        start=index[(0, 0)],
        goal=index[(n, 0)],
        goal_tile=tile_index[(n - 1, 0)],
        target=len(tiles),
        use_mask=1 if len(tiles) <= 64 else 0,
    )


def _run_kernel(kind: str, problem, prefix: np.ndarray, out: np.ndarray):
    if kind == "S":
        return _kernels.tiling_search(
            problem.nbr,
            problem.etile,
            problem.tnbr,
            problem.tmask,
            problem.pair_ok,
            problem.start,
            problem.goal,
            problem.goal_tile,
            problem.use_mask,
            prefix,
            out,
        )
    return _kernels.ham_search(
        problem.nbr,
        problem.adjmask,
        problem.pair_ok,
        problem.last_ok,
        problem.start,
        problem.goal,
        problem.target,
        problem.use_mask,
        prefix,
        out,
    )


def _prefixes(kind: str, n: int, depth: int) -> list[np.ndarray]:
    """Valid digit prefixes of the given length, lexicographically.

    Validity here means the basic feasibility rules only (grid containment,
    self-avoidance, pair rules, unused tiles).  That is a superset of what
    the kernels accept, so no subtree is lost; over-eager prefixes just
    replay to empty subtrees.
    """
    if depth <= 0:
        return [np.empty(0, np.int8)]
    grid = GridSpec(n, "inscribed" if kind in ("H", "W") else "overall")
    if kind == "H":
        allowed = h_pair_allowed
    elif kind == "W":
        allowed = w_pair_allowed
    else:
        allowed = s_pair_allowed
    out: list[np.ndarray] = []
    acc: list[int] = []

    def extend(pos, last, seen, tiles):
        if len(acc) == depth:
            out.append(np.array(acc, np.int8))
            return
        for d in range(6):
            # Depth 0 uses the sentinel last digit 0, as the kernels do.
            if not allowed(last, d):
                continue
            q = step(pos, d)
            if not grid.contains(q) or q in seen:
                continue
            if kind == "S":
                t = edge_to_tile(pos, d)
                if t in tiles:
                    continue
                tiles.add(t)
            acc.append(d)
            seen.add(q)
            extend(q, d, seen, tiles)
            seen.discard(q)
            acc.pop()
            if kind == "S":
                tiles.discard(t)

    extend((0, 0), 0, {(0, 0)}, set())
    return out


def _decode_rows(buf: np.ndarray) -> list[str]:
    return [bytes(row + 48).decode("ascii") for row in buf]


def enumerate_paths(
    kind: str,
    n: int,
    *,
    emit: Callable[[str], None] | None = None,
    collect: bool = False,
    workers: int = 1,
    prefix_depth: int = DEFAULT_PREFIX_DEPTH,
    progress: Callable[[int, int], None] | None = None,
) -> EnumerationReport:
    """Enumerate all paths of the given kind and order.

    Counts always; digit strings are produced only when `emit` (a callable
    receiving each string) or `collect` (stored on the report) asks for
    them, in lexicographic order.  `workers` 0 means one per CPU; any
    worker count yields identical results.
    """
    kind = _check_kind(kind)
    _check_order(n)
    if workers < 0:
        raise ValueError("workers must be >= 0")
    if prefix_depth < 0:
        raise ValueError("prefix_depth must be >= 0")
    problem = _ham_problem(kind, n) if kind in ("H", "W") else _tiling_problem(n)
    materialize = emit is not None or collect
    start_time = time.perf_counter()

    depth = prefix_depth if problem.target > prefix_depth else 0
    prefixes = _prefixes(kind, n, depth)
    empty_out = np.empty((0, problem.target), np.uint8)

    def run_task(prefix: np.ndarray):
        cnt, _ = _run_kernel(kind, problem, prefix, empty_out)
        if not materialize or cnt == 0:
            return cnt, None
        buf = np.empty((cnt, problem.target), np.uint8)
        cnt2, rows = _run_kernel(kind, problem, prefix, buf)
        if cnt2 != cnt or rows != cnt:
            raise AssertionError("search is not deterministic across passes")
        return cnt, buf

    if workers == 0:
        workers = os.cpu_count() or 1
    total = 0
    collected: list[str] = []
    if workers > 1 and len(prefixes) > 1:
        pool = ThreadPoolExecutor(max_workers=workers)
        try:
            results = pool.map(run_task, prefixes)
            total = _consume(results, len(prefixes), emit, collected if collect else None, progress)
        finally:
            pool.shutdown()
    else:
        results = map(run_task, prefixes)
        total = _consume(results, len(prefixes), emit, collected if collect else None, progress)

    elapsed = time.perf_counter() - start_time
    return EnumerationReport(
        order=n,
        kind=kind,
        count=total,
        elapsed_s=elapsed,
        conjectural=n > TABLE2_MAX_ORDER,
        paths=tuple(collected) if collect else None,
    )


def _consume(results, total_tasks, emit, collected, progress) -> int:
    total = 0
    for done, (cnt, buf) in enumerate(results, start=1):
        total += cnt
        if buf is not None:
            for digits in _decode_rows(buf):
                if emit is not None:
                    emit(digits)
                if collected is not None:
                    collected.append(digits)
        if progress is not None:
            progress(done, total_tasks)
    return total


def count_paths(kind: str, n: int, *, workers: int = 1) -> int:
    """Number of valid paths of the kind and order."""
    return enumerate_paths(kind, n, workers=workers).count


def count_equality_check(n: int) -> bool:
    """Whether the independent W and S searches agree on the count."""
    return count_paths("W", n) == count_paths("S", n)


def iter_paths(kind: str, n: int) -> Iterator[str]:
    """Yield all valid paths in lexicographic order, pure Python.

    Direct transcription of the definitions with no pruning; practical for
    small orders only.
    """
    kind = _check_kind(kind)
    _check_order(n)
    if kind in ("H", "W"):
        yield from _iter_ham(kind, n)
    else:
        yield from _iter_tiling(n)


def _iter_ham(kind: str, n: int) -> Iterator[str]:
    grid = GridSpec(n, "inscribed")
    goal = (n - 1, 0)
    target = grid.point_count - 1
    allowed = h_pair_allowed if kind == "H" else w_pair_allowed
    acc: list[int] = []

    def extend(pos, seen) -> Iterator[str]:
        if len(acc) == target:
            if pos == goal and (kind == "H" or w_pair_allowed(acc[-1], 0)):
                yield "".join(str(d) for d in acc)
            return
        for d in range(6):
            if acc:
                if not allowed(acc[-1], d):
                    continue
            elif kind == "W" and not w_pair_allowed(0, d):
                continue
            q = step(pos, d)
            if not grid.contains(q) or q in seen:
                continue
            acc.append(d)
            seen.add(q)
            yield from extend(q, seen)
            seen.discard(q)
            acc.pop()

    yield from extend((0, 0), {(0, 0)})


def _iter_tiling(n: int) -> Iterator[str]:
    grid = GridSpec(n, "overall")
    goal = (n, 0)
    dark = set(dark_tiles(n))
    target = triangular_number(n)
    acc: list[int] = []

    def extend(pos, seen, tiles) -> Iterator[str]:
        if len(acc) == target:
            if pos == goal:
                yield "".join(str(d) for d in acc)
            return
        for d in range(6):
            if acc and not s_pair_allowed(acc[-1], d):
                continue
            q = step(pos, d)
            if not grid.contains(q) or q in seen:
                continue
            t = edge_to_tile(pos, d)
            if t not in dark or t in tiles:
                continue
            acc.append(d)
            seen.add(q)
            tiles.add(t)
            yield from extend(q, seen, tiles)
            tiles.discard(t)
            seen.discard(q)
            acc.pop()

    yield from extend((0, 0), {(0, 0)}, set())
