"""Heuristic witness search past the exhaustive envelope.

Simulated annealing over graphs of fixed order and size.  A move swaps
one edge for one non-edge, so every visited graph keeps the target size;
acceptance is Metropolis on the copy-count change with plateau moves
taken with probability 1/2, since the low-count region is mostly flat.
Within a run the best graph is tracked by (copy count, sum over vertex
pairs of C(codegree,2)): the secondary potential orders plateau graphs
by how close their codegrees are to spilling another 4-cycle.

Results are upper bounds only.  The returned count is re-verified through
the generic embedding counter, and the whole procedure is deterministic
for a fixed (task, budget) including across thread counts when no early
stop target is set.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .canon import Pattern, canonical_label
from .counting import count_generic, pattern_kernel_args, single_pattern
from .errors import GraphError
from .graphs import MAX_ORDER, Graph
from .search import MinCopyResult

_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class SearchBudget:
    """Annealing effort: independent restarts, steps per restart, geometric
    temperature schedule, and the master seed all streams derive from."""

    restarts: int = 20
    max_steps: int = 200_000
    t_initial: float = 1.5
    t_decay: float = 0.99997
    seed: int = 0x5EED_1E55_C0FFEE

    def __post_init__(self) -> None:
        if self.restarts < 1 or self.max_steps < 1:
            raise GraphError("budget needs restarts >= 1 and max_steps >= 1")
        if not (0.0 < self.t_decay <= 1.0) or self.t_initial <= 0.0:
            raise GraphError("budget needs t_initial > 0 and 0 < t_decay <= 1")


DEFAULT_BUDGET = SearchBudget()


def _mix(x: int) -> int:
    x &= _MASK
    for _ in range(3):
        x ^= (x << 13) & _MASK
        x ^= x >> 7
        x ^= (x << 17) & _MASK
    return x


def _stream_seed(seed: int, restart: int) -> int:
    x = (seed ^ 0x9E3779B97F4A7C15) & _MASK
    x = (x + (restart + 1) * 0xBF58476D1CE4E5B9) & _MASK
    x = _mix(x)
    return x if x else 0x1234_5678_8765_4321


def _random_rows(order: int, size: int, x: int) -> tuple[np.ndarray, int]:
    """Deterministic random graph: ``size`` pairs by partial Fisher-Yates."""
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    m = len(pairs)
    rows = np.zeros(order, dtype=np.uint64)
    for k in range(size):
        x = _mix(x + k)
        j = k + x % (m - k)
        pairs[k], pairs[j] = pairs[j], pairs[k]
        u, v = pairs[k]
        rows[u] |= np.uint64(1 << v)
        rows[v] |= np.uint64(1 << u)
    return rows, _mix(x)


def _greedy_extend(seed_graph: Graph, order: int, size: int, kp) -> np.ndarray:
    """Pad the seed to ``order`` vertices, then add edges one at a time,
    each the (copy count, codegree-pair potential, index) minimizer."""
    if seed_graph.n > order or seed_graph.size > size:
        raise GraphError("seed graph must fit inside the target order and size")
    rows = np.zeros(order, dtype=np.uint64)
    rows[: seed_graph.n] = seed_graph.rows
    for _ in range(size - seed_graph.size):
        pick = None
        for u in range(order):
            for v in range(u + 1, order):
                if (int(rows[u]) >> v) & 1:
                    continue
                rows[u] |= np.uint64(1 << v)
                rows[v] |= np.uint64(1 << u)
                key = (kp(rows), int(kernels.count_c4_raw(rows, order)), u, v)
                rows[u] &= np.uint64(~np.uint64(1 << v))
                rows[v] &= np.uint64(~np.uint64(1 << u))
                if pick is None or key < pick:
                    pick = key
        u, v = pick[2], pick[3]
        rows[u] |= np.uint64(1 << v)
        rows[v] |= np.uint64(1 << u)
    return rows


def search_min_copies(
    order: int,
    size: int,
    pattern,
    budget: SearchBudget | None = None,
    *,
    seed_graph: Graph | None = None,
    stop_at: int | None = None,
    jobs: int = 1,
) -> MinCopyResult:
    """Best (fewest-copy) graph of the given order and size the annealer
    can find; an upper-bound certificate, never a minimality proof.

    Restart 0 extends ``seed_graph`` greedily when one is given (a known
    good witness of smaller order transplants well); all other restarts
    start from budget-seeded random graphs.  ``stop_at`` ends the search
    once some restart reaches that count; it skips later restarts, so only
    runs without it are fully deterministic across ``jobs`` settings.
    """
    if not (1 <= order <= MAX_ORDER):
        raise GraphError(f"order must be in 1..{MAX_ORDER}, got {order}")
    maxm = order * (order - 1) // 2
    if not (0 <= size <= maxm):
        raise GraphError(f"size must be in 0..{maxm}, got {size}")
    if isinstance(pattern, str):
        pat = single_pattern(pattern)
    elif isinstance(pattern, Pattern):
        pat = pattern
    else:
        raise GraphError("pattern must be a Pattern or a pattern spec string")
    bud = budget if budget is not None else DEFAULT_BUDGET
    start = time.perf_counter()
    kargs = pattern_kernel_args(pat)
    code, param, hrows, hn, horder, haut = kargs

    def kp(rows: np.ndarray) -> int:
        return int(kernels.count_pattern(rows, order, code, param, hrows, hn, horder, haut))

    target = np.int64(-1 if stop_at is None else stop_at)

    def one_restart(r: int) -> tuple[int, int, bytes]:
        x = _stream_seed(bud.seed, r)
        if r == 0 and seed_graph is not None:
            rows = _greedy_extend(seed_graph, order, size, kp)
        else:
            rows, x = _random_rows(order, size, x)
        rng0 = np.uint64(x)
        best_rows, best_count, best_pot = kernels.anneal(
            rows, order, np.int64(bud.max_steps), np.float64(bud.t_initial),
            np.float64(bud.t_decay), rng0, code, param, hrows, hn, horder,
            np.int64(haut), target,
        )
        return int(best_count), int(best_pot), best_rows.tobytes()

    results: list[tuple[int, int, bytes]] = []
    if jobs > 1:
        # deterministic batches; the kernel releases the GIL
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            nxt = 0
            while nxt < bud.restarts:
                batch = list(range(nxt, min(nxt + jobs, bud.restarts)))
                results.extend(pool.map(one_restart, batch))
                nxt = batch[-1] + 1
                if stop_at is not None and any(c <= stop_at for c, _, _ in results):
                    break
    else:
        for r in range(bud.restarts):
            results.append(one_restart(r))
            if stop_at is not None and results[-1][0] <= stop_at:
                break

    # merge deterministically by (count, canonical label)
    scored: list[tuple[int, str, Graph]] = []
    for count, _, blob in results:
        g = Graph._from_trusted_rows(order, np.frombuffer(blob, dtype=np.uint64).copy())
        scored.append((count, canonical_label(g), g))
    scored.sort(key=lambda t: (t[0], t[1]))
    best_count, best_label, best_graph = scored[0]

    recount = count_generic(best_graph, pat)
    if recount != best_count:
        raise AssertionError(
            f"annealing count {best_count} disagrees with recount {recount}"
        )
    witnesses = tuple(sorted({lab for c, lab, _ in scored if c == best_count}))
    ms = (time.perf_counter() - start) * 1000.0
    return MinCopyResult(order, size, pat, best_count, witnesses, 0, ms,
                         "heuristic-upper-bound")
