"""Exhaustive search over isomorphism classes.

Generation is canonical edge augmentation: the root is the empty graph on
``order`` vertices and each child adds one edge, kept only when the added
edge matches the child's canonical deletion edge.  Every isomorphism class
on exactly ``order`` vertices (isolated vertices included) is therefore
visited exactly once, which makes "count the classes at depth d" and
"collect the classes at depth d" well defined without a seen-set.

Forbidden-pattern pruning is sound because containment is monotone under
edge addition, and the canonical parent of a pattern-free child is one of
its subgraphs, hence also pattern-free.  Fixed-size tasks switch to
enumerating complements whenever that side of the tree is shallower; the
pattern count is then evaluated on the complement of each leaf.

Large orders are refused up front with an InfeasibleTaskError carrying a
class-count estimate; ``allow_long`` unlocks roughly hour-scale runs and
``force`` the next order beyond that.  The annealing module covers what
lies past the envelope, at heuristic (upper bound only) strength.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Callable, Iterator

import numpy as np

from . import kernels
from .canon import Pattern
from .counting import pattern_kernel_args, parse_pattern
from .errors import GraphError, InfeasibleTaskError
from .graphs import MAX_ORDER, Graph, graph6_decode, graph6_encode, pack_rowvals

# Unlabeled graph counts by order, for infeasibility messages.
_CLASS_TOTALS = (
    1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668,
    12005168, 1018997864, 165091172592, 50502031367952,
)

# Exploration depth (edge count) below which any order is allowed.
_FREE_DEPTH = 10

_FORK = get_context("fork")


def _estimate(order: int) -> str:
    if order < len(_CLASS_TOTALS):
        return f"about {_CLASS_TOTALS[order]:,} classes of order {order}"
    return f"well beyond 10^13 classes of order {order}"


def _check_order(order: int) -> None:
    if not (1 <= order <= MAX_ORDER):
        raise GraphError(f"order must be in 1..{MAX_ORDER}, got {order}")


def _check_envelope(
    order: int,
    depth: int | None,
    pruned: bool,
    allow_long: bool,
    force: bool,
    task: str,
) -> None:
    """Refuse exhaustive work whose tree cannot finish at interactive scale.

    A depth cap of at most _FREE_DEPTH edges keeps the tree small at any
    order.  Otherwise trees narrowed by a forbidden pattern or a branch
    and bound incumbent get one more order than raw enumeration before
    the flags are required.
    """
    if depth is not None and depth <= _FREE_DEPTH:
        return
    base = 10 if pruned else 9
    if order <= base:
        return
    if order == base + 1 and (allow_long or force):
        return
    if order == base + 2 and force:
        return
    need = "allow_long=True" if order == base + 1 else "force=True"
    hint = (
        f"pass {need}" if order <= base + 2
        else "use the annealing search for witnesses at this order"
    )
    raise InfeasibleTaskError(
        f"{task} at order {order} means walking {_estimate(order)}; {hint}"
    )


def _as_patterns(patterns) -> tuple[Pattern, ...]:
    if isinstance(patterns, str):
        return parse_pattern(patterns)
    if isinstance(patterns, Pattern):
        return (patterns,)
    out = tuple(patterns)
    if not out or not all(isinstance(p, Pattern) for p in out):
        raise GraphError("expected a pattern spec, a Pattern, or a sequence of Patterns")
    return out


_LINEAR_FOREST_FAMILY = None


def _linear_forest_family() -> tuple[Pattern, ...]:
    global _LINEAR_FOREST_FAMILY
    if _LINEAR_FOREST_FAMILY is None:
        _LINEAR_FOREST_FAMILY = (Pattern.triangle(), Pattern.path(4), Pattern.star(3))
    return _LINEAR_FOREST_FAMILY


def _filter_plan(patterns: tuple[Pattern, ...]):
    """(fcode, fparam, post) with post a residual rows-level filter or None.

    A single closed-kind pattern, or exactly the {triangle, P4, 3-star}
    family, runs inside the expansion kernel; anything else is filtered
    here, on the child rows, before recursing.
    """
    if len(patterns) == 1:
        pat = patterns[0]
        code = {
            "star": kernels.PAT_STAR,
            "book": kernels.PAT_BOOK,
            "c4": kernels.PAT_C4,
            "triangle": kernels.PAT_TRIANGLE,
        }.get(pat.kind)
        if code is not None:
            return code, pat.param if pat.param else 0, None
    if len(patterns) == 3:
        fam = _linear_forest_family()
        if all(any(p == q for q in fam) for p in patterns) and len(set(patterns)) == 3:
            return kernels.PAT_LINEAR_FOREST, 0, None
    checks = []
    for pat in patterns:
        code, param, hrows, hn, horder, _ = pattern_kernel_args(pat)
        if code != kernels.PAT_GENERIC:
            checks.append((code, param, None, 0, None))
        else:
            checks.append((0, 0, hrows, hn, horder))

    def post(rows: np.ndarray, n: int) -> bool:
        for code, param, hrows, hn, horder in checks:
            if code:
                if kernels.filter_hits(rows, n, code, param):
                    return True
            elif kernels.count_embeddings(rows, n, hrows, hn, horder) > 0:
                return True
        return False

    return kernels.PAT_NONE, 0, post


def _complement_rows(rows: np.ndarray, n: int) -> np.ndarray:
    full = np.uint64((1 << n) - 1)
    diag = np.uint64(1) << np.arange(n, dtype=np.uint64)
    return (~rows) & full & ~diag


def _canonical_label_of_rows(rows: np.ndarray, n: int) -> str:
    perm = np.empty(n, dtype=np.int64)
    vals = np.empty(n, dtype=np.uint64)
    kernels.canonical(rows, n, perm, vals)
    return pack_rowvals(n, vals)


# ---------------------------------------------------------------------------
# Result records.


@dataclass(frozen=True)
class TuranResult:
    """Exact maximum size with none of the patterns, plus every attaining class."""

    order: int
    patterns: tuple[Pattern, ...]
    ex_value: int
    extremal: tuple[str, ...]  # graph6, canonically labelled, sorted
    classes_visited: int
    runtime_ms: float
    method: str = "exhaustive"


@dataclass(frozen=True)
class MinCopyResult:
    """Minimum copy count over classes of fixed order and size.

    method "exhaustive" certifies the minimum; "heuristic-upper-bound"
    (from the annealing module) only certifies that the witnesses exist.
    """

    order: int
    size: int
    pattern: Pattern
    min_copies: int
    witnesses: tuple[str, ...]
    classes_visited: int
    runtime_ms: float
    method: str = "exhaustive"


@dataclass(frozen=True)
class ClassifyResult:
    """Every class of fixed order and size with exactly ``copies`` copies."""

    order: int
    size: int
    pattern: Pattern
    copies: int
    witnesses: tuple[str, ...]
    classes_visited: int
    runtime_ms: float
    method: str = "exhaustive"


# ---------------------------------------------------------------------------
# Serial walks.


def _walk(rows, n, vals, depth, limit, fcode, fparam, post, visit) -> None:
    visit(vals, depth)
    if depth >= limit:
        return
    m, crows, cvals = kernels.expand(rows, n, vals, fcode, fparam)
    for i in range(m):
        r = crows[i]
        if post is not None and post(r, n):
            continue
        _walk(r, n, cvals[i], depth + 1, limit, fcode, fparam, post, visit)


def _walk_exact(rows, n, vals, depth, size, fcode, fparam, post, prune, leaf) -> int:
    """Count visited nodes; call leaf(rows, vals) at depth == size."""
    if depth == size:
        leaf(rows, vals)
        return 1
    if prune is not None and prune(rows):
        return 1
    seen = 1
    m, crows, cvals = kernels.expand(rows, n, vals, fcode, fparam)
    for i in range(m):
        r = crows[i]
        if post is not None and post(r, n):
            continue
        seen += _walk_exact(r, n, cvals[i], depth + 1, size, fcode, fparam, post, prune, leaf)
    return seen


def _root(order: int):
    rows = np.zeros(order, dtype=np.uint64)
    vals = np.zeros(order, dtype=np.uint64)
    return rows, vals


# ---------------------------------------------------------------------------
# Public enumeration.


def enumerate_graphs(
    order: int,
    *,
    max_size: int | None = None,
    exact_size: int | None = None,
    forbid=(),
    allow_long: bool = False,
    force: bool = False,
) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of the given order.

    Classes arrive in generation (DFS) order, labelled as generated (use
    canonical_form for canonical labels).  ``forbid`` excludes classes
    containing any of the patterns; sizes cap or pin the edge count.
    Isolated vertices count toward the order.
    """
    _check_order(order)
    maxm = order * (order - 1) // 2
    if exact_size is not None:
        if max_size is not None:
            raise GraphError("give max_size or exact_size, not both")
        if not (0 <= exact_size <= maxm):
            raise GraphError(f"exact_size must be in 0..{maxm}, got {exact_size}")
    if max_size is not None and max_size < 0:
        raise GraphError("max_size must be >= 0")
    patterns = _as_patterns(forbid) if forbid else ()
    limit = maxm
    if max_size is not None:
        limit = min(limit, max_size)
    if exact_size is not None:
        limit = exact_size
    _check_envelope(order, limit if limit < maxm else None, bool(patterns),
                    allow_long, force, "enumeration")
    fcode, fparam, post = _filter_plan(patterns) if patterns else (0, 0, None)

    def gen(rows, vals, depth):
        if exact_size is None or depth == exact_size:
            yield Graph._from_trusted_rows(order, rows.copy())
        if depth >= limit:
            return
        m, crows, cvals = kernels.expand(rows, order, vals, fcode, fparam)
        for i in range(m):
            r = crows[i]
            if post is not None and post(r, order):
                continue
            yield from gen(r, cvals[i], depth + 1)

    rows, vals = _root(order)
    if post is not None and post(rows, order):
        return
    yield from gen(rows, vals, 0)


def count_classes(order: int, **kwargs) -> int:
    """Number of classes enumerate_graphs would yield, without the objects."""
    return sum(1 for _ in enumerate_graphs(order, **kwargs))


# ---------------------------------------------------------------------------
# Parallel scaffolding: split the tree at a shallow depth, farm the subtree
# roots out to forked workers, merge.  Forking inherits the already-compiled
# kernels, so workers start hot.

_SPLIT_DEPTH = 4


def _collect_roots(order, limit, fcode, fparam, post):
    """(shallow nodes as (vals, depth) visits, subtree roots) for job farming.

    Shallow nodes are every filtered class at depth < split; roots sit at
    exactly the split depth.  Splitting never passes ``limit``.
    """
    split = min(_SPLIT_DEPTH, limit)
    shallow: list[tuple[bytes, int]] = []
    roots: list[tuple[bytes, bytes]] = []

    def rec(rows, vals, depth):
        if depth == split:
            roots.append((rows.tobytes(), vals.tobytes()))
            return
        shallow.append((vals.tobytes(), depth))
        m, crows, cvals = kernels.expand(rows, order, vals, fcode, fparam)
        for i in range(m):
            r = crows[i]
            if post is not None and post(r, order):
                continue
            rec(r, cvals[i], depth + 1)

    rows, vals = _root(order)
    rec(rows, vals, 0)
    return shallow, roots, split


_WORK = {}


def _init_worker(payload, incumbent=None) -> None:
    _WORK.clear()
    _WORK.update(payload)
    _WORK["incumbent"] = incumbent


def _rebuild_filter(order):
    specs = _WORK.get("patterns")
    if specs is None:
        return _WORK["fcode"], _WORK["fparam"], None
    patterns = tuple(_pattern_from_spec(s) for s in specs)
    return _filter_plan(patterns)


def _pattern_spec(pat: Pattern) -> tuple:
    return (pat.kind, pat.param, graph6_encode(pat.graph), pat.name)


def _pattern_from_spec(spec: tuple) -> Pattern:
    kind, param, g6, name = spec
    g = graph6_decode(g6)
    if kind == "star":
        return Pattern.star(param)
    if kind == "book":
        return Pattern.book(param)
    if kind == "c4":
        return Pattern.c4()
    if kind == "triangle":
        return Pattern.triangle()
    return Pattern.generic(g, name)


def _turan_subtree(task: tuple[bytes, bytes]) -> tuple[int, list[str], int]:
    order = _WORK["order"]
    limit = _WORK["limit"]
    split = _WORK["split"]
    fcode, fparam, post = _rebuild_filter(order)
    rows = np.frombuffer(task[0], dtype=np.uint64).copy()
    vals = np.frombuffer(task[1], dtype=np.uint64).copy()
    best = [-1]
    wits: list[str] = []
    seen = [0]

    def visit(v, depth):
        seen[0] += 1
        if depth > best[0]:
            best[0] = depth
            wits.clear()
        if depth == best[0]:
            wits.append(pack_rowvals(order, v))

    _walk(rows, order, vals, split, limit, fcode, fparam, post, visit)
    return best[0], wits, seen[0]


def _min_subtree(task: tuple[bytes, bytes]) -> tuple[int, list[str], int]:
    order = _WORK["order"]
    size = _WORK["size"]
    split = _WORK["split"]
    shared = _WORK["incumbent"]
    rows = np.frombuffer(task[0], dtype=np.uint64).copy()
    vals = np.frombuffer(task[1], dtype=np.uint64).copy()
    kp = _kernel_counter(order, _WORK["kargs"])
    best = [shared.value if shared is not None else _WORK["bound"]]
    # entries collected before the bound dropped are re-filtered by the parent
    wits: list[str] = []

    def leaf(r, v):
        c = kp(r)
        if c > best[0]:
            return
        if c < best[0]:
            best[0] = c
            wits.clear()
            if shared is not None:
                with shared.get_lock():
                    if c < shared.value:
                        shared.value = c
        wits.append(pack_rowvals(order, v))

    def prune(r):
        if shared is not None and shared.value < best[0]:
            best[0] = shared.value
        return kp(r) > best[0]

    seen = _walk_exact(rows, order, vals, split, size, 0, 0, None, prune, leaf)
    if shared is not None and shared.value < best[0]:
        best[0] = shared.value
    return best[0], wits, seen


def _kernel_counter(order: int, kargs) -> Callable[[np.ndarray], int]:
    code, param, hrows, hn, horder, haut = kargs
    def kp(rows: np.ndarray) -> int:
        return int(kernels.count_pattern(rows, order, code, param, hrows, hn, horder, haut))
    return kp


# ---------------------------------------------------------------------------
# Turan numbers.


def turan_number(
    order: int,
    patterns,
    *,
    allow_long: bool = False,
    force: bool = False,
    jobs: int = 1,
) -> TuranResult:
    """Largest size of an order-``order`` graph containing none of the
    patterns, with every attaining class as a canonical graph6 witness."""
    _check_order(order)
    pats = _as_patterns(patterns)
    _check_envelope(order, None, True, allow_long, force, "a Turan number")
    start = time.perf_counter()
    fcode, fparam, post = _filter_plan(pats)
    maxm = order * (order - 1) // 2

    best = [-1]
    wits: list[str] = []
    seen = [0]

    if jobs > 1 and order >= 6:
        shallow, roots, split = _collect_roots(order, maxm, fcode, fparam, post)
        for vb, depth in shallow:
            seen[0] += 1
            v = np.frombuffer(vb, dtype=np.uint64)
            if depth > best[0]:
                best[0] = depth
                wits.clear()
            if depth == best[0]:
                wits.append(pack_rowvals(order, v))
        payload = {
            "order": order,
            "limit": maxm,
            "split": split,
            "fcode": fcode,
            "fparam": fparam,
            "patterns": tuple(_pattern_spec(p) for p in pats) if post is not None else None,
        }
        with ProcessPoolExecutor(
            max_workers=jobs, mp_context=_FORK,
            initializer=_init_worker, initargs=(payload,),
        ) as pool:
            for b, w, s in pool.map(_turan_subtree, roots):
                seen[0] += s
                if b > best[0]:
                    best[0] = b
                    wits.clear()
                if b == best[0]:
                    wits.extend(w)
    else:
        def visit(v, depth):
            seen[0] += 1
            if depth > best[0]:
                best[0] = depth
                wits.clear()
            if depth == best[0]:
                wits.append(pack_rowvals(order, v))

        rows, vals = _root(order)
        _walk(rows, order, vals, 0, maxm, fcode, fparam, post, visit)

    ms = (time.perf_counter() - start) * 1000.0
    return TuranResult(order, pats, best[0], tuple(sorted(wits)), seen[0], ms)


def turan_value(order: int, patterns, **kwargs) -> int:
    """Just the number from turan_number."""
    return turan_number(order, patterns, **kwargs).ex_value


# ---------------------------------------------------------------------------
# Fixed order and size: minimum copy counts and exact-count classification.


def _greedy_bound(order: int, size: int, kp) -> int:
    """Copy count of a deterministic greedy graph: add edges one at a time,
    each time the (count, 4-cycle potential, index) minimizer."""
    rows = np.zeros(order, dtype=np.uint64)
    for _ in range(size):
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
    return kp(rows)


def _fixed_size_setup(order: int, size: int, pattern, allow_long, force, task):
    _check_order(order)
    if isinstance(pattern, str):
        pats = parse_pattern(pattern)
        if len(pats) != 1:
            raise GraphError(f"{task} takes a single pattern, got {pattern!r}")
        pat = pats[0]
    elif isinstance(pattern, Pattern):
        pat = pattern
    else:
        raise GraphError("pattern must be a Pattern or a pattern spec string")
    maxm = order * (order - 1) // 2
    if not (0 <= size <= maxm):
        raise GraphError(f"size must be in 0..{maxm}, got {size}")
    depth = min(size, maxm - size)
    _check_envelope(order, depth, True, allow_long, force, task)
    use_complement = (maxm - size) < size
    return pat, maxm, use_complement


def min_copies(
    order: int,
    size: int,
    pattern,
    *,
    allow_long: bool = False,
    force: bool = False,
    jobs: int = 1,
) -> MinCopyResult:
    """Exact minimum number of pattern copies over all classes with the
    given order and size, with every minimizing class as a witness.

    Direct mode (size on the shallow side) runs branch and bound: copy
    counts never fall when an edge is added, so a partial graph already
    above the incumbent is dead.  Pruning is strict, which keeps every
    minimizer reachable.  Complement mode has no usable monotone bound,
    so it scores every leaf.
    """
    pat, maxm, use_complement = _fixed_size_setup(
        order, size, pattern, allow_long, force, "a minimum copy count")
    start = time.perf_counter()
    kargs = pattern_kernel_args(pat)
    kp = _kernel_counter(order, kargs)

    best = [None]
    wits: list[str] = []
    seen = [0]

    if use_complement:
        depth = maxm - size

        def leaf(rows, vals):
            crows = _complement_rows(rows, order)
            c = kp(crows)
            if best[0] is None or c < best[0]:
                best[0] = c
                wits.clear()
            if c == best[0]:
                wits.append(_canonical_label_of_rows(crows, order))

        rows, vals = _root(order)
        seen[0] = _walk_exact(rows, order, vals, 0, depth, 0, 0, None, None, leaf)
    else:
        bound = _greedy_bound(order, size, kp)
        if jobs > 1 and size > _SPLIT_DEPTH:
            shallow, roots, split = _collect_roots(order, size, 0, 0, None)
            seen[0] += len(shallow)
            incumbent = _FORK.Value("q", bound)
            payload = {
                "order": order, "size": size, "split": split, "kargs": kargs,
                "bound": bound, "patterns": None,
            }
            with ProcessPoolExecutor(
                max_workers=jobs, mp_context=_FORK,
                initializer=_init_worker, initargs=(payload, incumbent),
            ) as pool:
                results = list(pool.map(_min_subtree, roots))
            gbest = min(b for b, _, _ in results)
            best[0] = gbest
            for b, w, s in results:
                seen[0] += s
                if b == gbest:
                    wits.extend(w)
            # a worker may have kept leaves found before the bound dropped
            wits[:] = [w for w in wits if kp(_rows_of_label(w, order)) == gbest]
        else:
            best[0] = bound

            def leaf(rows, vals):
                c = kp(rows)
                if c > best[0]:
                    return
                if c < best[0]:
                    best[0] = c
                    wits.clear()
                wits.append(pack_rowvals(order, vals))

            def prune(rows):
                return kp(rows) > best[0]

            rows, vals = _root(order)
            seen[0] = _walk_exact(rows, order, vals, 0, size, 0, 0, None, prune, leaf)

    ms = (time.perf_counter() - start) * 1000.0
    return MinCopyResult(order, size, pat, int(best[0]), tuple(sorted(wits)),
                         seen[0], ms)


def _rows_of_label(label: str, order: int) -> np.ndarray:
    g = graph6_decode(label)
    if g.n != order:
        raise GraphError("witness label has the wrong order")
    return g.rows


def classify_record(
    order: int,
    size: int,
    pattern,
    copies: int,
    *,
    allow_long: bool = False,
    force: bool = False,
) -> ClassifyResult:
    """Every class with the given order and size carrying exactly ``copies``
    pattern copies.  Monotonicity prunes partial graphs already above the
    target; complement mode scores every leaf instead."""
    pat, maxm, use_complement = _fixed_size_setup(
        order, size, pattern, allow_long, force, "an exact-count classification")
    if copies < 0:
        raise GraphError("copies must be >= 0")
    start = time.perf_counter()
    kargs = pattern_kernel_args(pat)
    kp = _kernel_counter(order, kargs)
    wits: list[str] = []
    seen = [0]

    if use_complement:
        depth = maxm - size

        def leaf(rows, vals):
            crows = _complement_rows(rows, order)
            if kp(crows) == copies:
                wits.append(_canonical_label_of_rows(crows, order))

        rows, vals = _root(order)
        seen[0] = _walk_exact(rows, order, vals, 0, depth, 0, 0, None, None, leaf)
    else:
        def leaf(rows, vals):
            if kp(rows) == copies:
                wits.append(pack_rowvals(order, vals))

        def prune(rows):
            return kp(rows) > copies

        rows, vals = _root(order)
        seen[0] = _walk_exact(rows, order, vals, 0, size, 0, 0, None, prune, leaf)

    ms = (time.perf_counter() - start) * 1000.0
    return ClassifyResult(order, size, pat, copies, tuple(sorted(wits)), seen[0], ms)


def classify_witnesses(
    order: int,
    size: int,
    pattern,
    copies: int,
    *,
    allow_long: bool = False,
    force: bool = False,
) -> list[Graph]:
    """classify_record's classes, decoded to canonically labelled graphs."""
    rec = classify_record(order, size, pattern, copies,
                          allow_long=allow_long, force=force)
    return [graph6_decode(w) for w in rec.witnesses]
