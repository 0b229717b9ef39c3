"""The compiled kernels, their interpreted sources, and the numpy paths
must be three views of one function.

In-process checks compare the jitted dispatchers against .py_func and the
vectorized numpy counters; a subprocess check imports the package with
TURAN_NO_NUMBA=1 so the interpreted wiring itself is exercised end to end.
"""

import os
import random
import subprocess
import sys
import textwrap

import numpy as np

from turan import Graph, kernels
from turan._jit import python_version
from conftest import random_graph

PY_CANONICAL = python_version(kernels.canonical)
PY_COUNT = python_version(kernels.count_pattern)
PY_EXPAND = python_version(kernels.expand)


def _samples(count=40, max_n=8, seed=7):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        out.append(random_graph(rng, n, rng.choice([0.2, 0.5, 0.8])))
    return out


def test_numpy_counters_match_kernels():
    for g in _samples():
        rows, n = g.rows, g.n
        assert kernels.count_c4_raw_numpy(rows, n) == kernels.count_c4_raw(rows, n)
        assert kernels.count_triangles_raw_numpy(rows, n) == \
            kernels.count_triangles_raw(rows, n)
        for p in (2, 3):
            assert kernels.count_star_numpy(rows, n, p) == \
                kernels.count_star(rows, n, p)
            assert kernels.count_book_numpy(rows, n, p) == \
                kernels.count_book(rows, n, p)


def test_interpreted_canonical_matches_jitted():
    if not kernels.USING_NUMBA:
        return  # both names are already the same function
    for g in _samples(count=15, max_n=7):
        n = g.n
        perm_a = np.empty(n, dtype=np.int64)
        vals_a = np.empty(n, dtype=np.uint64)
        perm_b = np.empty(n, dtype=np.int64)
        vals_b = np.empty(n, dtype=np.uint64)
        kernels.canonical(g.rows, n, perm_a, vals_a)
        PY_CANONICAL(g.rows, n, perm_b, vals_b)
        assert list(vals_a) == list(vals_b)
        assert list(perm_a) == list(perm_b)


def test_interpreted_count_pattern_matches_jitted():
    if not kernels.USING_NUMBA:
        return
    from turan.counting import pattern_kernel_args, single_pattern

    for spec in ("s:3", "b:2", "c4", "k:3", "p:4"):
        kargs = pattern_kernel_args(single_pattern(spec))
        code, param, hrows, hn, horder, haut = kargs
        for g in _samples(count=10, max_n=7, seed=ord(spec[0])):
            a = kernels.count_pattern(g.rows, g.n, code, param, hrows, hn,
                                      horder, haut)
            b = PY_COUNT(g.rows, g.n, code, param, hrows, hn, horder, haut)
            assert a == b


def test_interpreted_expand_matches_jitted():
    if not kernels.USING_NUMBA:
        return
    rows = np.zeros(5, dtype=np.uint64)
    vals = np.zeros(5, dtype=np.uint64)
    ma, rows_a, vals_a = kernels.expand(rows, 5, vals, 0, 0)
    mb, rows_b, vals_b = PY_EXPAND(rows, 5, vals, 0, 0)
    assert ma == mb
    assert rows_a[:ma].tolist() == rows_b[:mb].tolist()
    assert vals_a[:ma].tolist() == vals_b[:mb].tolist()


def test_fallback_mode_subprocess():
    script = textwrap.dedent("""
        from turan import kernels, cycle, count_copies, single_pattern
        from turan import canonical_label, turan_value
        assert kernels.USING_NUMBA is False
        g = cycle(4)
        assert count_copies(g, single_pattern("c4")).value == 1
        assert turan_value(5, "c4") == 6
        h = g.relabel([2, 0, 3, 1])
        assert canonical_label(g) == canonical_label(h)
        print("fallback ok")
    """)
    env = dict(os.environ, TURAN_NO_NUMBA="1")
    proc = subprocess.run([sys.executable, "-c", script], env=env,
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0, proc.stderr
    assert "fallback ok" in proc.stdout
