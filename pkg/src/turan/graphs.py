"""Simple undirected graphs on at most 62 vertices.

Adjacency is one 64-bit word per vertex, so neighbourhood intersection,
codegree and containment tests are single popcounts.  The 62-vertex cap
keeps every graph inside one machine word and matches the single-byte
graph6 header range.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import Graph6Error, GraphError

MAX_ORDER = 62


def _check_order(n: int) -> None:
    if not isinstance(n, (int, np.integer)):
        raise GraphError(f"order must be an integer, got {n!r}")
    if n < 1 or n > MAX_ORDER:
        raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")


class Graph:
    """Immutable labelled graph backed by uint64 row bitsets."""

    __slots__ = ("n", "rows", "_canon")

    def __init__(self, n: int, rows: np.ndarray | None = None):
        _check_order(n)
        if rows is None:
            rows = np.zeros(n, dtype=np.uint64)
        else:
            rows = np.array(rows, dtype=np.uint64, copy=True)
            if rows.shape != (n,):
                raise GraphError(f"expected {n} row bitsets, got shape {rows.shape}")
            mask = np.uint64((1 << n) - 1)
            if n < 64 and np.any(rows & ~mask):
                raise GraphError("adjacency bits beyond the vertex range")
            for v in range(n):
                if (int(rows[v]) >> v) & 1:
                    raise GraphError(f"loop at vertex {v}")
            cols = np.array(
                [sum(((int(rows[u]) >> v) & 1) << u for u in range(n)) for v in range(n)],
                dtype=np.uint64,
            )
            if not np.array_equal(cols, rows):
                raise GraphError("adjacency is not symmetric")
        rows.setflags(write=False)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, np.array(rows, dtype=np.uint64))

    @classmethod
    def _from_trusted_rows(cls, n: int, rows: np.ndarray) -> "Graph":
        # internal fast path: rows already validated by the caller
        g = cls.__new__(cls)
        arr = np.ascontiguousarray(rows, dtype=np.uint64)
        arr.setflags(write=False)
        object.__setattr__(g, "n", int(n))
        object.__setattr__(g, "rows", arr)
        object.__setattr__(g, "_canon", None)
        return g

    # -- basic queries -----------------------------------------------------

    @property
    def size(self) -> int:
        return int(kernels.edge_count(self.rows, self.n))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((int(self.rows[u]) >> v) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.rows[v]).bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted((int(r).bit_count() for r in self.rows), reverse=True))

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        r = int(self.rows[v])
        return tuple(u for u in range(self.n) if (r >> u) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            r = int(self.rows[u])
            for v in range(u + 1, self.n):
                if (r >> v) & 1:
                    out.append((u, v))
        return out

    def codegree(self, u: int, v: int) -> int:
        """Number of common neighbours of u and v (the endpoints never count)."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError("codegree needs two distinct vertices")
        return int(self.rows[u] & self.rows[v]).bit_count()

    def max_degree(self) -> int:
        return int(kernels.max_degree(self.rows, self.n))

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for order {self.n}")

    # -- equality is labelled equality; isomorphism lives in turan.canon ----

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.rows, other.rows)

    def __hash__(self) -> int:
        return hash((self.n, self.rows.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(order={self.n}, size={self.size})"

    # -- operations --------------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError("cannot add a loop")
        rows = self.rows.copy()
        rows[u] |= np.uint64(1 << v)
        rows[v] |= np.uint64(1 << u)
        return Graph._from_trusted_rows(self.n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        rows = self.rows.copy()
        rows[u] &= np.uint64(~(1 << v) & 0xFFFFFFFFFFFFFFFF)
        rows[v] &= np.uint64(~(1 << u) & 0xFFFFFFFFFFFFFFFF)
        return Graph._from_trusted_rows(self.n, rows)

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """Image under ``v -> mapping[v]``; mapping must be a permutation."""
        if sorted(mapping) != list(range(self.n)):
            raise GraphError("mapping is not a permutation of the vertex set")
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = mapping[u], mapping[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph._from_trusted_rows(self.n, np.array(rows, dtype=np.uint64))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = np.array(
        [np.uint64((full & ~int(g.rows[v])) & ~(1 << v)) for v in range(g.n)],
        dtype=np.uint64,
    )
    return Graph._from_trusted_rows(g.n, rows)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _check_order(n)
    rows = [int(r) for r in g.rows] + [int(r) << g.n for r in h.rows]
    return Graph._from_trusted_rows(n, np.array(rows, dtype=np.uint64))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    n = g.n + h.n
    _check_order(n)
    gmask = (1 << g.n) - 1
    hmask = ((1 << n) - 1) ^ gmask
    rows = [int(r) | hmask for r in g.rows] + [(int(r) << g.n) | gmask for r in h.rows]
    return Graph._from_trusted_rows(n, np.array(rows, dtype=np.uint64))


# ---------------------------------------------------------------------------
# graph6: single-header variant for orders 1..62.
#
# Byte 0 is 63+n.  The upper triangle is read in column order
# (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ..., padded with zero bits to a
# multiple of six; each 6-bit group is emitted as its value plus 63.


def _row_value(rows: np.ndarray, k: int) -> int:
    """Bits of column k against vertices 0..k-1, vertex 0 most significant."""
    r = int(rows[k])
    val = 0
    for t in range(k):
        val = (val << 1) | ((r >> t) & 1)
    return val


def pack_rowvals(n: int, rowvals: Sequence[int]) -> str:
    chars = [chr(63 + n)]
    buf = 0
    nbits = 0
    for k in range(1, n):
        buf = (buf << k) | int(rowvals[k])
        nbits += k
        while nbits >= 6:
            chars.append(chr(63 + ((buf >> (nbits - 6)) & 0x3F)))
            nbits -= 6
            buf &= (1 << nbits) - 1
    if nbits:
        chars.append(chr(63 + ((buf << (6 - nbits)) & 0x3F)))
    return "".join(chars)


def graph6_encode(g: Graph) -> str:
    return pack_rowvals(g.n, [_row_value(g.rows, k) for k in range(g.n)])


def graph6_decode(text: str) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise Graph6Error("multi-byte graph6 orders (n > 62) are not supported")
    n = head - 63
    if n < 0 or head > 126:
        raise Graph6Error(f"malformed graph6 header byte {s[0]!r}")
    if n == 0:
        raise Graph6Error("order-0 graphs are not supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"graph6 body for order {n} needs {expected} bytes, got {len(body)}"
        )
    stream = 0
    for ch in body:
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise Graph6Error(f"byte {ch!r} outside the graph6 alphabet")
        stream = (stream << 6) | v
    pad = 6 * expected - nbits
    if pad and (stream & ((1 << pad) - 1)):
        raise Graph6Error("nonzero padding bits")
    stream >>= pad
    rows = [0] * n
    pos = nbits
    for k in range(1, n):
        for t in range(k):
            pos -= 1
            if (stream >> pos) & 1:
                rows[t] |= 1 << k
                rows[k] |= 1 << t
    # consumed bits are counted per column; pos is back to zero here
    return Graph._from_trusted_rows(n, np.array(rows, dtype=np.uint64))


def read_graph6_file(path) -> list[Graph]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(graph6_decode(line))
    return out


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")
