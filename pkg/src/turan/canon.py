"""Canonical forms, isomorphism and automorphism counting.

The canonical label of a graph is the graph6 encoding of a canonical
relabelling: colour refinement orders the vertices into cells, a
backtracking search over the first unresolved cell minimises the packed
adjacency bit string, and the winning string is the label.  Two graphs
are isomorphic iff their labels are equal.

The minimum is taken over the refinement-guided search tree rather than
all n! orders, which is what makes it cheap; it is still a complete
label invariant because the tree itself is one.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import GraphError
from .graphs import Graph, pack_rowvals


def canonical_data(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(perm, rowvals) of the canonical labelling; perm[k] is the original
    vertex sitting at canonical position k."""
    cached = g._canon
    if cached is not None:
        return cached
    perm = np.empty(g.n, dtype=np.int64)
    vals = np.empty(g.n, dtype=np.uint64)
    kernels.canonical(g.rows, g.n, perm, vals)
    data = (tuple(int(x) for x in perm), tuple(int(x) for x in vals))
    object.__setattr__(g, "_canon", data)
    return data


def canonical_label(g: Graph) -> str:
    """graph6 text of the canonical relabelling (equal iff isomorphic)."""
    _, vals = canonical_data(g)
    return pack_rowvals(g.n, vals)


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    perm, _ = canonical_data(g)
    inverse = [0] * g.n
    for pos, v in enumerate(perm):
        inverse[v] = pos
    return g.relabel(inverse)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_label(g) == canonical_label(h)


def embedding_order(g: Graph) -> np.ndarray:
    """Vertex order for the embedding counter: highest degree first, then
    always a vertex with the most already-ordered neighbours."""
    degs = [g.degree(v) for v in range(g.n)]
    chosen: list[int] = []
    remaining = set(range(g.n))
    while remaining:
        if not chosen:
            v = max(remaining, key=lambda u: (degs[u], -u))
        else:
            v = max(
                remaining,
                key=lambda u: (sum(1 for w in chosen if g.has_edge(u, w)), degs[u], -u),
            )
        chosen.append(v)
        remaining.remove(v)
    return np.array(chosen, dtype=np.int64)


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group, counted as self-embeddings.

    An injective edge-preserving self-map is a bijection, and preserving
    the edge count forces non-edges to be preserved too, so the number of
    self-embeddings equals the number of automorphisms.  Cost grows with
    the group order; intended for small or lightly symmetric graphs.
    """
    order = embedding_order(g)
    return int(kernels.count_embeddings(g.rows, g.n, g.rows, g.n, order))


class Pattern:
    """A small graph to count copies of, with its automorphism count.

    ``kind`` tags the shapes with closed-form counters ("star", "book",
    "c4", "triangle"); anything else counts through the generic embedding
    route.  A copy is a subgraph (vertex set plus edge set), so the
    embedding total divides by the automorphism count.
    """

    __slots__ = ("graph", "kind", "param", "name", "automorphisms", "_order")

    def __init__(self, graph: Graph, kind: str = "generic", param: int = 0, name: str | None = None):
        if any(graph.degree(v) == 0 for v in range(graph.n)):
            raise GraphError("patterns with isolated vertices are not countable")
        self.graph = graph
        self.kind = kind
        self.param = param
        self.name = name if name is not None else f"generic:{graph.n}v{graph.size}e"
        self.automorphisms = automorphism_count(graph)
        self._order = embedding_order(graph)

    def __repr__(self) -> str:
        return f"Pattern({self.name})"

    def __eq__(self, other):
        if not isinstance(other, Pattern):
            return NotImplemented
        return are_isomorphic(self.graph, other.graph)

    def __hash__(self) -> int:
        return hash(canonical_label(self.graph))

    @classmethod
    def star(cls, p: int) -> "Pattern":
        if p < 2:
            raise GraphError("a star pattern needs p >= 2 leaves; p = 1 is a bare edge")
        g = Graph.from_edges(p + 1, [(0, v) for v in range(1, p + 1)])
        return cls(g, kind="star", param=p, name=f"s:{p}")

    @classmethod
    def book(cls, p: int) -> "Pattern":
        if p < 2:
            raise GraphError("a book pattern needs p >= 2 pages; one page is the triangle")
        edges = [(0, 1)]
        for page in range(2, p + 2):
            edges += [(0, page), (1, page)]
        g = Graph.from_edges(p + 2, edges)
        return cls(g, kind="book", param=p, name=f"b:{p}")

    @classmethod
    def c4(cls) -> "Pattern":
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        return cls(g, kind="c4", param=0, name="c4")

    @classmethod
    def triangle(cls) -> "Pattern":
        g = Graph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
        return cls(g, kind="triangle", param=0, name="k:3")

    @classmethod
    def complete(cls, n: int) -> "Pattern":
        if n < 2:
            raise GraphError("complete patterns need n >= 2")
        if n == 3:
            return cls.triangle()
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
        return cls(g, name=f"k:{n}")

    @classmethod
    def path(cls, n: int) -> "Pattern":
        if n < 2:
            raise GraphError("path patterns need n >= 2 vertices")
        g = Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])
        return cls(g, name=f"p:{n}")

    @classmethod
    def generic(cls, g: Graph, name: str | None = None) -> "Pattern":
        return cls(g, name=name)
