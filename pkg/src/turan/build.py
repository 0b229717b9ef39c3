"""Deterministic graph constructions.

Regular graphs are realised as circulants so they carry a hamiltonian
cycle through step 1 whenever the degree is at least 2, and the matchings
removed by the extremal constructions are always taken greedily from that
cycle: {0,1}, {2,3}, ...  The perfect matching removed from a complete
graph is fixed the same way.
"""

from __future__ import annotations

from .errors import GraphError, ParityError
from .graphs import MAX_ORDER, Graph, complement, disjoint_union, join


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return complement(Graph(n))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need n >= 3")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def star(p: int) -> Graph:
    """K_{1,p}: centre 0 joined to p leaves."""
    if p < 1:
        raise GraphError("stars need p >= 1 leaves")
    return Graph.from_edges(p + 1, [(0, v) for v in range(1, p + 1)])


def book(p: int) -> Graph:
    """B_p: p triangles sharing the base edge {0,1}."""
    if p < 1:
        raise GraphError("books need p >= 1 pages")
    edges = [(0, 1)]
    for page in range(2, p + 2):
        edges += [(0, page), (1, page)]
    return Graph.from_edges(p + 2, edges)


def matching(k: int) -> Graph:
    """k disjoint edges on 2k vertices."""
    if k < 1:
        raise GraphError("matchings need k >= 1 edges")
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise GraphError("complete bipartite sides must be >= 1")
    return Graph.from_edges(s + t, [(u, s + v) for u in range(s) for v in range(t)])


def complete_minus_pm(n: int) -> Graph:
    """K_n minus the perfect matching {0,1}, {2,3}, ... (n even)."""
    if n < 2 or n % 2:
        raise ParityError(f"K_n minus a perfect matching needs even n >= 2, got {n}")
    g = complete(n)
    for i in range(0, n, 2):
        g = g.without_edge(i, i + 1)
    return g


def circulant(n: int, steps) -> Graph:
    """Vertices 0..n-1, i adjacent to i +- s (mod n) for each step s."""
    if n < 1 or n > MAX_ORDER:
        raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
    chosen = sorted(set(int(s) for s in steps))
    for s in chosen:
        if s < 1 or s > n // 2:
            raise GraphError(f"circulant step {s} outside 1..{n // 2}")
    edges = []
    for s in chosen:
        for i in range(n):
            edges.append((i, (i + s) % n))
    return Graph.from_edges(n, edges)


def regular_graph(k: int, n: int) -> Graph:
    """A k-regular circulant of order n; hamiltonian whenever k >= 2.

    Steps are 1..k/2 for even k, and 1..(k-1)/2 plus n/2 for odd k (which
    forces n even).  Odd k with odd n has no realisation.
    """
    if not (0 <= k <= n - 1):
        raise GraphError(f"regular degree must be in 0..{n - 1}, got {k}")
    if k % 2 and n % 2:
        raise ParityError(f"no {k}-regular graph of odd order {n}: kn must be even")
    if k == 0:
        return empty_graph(n)
    if k % 2 == 0:
        steps = list(range(1, k // 2 + 1))
    else:
        steps = list(range(1, (k - 1) // 2 + 1)) + [n // 2]
    return circulant(n, steps)


def _cycle_matching_removed(g: Graph, pairs: int) -> Graph:
    # remove the matching {0,1}, {2,3}, ... taken from the hamiltonian
    # cycle 0-1-...-(n-1)-0 that step 1 guarantees
    for i in range(pairs):
        u, v = 2 * i, 2 * i + 1
        if not g.has_edge(u, v):
            raise GraphError("expected a step-1 hamiltonian cycle edge")
        g = g.without_edge(u, v)
    return g


def bounded_degree_max(n: int, d: int) -> Graph:
    """A graph of order n, max degree <= d, with the most edges.

    nd even: a d-regular circulant.  Both odd: take the d-regular
    circulant of order n-1, free up (d-1)/2 of its hamiltonian cycle
    edges, and join a new vertex to the d-1 freed endpoints; sizes are
    nd/2 and (nd-1)/2 respectively.
    """
    if not (1 <= d < n):
        raise GraphError(f"need 1 <= d < n, got d={d}, n={n}")
    if (n * d) % 2 == 0:
        return regular_graph(d, n)
    if d == 1:
        return Graph.from_edges(n, [(2 * i, 2 * i + 1) for i in range((n - 1) // 2)])
    base = regular_graph(d, n - 1)
    base = _cycle_matching_removed(base, (d - 1) // 2)
    g = disjoint_union(base, empty_graph(1))
    for v in range(d - 1):
        g = g.with_edge(v, n - 1)
    return g


def star_witness(p: int, n: int) -> Graph:
    """Order n, one more edge than any n-vertex graph without a p-leaf star
    can carry, containing exactly one such star (p even, n odd, n >= p+1).

    Built from the (p-1)-regular circulant of order n-1 by freeing a
    p/2-matching off its hamiltonian cycle and joining a new vertex to the
    p freed endpoints; the new vertex is the unique one of degree p.
    """
    if p % 2 or p < 4:
        raise ParityError(f"star witnesses need even p >= 4, got {p}")
    if n % 2 == 0:
        raise ParityError(f"star witnesses need odd n, got {n}")
    if n < p + 1:
        raise GraphError(f"need n >= p+1, got p={p}, n={n}")
    base = regular_graph(p - 1, n - 1)
    base = _cycle_matching_removed(base, p // 2)
    g = disjoint_union(base, empty_graph(1))
    for v in range(p):
        g = g.with_edge(v, n - 1)
    return g


def _need_parity(p: int, want_even: bool, name: str) -> None:
    if p < 2:
        raise GraphError(f"{name} needs p >= 2, got {p}")
    if want_even and p % 2:
        raise ParityError(f"{name} is defined for even p, got {p}")
    if not want_even and p % 2 == 0:
        raise ParityError(f"{name} is defined for odd p, got {p}")
    if not want_even and p < 3:
        raise GraphError(f"{name} needs p >= 3, got {p}")


def paper_witness(name: str, p: int) -> Graph:
    """Named extremal witnesses around the book Turan problem.

    g1, g2, g5, g6 take even p; g3, g4, t4_small, t4_large take odd p.
    g1..g4 are the extremal book-free graphs at orders p+2 and p+3; g5
    and g6 are the unique one-extra-edge graphs with a single p-page book
    at those orders; t4_small and t4_large attain the minimum copy counts
    there for odd p.
    """
    key = _WITNESS_ALIASES.get(name.strip().lower(), name.strip().lower())
    if key == "g1":
        _need_parity(p, True, "g1")
        return complete_minus_pm(p + 2)
    if key == "g2":
        _need_parity(p, True, "g2")
        return join(empty_graph(3), complete_minus_pm(p))
    if key == "g3":
        _need_parity(p, False, "g3")
        return join(complete(1), complete_minus_pm(p + 1))
    if key == "g4":
        _need_parity(p, False, "g4")
        return complete_minus_pm(p + 3)
    if key == "g5":
        _need_parity(p, True, "g5")
        return join(complete(2), complete_minus_pm(p))
    if key == "g6":
        _need_parity(p, True, "g6")
        return join(disjoint_union(complete(1), complete(2)), complete_minus_pm(p))
    if key == "t4_small":
        _need_parity(p, False, "t4_small")
        return join(complete(3), complete_minus_pm(p - 1))
    if key == "t4_large":
        _need_parity(p, False, "t4_large")
        return join(complete(2), complete_minus_pm(p + 1))
    raise GraphError(f"unknown witness name {name!r}")


_WITNESS_NAMES = ("g1", "g2", "g3", "g4", "g5", "g6", "t4_small", "t4_large")
_WITNESS_ALIASES = {
    "theorem4_attainer_small": "t4_small",
    "theorem4_attainer_large": "t4_large",
}


def _params(text: str, names: dict[str, str], single: str | None) -> dict[str, int]:
    """Parse 'a=1,b=2+3' style parameter lists."""
    out: dict[str, int] = {}
    if not text:
        return out
    parts = [p for p in text.split(",") if p]
    if single is not None and len(parts) == 1 and "=" not in parts[0]:
        parts = [f"{single}={parts[0]}"]
    for part in parts:
        if "=" not in part:
            raise GraphError(f"expected key=value in construction params, got {part!r}")
        key, _, raw = part.partition("=")
        key = names.get(key.strip(), key.strip())
        try:
            out[key] = int(raw)
        except ValueError:
            raise GraphError(f"bad integer {raw!r} for parameter {key!r}") from None
    return out


def parse_construction(text: str) -> Graph:
    """Build a graph from a spec string like 'g5:p=4' or 'circulant:n=6,s=1+3'."""
    s = text.strip().lower()
    name, _, params = s.partition(":")
    name = name.strip()
    if name == "circulant":
        fields = dict(p.partition("=")[::2] for p in params.split(",") if p)
        if set(fields) != {"n", "s"}:
            raise GraphError("circulant needs n=<order>,s=<step+step+...>")
        n = int(fields["n"])
        steps = [int(x) for x in fields["s"].split("+") if x]
        return circulant(n, steps)
    simple = {
        "complete": (complete, "n"),
        "empty": (empty_graph, "n"),
        "path": (path, "n"),
        "cycle": (cycle, "n"),
        "star": (star, "p"),
        "book": (book, "p"),
        "matching": (matching, "k"),
        "complete_minus_pm": (complete_minus_pm, "n"),
    }
    if name in simple:
        fn, argname = simple[name]
        args = _params(params, {}, argname)
        if set(args) != {argname}:
            raise GraphError(f"{name} needs exactly the parameter {argname}")
        return fn(args[argname])
    if name == "complete_bipartite":
        args = _params(params, {}, None)
        if set(args) != {"s", "t"}:
            raise GraphError("complete_bipartite needs s=<int>,t=<int>")
        return complete_bipartite(args["s"], args["t"])
    if name == "regular":
        args = _params(params, {}, None)
        if set(args) != {"k", "n"}:
            raise GraphError("regular needs k=<degree>,n=<order>")
        return regular_graph(args["k"], args["n"])
    if name == "bounded_degree_max":
        args = _params(params, {}, None)
        if set(args) != {"n", "d"}:
            raise GraphError("bounded_degree_max needs n=<order>,d=<max degree>")
        return bounded_degree_max(args["n"], args["d"])
    if name == "star_witness":
        args = _params(params, {}, None)
        if set(args) != {"p", "n"}:
            raise GraphError("star_witness needs p=<leaves>,n=<order>")
        return star_witness(args["p"], args["n"])
    if name in _WITNESS_NAMES or name in _WITNESS_ALIASES:
        args = _params(params, {}, "p")
        if set(args) != {"p"}:
            raise GraphError(f"{name} needs exactly the parameter p")
        return paper_witness(name, args["p"])
    raise GraphError(f"unknown construction {text!r}")


def build_family(kind: str, **params: int) -> Graph:
    """Build one of the named families from its kind string and parameters.

    Equivalent to parse_construction on "kind:k1=v1,k2=v2".
    """
    joined = ",".join(f"{k}={v}" for k, v in params.items())
    return parse_construction(f"{kind}:{joined}" if joined else kind)
