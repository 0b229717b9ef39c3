"""Copy counters for the small patterns of interest.

A copy of h in g is a subgraph of g (vertex set plus edge set) isomorphic
to h, so labelled embeddings are divided by h's automorphism count.  The
star, book, 4-cycle and triangle counters are closed forms over degrees
and codegrees; everything else goes through backtracking embedding
enumeration.  With numba disabled the closed forms switch to vectorized
numpy paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .canon import Pattern, embedding_order
from .errors import GraphError
from .graphs import Graph

_VEC = not kernels.USING_NUMBA


@dataclass(frozen=True)
class CopyCount:
    value: int
    method: str  # "closed-form" or "generic"


def count_star(g: Graph, p: int) -> int:
    """Copies of the star with p leaves: sum over vertices of C(deg, p)."""
    if p < 2:
        raise GraphError("count_star needs p >= 2; a 1-leaf star is a bare edge")
    if _VEC:
        return kernels.count_star_numpy(g.rows, g.n, p)
    return int(kernels.count_star(g.rows, g.n, p))


def count_book(g: Graph, p: int) -> int:
    """Copies of the p-page book: sum over edges of C(codegree, p)."""
    if p < 2:
        raise GraphError("count_book needs p >= 2; the 1-page book is the triangle")
    if _VEC:
        return kernels.count_book_numpy(g.rows, g.n, p)
    return int(kernels.count_book(g.rows, g.n, p))


def count_c4(g: Graph) -> int:
    """Copies of the 4-cycle: half the sum over vertex pairs of C(codegree, 2)."""
    if _VEC:
        raw = kernels.count_c4_raw_numpy(g.rows, g.n)
    else:
        raw = int(kernels.count_c4_raw(g.rows, g.n))
    half, rem = divmod(raw, 2)
    assert rem == 0, "each 4-cycle has exactly two diagonal pairs"
    return half

def count_triangles(g: Graph) -> int:
    """Triangles: one third of the sum of codegrees over edges."""
    if _VEC:
        raw = kernels.count_triangles_raw_numpy(g.rows, g.n)
    else:
        raw = int(kernels.count_triangles_raw(g.rows, g.n))
    third, rem = divmod(raw, 3)
    assert rem == 0, "each triangle is counted once per edge"
    return third


def count_generic(g: Graph, pattern: Pattern | Graph) -> int:
    """Copies of an arbitrary pattern via injective embeddings / |Aut|."""
    if isinstance(pattern, Graph):
        pattern = Pattern(pattern)
    h = pattern.graph
    if h.n > g.n or h.size > g.size:
        return 0
    ff = 1
    for i in range(h.n):
        ff *= g.n - i
        if ff >= 1 << 62:
            raise OverflowError(
                "embedding count may exceed 64 bits for this order/pattern pair"
            )
    total = int(kernels.count_embeddings(g.rows, g.n, h.rows, h.n, pattern._order))
    copies, rem = divmod(total, pattern.automorphisms)
    assert rem == 0, "automorphism count divides the embedding total"
    return copies


def count_copies(g: Graph, pattern: Pattern) -> CopyCount:
    """Dispatch to the closed form matching the pattern kind, if any."""
    if pattern.kind == "star":
        return CopyCount(count_star(g, pattern.param), "closed-form")
    if pattern.kind == "book":
        return CopyCount(count_book(g, pattern.param), "closed-form")
    if pattern.kind == "c4":
        return CopyCount(count_c4(g), "closed-form")
    if pattern.kind == "triangle":
        return CopyCount(count_triangles(g), "closed-form")
    return CopyCount(count_generic(g, pattern), "generic")


def contains(g: Graph, pattern: Pattern) -> bool:
    if pattern.kind == "star":
        return bool(kernels.has_star(g.rows, g.n, pattern.param))
    if pattern.kind == "book":
        return bool(kernels.has_book(g.rows, g.n, pattern.param))
    if pattern.kind == "c4":
        return bool(kernels.has_c4(g.rows, g.n))
    if pattern.kind == "triangle":
        return bool(kernels.has_triangle(g.rows, g.n))
    return count_generic(g, pattern) > 0


def contains_any(g: Graph, patterns) -> bool:
    """True iff g contains at least one of the patterns (first hit wins)."""
    return any(contains(g, pat) for pat in patterns)


_KIND_CODE = {
    "star": kernels.PAT_STAR,
    "book": kernels.PAT_BOOK,
    "c4": kernels.PAT_C4,
    "triangle": kernels.PAT_TRIANGLE,
}


def pattern_kernel_args(pattern: Pattern) -> tuple:
    """Arguments after (rows, n) for kernels.count_pattern.

    The search and annealing drivers count on raw bitset rows without
    wrapping them in Graph objects; this packages the pattern once.
    """
    code = _KIND_CODE.get(pattern.kind, kernels.PAT_GENERIC)
    param = pattern.param if pattern.param else 0
    h = pattern.graph
    return (code, param, h.rows, h.n, embedding_order(h), pattern.automorphisms)


# -- pattern mini-language ---------------------------------------------------
#
#   k:N   complete graph     s:P  star with P leaves   b:P  book with P pages
#   c4    the 4-cycle        p:N  path on N vertices
#   family:c3,p4,k13         the {triangle, P4, K_{1,3}} exclusion family

_FAMILY_ALIASES = {"c3": "k:3", "k3": "k:3", "p4": "p:4", "k13": "s:3"}


def parse_pattern(text: str) -> tuple[Pattern, ...]:
    """Parse a pattern spec into one or more patterns."""
    s = text.strip().lower()
    if not s:
        raise GraphError("empty pattern spec")
    if s.startswith("family:"):
        parts = [p.strip() for p in s[len("family:") :].split(",") if p.strip()]
        if not parts:
            raise GraphError("family: needs at least one member")
        out = []
        for part in parts:
            part = _FAMILY_ALIASES.get(part, part)
            out.extend(parse_pattern(part))
        return tuple(out)
    if s == "c4":
        return (Pattern.c4(),)
    if ":" in s:
        head, _, tail = s.partition(":")
        try:
            value = int(tail)
        except ValueError:
            raise GraphError(f"bad pattern parameter in {text!r}") from None
        if head == "k":
            if value == 3:
                return (Pattern.triangle(),)
            return (Pattern.complete(value),)
        if head == "s":
            return (Pattern.star(value),)
        if head == "b":
            return (Pattern.book(value),)
        if head == "p":
            return (Pattern.path(value),)
    raise GraphError(f"unrecognised pattern spec {text!r}")


def single_pattern(text: str) -> Pattern:
    pats = parse_pattern(text)
    if len(pats) != 1:
        raise GraphError(f"expected a single pattern, got {len(pats)} from {text!r}")
    return pats[0]
