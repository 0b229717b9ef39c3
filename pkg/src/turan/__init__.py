"""Exact search and verification workbench for small Turan-type problems.

The package answers three kinds of question about simple graphs of order
up to 62, exactly where feasible and heuristically beyond:

* how many copies of a small pattern (star, book, 4-cycle, triangle,
  anything given as a graph) does a graph contain;
* what is the maximum size of a graph of a given order avoiding a set of
  patterns, and which isomorphism classes attain it;
* given an order and size, what is the minimum number of pattern copies,
  and which classes attain that.

Exhaustive answers come from isomorph-free enumeration with monotone
pruning; larger orders fall back to simulated annealing, which yields
certified upper bounds only.  The claim catalog ties the two together
into a machine-checked verification report.
"""

from .anneal import DEFAULT_BUDGET, SearchBudget, search_min_copies
from .build import (
    book,
    bounded_degree_max,
    build_family,
    circulant,
    complete,
    complete_bipartite,
    complete_minus_pm,
    cycle,
    empty_graph,
    matching,
    paper_witness,
    parse_construction,
    path,
    regular_graph,
    star,
    star_witness,
)
from .canon import (
    Pattern,
    are_isomorphic,
    automorphism_count,
    canonical_form,
    canonical_label,
)
from .claims import (
    ClaimResult,
    VerificationReport,
    evaluate_claim,
    load_catalog,
    verify_paper,
)
from .counting import (
    CopyCount,
    contains,
    contains_any,
    count_book,
    count_c4,
    count_copies,
    count_generic,
    count_star,
    count_triangles,
    parse_pattern,
    single_pattern,
)
from .errors import (
    Graph6Error,
    GraphError,
    InfeasibleTaskError,
    ParityError,
)
from .formulas import (
    C4_TRUSTED_ORDERS,
    ClaimRecord,
    ex_book,
    ex_c4_table,
    ex_family_fact1,
    ex_star,
    max_size_bounded_degree,
)
from .graphs import (
    MAX_ORDER,
    Graph,
    complement,
    disjoint_union,
    graph6_decode,
    graph6_encode,
    join,
    read_graph6_file,
    write_graph6_file,
)
from .search import (
    ClassifyResult,
    MinCopyResult,
    TuranResult,
    classify_record,
    classify_witnesses,
    count_classes,
    enumerate_graphs,
    min_copies,
    turan_number,
    turan_value,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BUDGET",
    "SearchBudget",
    "search_min_copies",
    "book",
    "bounded_degree_max",
    "build_family",
    "circulant",
    "complete",
    "complete_bipartite",
    "complete_minus_pm",
    "cycle",
    "empty_graph",
    "matching",
    "paper_witness",
    "parse_construction",
    "path",
    "regular_graph",
    "star",
    "star_witness",
    "Pattern",
    "are_isomorphic",
    "automorphism_count",
    "canonical_form",
    "canonical_label",
    "ClaimResult",
    "VerificationReport",
    "evaluate_claim",
    "load_catalog",
    "verify_paper",
    "CopyCount",
    "contains",
    "contains_any",
    "count_book",
    "count_c4",
    "count_copies",
    "count_generic",
    "count_star",
    "count_triangles",
    "parse_pattern",
    "single_pattern",
    "Graph6Error",
    "GraphError",
    "InfeasibleTaskError",
    "ParityError",
    "C4_TRUSTED_ORDERS",
    "ClaimRecord",
    "ex_book",
    "ex_c4_table",
    "ex_family_fact1",
    "ex_star",
    "max_size_bounded_degree",
    "MAX_ORDER",
    "Graph",
    "complement",
    "disjoint_union",
    "graph6_decode",
    "graph6_encode",
    "join",
    "read_graph6_file",
    "write_graph6_file",
    "ClassifyResult",
    "MinCopyResult",
    "TuranResult",
    "classify_record",
    "classify_witnesses",
    "count_classes",
    "enumerate_graphs",
    "min_copies",
    "turan_number",
    "turan_value",
    "__version__",
]
