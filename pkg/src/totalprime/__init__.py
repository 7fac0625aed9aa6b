"""Total prime labelings of graphs: constructions, verification, and
exhaustive search.

A total prime labeling assigns 1..n+m bijectively to the vertices and edges
of a graph so that adjacent vertex labels are coprime and the incident edge
labels at every vertex of degree >= 2 have collective gcd 1.  This package
builds the named graph families, emits explicit labelings for them, extends
prime and coprime labelings of Hamiltonian graphs and trees, and settles
small instances by complete backtracking search.
"""

from .constructors import (
    ConstructionResult,
    bistar,
    book,
    complete,
    cycle_with_chord,
    extend_coprime_hamiltonian,
    extend_prime_hamiltonian,
    extend_prime_tree,
    helm,
    prism,
    snake,
    stacked_rect_prism,
    windmill,
)
from .graphs import (
    FAMILIES,
    FamilySpec,
    Graph,
    HamiltonianData,
    build_family,
    canonical_hamiltonian,
    cartesian_product,
    disjoint_union,
    graph_power,
    make_graph,
    to_dot,
    validate_hamiltonian,
)
from .labeling import (
    ADJACENT_NOT_COPRIME,
    INCIDENT_SHARED_FACTOR,
    NON_BIJECTIVE,
    Labeling,
    VerificationReport,
    Violation,
    verify_coprime,
    verify_prime,
    verify_total_prime,
)
from .numtheory import (
    CapacityReport,
    PrimeTable,
    check_label_capacity_bounds,
    gcd_set,
    largest_prime_leq,
    nth_prime,
    prime_count,
)
from .search import (
    BUDGET_EXCEEDED,
    EXHAUSTED,
    FOUND,
    INCONCLUSIVE,
    INFEASIBLE,
    MinimumCoprimeResult,
    OddCountCertificate,
    SearchConfig,
    SearchOutcome,
    doubled_union_prime_transport,
    doubled_union_reduction,
    find_coprime,
    find_prime,
    find_total_prime,
    minimum_coprime_number,
    union_c3_infeasibility_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "ADJACENT_NOT_COPRIME",
    "BUDGET_EXCEEDED",
    "CapacityReport",
    "ConstructionResult",
    "EXHAUSTED",
    "FAMILIES",
    "FOUND",
    "FamilySpec",
    "Graph",
    "HamiltonianData",
    "INCIDENT_SHARED_FACTOR",
    "INCONCLUSIVE",
    "INFEASIBLE",
    "Labeling",
    "MinimumCoprimeResult",
    "NON_BIJECTIVE",
    "OddCountCertificate",
    "PrimeTable",
    "SearchConfig",
    "SearchOutcome",
    "VerificationReport",
    "Violation",
    "bistar",
    "book",
    "build_family",
    "canonical_hamiltonian",
    "cartesian_product",
    "check_label_capacity_bounds",
    "complete",
    "cycle_with_chord",
    "disjoint_union",
    "doubled_union_prime_transport",
    "doubled_union_reduction",
    "extend_coprime_hamiltonian",
    "extend_prime_hamiltonian",
    "extend_prime_tree",
    "find_coprime",
    "find_prime",
    "find_total_prime",
    "gcd_set",
    "graph_power",
    "helm",
    "largest_prime_leq",
    "make_graph",
    "minimum_coprime_number",
    "nth_prime",
    "prime_count",
    "prism",
    "snake",
    "stacked_rect_prism",
    "to_dot",
    "union_c3_infeasibility_certificate",
    "validate_hamiltonian",
    "verify_coprime",
    "verify_prime",
    "verify_total_prime",
    "windmill",
]
