"""Intersection graphs of nontrivial left ideals of finite semigroups.

Build the graph from a Cayley table, compute exact invariants, and run
the full battery of classification checks over corpora of semigroups.
"""

from .automorphisms import (
    AutomorphismResult,
    automorphism_group,
    enumerate_automorphisms,
    phi_sigma,
    verify_symmetric_group,
)
from .enumeration import KNOWN_COUNTS, count_semigroups, enumerate_semigroups
from .graph import Graph, build_gamma, complement, induced_subgraph, quotient_graph
from .ideals import IdealFamily, all_left_ideals, chromatic_bound_data, is_left_ideal
from .invariants import (
    Budget,
    BudgetExceededError,
    InvariantReport,
    compute_report,
)
from .semigroup import (
    CayleyTable,
    FamilySpec,
    TableFormatError,
    generate,
    load_table,
    parse_family,
    parse_table_json,
    parse_table_text,
    validate,
)
from .theorems import (
    CorpusSpec,
    CorpusSummary,
    TheoremCheck,
    TheoremReport,
    check_theorems,
    list_checks,
    run_corpus,
)

__version__ = "1.0.0"

__all__ = [
    "AutomorphismResult",
    "Budget",
    "BudgetExceededError",
    "CayleyTable",
    "CorpusSpec",
    "CorpusSummary",
    "FamilySpec",
    "Graph",
    "IdealFamily",
    "InvariantReport",
    "KNOWN_COUNTS",
    "TableFormatError",
    "TheoremCheck",
    "TheoremReport",
    "all_left_ideals",
    "automorphism_group",
    "build_gamma",
    "check_theorems",
    "chromatic_bound_data",
    "complement",
    "compute_report",
    "count_semigroups",
    "enumerate_automorphisms",
    "enumerate_semigroups",
    "generate",
    "induced_subgraph",
    "is_left_ideal",
    "list_checks",
    "load_table",
    "parse_family",
    "parse_table_json",
    "parse_table_text",
    "phi_sigma",
    "quotient_graph",
    "run_corpus",
    "validate",
    "verify_symmetric_group",
]
