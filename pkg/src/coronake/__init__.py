"""Exact independence, matching and Koenig deficiency for corona graphs."""

from .classify import (
    ClassificationReport,
    Witness,
    classify_corona,
    clique_corona_class,
    corona_ke_with_pm,
    corona_ke_with_unique_pm,
    is_k_ke,
    kappa_direct,
    lemma3_predicate,
    thm7_is_corona_ke,
    thm8_is_corona_1ke,
    uniform_corona_1ke,
)
from .corona import (
    CoronaGraph,
    CoronaSpec,
    build_corona,
    clique_corona,
    f_set,
    fast_alpha,
    fast_kappa,
    fast_mu,
    read_corona_spec,
    uniform_corona,
)
from .graph import (
    EMPTY,
    Graph,
    SizeLimitError,
    apex_join,
    complete,
    cycle,
    disjoint_union,
    edgeless,
    induced_subgraph,
    make,
    neighborhood,
    neighbors,
    path,
)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .independence import brute_force_alpha, independence_number, maximum_independent_set
from .iso import canonical_form, enumerate_graphs
from .matching import (
    Matching,
    brute_force_mu,
    has_almost_perfect_matching,
    has_perfect_matching,
    has_unique_almost_perfect_matching,
    has_unique_perfect_matching,
    matching_number,
    maximum_matching,
)

__version__ = "0.1.0"
