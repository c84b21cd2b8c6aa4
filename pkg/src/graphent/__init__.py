"""Graph states, their entanglement measures, and LC orbits."""

from graphent.catalog import (
    CatalogEntry,
    all_entries,
    catalog_get,
    catalog_size,
    export_corpus,
    ids_with_n,
    parse_edge_list,
    serialize_edge_list,
)
from graphent.classify import (
    ClassificationReport,
    MeasureClass,
    RpEntry,
    build_report,
    build_rp_table,
    group_by_value,
    measure_values,
    resolution_power,
    rp_fraction,
)
from graphent.graphs import (
    Graph,
    LcOrbit,
    OrbitBudgetExceeded,
    are_lc_equivalent,
    canonical_form,
    find_isomorphism,
    is_connected,
    is_isomorphic,
    lc_orbit,
    local_complement,
    make_graph,
    neighbors,
    relabel,
)
from graphent.measures import (
    DegenerateContractionError,
    GemConfig,
    GemDiagnostics,
    MeasureResult,
    ProductState,
    brute_force_gem,
    gcm,
    gem,
    gem_bipartite_oracle,
    see_saw_step,
)
from graphent.reductions import partial_trace, purity, subset_purity
from graphent.states import (
    apply_cz,
    apply_local_unitary,
    build_graph_state,
    inner_product,
    lc_unitary_apply,
    plus_state,
    stabilizer_expectation,
)

__all__ = [
    "CatalogEntry",
    "ClassificationReport",
    "DegenerateContractionError",
    "GemConfig",
    "GemDiagnostics",
    "Graph",
    "LcOrbit",
    "MeasureClass",
    "MeasureResult",
    "OrbitBudgetExceeded",
    "ProductState",
    "RpEntry",
    "all_entries",
    "apply_cz",
    "apply_local_unitary",
    "are_lc_equivalent",
    "brute_force_gem",
    "build_graph_state",
    "build_report",
    "build_rp_table",
    "canonical_form",
    "catalog_get",
    "catalog_size",
    "export_corpus",
    "find_isomorphism",
    "gcm",
    "gem",
    "gem_bipartite_oracle",
    "group_by_value",
    "ids_with_n",
    "inner_product",
    "is_connected",
    "is_isomorphic",
    "lc_orbit",
    "lc_unitary_apply",
    "local_complement",
    "make_graph",
    "measure_values",
    "neighbors",
    "parse_edge_list",
    "partial_trace",
    "plus_state",
    "purity",
    "relabel",
    "resolution_power",
    "rp_fraction",
    "see_saw_step",
    "serialize_edge_list",
    "stabilizer_expectation",
    "subset_purity",
]
