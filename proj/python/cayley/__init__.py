"""Independent sets in Abelian Cayley graphs: counting, sumsets, containers."""

from ._core import (
    CayleyError,
    CayleyGraph,
    Graph,
    appendix_a,
    appendix_b,
    bipartite_bound_sum,
    complete_bipartite,
    container_table,
    count_independent_sets,
    count_independent_sets_bruteforce,
    cycle,
    cayley_graph,
    graph_from_json,
    lucas,
    run_suite,
    small_closed_sets,
    suite_names,
    times_k2,
)

__all__ = [name for name in dir() if not name.startswith("_")]
