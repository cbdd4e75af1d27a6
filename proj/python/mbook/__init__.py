"""Matching book embeddings: graph transforms, F-sums, validation, exact search."""

from ._mbook import (  # noqa: F401
    BookEmbedding,
    BoundCertificate,
    BudgetError,
    DispersableInput,
    Graph,
    Label,
    SolveResult,
    ValidationReport,
    cartesian_product,
    chromatic_index,
    circulant_graph,
    classify,
    cycle_graph,
    embed_cycle_q_cycle,
    embed_fsum_generic,
    embed_outerplanar,
    embed_path_q,
    embed_q_star,
    embed_star_q,
    embed_t_star,
    f_sum,
    heuristic_upper,
    is_bipartite,
    is_odd_cycle,
    is_regular,
    isomorphic,
    max_degree,
    mbt_exact,
    mbt_lower_bound,
    parse_embedding,
    parse_graph,
    path_graph,
    render_svg,
    serialize_embedding,
    serialize_graph,
    star_graph,
    transform,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
