//! Graph and digraph applications: fractional domination, the fractional
//! chromatic number and `κ_f`, and vertex cover with budget.

mod budget;
mod chromatic;
mod domination;
mod graph;

pub use budget::{budget_cover, verify_budget, BipartiteCheck, BudgetCover, BudgetReport, BudgetRow, CoverFamily, BETA_WINDOW_FACTOR};
pub use chromatic::{
    c_fold_chromatic, chromatic_number, clique_number, fractional_chromatic, independence_number,
    independent_set_hypergraph, kappa_bounds, kappa_f, kneser_graph, lexicographic_product,
    maximal_independent_sets, optimal_coloring, petersen, vertex_cover_hypergraph, KappaBounds, KappaReport,
    LOG_BOUND_TOLERANCE,
};
pub use domination::{
    digraph_complement, fractional_domination, neighborhood_hypergraph, verify_domination, Closure,
    DominationReport, NeighborhoodSpec, RegularCheck, Side, TournamentCheck,
};
pub use graph::{
    format_digraph, format_graph, parse_digraph, parse_graph, parse_graph_input, Digraph, Graph, GraphInput,
    MAX_VERTICES,
};
pub(crate) use graph::{full_mask, members};
