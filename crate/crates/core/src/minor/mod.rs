//! Minor models: validation, exact search, two disjoint paths and subgraph embedding.

mod model;
mod paths;
mod search;
mod subgraph;

pub use model::{validate_model, validate_rooted, Model, ModelViolation};
pub use paths::two_disjoint_paths;
pub(crate) use search::search_bags;
pub use search::{find_model, find_rooted_model};
pub use subgraph::has_subgraph;
