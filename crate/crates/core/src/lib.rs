//! Exact minor, coloring and enumeration tools for small graphs, with a
//! verification harness for the `K_7^∨` coloring theorem and its lemmas.

pub mod canon;
pub mod certificate;
pub mod color;
pub mod connectivity;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod minor;
pub mod patterns;
pub mod verify;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, isomorphic, CanonicalForm};
pub use certificate::{read_certificate, read_certificates, write_certificate, Certificate};
pub use color::{
    chromatic_number, clique_number, cycle_model_from_kempe, find_coloring, independence_number, kempe_chain,
    kempe_swap, Coloring, KempeChain,
};
pub use connectivity::{
    enumerate_separations, is_internally_k_connected, is_k_connected, vertex_connectivity, Separation,
};
pub use enumerate::{generate_graphs, GraphFilter, Predicate};
pub use error::{
    CertificateError, ColorError, EnumError, Graph6Error, GraphError, KempeError, PatternError, SearchError,
    VerifyError,
};
pub use graph::{Graph, VertexSet};
pub use graph6::{emit as emit_graph6, parse as parse_graph6};
pub use minor::{
    find_model, find_rooted_model, has_subgraph, two_disjoint_paths, validate_model, Model, ModelViolation,
};
pub use patterns::{pattern_roster, Family, Pattern, RootMode, RootSpec};
pub use verify::{Options, Report};
