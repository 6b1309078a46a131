//! Exact lattice reduction and shortest-vector enumeration for certifying
//! minimum norms at small rank.

mod enumerate;
mod lll;

pub use enumerate::{
    enumerate_shortest, shortest_vector, shortest_vector_with_cap, verify_min_norm, Certificate,
    ShortVector, ENUM_RANK_CAP,
};
pub use lll::{default_quality, lll_reduce, lll_reduce_matrix, ReducedBasis};
