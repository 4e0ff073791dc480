//! Recursive De Bruijn constructions through linear span-2 kernels.

mod family;
mod linear;
mod plan;
mod position;
mod recursive;

pub use family::{enumerate_family, enumerate_family_with_base, family_size, Family};
pub use linear::{algorithm_a, algorithm_a_unoriented, algorithm_b};
pub use plan::{base_cycle, ConstructionPlan, JoinType};
pub use position::cross_join_position;
pub use recursive::{algorithm_aa, constant_positions};
