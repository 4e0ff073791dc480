//! Brute-force checks used as ground truth for the constructions.
//!
//! Nothing here relies on the lifting or construction code: windows are
//! scanned directly and kernels are only ever evaluated pointwise.

mod kernels;
mod lift;
mod sequence;

pub use kernels::{all_tables, binary_normal_form_tables, count_latin_tables, is_latin_table, MAX_TABLES};
pub use lift::{
    check_lift_structure, enumerate_vertex_disjoint_cycles, lift_criterion, preimage_cycles, Preimage,
    MAX_CYCLE_SEARCH_VERTICES,
};
pub use sequence::{enumerate_de_bruijn, is_de_bruijn, is_vertex_disjoint, VerificationReport, MAX_ENUMERATED_VERTICES};
