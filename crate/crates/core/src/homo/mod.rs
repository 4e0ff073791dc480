//! Homomorphisms of De Bruijn digraphs given by window kernels.

mod count;
mod format;
mod kernel;
mod lift;

pub use count::{count_property_d, latin_power, latin_square_count, MAX_COUNT_TABLE, MAX_LATIN_ORDER};
pub use format::{parse_kernel, parse_kernel_spec, write_kernel};
pub use kernel::{Kernel, Provenance, MAX_TABLE_LEN};
pub use lift::{lift_cycle_decomposition, lift_sequence, seed_map, LiftDecomposition, SeedMap};
