//! Recursive construction of q-ary De Bruijn sequences through homomorphisms
//! of De Bruijn digraphs.

pub mod alphabet;
pub mod binary2;
pub mod construct;
pub mod cycle;
pub mod error;
pub mod homo;
pub mod oracle;
pub mod render;
pub mod word;

pub use alphabet::{Alphabet, Symbol};
pub use cycle::{Cycle, Index, Orientation};
pub use error::{Error, Result};
pub use word::Word;
