//! Partitions, tableaux, strips and symmetric-group characters.

mod character;
mod enumerate;
mod partition;
mod strip;
mod tableau;

pub use character::{class_size, cycle_type, sym_character};
pub use enumerate::{permutations, row_increasing, rssyt, standard_proper};
pub(crate) use partition::factorial;
pub use partition::{Cell, Partition};
pub use strip::{horizontal_strips, strips, vertical_strips, Orientation, Strip};
pub use tableau::Tableau;
