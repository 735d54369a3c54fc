//! Finite ground sets, bit-mask subsets, Venn cells and the interchange format.

mod cells;
mod family;
mod json;
mod mask;
mod order;

pub use cells::{cell, realized_cells};
pub(crate) use family::row_bitstring;
pub use family::{Limits, Member, SetFamily, SignAssignment, SignedMember, Universe, MAX_MEMBERS_HARD};
pub use json::{parse_family, parse_family_with, to_json, to_json_pretty};
pub use mask::SubsetMask;
pub use order::{convex_components, LinearOrder};
