use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sets::{SetFamily, SignAssignment, SubsetMask};

/// The Venn cell `⋂ B^{s(B)}` selected by `assignment`. The empty family has
/// a single cell, the whole universe.
pub fn cell(family: &SetFamily, assignment: &SignAssignment) -> Result<SubsetMask> {
    if assignment.len() != family.len() {
        return Err(Error::LengthMismatch {
            expected: family.len(),
            actual: assignment.len(),
        });
    }
    let mut out = family.universe().full();
    for (j, m) in family.members().iter().enumerate() {
        if assignment.sign(j) {
            out.intersect_with(&m.mask);
        } else {
            out.intersect_with(&m.mask.complement());
        }
    }
    Ok(out)
}

/// Every sign assignment whose cell is non-empty. These are exactly the
/// distinct membership rows of the universe's elements.
pub fn realized_cells(family: &SetFamily) -> BTreeSet<SignAssignment> {
    family
        .rows()
        .into_iter()
        .map(|row| SignAssignment::new(row, family.len()))
        .collect()
}
