//! Realized φ-types: membership traces of elements across a parameter family.
//!
//! Types are counted as distinct realized rows on the finite universe.
//! Consistent but unrealized sign patterns are not types here.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sets::{convex_components, row_bitstring, LinearOrder, SetFamily};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceTable {
    width: usize,
    rows: Vec<u64>,
}

impl TraceTable {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row(&self, x: usize) -> u64 {
        self.rows[x]
    }

    /// Distinct rows in order of first occurrence.
    pub fn distinct_rows(&self) -> Vec<u64> {
        let mut seen = HashSet::new();
        self.rows.iter().copied().filter(|r| seen.insert(*r)).collect()
    }

    pub fn row_bitstring(&self, x: usize) -> String {
        row_bitstring(self.rows[x], self.width)
    }

    pub fn distinct_bitstrings(&self) -> Vec<String> {
        self.distinct_rows()
            .into_iter()
            .map(|r| row_bitstring(r, self.width))
            .collect()
    }
}

pub fn trace_table(family: &SetFamily) -> TraceTable {
    TraceTable {
        width: family.len(),
        rows: family.rows(),
    }
}

pub fn type_count(table: &TraceTable) -> usize {
    table.rows.iter().collect::<HashSet<_>>().len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndpointCheck {
    pub count: usize,
    pub bound: usize,
    pub k: usize,
    pub pass: bool,
}

/// Checks `|types| ≤ 2K·|B| + 1` for a family whose members each have at
/// most `k` components under `order`.
pub fn endpoint_bound_check(family: &SetFamily, order: &LinearOrder, k: usize) -> Result<EndpointCheck> {
    for m in family.members() {
        let c = convex_components(order, &m.mask)?;
        if c > k {
            return Err(Error::ComponentBound {
                member: m.name.clone(),
                components: c,
                k,
            });
        }
    }
    let count = type_count(&trace_table(family));
    let bound = 2 * k * family.len() + 1;
    Ok(EndpointCheck {
        count,
        bound,
        k,
        pass: count <= bound,
    })
}
