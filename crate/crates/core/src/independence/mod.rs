//! Independence of subfamilies, independence dimension, certification of
//! independence dimension at most one, ladders and the instance quasi-order.

mod ladder;
mod quasi;

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::sets::{SetFamily, SignAssignment};

pub use ladder::{ladder_index, LadderResult, LadderWitness};
pub use quasi::{instance_quasi_order, QuasiOrder};

pub const DEFAULT_ID_CAP: usize = 8;

/// Projects each row onto the listed members, packing the signs into the low
/// bits in list order.
fn project(row: u64, indices: &[usize]) -> usize {
    indices
        .iter()
        .enumerate()
        .fold(0usize, |acc, (t, &j)| acc | ((((row >> j) & 1) as usize) << t))
}

fn rows_independent(rows: &[u64], indices: &[usize]) -> bool {
    let k = indices.len();
    // 2^k non-empty disjoint cells need at least 2^k elements.
    if k >= usize::BITS as usize - 1 || (1usize << k) > rows.len() {
        return false;
    }
    let target = 1usize << k;
    let mut seen = vec![false; target];
    let mut hit = 0;
    for &row in rows {
        let p = project(row, indices);
        if !seen[p] {
            seen[p] = true;
            hit += 1;
            if hit == target {
                return true;
            }
        }
    }
    false
}

/// True iff every one of the `2^k` cells over the listed members is non-empty.
pub fn is_independent(family: &SetFamily, subset: &[usize]) -> Result<bool> {
    family.check_indices(subset)?;
    Ok(rows_independent(&family.rows(), subset))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdResult {
    pub dimension: usize,
    pub witness: Vec<usize>,
    /// The search reached `cap` and stopped; `dimension` is then a lower bound.
    pub capped: bool,
}

/// Independence dimension by level-wise search.
///
/// Level `k + 1` is generated from the independent sets of level `k` by
/// appending a larger index; a candidate is tested only if every one of its
/// `k`-subsets was independent. Levels are produced in lexicographic order, so
/// the reported witness is the lexicographically least of maximum size.
pub fn independence_dimension(family: &SetFamily, cap: usize) -> IdResult {
    let rows = family.rows();
    let n = family.len();
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    let mut dimension = 0;
    while dimension < cap {
        let known: HashSet<u64> = level
            .iter()
            .map(|s| s.iter().fold(0u64, |acc, &j| acc | (1 << j)))
            .collect();
        let mut next = Vec::new();
        for set in &level {
            let start = set.last().map_or(0, |&j| j + 1);
            let base = set.iter().fold(0u64, |acc, &j| acc | (1 << j));
            for j in start..n {
                let all_subsets_known = set
                    .iter()
                    .all(|&drop| known.contains(&((base & !(1 << drop)) | (1 << j))));
                if !all_subsets_known {
                    continue;
                }
                let mut cand = set.clone();
                cand.push(j);
                if rows_independent(&rows, &cand) {
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
        dimension += 1;
    }
    let capped = dimension >= cap;
    IdResult {
        dimension,
        witness: level.into_iter().next().unwrap_or_default(),
        capped,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellWitness {
    pub signs: SignAssignment,
    pub element: usize,
}

/// Proof that two members form an independent pair: all four cells are
/// realized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingWitness {
    pub members: [usize; 2],
    pub member_names: [String; 2],
    pub cells: Vec<CellWitness>,
}

impl fmt::Display for CrossingWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "members {:?} and {:?} realize all four cells",
            self.member_names[0], self.member_names[1]
        )
    }
}

/// The pair law: at least one of `A^t ∩ B^s` is empty, for every pair.
pub fn certify_id_at_most_one(family: &SetFamily) -> std::result::Result<(), CrossingWitness> {
    let rows = family.rows();
    for a in 0..family.len() {
        for b in a + 1..family.len() {
            let mut first = [None; 4];
            for (x, &row) in rows.iter().enumerate() {
                let p = project(row, &[a, b]);
                first[p].get_or_insert(x);
            }
            if first.iter().all(Option::is_some) {
                let cells = first
                    .iter()
                    .enumerate()
                    .map(|(p, x)| CellWitness {
                        signs: SignAssignment::new(p as u64, 2),
                        element: x.expect("all cells realized"),
                    })
                    .collect();
                return Err(CrossingWitness {
                    members: [a, b],
                    member_names: [family.member(a).name.clone(), family.member(b).name.clone()],
                    cells,
                });
            }
        }
    }
    Ok(())
}
