use serde::Serialize;

use crate::sets::{SetFamily, SubsetMask};

/// A ladder of length `n`: rows `c_0, ..., c_n` and columns `b_1, ..., b_n`
/// with `c_i ∈ b_j` exactly when `i < j`.
///
/// Row `c_0` lies in every column and row `c_n` in none, which is what a
/// finite segment of a dense order-property configuration always carries.
/// So any two columns `b_j, b_k` (`j < k`) meet, fail to cover the universe,
/// and `b_k ⊄ b_j`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct LadderWitness {
    pub row_elements: Vec<usize>,
    pub col_members: Vec<usize>,
}

impl LadderWitness {
    pub fn len(&self) -> usize {
        self.col_members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.col_members.is_empty()
    }

    /// Checks the ladder pattern against the family.
    pub fn holds_in(&self, family: &SetFamily) -> bool {
        let n = self.col_members.len();
        if self.row_elements.len() != n + 1 {
            return false;
        }
        self.row_elements.iter().enumerate().all(|(i, &c)| {
            self.col_members
                .iter()
                .enumerate()
                .all(|(j0, &b)| family.mask(b).contains(c) == (i < j0 + 1))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderResult {
    pub length: usize,
    pub witness: LadderWitness,
    /// A ladder of length `cap` was found and the search stopped there.
    pub capped: bool,
}

struct Search<'a> {
    masks: Vec<&'a SubsetMask>,
    cap: usize,
    best: usize,
    best_cols: Vec<usize>,
    best_rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Search<'_> {
    // `cands[i]` holds the elements still eligible for row `c_i` given the
    // columns chosen so far; they are pairwise disjoint and must stay
    // non-empty. `outside` is the complement of the union of chosen columns.
    fn extend(&mut self, cands: &[SubsetMask], outside: &SubsetMask) {
        let k = self.cols.len();
        if k > self.best || (k == self.best && self.best_rows.is_empty()) {
            self.best = k;
            self.best_cols = self.cols.clone();
            self.best_rows = cands.iter().map(|c| c.first().expect("non-empty")).collect();
        }
        if self.best >= self.cap {
            return;
        }
        // Rows c_k..c_n are disjoint subsets of `outside`.
        let reachable = (k + outside.len()).saturating_sub(1);
        if reachable <= self.best {
            return;
        }
        for b in 0..self.masks.len() {
            let mask = self.masks[b];
            if !cands.iter().all(|c| c.intersects(mask)) {
                continue;
            }
            let next_outside = outside.difference(mask);
            if next_outside.is_empty() {
                continue;
            }
            let mut next: Vec<SubsetMask> = cands.iter().map(|c| c.intersection(mask)).collect();
            next.push(next_outside.clone());
            self.cols.push(b);
            self.extend(&next, &next_outside);
            self.cols.pop();
            if self.best >= self.cap {
                return;
            }
        }
    }
}

/// Longest ladder of length at most `cap`, by depth-first branch and bound
/// over column sequences. Columns are tried in index order and rows take the
/// least eligible element, so the witness is deterministic.
pub fn ladder_index(family: &SetFamily, cap: usize) -> LadderResult {
    let universe = family.universe().full();
    if universe.is_empty() {
        return LadderResult {
            length: 0,
            witness: LadderWitness::default(),
            capped: cap == 0,
        };
    }
    let mut search = Search {
        masks: family.masks().collect(),
        cap,
        best: 0,
        best_cols: Vec::new(),
        best_rows: Vec::new(),
        cols: Vec::new(),
    };
    search.extend(std::slice::from_ref(&universe), &universe);
    LadderResult {
        length: search.best,
        capped: search.best >= cap,
        witness: LadderWitness {
            row_elements: search.best_rows,
            col_members: search.best_cols,
        },
    }
}
