use serde::Serialize;

use crate::sets::SetFamily;

/// The containment quasi-order on members: `b ≤ c` iff `mask(b) ⊆ mask(c)`.
/// Equivalence classes are groups of equal masks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiOrder {
    /// `leq[b][c]` iff member `b`'s mask is contained in member `c`'s.
    pub leq: Vec<Vec<bool>>,
    /// Classes in order of first member; members within a class ascending.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl QuasiOrder {
    pub fn leq(&self, b: usize, c: usize) -> bool {
        self.leq[b][c]
    }

    pub fn equivalent(&self, b: usize, c: usize) -> bool {
        self.class_of[b] == self.class_of[c]
    }

    pub fn comparable(&self, b: usize, c: usize) -> bool {
        self.leq[b][c] || self.leq[c][b]
    }

    /// Whether the classes meeting `members` form a chain.
    pub fn is_linear_on(&self, members: &[usize]) -> bool {
        members
            .iter()
            .enumerate()
            .all(|(i, &b)| members[i + 1..].iter().all(|&c| self.comparable(b, c)))
    }

    pub fn is_linear(&self) -> bool {
        let reps: Vec<usize> = self.classes.iter().map(|c| c[0]).collect();
        self.is_linear_on(&reps)
    }
}

pub fn instance_quasi_order(family: &SetFamily) -> QuasiOrder {
    let n = family.len();
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|b| (0..n).map(|c| family.mask(b).is_subset(family.mask(c))).collect())
        .collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    for (b, slot) in class_of.iter_mut().enumerate() {
        match classes.iter().position(|cls| family.mask(cls[0]) == family.mask(b)) {
            Some(k) => {
                classes[k].push(b);
                *slot = k;
            }
            None => {
                *slot = classes.len();
                classes.push(vec![b]);
            }
        }
    }
    QuasiOrder { leq, classes, class_of }
}
