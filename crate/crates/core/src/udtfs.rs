//! Rank-1 uniform definability of types for families of independence
//! dimension at most one.
//!
//! For an element `a`, pick a signed instance `S = ψ_i^t` true at `a` whose
//! mask is ⊆-minimal. Membership of `a` in any member `ψ_j` is then decided
//! from containments between `S` and `ψ_j` alone:
//!
//! ```text
//! S ⊆ ψ_j   or   (S ⊄ ψ_j⁰  and  ψ_j⁰ ⊆ S)
//! ```
//!
//! Entailment between instances is mask containment on the finite universe.
//! The multi-variable composition that bounds rank by `k · lg(x̄)` works on
//! formula syntax and has no counterpart over masks, so only rank 1 lives
//! here.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::independence::{certify_id_at_most_one, CrossingWitness};
use crate::sets::{SetFamily, SignedMember, SubsetMask};

/// A signed instance true at `element` with the fewest elements, ties broken
/// by `(member index, polarity)` with polarity 0 first. Any instance of least
/// cardinality is ⊆-minimal.
pub fn minimal_instance_selector(family: &SetFamily, element: usize) -> Result<SignedMember> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if element >= family.universe_size() {
        return Err(Error::InvalidIndex {
            index: element,
            len: family.universe_size(),
        });
    }
    let size = family.universe_size();
    let best = family
        .members()
        .iter()
        .enumerate()
        .map(|(j, m)| {
            let polarity = m.mask.contains(element);
            let len = if polarity { m.mask.len() } else { size - m.mask.len() };
            (len, j, polarity)
        })
        .min()
        .expect("non-empty family");
    Ok(SignedMember::new(best.1, best.2))
}

/// Predicts membership in member `target` from the selected signed instance.
/// Never looks at the element itself.
pub fn delta_decide(family: &SetFamily, selected: SignedMember, target: usize) -> bool {
    decide(&family.signed_mask(selected), family.mask(target))
}

fn decide(selected: &SubsetMask, target: &SubsetMask) -> bool {
    if selected.is_subset(target) {
        return true;
    }
    let outside = target.complement();
    !selected.is_subset(&outside) && outside.is_subset(selected)
}

/// A certified family with its per-element selectors.
#[derive(Debug, Clone)]
pub struct Rank1Scheme<'a> {
    family: &'a SetFamily,
    selectors: Vec<SignedMember>,
}

impl<'a> Rank1Scheme<'a> {
    pub fn new(family: &'a SetFamily) -> Result<Self> {
        certify_id_at_most_one(family).map_err(Error::IdExceedsOne)?;
        let selectors = if family.is_empty() {
            Vec::new()
        } else {
            (0..family.universe_size())
                .map(|x| minimal_instance_selector(family, x))
                .collect::<Result<_>>()?
        };
        Ok(Rank1Scheme { family, selectors })
    }

    pub fn family(&self) -> &SetFamily {
        self.family
    }

    pub fn selector(&self, element: usize) -> Option<SignedMember> {
        self.selectors.get(element).copied()
    }

    pub fn selectors(&self) -> &[SignedMember] {
        &self.selectors
    }

    /// Distinct `(member, polarity)` selectors in use.
    pub fn scheme_size(&self) -> usize {
        self.selectors.iter().collect::<BTreeSet<_>>().len()
    }

    /// The type of `element` reconstructed from its selector; bit `j` is the
    /// predicted membership in member `j`.
    pub fn reconstruct(&self, element: usize) -> u64 {
        match self.selector(element) {
            None => 0,
            Some(sel) => reconstruct_from(self.family, sel),
        }
    }

    pub fn trace(&self, element: usize) -> Option<ReconstructionTrace> {
        let sel = self.selector(element)?;
        let decisions = (0..self.family.len())
            .map(|j| Decision {
                member: self.family.member(j).name.clone(),
                predicted: delta_decide(self.family, sel, j),
                actual: self.family.mask(j).contains(element),
            })
            .collect();
        Some(ReconstructionTrace {
            element: self.family.universe().name(element).to_string(),
            selected_member: self.family.member(sel.index).name.clone(),
            selected_polarity: sel.polarity_bit(),
            decisions,
        })
    }
}

fn reconstruct_from(family: &SetFamily, sel: SignedMember) -> u64 {
    let s = family.signed_mask(sel);
    family
        .masks()
        .enumerate()
        .fold(0u64, |acc, (j, m)| acc | ((decide(&s, m) as u64) << j))
}

/// Certifies the family, then reconstructs one element's type.
pub fn reconstruct_type(family: &SetFamily, element: usize) -> Result<u64> {
    certify_id_at_most_one(family).map_err(Error::IdExceedsOne)?;
    if family.is_empty() {
        return Ok(0);
    }
    let sel = minimal_instance_selector(family, element)?;
    Ok(reconstruct_from(family, sel))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub member: String,
    pub predicted: bool,
    pub actual: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionTrace {
    pub element: String,
    pub selected_member: String,
    pub selected_polarity: u8,
    pub decisions: Vec<Decision>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rank1Report {
    pub certified: bool,
    pub elements_checked: usize,
    pub exact: bool,
    pub scheme_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossing: Option<CrossingWitness>,
}

/// Certification followed by full reconstruction against the trace rows.
pub fn rank1_report(family: &SetFamily) -> Rank1Report {
    let scheme = match Rank1Scheme::new(family) {
        Ok(s) => s,
        Err(Error::IdExceedsOne(w)) => {
            return Rank1Report {
                certified: false,
                elements_checked: 0,
                exact: false,
                scheme_size: 0,
                crossing: Some(w),
            }
        }
        Err(e) => unreachable!("scheme construction only fails on certification: {e}"),
    };
    let rows = family.rows();
    let checked = scheme.selectors().len();
    let exact = (0..checked).all(|x| scheme.reconstruct(x) == rows[x]);
    Rank1Report {
        certified: true,
        elements_checked: checked,
        exact,
        scheme_size: scheme.scheme_size(),
        crossing: None,
    }
}
