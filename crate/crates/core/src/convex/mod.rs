//! Convex-order synthesis for laminar and independence-dimension-one
//! families, order verification, boolean combinations and leftward rays.
//!
//! A laminar family (no two members cross) is ordered by recursively
//! splitting the ground set at a ⊆-maximal member. A family of independence
//! dimension at most one is reduced to two laminar families by fixing an
//! anchor member `A` and moving every other member, possibly complemented,
//! inside `A` or inside its complement.

mod expr;
mod id1;
mod laminar;
mod ray;
mod verify;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sets::SetFamily;

pub use crate::sets::{convex_components, LinearOrder};
pub use expr::{boolean_combo, combo_component_bound, parse_expr, ComboBound, Expr};
pub use id1::order_id1;
pub use laminar::order_laminar;
pub use ray::{alternation_count, leftward_ray};
pub use verify::{verify_convex_order, ConvexOrderReport, MemberConvexity};

/// Two members with `A ∩ B`, `A − B` and `B − A` all non-empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingPair {
    pub members: [usize; 2],
    pub member_names: [String; 2],
}

impl fmt::Display for CrossingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "members {:?} and {:?} cross",
            self.member_names[0], self.member_names[1]
        )
    }
}

pub fn find_crossing_pair(family: &SetFamily) -> Option<CrossingPair> {
    for a in 0..family.len() {
        for b in a + 1..family.len() {
            let (ma, mb) = (family.mask(a), family.mask(b));
            if ma.intersects(mb) && !ma.is_subset(mb) && !mb.is_subset(ma) {
                return Some(CrossingPair {
                    members: [a, b],
                    member_names: [family.member(a).name.clone(), family.member(b).name.clone()],
                });
            }
        }
    }
    None
}

pub fn check_laminar(family: &SetFamily) -> Result<()> {
    match find_crossing_pair(family) {
        Some(pair) => Err(Error::NotLaminar(pair)),
        None => Ok(()),
    }
}
