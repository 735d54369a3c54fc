use crate::convex::check_laminar;
use crate::error::Result;
use crate::sets::{LinearOrder, SetFamily, SubsetMask};

/// Orders `ground` so that every set in `sets` (each a subset of `ground`,
/// pairwise non-crossing) is an interval. Returns element indices in order.
///
/// Sets equal to `∅` or to `ground` are convex under any order and are
/// dropped; among the rest the first ⊆-maximal set `A` splits the ground into
/// the block `ground − A` followed by the block `A`.
pub(crate) fn laminar_order_on(ground: &SubsetMask, sets: &[SubsetMask]) -> Vec<usize> {
    let mut live: Vec<&SubsetMask> = Vec::new();
    for s in sets {
        debug_assert!(s.is_subset(ground));
        if !s.is_empty() && s != ground && !live.contains(&s) {
            live.push(s);
        }
    }
    let Some(anchor) = live.iter().position(|s| !live.iter().any(|t| s.is_strict_subset(t))) else {
        return ground.ones().collect();
    };
    let inside = live[anchor].clone();
    let outside = ground.difference(&inside);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i, s) in live.iter().enumerate() {
        if i == anchor {
            continue;
        }
        if s.is_subset(&outside) {
            left.push((*s).clone());
        } else {
            debug_assert!(s.is_subset(&inside), "crossing sets reached the laminar recursion");
            right.push((*s).clone());
        }
    }
    let mut order = laminar_order_on(&outside, &left);
    order.extend(laminar_order_on(&inside, &right));
    order
}

/// An order under which every member of a laminar family is an interval.
pub fn order_laminar(family: &SetFamily) -> Result<LinearOrder> {
    check_laminar(family)?;
    let sets: Vec<SubsetMask> = family.masks().cloned().collect();
    let order = laminar_order_on(&family.universe().full(), &sets);
    LinearOrder::new(order)
}
