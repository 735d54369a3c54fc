use serde::Serialize;

use crate::error::{Error, Result};
use crate::sets::{convex_components, LinearOrder, SetFamily};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberConvexity {
    pub name: String,
    pub polarity: u8,
    pub components: usize,
}

/// Per-member convexity under a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ConvexOrderReport {
    pub members: Vec<MemberConvexity>,
}

impl ConvexOrderReport {
    pub fn max_components(&self) -> usize {
        self.members.iter().map(|m| m.components).max().unwrap_or(0)
    }

    /// Members whose chosen polarity has more than `k` components.
    pub fn violations(&self, k: usize) -> Vec<&MemberConvexity> {
        self.members.iter().filter(|m| m.components > k).collect()
    }

    pub fn is_convex(&self) -> bool {
        self.violations(1).is_empty()
    }
}

/// Counts components of each member, and of its complement when
/// `allow_complement` is set, keeping the smaller (polarity 1 on ties). A
/// polarity with no elements counts as worse than any non-empty one.
pub fn verify_convex_order(
    family: &SetFamily,
    order: &LinearOrder,
    allow_complement: bool,
) -> Result<ConvexOrderReport> {
    if order.len() != family.universe_size() {
        return Err(Error::InvalidOrder(format!(
            "order covers {} elements, universe has {}",
            order.len(),
            family.universe_size()
        )));
    }
    let members = family
        .members()
        .iter()
        .map(|m| {
            let pos = convex_components(order, &m.mask)?;
            let (polarity, components) = if allow_complement {
                let neg = convex_components(order, &m.mask.complement())?;
                if (neg == 0, neg) < (pos == 0, pos) {
                    (0, neg)
                } else {
                    (1, pos)
                }
            } else {
                (1, pos)
            };
            Ok(MemberConvexity {
                name: m.name.clone(),
                polarity,
                components,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvexOrderReport { members })
}
