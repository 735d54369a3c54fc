use crate::convex::laminar::laminar_order_on;
use crate::convex::{verify_convex_order, ConvexOrderReport};
use crate::error::{Error, Result};
use crate::independence::certify_id_at_most_one;
use crate::sets::{LinearOrder, SetFamily, SubsetMask};

/// An order under which every member of an independence-dimension-one family
/// is convex or co-convex.
///
/// The first non-trivial member is the anchor `A`. Each other non-trivial `B`
/// is sent, as `B^s`, into the side `A^t` for the first `(t, s)` in
/// `(0,0), (0,1), (1,0), (1,1)` with `B^s ⊆ A^t`; the pair law guarantees one
/// exists. Both sides are then laminar and are ordered independently, the
/// `A⁰` block first.
pub fn order_id1(family: &SetFamily) -> Result<(LinearOrder, ConvexOrderReport)> {
    certify_id_at_most_one(family).map_err(Error::IdExceedsOne)?;
    let full = family.universe().full();
    let nontrivial: Vec<&SubsetMask> = family.masks().filter(|m| !m.is_empty() && !m.is_full()).collect();

    let order = match nontrivial.split_first() {
        None => LinearOrder::identity(family.universe_size()),
        Some((anchor, rest)) => {
            let sides = [anchor.complement(), (*anchor).clone()];
            let mut placed: [Vec<SubsetMask>; 2] = [Vec::new(), Vec::new()];
            for b in rest {
                let (t, adjusted) = [(0, false), (0, true), (1, false), (1, true)]
                    .into_iter()
                    .find_map(|(t, s)| {
                        let bs = b.signed(s);
                        bs.is_subset(&sides[t]).then_some((t, bs))
                    })
                    .expect("pair law holds for a certified family");
                placed[t].push(adjusted);
            }
            let mut perm = laminar_order_on(&sides[0], &placed[0]);
            perm.extend(laminar_order_on(&sides[1], &placed[1]));
            debug_assert_eq!(perm.len(), full.width());
            LinearOrder::new(perm)?
        }
    };
    let report = verify_convex_order(family, &order, true)?;
    debug_assert!(report.members.iter().all(|m| m.components <= 1));
    Ok((order, report))
}
