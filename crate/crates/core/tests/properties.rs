use std::collections::BTreeSet;

use proptest::prelude::*;
use vcw_core::*;

fn family_strategy(max_members: usize, max_points: usize) -> impl Strategy<Value = SetFamily> {
    (1..=max_points).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), n), 0..=max_members).prop_map(move |rows| {
            let members = rows.iter().enumerate().map(|(j, bits)| {
                let mask = SubsetMask::from_indices(n, (0..n).filter(|&x| bits[x]));
                (format!("F{j}"), mask)
            });
            SetFamily::from_masks(Universe::numbered(n), members.collect::<Vec<_>>()).unwrap()
        })
    })
}

fn order_and_mask(max: usize) -> impl Strategy<Value = (LinearOrder, SubsetMask)> {
    (1..=max).prop_flat_map(|n| {
        (
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(perm, bits)| {
                (
                    LinearOrder::new(perm).unwrap(),
                    SubsetMask::from_indices(n, (0..n).filter(|&x| bits[x])),
                )
            })
    })
}

fn id1_strategy() -> impl Strategy<Value = SetFamily> {
    (any::<u64>(), 1usize..=5, 0usize..=8).prop_map(|(seed, depth, flips)| {
        let mut p = RandomId1::new(seed, depth, flips);
        p.points = Some(2 + (seed % 60) as usize);
        gen_random_id1(&p).unwrap()
    })
}

fn naive_dimension(f: &SetFamily) -> usize {
    let n = f.len();
    (0u32..1 << n)
        .filter(|s| {
            let members: Vec<usize> = (0..n).filter(|j| s >> j & 1 == 1).collect();
            let seen: BTreeSet<Vec<bool>> = (0..f.universe_size())
                .map(|x| members.iter().map(|&j| f.mask(j).contains(x)).collect())
                .collect();
            seen.len() == 1 << members.len()
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Whether columns `cols` carry a ladder: each row pattern "in exactly the
/// columns after i" is realized.
fn has_ladder_on(f: &SetFamily, cols: &[usize]) -> bool {
    (0..=cols.len()).all(|i| {
        (0..f.universe_size()).any(|x| {
            cols.iter()
                .enumerate()
                .all(|(j, &b)| f.mask(b).contains(x) == (i < j + 1))
        })
    })
}

fn ladder_exists(f: &SetFamily, len: usize, prefix: &mut Vec<usize>) -> bool {
    if prefix.len() == len {
        return has_ladder_on(f, prefix);
    }
    for b in 0..f.len() {
        if prefix.contains(&b) {
            continue;
        }
        prefix.push(b);
        let found = ladder_exists(f, len, prefix);
        prefix.pop();
        if found {
            return true;
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cells_partition_the_universe(f in family_strategy(4, 12)) {
        let k = f.len();
        let mut union = SubsetMask::empty(f.universe_size());
        let mut total = 0;
        for bits in 0..1u64 << k {
            let c = cell(&f, &SignAssignment::new(bits, k)).unwrap();
            prop_assert!(c.is_disjoint(&union));
            total += c.len();
            union.union_with(&c);
        }
        prop_assert!(union.is_full());
        prop_assert_eq!(total, f.universe_size());
    }

    #[test]
    fn realized_cells_match_type_count(f in family_strategy(6, 20)) {
        let realized = realized_cells(&f);
        prop_assert!(realized.len() <= f.universe_size());
        prop_assert_eq!(realized.len(), type_count(&trace_table(&f)));
        for s in &realized {
            prop_assert!(!cell(&f, s).unwrap().is_empty());
        }
    }

    #[test]
    fn components_under_reversal_and_complement((order, mask) in order_and_mask(30)) {
        let c = convex_components(&order, &mask).unwrap();
        prop_assert_eq!(c, convex_components(&order.reversed(), &mask).unwrap());
        let d = convex_components(&order, &mask.complement()).unwrap();
        prop_assert!(c.abs_diff(d) <= 1);
    }

    #[test]
    fn independence_is_downward_closed(f in family_strategy(6, 24)) {
        let r = independence_dimension(&f, 64);
        let w = &r.witness;
        for drop in 0..w.len() {
            let mut sub = w.clone();
            sub.remove(drop);
            prop_assert!(is_independent(&f, &sub).unwrap());
        }
    }

    #[test]
    fn complementing_preserves_independence(f in family_strategy(5, 20), flips in prop::collection::vec(any::<bool>(), 5)) {
        let mut g = f.clone();
        for (j, _) in flips.iter().enumerate().take(g.len()).filter(|(_, &flip)| flip) {
            g.complement_member(j);
        }
        let all: Vec<usize> = (0..f.len()).collect();
        prop_assert_eq!(is_independent(&f, &all).unwrap(), is_independent(&g, &all).unwrap());
        prop_assert_eq!(independence_dimension(&f, 64).dimension, independence_dimension(&g, 64).dimension);
    }

    #[test]
    fn pair_law_matches_dimension(f in family_strategy(6, 16)) {
        let certified = certify_id_at_most_one(&f).is_ok();
        prop_assert_eq!(certified, independence_dimension(&f, 64).dimension <= 1);
    }

    #[test]
    fn pruned_search_matches_enumeration(f in family_strategy(8, 20)) {
        let r = independence_dimension(&f, 64);
        prop_assert_eq!(r.dimension, naive_dimension(&f));
        prop_assert!(is_independent(&f, &r.witness).unwrap());
    }

    #[test]
    fn capped_search_is_a_lower_bound(f in family_strategy(8, 20), cap in 0usize..4) {
        let r = independence_dimension(&f, cap);
        let full = naive_dimension(&f);
        prop_assert_eq!(r.dimension, full.min(cap));
        prop_assert_eq!(r.capped, full >= cap);
    }

    #[test]
    fn laminar_order_postcondition(seed in any::<u64>(), depth in 1usize..=5) {
        let f = gen_random_id1(&RandomId1::new(seed, depth, 0)).unwrap();
        prop_assert!(check_laminar(&f).is_ok());
        let o = order_laminar(&f).unwrap();
        for m in f.masks() {
            prop_assert_eq!(convex_components(&o, m).unwrap(), 1);
        }
    }

    #[test]
    fn id1_order_postcondition(f in id1_strategy()) {
        let (o, report) = order_id1(&f).unwrap();
        prop_assert!(report.is_convex());
        prop_assert_eq!(&report, &verify_convex_order(&f, &o, true).unwrap());
        for m in f.masks() {
            let pos = convex_components(&o, m).unwrap();
            let neg = convex_components(&o, &m.complement()).unwrap();
            prop_assert!(pos == 1 || neg == 1);
        }
    }

    #[test]
    fn convexity_survives_restriction(f in id1_strategy(), keep in prop::collection::vec(any::<bool>(), 24)) {
        let (o, report) = order_id1(&f).unwrap();
        let idx: Vec<usize> = (0..f.len()).filter(|&j| keep[j]).collect();
        let sub = f.subfamily(&idx).unwrap();
        let r = verify_convex_order(&sub, &o, true).unwrap();
        for (entry, &j) in r.members.iter().zip(&idx) {
            prop_assert_eq!(entry, &report.members[j]);
        }
    }

    #[test]
    fn combo_of_convex_members_is_bounded(f in id1_strategy(), ops in prop::collection::vec(0u8..6, 3)) {
        let (o, _) = order_id1(&f).unwrap();
        let names = f.names();
        let k = names.len().min(3);
        let atoms: Vec<String> = names[..k]
            .iter()
            .zip(&ops)
            .map(|(n, &op)| if op % 2 == 0 { format!("\"{n}\"") } else { format!("!\"{n}\"") })
            .collect();
        let mut text = atoms.first().cloned().unwrap_or_else(|| "true".into());
        for (a, &op) in atoms.iter().zip(&ops).skip(1) {
            text = format!("({text} {} {a})", if op < 3 { "&" } else { "|" });
        }
        let b = combo_component_bound(&f, &o, &text).unwrap();
        prop_assert_eq!(b.k, k);
        prop_assert!(b.holds(), "{}: {} > {}", text, b.components, b.bound);
    }

    #[test]
    fn leftward_rays((order, mask) in order_and_mask(30)) {
        let total = alternation_count(&order, &mask).unwrap();
        let mut prev = SubsetMask::empty(mask.width());
        for n in 1..=total + 2 {
            let ray = leftward_ray(&order, &mask, n).unwrap();
            let along: Vec<bool> = order.permutation().iter().map(|&x| ray.contains(x)).collect();
            prop_assert!(along.windows(2).all(|w| w[0] || !w[1]));
            prop_assert!(prev.is_subset(&ray));
            if n > total {
                prop_assert!(ray.is_full());
            }
            prev = ray;
        }
    }

    #[test]
    fn type_count_grows_with_the_family(f in family_strategy(6, 20)) {
        let mut last = 0;
        for n in 0..=f.len() {
            let c = type_count(&trace_table(&f.prefix(n)));
            prop_assert!(c >= last);
            last = c;
        }
    }

    #[test]
    fn rank1_reconstruction_is_exact(f in id1_strategy()) {
        let scheme = Rank1Scheme::new(&f).unwrap();
        let rows = f.rows();
        for (x, &row) in rows.iter().enumerate() {
            prop_assert_eq!(scheme.reconstruct(x), row);
        }
        prop_assert!(rank1_report(&f).exact);
    }

    #[test]
    fn selector_is_containment_minimal(f in id1_strategy()) {
        prop_assume!(!f.is_empty());
        for x in 0..f.universe_size() {
            let sel = minimal_instance_selector(&f, x).unwrap();
            let chosen = f.signed_mask(sel);
            prop_assert!(chosen.contains(x));
            for j in 0..f.len() {
                for p in [false, true] {
                    let other = f.signed_mask(SignedMember::new(j, p));
                    if other.contains(x) {
                        prop_assert!(!other.is_strict_subset(&chosen));
                    }
                }
            }
        }
    }

    #[test]
    fn ladder_index_is_maximal(f in family_strategy(5, 8)) {
        let r = ladder_index(&f, 8);
        prop_assert!(r.witness.holds_in(&f));
        prop_assert_eq!(r.witness.len(), r.length);
        prop_assert!(!ladder_exists(&f, r.length + 1, &mut Vec::new()));
    }

    #[test]
    fn json_round_trip(f in family_strategy(6, 12)) {
        let text = to_json(&f);
        prop_assert_eq!(parse_family(&text).unwrap(), f);
    }

    #[test]
    fn generators_are_deterministic(seed in any::<u64>(), depth in 1usize..=4, flips in 0usize..4) {
        let p = RandomId1::new(seed, depth, flips);
        let a = gen_random_id1(&p).unwrap();
        prop_assert_eq!(&a, &gen_random_id1(&p).unwrap());
        prop_assert!(certify_id_at_most_one(&a).is_ok());
        let c1 = generic_corners(2, 10, 6, seed).unwrap();
        prop_assert_eq!(c1, generic_corners(2, 10, 6, seed).unwrap());
    }

    #[test]
    fn linear_and_one_dimensional_grids_are_chains(m in 1usize..30, cuts in prop::collection::vec(1usize..31, 0..6)) {
        let cuts: Vec<usize> = cuts.into_iter().filter(|&c| c <= m + 1).collect::<BTreeSet<_>>().into_iter().collect();
        let l = gen_linear(m, &cuts).unwrap();
        prop_assert!(check_laminar(&l).is_ok());
        prop_assert!(instance_quasi_order(&l).is_linear());
        let corners: Vec<Vec<usize>> = cuts.iter().map(|&c| vec![c]).collect();
        let g = gen_grid(1, m, &corners).unwrap();
        prop_assert!(instance_quasi_order(&g).is_linear());
    }

    #[test]
    fn nested_predicates_certify(k in 1usize..=5, extra in 0usize..20) {
        let f = gen_predicates(k, PredicateMode::Nested, k + 1 + extra).unwrap();
        prop_assert!(certify_id_at_most_one(&f).is_ok());
        prop_assert!(rank1_report(&f).exact);
    }

    #[test]
    fn independent_predicates_fail_certification(k in 2usize..=6) {
        let f = gen_predicates(k, PredicateMode::Independent, 1 << k).unwrap();
        prop_assert!(certify_id_at_most_one(&f).is_err());
        prop_assert_eq!(independence_dimension(&f, 8).dimension, k);
    }
}
