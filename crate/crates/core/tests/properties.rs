//! Randomized structural properties.

use proptest::prelude::*;
use springer_kit::maxmin::{lambda_max_algorithm, lambda_min, sign_twist};
use springer_kit::multiplicity::{mult_bipartition, raising_expansion};
use springer_kit::pab::{p_abs_set, PabParams};
use springer_kit::partition::{bipartitions, partitions};
use springer_kit::seq::{q, qr};
use springer_kit::symbols::{enumerate_odd_parts, enumerate_pport, phi, phi_inverse};
use springer_kit::{Bipartition, IndexOrder, Partition};

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::new)
}

fn bipartition(max_len: usize, max_part: u32) -> impl Strategy<Value = Bipartition> {
    (partition(max_len, max_part), partition(max_len, max_part)).prop_map(|(a, b)| Bipartition::new(a, b))
}

/// A bipartition together with one of its inequivalent orders.
fn ordered(max_len: usize, max_part: u32) -> impl Strategy<Value = (Bipartition, IndexOrder)> {
    (bipartition(max_len, max_part), any::<prop::sample::Index>()).prop_map(|(ab, ix)| {
        let orders = IndexOrder::inequivalent_orders(&ab, 1);
        let o = orders[ix.index(orders.len())].clone();
        (ab, o)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn transpose_is_an_involution(p in partition(8, 8)) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().size(), p.size());
    }

    #[test]
    fn transpose_reverses_dominance(n in 0u32..=12, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let all = partitions(n);
        let (a, b) = (&all[i.index(all.len())], &all[j.index(all.len())]);
        prop_assert_eq!(a.dominated_by(b), b.transpose().dominated_by(&a.transpose()));
    }

    #[test]
    fn bipartition_text_roundtrip(ab in bipartition(6, 9)) {
        let back: Bipartition = ab.to_string().parse().unwrap();
        prop_assert_eq!(back, ab);
    }

    #[test]
    fn order_text_roundtrip((_ab, o) in ordered(3, 4)) {
        let back: IndexOrder = o.to_string().parse().unwrap();
        prop_assert_eq!(back, o);
    }

    #[test]
    fn phi_roundtrip(n in 1u32..=16, ix in any::<prop::sample::Index>()) {
        let data = enumerate_pport(n);
        let d = &data[ix.index(data.len())];
        let (ab, k) = phi(d).unwrap();
        prop_assert!(phi_inverse(&ab, k, n).unwrap().same_class(d));
    }

    #[test]
    fn expansion_at_one_matches_oracle((ab, o) in ordered(2, 2)) {
        let e = raising_expansion(&ab, &o).unwrap();
        for target in bipartitions(ab.size()) {
            let fast = e.get(&target).map_or(0, |p| p.at_one());
            prop_assert_eq!(fast, mult_bipartition(&ab, &o, &target).unwrap(), "target {}", target);
        }
    }

    #[test]
    fn pab_depends_on_difference_only((ab, o) in ordered(3, 3), a in -3i64..=3, b in -3i64..=3, c in -4i64..=4) {
        let params = PabParams::new(q(a), q(b), q(2)).unwrap();
        let base = p_abs_set(&ab, &o, params).unwrap();
        prop_assert_eq!(&base, &p_abs_set(&ab, &o, params.shifted(qr(c, 2))).unwrap());
        prop_assert!(!base.is_empty());
    }

    #[test]
    fn max_dominates_and_twists_to_min(n in 1u32..=15, ix in any::<prop::sample::Index>()) {
        let data = enumerate_odd_parts(n);
        let d = &data[ix.index(data.len())];
        let (mx, _) = lambda_max_algorithm(d).unwrap();
        let mn = lambda_min(d).unwrap();
        prop_assert!(d.lam().dominated_by(mx.lam()));
        prop_assert!(mn.lam().dominated_by(d.lam()));
        prop_assert!(sign_twist(&mn).unwrap().same_class(&mx));
    }
}
