mod common;

use deltaflip::bits::low_mask;
use deltaflip::{Flip, GroundSet, SetSystem};
use proptest::prelude::*;

fn arb_system(max_n: usize) -> impl Strategy<Value = SetSystem> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<u64>(), 0..16).prop_map(move |fam| {
            let full = low_mask(n);
            SetSystem::new(
                GroundSet::numbered(n).unwrap(),
                fam.into_iter().map(|x| x & full),
            )
            .unwrap()
        })
    })
}

fn arb_with_sets(max_n: usize) -> impl Strategy<Value = (SetSystem, u64, u64)> {
    (arb_system(max_n), any::<u64>(), any::<u64>()).prop_map(|(m, a, b)| {
        let full = m.ground().full();
        (m, a & full, b & full)
    })
}

proptest! {
    #[test]
    fn flips_are_involutions((m, x, _) in arb_with_sets(7)) {
        for kind in Flip::ALL {
            let once = m.apply(kind, x).unwrap();
            prop_assert_eq!(once.apply(kind, x).unwrap(), m.clone());
        }
    }

    #[test]
    fn dual_pivot_has_both_expansions(m in arb_system(7)) {
        for u in 0..m.n() {
            let b = 1u64 << u;
            let a = m.loop_complement(b).pivot(b).loop_complement(b);
            let c = m.pivot(b).loop_complement(b).pivot(b);
            prop_assert_eq!(&a, &c);
            prop_assert_eq!(&a, &m.dual_pivot(b));
        }
    }

    #[test]
    fn single_element_group_has_order_six(m in arb_system(6)) {
        // *u and +u generate S3: (*u +u)^3 is the identity
        for u in 0..m.n() {
            let b = 1u64 << u;
            let mut cur = m.clone();
            for _ in 0..3 {
                cur = cur.pivot(b).loop_complement(b);
            }
            prop_assert_eq!(cur, m.clone());
        }
    }

    #[test]
    fn flips_on_distinct_elements_commute(m in arb_system(6), k1 in 0usize..3, k2 in 0usize..3) {
        let (f1, f2) = (Flip::ALL[k1], Flip::ALL[k2]);
        for u in 0..m.n() {
            for v in 0..m.n() {
                if u == v {
                    continue;
                }
                let (bu, bv) = (1u64 << u, 1u64 << v);
                let a = m.apply(f1, bu).unwrap().apply(f2, bv).unwrap();
                let b = m.apply(f2, bv).unwrap().apply(f1, bu).unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn multi_element_flip_is_order_independent((m, x, _) in arb_with_sets(7)) {
        let elems: Vec<usize> = deltaflip::bits::bits(x).collect();
        for kind in Flip::ALL {
            let mut rev = m.clone();
            for &u in elems.iter().rev() {
                rev = rev.apply(kind, 1 << u).unwrap();
            }
            prop_assert_eq!(rev, m.apply(kind, x).unwrap());
        }
    }

    #[test]
    fn flips_commute_with_removal(m in arb_system(6)) {
        for u in 0..m.n() {
            let bu = 1u64 << u;
            // +u \ u = \ u
            prop_assert_eq!(m.loop_complement(bu).delete_element(u), m.delete_element(u));
            for v in 0..m.n() {
                if u == v {
                    continue;
                }
                let bv = 1u64 << v;
                let dv = m.delete_element(v);
                // index of u after removing v
                let u2 = if u > v { u - 1 } else { u };
                let b2 = 1u64 << u2;
                prop_assert_eq!(m.loop_complement(bu).delete_element(v), dv.loop_complement(b2));
                prop_assert_eq!(m.pivot(bu).delete_element(v), dv.pivot(b2));
                prop_assert_eq!(m.dual_pivot(bu).delete(bv).unwrap(), dv.dual_pivot(b2));
            }
        }
    }

    #[test]
    fn distance_under_flips((m, x, z) in arb_with_sets(7)) {
        prop_assume!(m.is_proper());
        prop_assert_eq!(m.pivot(z).distance(x).unwrap(), m.distance(x ^ z).unwrap());
        prop_assert_eq!(m.loop_complement(z).min_size().unwrap(), m.min_size().unwrap());
        let table = m.distance_table().unwrap();
        prop_assert_eq!(table[x as usize] as u32, m.distance(x).unwrap());
    }

    #[test]
    fn explicit_full_flips_match_composition(m in arb_system(8)) {
        let full = m.ground().full();
        for kind in Flip::ALL {
            prop_assert_eq!(m.full_flip_explicit(kind).unwrap(), m.apply(kind, full).unwrap());
        }
    }

    #[test]
    fn normality_is_loop_complement_invariant((m, _, y) in arb_with_sets(7)) {
        prop_assert_eq!(m.is_normal(), m.loop_complement(y).is_normal());
    }
}

#[test]
fn fixed_examples() {
    let m = common::m0();
    let plus = m.loop_complement(0b111);
    let expected = SetSystem::from_labels(
        ["p", "q", "r"],
        [
            vec![],
            vec!["q"],
            vec!["q", "r"],
            vec!["p", "q"],
            vec!["p", "q", "r"],
            vec!["p", "r"],
        ],
    )
    .unwrap();
    assert_eq!(plus, expected);
    assert_eq!(m.pivot(0b111), m.full_flip_explicit(Flip::Pivot).unwrap());
    assert_eq!(m.distance(0b111).unwrap(), 1);
    assert!(SetSystem::new(GroundSet::numbered(2).unwrap(), [])
        .unwrap()
        .distance(0)
        .is_err());
    assert!(m.apply(Flip::Pivot, 0b1000).is_err());
}
