mod common;

use deltaflip::bits::subsets;
use deltaflip::deltamatroid::is_even;
use deltaflip::interlace::{multivariate_q, permute_q_under_flip, poly_direct, specialize};
use deltaflip::sample::random_subset;
use deltaflip::{Flip, PolyKind, SetSystem, UniPoly};
use num_bigint::BigInt;

fn q(m: &SetSystem, kind: PolyKind) -> UniPoly {
    poly_direct(m, kind).unwrap()
}

#[test]
fn specializations_match_direct_sums() {
    let mut rng = common::rng(21);
    for _ in 0..150 {
        let m = common::proper_system(&mut rng, 6);
        let big = multivariate_q(&m).unwrap();
        for kind in PolyKind::ALL {
            assert_eq!(specialize(&big, kind), q(&m, kind), "{kind} of {m}");
        }
    }
}

#[test]
fn flips_permute_the_multivariate_polynomial() {
    let mut rng = common::rng(22);
    for _ in 0..60 {
        let m = common::proper_system(&mut rng, 5);
        let y = random_subset(&mut rng, m.ground().full());
        let big = multivariate_q(&m).unwrap();
        for kind in Flip::ALL {
            let moved = permute_q_under_flip(&big, kind, y).unwrap();
            assert_eq!(
                moved,
                multivariate_q(&m.apply(kind, y).unwrap()).unwrap(),
                "{m} {kind:?} {y:b}"
            );
        }
    }
}

#[test]
fn flip_invariances_and_triangle_relations() {
    let mut rng = common::rng(23);
    for _ in 0..150 {
        let m = common::proper_system(&mut rng, 6);
        let full = m.ground().full();
        let y = random_subset(&mut rng, full);
        let big = q(&m, PolyKind::Q1);
        for kind in Flip::ALL {
            assert_eq!(q(&m.apply(kind, y).unwrap(), PolyKind::Q1), big);
        }
        assert_eq!(q(&m.pivot(y), PolyKind::q1), q(&m, PolyKind::q1));
        assert_eq!(q(&m.loop_complement(y), PolyKind::q2), q(&m, PolyKind::q2));
        assert_eq!(q(&m.dual_pivot(y), PolyKind::q3), q(&m, PolyKind::q3));
        assert_eq!(q(&m, PolyKind::q2), q(&m.dual_pivot(full), PolyKind::q1));
        assert_eq!(
            q(&m, PolyKind::q3),
            q(&m.loop_complement(full), PolyKind::q1)
        );
        assert_eq!(q(&m, PolyKind::q3), q(&m.pivot(full), PolyKind::q2));
    }
}

fn sum_q2_over_restrictions(m: &SetSystem) -> UniPoly {
    subsets(m.ground().full())
        .map(|x| q(&m.restrict(x).unwrap(), PolyKind::q2))
        .sum()
}

#[test]
fn normal_decomposition_on_vf_closed_systems() {
    let mut rng = common::rng(24);
    let mut seen = 0;
    while seen < 100 {
        let m = common::vf_closed(&mut rng, 6);
        if !m.is_normal() {
            continue;
        }
        seen += 1;
        assert_eq!(sum_q2_over_restrictions(&m), q(&m, PolyKind::Q1), "{m}");
    }
}

#[test]
fn normal_decomposition_needs_more_than_normality() {
    // a normal delta-matroid whose loop complements are not all delta-matroids
    let m = common::system(3, &[0, 0b001, 0b010, 0b100, 0b101, 0b110, 0b111]);
    assert!(deltaflip::deltamatroid::is_delta_matroid(&m));
    assert_eq!(q(&m, PolyKind::Q1), UniPoly::from_coeffs(vec![14, 13]));
    assert_eq!(
        sum_q2_over_restrictions(&m),
        UniPoly::from_coeffs(vec![14, 11, 2])
    );
}

#[test]
fn evaluations() {
    let mut rng = common::rng(25);
    for _ in 0..150 {
        let m = common::proper_system(&mut rng, 6);
        let n = m.n() as u32;
        for kind in [PolyKind::q1, PolyKind::q2, PolyKind::q3] {
            assert_eq!(q(&m, kind).evaluate(1), BigInt::from(2u64.pow(n)));
        }
        assert_eq!(q(&m, PolyKind::Q1).evaluate(1), BigInt::from(3u64.pow(n)));
        assert_eq!(q(&m, PolyKind::q1).evaluate(0), BigInt::from(m.len()));
    }
    let mut even = 0;
    while even < 100 {
        let m = common::delta_matroid(&mut rng, 6);
        if !is_even(&m).unwrap() {
            continue;
        }
        even += 1;
        assert_eq!(q(&m, PolyKind::q1).evaluate(-1), BigInt::from(0), "{m}");
    }
    // without evenness the value at -1 need not vanish: q1 of 2^V is constant
    for n in 1..=5 {
        let all = SetSystem::power_set(deltaflip::GroundSet::numbered(n).unwrap()).unwrap();
        assert_eq!(q(&all, PolyKind::q1), UniPoly::constant(1u64 << n));
    }
}

#[test]
fn vf_closed_evaluations_at_minus_two() {
    let mut rng = common::rng(26);
    for _ in 0..150 {
        let m = common::vf_closed(&mut rng, 6);
        let n = m.n();
        let full = m.ground().full();
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let pow = |d: u32| BigInt::from(sign) * num_traits::pow(BigInt::from(-2), d as usize);
        assert_eq!(q(&m, PolyKind::Q1).evaluate(-2), BigInt::from(0));
        assert_eq!(
            q(&m, PolyKind::q1).evaluate(-2),
            pow(m.dual_pivot(full).min_size().unwrap())
        );
        assert_eq!(q(&m, PolyKind::q2).evaluate(-2), pow(m.min_size().unwrap()));
        assert_eq!(
            q(&m, PolyKind::q3).evaluate(-2),
            pow(m.pivot(full).min_size().unwrap())
        );
    }
}

#[test]
fn golden_values() {
    let m = common::m0();
    assert_eq!(q(&m, PolyKind::Q1), UniPoly::from_coeffs(vec![16, 10, 1]));
    assert_eq!(q(&m, PolyKind::q1), UniPoly::from_coeffs(vec![5, 3]));
    assert_eq!(q(&m, PolyKind::q2), UniPoly::from_coeffs(vec![3, 4, 1]));
    assert_eq!(q(&m, PolyKind::q3), UniPoly::from_coeffs(vec![6, 2]));
    let qrs = common::system(3, &[1, 2, 4, 3, 5, 6]);
    assert_eq!(q(&qrs, PolyKind::Q1), UniPoly::linear(2).scale(9));
    // 36 = 9 * 2^2 is not a multiple of 2^3
    assert_eq!(q(&qrs, PolyKind::Q1).evaluate(2), BigInt::from(36));
}
