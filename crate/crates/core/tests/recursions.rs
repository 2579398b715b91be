mod common;

use deltaflip::deltamatroid::{is_delta_matroid, strongly_divisible_by_definition};
use deltaflip::interlace::poly_direct;
use deltaflip::recursion::{
    q1_multiplicative_step, q1_normal_step, q1_recursive, q2_q3_recursive, q3_normal_step, Check,
    ElementChoice, Q1_recursive, Q1_three_term_check, RecursionTrace, StepCase,
};
use deltaflip::sample::random_member;
use deltaflip::{Error, PolyKind, RecursionOptions, SetSystem, UniPoly};
use rand::Rng;

fn both_orders() -> [RecursionOptions; 2] {
    let low = RecursionOptions::default();
    let high = RecursionOptions {
        choice: ElementChoice::Largest,
        ..low
    };
    [low, high]
}

fn leaf_sizes(t: &RecursionTrace) -> Vec<usize> {
    t.leaves().iter().map(|l| l.system.len()).collect()
}

#[test]
fn q1_recursion_matches_definition() {
    let mut rng = common::rng(61);
    for _ in 0..200 {
        let m = common::delta_matroid(&mut rng, 6);
        let direct = poly_direct(&m, PolyKind::q1).unwrap();
        for opts in both_orders() {
            let (value, trace) = q1_recursive(&m, &opts).unwrap();
            assert_eq!(value, direct, "{m}");
            assert!(trace.is_consistent());
            // leaves are exactly the one-member minors
            assert!(leaf_sizes(&trace).iter().all(|&s| s == 1), "{m}");
        }
    }
}

#[test]
fn q2_q3_recursions_match_definition() {
    let mut rng = common::rng(62);
    let (mut q2_seen, mut q3_seen) = (0, 0);
    while q2_seen < 100 || q3_seen < 100 {
        let m = common::proper_system(&mut rng, 5);
        let full = m.ground().full();
        for (kind, transformed, seen) in [
            (PolyKind::q2, m.dual_pivot(full), &mut q2_seen),
            (PolyKind::q3, m.loop_complement(full), &mut q3_seen),
        ] {
            let result = q2_q3_recursive(&m, kind, &RecursionOptions::default());
            if !is_delta_matroid(&transformed) {
                assert!(matches!(result, Err(Error::Precondition(_))));
                continue;
            }
            *seen += 1;
            let direct = poly_direct(&m, kind).unwrap();
            assert_eq!(result.unwrap().0, direct, "{kind} of {m}");
            let high = RecursionOptions {
                choice: ElementChoice::Largest,
                ..Default::default()
            };
            assert_eq!(q2_q3_recursive(&m, kind, &high).unwrap().0, direct);
        }
    }
}

#[test]
fn big_q1_recursion_on_vf_closed_systems() {
    let mut rng = common::rng(63);
    for _ in 0..100 {
        let m = common::vf_closed(&mut rng, 5);
        let direct = poly_direct(&m, PolyKind::Q1).unwrap();
        for opts in both_orders() {
            let (value, trace) = Q1_recursive(&m, &opts).unwrap();
            assert_eq!(value, direct, "{m}");
            assert!(trace.is_consistent());
        }
        if let Some(check) = Q1_three_term_check(&m, &RecursionOptions::default()).unwrap() {
            assert!(check.agrees());
        }
    }
}

#[test]
fn big_q1_recursion_refuses_systems_outside_its_scope() {
    let m = common::system(3, &[0, 0b001, 0b010, 0b100, 0b101, 0b110, 0b111]);
    assert!(matches!(
        Q1_recursive(&m, &RecursionOptions::default()),
        Err(Error::Precondition(_))
    ));
    let check = Q1_three_term_check(&m, &RecursionOptions::default())
        .unwrap()
        .unwrap();
    assert!(!check.agrees());
    // with checks off the recursion runs and gives the wrong answer
    let never = RecursionOptions {
        check: Check::Never,
        ..Default::default()
    };
    let (value, _) = Q1_recursive(&m, &never).unwrap();
    assert_ne!(value, poly_direct(&m, PolyKind::Q1).unwrap());
}

#[test]
fn leaves_are_not_strongly_divisible() {
    let mut rng = common::rng(64);
    for _ in 0..60 {
        let m = common::vf_closed(&mut rng, 5);
        let (_, trace) = Q1_recursive(&m, &RecursionOptions::default()).unwrap();
        for leaf in trace.leaves() {
            let s = &leaf.system;
            assert!((0..s.n()).all(|u| !strongly_divisible_by_definition(s, u)));
            assert_eq!(leaf.value, UniPoly::linear(2).pow(s.n() as u32));
        }
    }
}

#[test]
fn normal_component_steps() {
    let mut rng = common::rng(65);
    let opts = RecursionOptions::default();
    let mut done = 0;
    while done < 60 {
        let m = common::vf_closed(&mut rng, 5);
        if !m.is_normal() || m.n() == 0 {
            continue;
        }
        done += 1;
        let x = random_member(&mut rng, &m).unwrap();
        if x != 0 {
            let u = x.trailing_zeros() as usize;
            let (v, t) = q1_normal_step(&m, x, u, &opts).unwrap();
            assert_eq!(v, poly_direct(&m, PolyKind::q1).unwrap());
            assert_eq!(t.children.len(), 2);
        }
        let plus = m.loop_complement(m.ground().full());
        let y = random_member(&mut rng, &plus).unwrap();
        if y != 0 {
            let u = 63 - y.leading_zeros() as usize;
            let (v, _) = q3_normal_step(&m, y, u, &opts).unwrap();
            assert_eq!(v, poly_direct(&m, PolyKind::q3).unwrap());
        }
    }
    let m0 = common::m0();
    assert!(matches!(
        q1_normal_step(&m0, 0b111, 0, &opts),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn multiplicative_cases() {
    let mut rng = common::rng(66);
    for _ in 0..100 {
        let m = common::delta_matroid(&mut rng, 5);
        if m.n() == 0 {
            continue;
        }
        let u = rng.gen_range(0..m.n());
        let (case, value) = q1_multiplicative_step(&m, u, &RecursionOptions::default()).unwrap();
        assert_eq!(value, poly_direct(&m, PolyKind::q1).unwrap());
        let bit = 1u64 << u;
        let expected = match (
            m.family().iter().any(|&x| x & bit == 0),
            m.family().iter().any(|&x| x & bit != 0),
        ) {
            (true, false) => StepCase::Loop,
            (false, true) => StepCase::Coloop,
            _ => StepCase::Additive,
        };
        assert_eq!(case, expected);
    }
}

#[test]
fn improper_input_is_rejected() {
    let empty = SetSystem::new(common::m0().ground().clone(), []).unwrap();
    let opts = RecursionOptions::default();
    assert!(matches!(
        q1_recursive(&empty, &opts),
        Err(Error::Improper(_))
    ));
    assert!(matches!(
        q2_q3_recursive(&empty, PolyKind::q2, &opts),
        Err(Error::Improper(_))
    ));
    assert!(matches!(
        q2_q3_recursive(&common::m0(), PolyKind::Q1, &opts),
        Err(Error::Precondition(_))
    ));
}
