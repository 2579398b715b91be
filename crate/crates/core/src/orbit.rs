//! Orbits of set systems under vertex flips.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::setsystem::SetSystem;

/// Default orbit cap; the theoretical maximum is `6^n`.
pub const DEFAULT_ORBIT_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitGenerators {
    /// `+V` and `*V`, applied alternately starting with `+V`.
    FullVAlternation,
    /// `*u` and `+u` for every element `u`.
    SingleElementFlips,
}

/// The orbit of `m`, deduplicated, starting with `m` itself.
///
/// For [`OrbitGenerators::FullVAlternation`] the members are listed in walk order
/// `M, M+V, M+V*V, ...`; the group generated has order six, so the walk closes
/// after at most six steps.
pub fn vf_orbit(m: &SetSystem, generators: OrbitGenerators, cap: usize) -> Result<Vec<SetSystem>> {
    if !m.is_proper() {
        return Err(Error::Improper("vf_orbit"));
    }
    match generators {
        OrbitGenerators::FullVAlternation => {
            let full = m.ground().full();
            let mut out = vec![m.clone()];
            let mut cur = m.clone();
            for step in 0..5 {
                cur = if step % 2 == 0 {
                    cur.loop_complement(full)
                } else {
                    cur.pivot(full)
                };
                if !out.contains(&cur) {
                    if out.len() == cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    out.push(cur.clone());
                }
            }
            Ok(out)
        }
        OrbitGenerators::SingleElementFlips => {
            let mut seen: HashSet<SetSystem> = HashSet::new();
            let mut out = Vec::new();
            let mut queue = VecDeque::new();
            seen.insert(m.clone());
            queue.push_back(m.clone());
            while let Some(cur) = queue.pop_front() {
                for i in 0..cur.n() {
                    let u = 1u64 << i;
                    for next in [cur.pivot(u), cur.loop_complement(u)] {
                        if !seen.contains(&next) {
                            if seen.len() == cap {
                                return Err(Error::CapExceeded { cap });
                            }
                            seen.insert(next.clone());
                            queue.push_back(next);
                        }
                    }
                }
                out.push(cur);
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;

    fn m0() -> SetSystem {
        SetSystem::from_labels(
            ["p", "q", "r"],
            [vec![], vec!["p"], vec!["p", "q"], vec!["q", "r"], vec!["r"]],
        )
        .unwrap()
    }

    #[test]
    fn full_v_orbit_of_m0_is_a_six_cycle() {
        let m = m0();
        let orbit = vf_orbit(&m, OrbitGenerators::FullVAlternation, 100).unwrap();
        assert_eq!(orbit.len(), 6);
        let mut cur = m.clone();
        for step in 0..6 {
            cur = if step % 2 == 0 {
                cur.loop_complement(0b111)
            } else {
                cur.pivot(0b111)
            };
        }
        assert_eq!(cur, m);
    }

    #[test]
    fn trivial_orbit() {
        let e = SetSystem::new(GroundSet::empty(), [0]).unwrap();
        assert_eq!(
            vf_orbit(&e, OrbitGenerators::FullVAlternation, 10)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            vf_orbit(&e, OrbitGenerators::SingleElementFlips, 10)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn cap_is_enforced() {
        let err = vf_orbit(&m0(), OrbitGenerators::SingleElementFlips, 5).unwrap_err();
        assert_eq!(err, Error::CapExceeded { cap: 5 });
    }

    #[test]
    fn improper_rejected() {
        let none = SetSystem::new(GroundSet::numbered(1).unwrap(), []).unwrap();
        assert!(vf_orbit(&none, OrbitGenerators::SingleElementFlips, 10).is_err());
    }
}
