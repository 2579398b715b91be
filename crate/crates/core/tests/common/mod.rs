#![allow(dead_code)]

use deltaflip::sample::{random_delta_matroid, random_graph, random_subset};
use deltaflip::{GroundSet, SetSystem};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn m0() -> SetSystem {
    SetSystem::from_labels(
        ["p", "q", "r"],
        [vec![], vec!["p"], vec!["p", "q"], vec!["q", "r"], vec!["r"]],
    )
    .unwrap()
}

pub fn system(n: usize, family: &[u64]) -> SetSystem {
    SetSystem::new(GroundSet::numbered(n).unwrap(), family.iter().copied()).unwrap()
}

/// A random proper system on `0..=max_n` elements.
pub fn proper_system(rng: &mut StdRng, max_n: usize) -> SetSystem {
    let n = rng.gen_range(0..=max_n);
    let members = rng.gen_range(1..=(1usize << n).min(12));
    deltaflip::sample::random_set_system(rng, n, members)
}

pub fn delta_matroid(rng: &mut StdRng, max_n: usize) -> SetSystem {
    let n = rng.gen_range(1..=max_n);
    random_delta_matroid(rng, n, 1_000_000).expect("rejection sampling terminates")
}

/// `M_G` of a random graph, moved around its orbit by random flips; always a
/// vf-closed delta-matroid.
pub fn vf_closed(rng: &mut StdRng, max_n: usize) -> SetSystem {
    let n = rng.gen_range(1..=max_n);
    let g = random_graph(rng, n, 0.5, 0.4);
    let m = g.to_system().unwrap();
    let full = m.ground().full();
    let (a, b, c) = (
        random_subset(rng, full),
        random_subset(rng, full),
        random_subset(rng, full),
    );
    m.pivot(a).loop_complement(b).dual_pivot(c)
}
