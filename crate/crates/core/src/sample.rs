//! Random instances for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bits::low_mask;
use crate::deltamatroid::is_delta_matroid;
use crate::gf2::{BitMatrix, Gf2Matrix};
use crate::graph::Graph;
use crate::ground::GroundSet;
use crate::matroid::BinaryMatroid;
use crate::setsystem::SetSystem;

/// A family of `members` subsets of an `n`-element ground set drawn uniformly
/// (duplicates merge, so the result may be smaller).
pub fn random_set_system<R: Rng + ?Sized>(rng: &mut R, n: usize, members: usize) -> SetSystem {
    let ground = GroundSet::numbered(n).expect("small ground set");
    let full = low_mask(n);
    let family: Vec<u64> = (0..members).map(|_| rng.gen::<u64>() & full).collect();
    SetSystem::new(ground, family).expect("subsets of the ground set")
}

/// Rejection sampling: random families until one satisfies the exchange axiom.
///
/// The number of members is drawn afresh for every attempt, mostly small so
/// that acceptance stays frequent while larger families still occur.
pub fn random_delta_matroid<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_tries: usize,
) -> Option<SetSystem> {
    let cap = 1usize << n;
    for _ in 0..max_tries {
        let members = match rng.gen_range(0..4) {
            0 => rng.gen_range(1..=2usize),
            1 => rng.gen_range(1..=4usize),
            2 => rng.gen_range(1..=8usize),
            _ => rng.gen_range(1..=cap.max(1)),
        }
        .min(cap);
        let m = random_set_system(rng, n, members);
        if is_delta_matroid(&m) {
            return Some(m);
        }
    }
    None
}

/// Each edge present with probability `p_edge`, each loop with `p_loop`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p_edge: f64, p_loop: f64) -> Graph {
    let mut a = Gf2Matrix::zero(GroundSet::numbered(n).expect("small ground set"));
    for i in 0..n {
        if rng.gen_bool(p_loop) {
            a.set(i, i, true);
        }
        for j in 0..i {
            if rng.gen_bool(p_edge) {
                a.set(i, j, true);
                a.set(j, i, true);
            }
        }
    }
    Graph::new(a).expect("symmetric by construction")
}

/// Uniform symmetric `n × n` matrix.
pub fn random_symmetric<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Gf2Matrix {
    random_graph(rng, n, 0.5, 0.5).matrix().clone()
}

pub fn random_bit_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> BitMatrix {
    let mask = low_mask(cols);
    BitMatrix::new((0..rows).map(|_| rng.gen::<u64>() & mask).collect(), cols)
        .expect("entries within range")
}

/// Column matroid of a random matrix with `cols` columns and `1..=cols` rows.
pub fn random_binary_matroid<R: Rng + ?Sized>(rng: &mut R, cols: usize) -> BinaryMatroid {
    let rows = rng.gen_range(1..=cols.max(1));
    let rep = random_bit_matrix(rng, rows, cols);
    BinaryMatroid::from_matrix(GroundSet::numbered(cols).expect("small ground set"), rep)
        .expect("column matroid")
}

/// Cycle matroid of a random multigraph with `edges` edges on `vertices` vertices.
pub fn random_graphic_matroid<R: Rng + ?Sized>(
    rng: &mut R,
    vertices: usize,
    edges: usize,
) -> BinaryMatroid {
    let list: Vec<(usize, usize)> = (0..edges)
        .map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices)))
        .collect();
    BinaryMatroid::graphic(vertices, &list).expect("valid edge list")
}

/// A random subset of `mask`, each element kept with probability one half.
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, mask: u64) -> u64 {
    rng.gen::<u64>() & mask
}

/// A uniformly chosen member of a proper system.
pub fn random_member<R: Rng + ?Sized>(rng: &mut R, m: &SetSystem) -> Option<u64> {
    m.family().choose(rng).copied()
}
