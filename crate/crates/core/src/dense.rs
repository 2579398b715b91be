//! Vertex flips on a dense membership table indexed by subset mask.
//!
//! Used where many systems differing by one flip are visited in sequence
//! (Gray-code sweeps), so each step costs `O(2^n)` without re-sorting.

use crate::setsystem::SetSystem;

pub(crate) fn indicator(m: &SetSystem) -> Vec<bool> {
    let mut ind = vec![false; 1usize << m.n()];
    for &x in m.family() {
        ind[x as usize] = true;
    }
    ind
}

pub(crate) fn loop_complement(ind: &mut [bool], u: usize) {
    let bit = 1usize << u;
    for x in 0..ind.len() {
        if x & bit == 0 && ind[x] {
            ind[x | bit] ^= true;
        }
    }
}

pub(crate) fn pivot(ind: &mut [bool], u: usize) {
    let bit = 1usize << u;
    for x in 0..ind.len() {
        if x & bit == 0 {
            ind.swap(x, x | bit);
        }
    }
}

pub(crate) fn dual_pivot(ind: &mut [bool], u: usize) {
    loop_complement(ind, u);
    pivot(ind, u);
    loop_complement(ind, u);
}

/// `min |x ⊕ y|` over members `y`; `None` when the family is empty.
pub(crate) fn distance(ind: &[bool], x: usize) -> Option<u32> {
    ind.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(y, _)| (x ^ y).count_ones())
        .min()
}

/// Distance from every subset to the family (multi-source BFS).
pub(crate) fn distance_table(ind: &[bool], n: usize) -> Option<Vec<u8>> {
    let mut dist = vec![u8::MAX; ind.len()];
    let mut frontier: Vec<usize> = Vec::new();
    for (x, &b) in ind.iter().enumerate() {
        if b {
            dist[x] = 0;
            frontier.push(x);
        }
    }
    if frontier.is_empty() {
        return None;
    }
    let mut level = 0u8;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &x in &frontier {
            for i in 0..n {
                let z = x ^ (1 << i);
                if dist[z] == u8::MAX {
                    dist[z] = level;
                    next.push(z);
                }
            }
        }
        frontier = next;
    }
    Some(dist)
}

/// The element that changes between consecutive Gray codes `i - 1` and `i` (`i ≥ 1`).
#[inline]
pub(crate) fn gray_step(i: usize) -> usize {
    i.trailing_zeros() as usize
}

#[inline]
pub(crate) fn gray(i: usize) -> usize {
    i ^ (i >> 1)
}
