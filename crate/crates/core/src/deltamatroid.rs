//! Structural predicates: the symmetric exchange axiom, evenness, closure under
//! vertex flips, divisibility, and the distance triple.

use std::collections::{HashSet, VecDeque};

use crate::bits::bits;
use crate::error::{Error, Result};
use crate::setsystem::{SetSystem, MAX_DENSE};

/// Membership oracle: a dense bit table for small ground sets, binary search otherwise.
pub(crate) enum Membership<'a> {
    Dense(Vec<u64>),
    Sparse(&'a [u64]),
}

impl<'a> Membership<'a> {
    pub(crate) fn new(m: &'a SetSystem) -> Self {
        if m.n() <= 20 {
            let mut table = vec![0u64; (1usize << m.n()).div_ceil(64)];
            for &x in m.family() {
                table[(x >> 6) as usize] |= 1 << (x & 63);
            }
            Membership::Dense(table)
        } else {
            Membership::Sparse(m.family())
        }
    }

    #[inline]
    pub(crate) fn contains(&self, x: u64) -> bool {
        match self {
            Membership::Dense(t) => t[(x >> 6) as usize] >> (x & 63) & 1 == 1,
            Membership::Sparse(f) => f.binary_search(&x).is_ok(),
        }
    }
}

/// Brute-force check of the symmetric exchange axiom over all member pairs.
pub fn is_delta_matroid(m: &SetSystem) -> bool {
    if !m.is_proper() {
        return false;
    }
    let member = Membership::new(m);
    for &x in m.family() {
        for &y in m.family() {
            let diff = x ^ y;
            for u in bits(diff) {
                let xu = x ^ (1 << u);
                if member.contains(xu) {
                    continue;
                }
                let ok = bits(diff & !(1 << u)).any(|v| member.contains(xu ^ (1 << v)));
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// All members have cardinalities of the same parity.
pub fn is_even(m: &SetSystem) -> Result<bool> {
    let first = m.family().first().ok_or(Error::Improper("is_even"))?;
    let parity = first.count_ones() & 1;
    Ok(m.family().iter().all(|x| x.count_ones() & 1 == parity))
}

/// Whether every system reachable by vertex flips is a delta-matroid.
///
/// Walks the orbit under `{*u, +u}` breadth first and stops at the first system
/// violating the exchange axiom.
pub fn is_vf_closed(m: &SetSystem, cap: usize) -> Result<bool> {
    if !m.is_proper() {
        return Err(Error::Improper("is_vf_closed"));
    }
    let mut seen: HashSet<SetSystem> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(m.clone());
    queue.push_back(m.clone());
    while let Some(cur) = queue.pop_front() {
        if !is_delta_matroid(&cur) {
            return Ok(false);
        }
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
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisibilityStatus {
    pub divisible: bool,
    pub strongly_divisible: bool,
}

/// Divisibility of `m` by the element at index `u`, from the properness of the
/// minors `M\u`, `M*u\u` and `M~*u\u`.
pub fn divisibility(m: &SetSystem, u: usize) -> Result<DivisibilityStatus> {
    if !m.is_proper() {
        return Err(Error::Improper("divisibility"));
    }
    if u >= m.n() {
        return Err(Error::NotASubset {
            subset: 1u64.checked_shl(u as u32).unwrap_or(0),
            n: m.n(),
        });
    }
    let bit = 1u64 << u;
    let divisible = m.delete_element(u).is_proper() && m.pivot(bit).delete_element(u).is_proper();
    let strongly_divisible = divisible && m.dual_pivot(bit).delete_element(u).is_proper();
    debug_assert_eq!(divisible, divisible_by_definition(m, u));
    debug_assert_eq!(strongly_divisible, strongly_divisible_by_definition(m, u));
    Ok(DivisibilityStatus {
        divisible,
        strongly_divisible,
    })
}

/// There are members `X1, X2` with `u ∈ X1 ⊕ X2`.
pub fn divisible_by_definition(m: &SetSystem, u: usize) -> bool {
    let bit = 1u64 << u;
    let with = m.family().iter().any(|x| x & bit != 0);
    let without = m.family().iter().any(|x| x & bit == 0);
    with && without
}

/// Divisible by `u` and some member `X` has `X ⊕ {u}` outside the family.
pub fn strongly_divisible_by_definition(m: &SetSystem, u: usize) -> bool {
    let bit = 1u64 << u;
    divisible_by_definition(m, u) && m.family().iter().any(|&x| !m.contains(x ^ bit))
}

/// `(d_M, d_{M*v}, d_{M~*v})`.
pub fn distance_triple(m: &SetSystem, v: usize) -> Result<(u32, u32, u32)> {
    if !m.is_proper() {
        return Err(Error::Improper("distance_triple"));
    }
    let bit = 1u64 << v;
    m.ground().check_subset(bit)?;
    Ok((
        m.min_size()?,
        m.pivot(bit).min_size()?,
        m.dual_pivot(bit).min_size()?,
    ))
}

/// Exactly two of the three values are equal to some `m` and the third is `m + 1`.
pub fn is_two_plus_one(t: (u32, u32, u32)) -> bool {
    let mut v = [t.0, t.1, t.2];
    v.sort_unstable();
    v[0] == v[1] && v[2] == v[1] + 1
}

/// Guard used by callers that need dense enumeration.
pub(crate) fn check_dense(op: &'static str, n: usize, max: usize) -> Result<()> {
    let max = max.min(MAX_DENSE);
    if n > max {
        Err(Error::SizeLimit { op, n, max })
    } else {
        Ok(())
    }
}
