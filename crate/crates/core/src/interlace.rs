//! Interlace polynomials of set systems.
//!
//! The multivariate polynomial records, for every ordered partition `(A, B, C)`
//! of the ground set, the exponent `d_{M*B~*C}`. Its weighted specializations are
//!
//! | kind | `a_u` | `b_u` | `c_u` | explicit sum                         |
//! |------|-------|-------|-------|--------------------------------------|
//! | `Q1` | 1     | 1     | 1     | `Σ_X Σ_{Z⊆X} y^{d_{M+Z}(X)}`         |
//! | `q1` | 1     | 1     | 0     | `Σ_X y^{d_M(X)}`                     |
//! | `q2` | 0     | 1     | 1     | `Σ_X y^{d_{M+X}(V)}`                 |
//! | `q3` | 1     | 0     | 1     | `Σ_X y^{d_{M+X}(X)}`                 |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::bits::subsets;
use crate::deltamatroid::check_dense;
use crate::dense;
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::poly::UniPoly;
use crate::setsystem::{Flip, SetSystem, MAX_DENSE};

/// Default limit on the ground set for the `3^n`-term multivariate polynomial.
pub const MULTIVARIATE_LIMIT: usize = 14;
/// Default limit on the ground set for the single-sum polynomials.
pub const DIRECT_LIMIT: usize = 20;
/// Default limit for the double sum defining `Q1`.
pub const DOUBLE_SUM_LIMIT: usize = 14;

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyKind {
    Q1,
    q1,
    q2,
    q3,
}

impl PolyKind {
    pub const ALL: [PolyKind; 4] = [PolyKind::Q1, PolyKind::q1, PolyKind::q2, PolyKind::q3];

    pub fn name(self) -> &'static str {
        match self {
            PolyKind::Q1 => "Q1",
            PolyKind::q1 => "q1",
            PolyKind::q2 => "q2",
            PolyKind::q3 => "q3",
        }
    }

    /// Substitution `(a_u, b_u, c_u)`.
    pub fn weights(self) -> (bool, bool, bool) {
        match self {
            PolyKind::Q1 => (true, true, true),
            PolyKind::q1 => (true, true, false),
            PolyKind::q2 => (false, true, true),
            PolyKind::q3 => (true, false, true),
        }
    }
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PolyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "unknown polynomial `{s}` (expected Q1, q1, q2 or q3)"
                ))
            })
    }
}

/// Size guards for the exponential enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub multivariate: usize,
    pub direct: usize,
    pub double_sum: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            multivariate: MULTIVARIATE_LIMIT,
            direct: DIRECT_LIMIT,
            double_sum: DOUBLE_SUM_LIMIT,
        }
    }
}

impl Limits {
    /// Only the memory bound of the dense tables applies.
    pub fn forced() -> Self {
        Limits {
            multivariate: MAX_DENSE,
            direct: MAX_DENSE,
            double_sum: MAX_DENSE,
        }
    }
}

/// One monomial `a_A b_B c_C y^d` of the multivariate polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QTerm {
    pub b: u64,
    pub c: u64,
    pub d: u32,
}

/// The multivariate interlace polynomial: one exponent per ordered partition.
///
/// Terms are keyed by the `(B, C)` masks; `A` is the complement of `B ∪ C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiQPoly {
    ground: GroundSet,
    terms: Vec<QTerm>,
}

impl MultiQPoly {
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Terms sorted by `(B, C)`.
    pub fn terms(&self) -> &[QTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn a_of(&self, t: &QTerm) -> u64 {
        self.ground.full() & !(t.b | t.c)
    }

    /// Exponent recorded for the partition with the given `B` and `C`.
    pub fn exponent(&self, b: u64, c: u64) -> Option<u32> {
        self.terms
            .binary_search_by(|t| (t.b, t.c).cmp(&(b, c)))
            .ok()
            .map(|i| self.terms[i].d)
    }

    fn from_terms(ground: GroundSet, mut terms: Vec<QTerm>) -> Self {
        terms.sort_unstable();
        MultiQPoly { ground, terms }
    }
}

/// `Q(M)`, with all `3^n` partitions materialized.
pub fn multivariate_q(m: &SetSystem) -> Result<MultiQPoly> {
    multivariate_q_with(m, Limits::default())
}

pub fn multivariate_q_with(m: &SetSystem, limits: Limits) -> Result<MultiQPoly> {
    if !m.is_proper() {
        return Err(Error::Improper("multivariate_q"));
    }
    let n = m.n();
    check_dense("multivariate Q", n, limits.multivariate)?;
    let full = m.ground().full();
    let mut terms = Vec::with_capacity(3usize.pow(n as u32));
    // Walk C in Gray order so M~*C changes by a single dual pivot per step.
    let mut ind = dense::indicator(m);
    for i in 0..(1usize << n) {
        if i > 0 {
            dense::dual_pivot(&mut ind, dense::gray_step(i));
        }
        let c = dense::gray(i) as u64;
        let table = dense::distance_table(&ind, n).expect("vertex flips preserve properness");
        for b in subsets(full & !c) {
            terms.push(QTerm {
                b,
                c,
                d: table[b as usize] as u32,
            });
        }
    }
    Ok(MultiQPoly::from_terms(m.ground().clone(), terms))
}

/// Substitutes `0`/`1` for the partition variables and collects powers of `y`.
pub fn specialize(q: &MultiQPoly, kind: PolyKind) -> UniPoly {
    let (keep_a, keep_b, keep_c) = kind.weights();
    let mut counts = Vec::<u64>::new();
    for t in &q.terms {
        let a = q.a_of(t);
        if (!keep_a && a != 0) || (!keep_b && t.b != 0) || (!keep_c && t.c != 0) {
            continue;
        }
        let d = t.d as usize;
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    UniPoly::from_degree_counts(&counts)
}

/// The polynomial from its explicit summation formula, without building `Q(M)`.
pub fn poly_direct(m: &SetSystem, kind: PolyKind) -> Result<UniPoly> {
    poly_direct_with(m, kind, Limits::default())
}

pub fn poly_direct_with(m: &SetSystem, kind: PolyKind, limits: Limits) -> Result<UniPoly> {
    if !m.is_proper() {
        return Err(Error::Improper("poly_direct"));
    }
    let n = m.n();
    let full = m.ground().full() as usize;
    let mut counts = vec![0u64; n + 1];
    match kind {
        PolyKind::q1 => {
            check_dense("q1", n, limits.direct)?;
            for d in m.distance_table()? {
                counts[d as usize] += 1;
            }
        }
        PolyKind::q2 | PolyKind::q3 => {
            check_dense(kind.name(), n, limits.direct)?;
            let mut ind = dense::indicator(m);
            for i in 0..(1usize << n) {
                if i > 0 {
                    dense::loop_complement(&mut ind, dense::gray_step(i));
                }
                let x = dense::gray(i);
                let target = if kind == PolyKind::q2 { full } else { x };
                counts[dense::distance(&ind, target).expect("proper") as usize] += 1;
            }
        }
        PolyKind::Q1 => {
            check_dense("Q1", n, limits.double_sum)?;
            let mut ind = dense::indicator(m);
            for i in 0..(1usize << n) {
                if i > 0 {
                    dense::loop_complement(&mut ind, dense::gray_step(i));
                }
                let z = dense::gray(i) as u64;
                let table = dense::distance_table(&ind, n).expect("proper");
                for rest in subsets(full as u64 & !z) {
                    counts[table[(z | rest) as usize] as usize] += 1;
                }
            }
        }
    }
    Ok(UniPoly::from_degree_counts(&counts))
}

/// `Q(M)` relabelled into `Q(M φ Y)`: a flip only permutes the partition variables.
///
/// * `+Y`: with `Y' = Y − A`, elements of `Y'` swap between `B` and `C`;
/// * `~*Y`: with `Y' = Y − B`, elements of `Y'` swap between `A` and `C`;
/// * `*Y`: with `Y' = Y − C`, elements of `Y'` swap between `A` and `B`.
pub fn permute_q_under_flip(q: &MultiQPoly, kind: Flip, y: u64) -> Result<MultiQPoly> {
    q.ground.check_subset(y)?;
    let terms = q
        .terms
        .iter()
        .map(|t| {
            let a = q.a_of(t);
            let (b, c) = match kind {
                Flip::LoopComplement => {
                    let s = y & !a;
                    (t.b ^ s, t.c ^ s)
                }
                Flip::DualPivot => {
                    let s = y & !t.b;
                    (t.b, t.c ^ s)
                }
                Flip::Pivot => {
                    let s = y & !t.c;
                    (t.b ^ s, t.c)
                }
            };
            QTerm { b, c, d: t.d }
        })
        .collect();
    Ok(MultiQPoly::from_terms(q.ground.clone(), terms))
}

/// Exact value of `p(y)`.
pub fn evaluate(p: &UniPoly, y: i64) -> BigInt {
    p.evaluate(y)
}

/// Lists the partition `(A, B, C)` of every term, for display and serialization.
pub fn partitions(q: &MultiQPoly) -> impl Iterator<Item = (u64, u64, u64, u32)> + '_ {
    q.terms.iter().map(move |t| (q.a_of(t), t.b, t.c, t.d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m0() -> SetSystem {
        SetSystem::from_labels(
            ["p", "q", "r"],
            [vec![], vec!["p"], vec!["p", "q"], vec!["q", "r"], vec!["r"]],
        )
        .unwrap()
    }

    fn partition_masks_are_disjoint(q: &MultiQPoly) -> bool {
        q.terms()
            .iter()
            .all(|t| t.b & t.c == 0 && (t.b | t.c) & !q.ground().full() == 0)
    }

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn m0_specializations() {
        let q = multivariate_q(&m0()).unwrap();
        assert_eq!(q.len(), 27);
        assert!(partition_masks_are_disjoint(&q));
        assert_eq!(specialize(&q, PolyKind::Q1), p(&[16, 10, 1]));
        assert_eq!(specialize(&q, PolyKind::q1), p(&[5, 3]));
        assert_eq!(specialize(&q, PolyKind::q2), p(&[3, 4, 1]));
        assert_eq!(specialize(&q, PolyKind::q3), p(&[6, 2]));
        // (∅, V, ∅): d_{M0*V} = d_{M0}(V) = 1
        assert_eq!(q.exponent(0b111, 0), Some(1));
    }

    #[test]
    fn m0_direct() {
        let m = m0();
        assert_eq!(poly_direct(&m, PolyKind::q1).unwrap(), p(&[5, 3]));
        assert_eq!(poly_direct(&m, PolyKind::Q1).unwrap(), p(&[16, 10, 1]));
        assert_eq!(poly_direct(&m, PolyKind::q2).unwrap(), p(&[3, 4, 1]));
        assert_eq!(poly_direct(&m, PolyKind::q3).unwrap(), p(&[6, 2]));
    }

    #[test]
    fn trivial_system() {
        let e = SetSystem::new(GroundSet::empty(), [0]).unwrap();
        let q = multivariate_q(&e).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q.terms()[0], QTerm { b: 0, c: 0, d: 0 });
        for k in PolyKind::ALL {
            assert_eq!(specialize(&q, k), UniPoly::one());
            assert_eq!(poly_direct(&e, k).unwrap(), UniPoly::one());
        }
    }

    #[test]
    fn single_member_gives_binomial_power() {
        let g = GroundSet::numbered(4).unwrap();
        for z in 0..16 {
            let m = SetSystem::new(g.clone(), [z]).unwrap();
            assert_eq!(
                poly_direct(&m, PolyKind::q1).unwrap(),
                UniPoly::linear(1).pow(4)
            );
        }
    }

    #[test]
    fn permutation_matches_recomputation() {
        let m = m0();
        let q = multivariate_q(&m).unwrap();
        assert_eq!(
            permute_q_under_flip(&q, Flip::LoopComplement, 0b111).unwrap(),
            multivariate_q(&m.loop_complement(0b111)).unwrap()
        );
        assert_eq!(
            permute_q_under_flip(&q, Flip::Pivot, 0b001).unwrap(),
            multivariate_q(&m.pivot(0b001)).unwrap()
        );
        for k in Flip::ALL {
            assert_eq!(permute_q_under_flip(&q, k, 0).unwrap(), q);
        }
    }

    #[test]
    fn evaluations_of_m0() {
        let m = m0();
        assert_eq!(
            evaluate(&poly_direct(&m, PolyKind::q1).unwrap(), 1),
            BigInt::from(8)
        );
        assert_eq!(
            evaluate(&poly_direct(&m, PolyKind::Q1).unwrap(), 1),
            BigInt::from(27)
        );
        assert_eq!(
            evaluate(&poly_direct(&m, PolyKind::q1).unwrap(), 0),
            BigInt::from(5)
        );
        assert_eq!(
            evaluate(&poly_direct(&m, PolyKind::Q1).unwrap(), -2),
            BigInt::from(0)
        );
    }

    #[test]
    fn guards() {
        let big = SetSystem::new(GroundSet::numbered(15).unwrap(), [0]).unwrap();
        assert!(matches!(multivariate_q(&big), Err(Error::SizeLimit { .. })));
        let none = SetSystem::new(GroundSet::numbered(2).unwrap(), []).unwrap();
        assert!(matches!(
            poly_direct(&none, PolyKind::q1),
            Err(Error::Improper(_))
        ));
        assert_eq!("q2".parse::<PolyKind>().unwrap(), PolyKind::q2);
        assert!("Q2".parse::<PolyKind>().is_err());
    }
}
