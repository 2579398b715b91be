//! Set systems over a bitmask-encoded ground set and the vertex-flip operations.
//!
//! A set system is a ground set `V` together with a family of subsets of `V`.
//! Three involutions act on a single element `u`:
//!
//! * pivot `*u`: every member `Y` becomes `Y ⊕ {u}`;
//! * loop complementation `+u`: the family is xor-ed with `{Z ∪ {u} | Z ∈ D, u ∉ Z}`;
//! * dual pivot `~*u`: the composition `+u *u +u` (equal to `*u +u *u`).
//!
//! Flips on distinct elements commute, so each operation extends to arbitrary
//! element sets by applying it element by element.

use std::collections::HashSet;
use std::fmt;

use crate::bits::{bits, subsets};
use crate::error::{Error, Result};
use crate::ground::GroundSet;

/// Largest ground set for which dense tables over all `2^n` subsets are built.
pub const MAX_DENSE: usize = 28;

/// The three vertex-flip involutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flip {
    Pivot,
    LoopComplement,
    DualPivot,
}

impl Flip {
    pub const ALL: [Flip; 3] = [Flip::Pivot, Flip::LoopComplement, Flip::DualPivot];

    /// Operator symbol used in operation words: `*`, `+` or `~*`.
    pub fn symbol(self) -> &'static str {
        match self {
            Flip::Pivot => "*",
            Flip::LoopComplement => "+",
            Flip::DualPivot => "~*",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub proper: bool,
    pub normal: bool,
    pub equicardinal: bool,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground: GroundSet,
    family: Vec<u64>,
}

impl SetSystem {
    /// Builds a set system; duplicate members are merged.
    pub fn new<I: IntoIterator<Item = u64>>(ground: GroundSet, family: I) -> Result<Self> {
        let mut family: Vec<u64> = family.into_iter().collect();
        for &x in &family {
            ground.check_subset(x)?;
        }
        family.sort_unstable();
        family.dedup();
        Ok(SetSystem { ground, family })
    }

    /// Builds a set system from element labels.
    pub fn from_labels<L, S, F, T>(labels: L, sets: F) -> Result<Self>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
        F: IntoIterator<Item = T>,
        T: IntoIterator,
        T::Item: AsRef<str>,
    {
        let ground = GroundSet::new(labels)?;
        let family = sets
            .into_iter()
            .map(|s| ground.mask_of(s))
            .collect::<Result<Vec<_>>>()?;
        SetSystem::new(ground, family)
    }

    /// The family `2^V`.
    pub fn power_set(ground: GroundSet) -> Result<Self> {
        if ground.len() > MAX_DENSE {
            return Err(Error::SizeLimit {
                op: "power set",
                n: ground.len(),
                max: MAX_DENSE,
            });
        }
        let family = subsets(ground.full()).collect();
        Ok(SetSystem { ground, family })
    }

    fn with_family(&self, mut family: Vec<u64>) -> SetSystem {
        family.sort_unstable();
        family.dedup();
        SetSystem {
            ground: self.ground.clone(),
            family,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Members in canonical (increasing bitmask) order.
    pub fn family(&self) -> &[u64] {
        &self.family
    }

    /// Size of the ground set.
    #[inline]
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    /// Number of members.
    #[inline]
    pub fn len(&self) -> usize {
        self.family.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: u64) -> bool {
        self.family.binary_search(&x).is_ok()
    }

    #[inline]
    pub fn is_proper(&self) -> bool {
        !self.family.is_empty()
    }

    #[inline]
    pub fn is_normal(&self) -> bool {
        self.family.first() == Some(&0)
    }

    pub fn classify(&self) -> Classification {
        let equicardinal = match self.family.first() {
            None => true,
            Some(&f) => self.family.iter().all(|x| x.count_ones() == f.count_ones()),
        };
        Classification {
            proper: self.is_proper(),
            normal: self.is_normal(),
            equicardinal,
        }
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.ground.index_of(label)
    }

    pub fn mask_of<I, S>(&self, labels: I) -> Result<u64>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.ground.mask_of(labels)
    }

    // ---- vertex flips -------------------------------------------------

    /// `M * X`.
    pub fn pivot(&self, x: u64) -> SetSystem {
        self.with_family(self.family.iter().map(|y| y ^ x).collect())
    }

    fn loop_complement_bit(family: &[u64], u: u64) -> Vec<u64> {
        let mut out: HashSet<u64> = family.iter().copied().collect();
        for &z in family {
            if z & u == 0 {
                let t = z | u;
                if !out.remove(&t) {
                    out.insert(t);
                }
            }
        }
        out.into_iter().collect()
    }

    /// `M + X`, element by element in index order.
    pub fn loop_complement(&self, x: u64) -> SetSystem {
        let mut family = self.family.clone();
        for i in bits(x) {
            family = Self::loop_complement_bit(&family, 1 << i);
        }
        self.with_family(family)
    }

    /// `M ~* X`, each element expanded to `+u *u +u`.
    pub fn dual_pivot(&self, x: u64) -> SetSystem {
        let mut family = self.family.clone();
        for i in bits(x) {
            let u = 1u64 << i;
            family = Self::loop_complement_bit(&family, u);
            family.iter_mut().for_each(|y| *y ^= u);
            family = Self::loop_complement_bit(&family, u);
        }
        self.with_family(family)
    }

    /// Applies one vertex flip on every element of `x`.
    pub fn apply(&self, kind: Flip, x: u64) -> Result<SetSystem> {
        self.ground.check_subset(x)?;
        Ok(match kind {
            Flip::Pivot => self.pivot(x),
            Flip::LoopComplement => self.loop_complement(x),
            Flip::DualPivot => self.dual_pivot(x),
        })
    }

    /// Flip on the whole ground set from the closed forms: `X ∈ M*V` iff `V−X ∈ M`,
    /// `X ∈ M+V` iff an odd number of members lie below `X`, `X ∈ M~*V` iff an odd
    /// number lie above `X`.
    pub fn full_flip_explicit(&self, kind: Flip) -> Result<SetSystem> {
        let full = self.ground.full();
        if kind == Flip::Pivot {
            return Ok(self.with_family(self.family.iter().map(|y| full & !y).collect()));
        }
        if self.n() > MAX_DENSE {
            return Err(Error::SizeLimit {
                op: "explicit full flip",
                n: self.n(),
                max: MAX_DENSE,
            });
        }
        let family = subsets(full)
            .filter(|&x| {
                let count = match kind {
                    Flip::LoopComplement => self.family.iter().filter(|&&z| z & !x == 0).count(),
                    _ => self.family.iter().filter(|&&z| x & !z == 0).count(),
                };
                count % 2 == 1
            })
            .collect();
        Ok(SetSystem {
            ground: self.ground.clone(),
            family,
        })
    }

    // ---- restriction ---------------------------------------------------

    /// `M[X]`: members contained in `X`, over the ground set `X`.
    pub fn restrict(&self, x: u64) -> Result<SetSystem> {
        self.ground.check_subset(x)?;
        let ground = self.ground.restrict(x);
        let family = self
            .family
            .iter()
            .filter(|&&y| y & !x == 0)
            .map(|&y| self.ground.reindex(y, x))
            .collect::<Vec<_>>();
        // compress is monotone on subsets of x, so the order is preserved
        Ok(SetSystem { ground, family })
    }

    /// `M \ X = M[V − X]`.
    pub fn delete(&self, x: u64) -> Result<SetSystem> {
        self.ground.check_subset(x)?;
        self.restrict(self.ground.full() & !x)
    }

    /// `M \ u` for the element at index `u`.
    pub fn delete_element(&self, u: usize) -> SetSystem {
        let lo = (1u64 << u) - 1;
        let family = self
            .family
            .iter()
            .filter(|&&y| y >> u & 1 == 0)
            .map(|&y| (y & lo) | ((y >> 1) & !lo))
            .collect();
        SetSystem {
            ground: self.ground.restrict(self.ground.full() & !(1 << u)),
            family,
        }
    }

    // ---- distance ------------------------------------------------------

    /// `d_M(X) = min |X ⊕ Y|` over members `Y`.
    pub fn distance(&self, x: u64) -> Result<u32> {
        self.family
            .iter()
            .map(|y| (x ^ y).count_ones())
            .min()
            .ok_or(Error::Improper("distance"))
    }

    /// `d_M = d_M(∅)`, the size of a smallest member.
    pub fn min_size(&self) -> Result<u32> {
        self.distance(0)
    }

    /// `d_M(X)` for every `X ⊆ V`, indexed by mask (multi-source breadth-first search
    /// on the hypercube).
    pub fn distance_table(&self) -> Result<Vec<u8>> {
        if !self.is_proper() {
            return Err(Error::Improper("distance table"));
        }
        let n = self.n();
        if n > MAX_DENSE {
            return Err(Error::SizeLimit {
                op: "distance table",
                n,
                max: MAX_DENSE,
            });
        }
        let size = 1usize << n;
        let mut dist = vec![u8::MAX; size];
        let mut frontier: Vec<u64> = self.family.clone();
        for &y in &frontier {
            dist[y as usize] = 0;
        }
        let mut level = 0u8;
        while !frontier.is_empty() {
            level += 1;
            let mut next = Vec::new();
            for &x in &frontier {
                for i in 0..n {
                    let z = (x ^ (1 << i)) as usize;
                    if dist[z] == u8::MAX {
                        dist[z] = level;
                        next.push(z as u64);
                    }
                }
            }
            frontier = next;
        }
        Ok(dist)
    }

    /// Labels of each member, in canonical order.
    pub fn member_labels(&self) -> Vec<Vec<&str>> {
        self.family
            .iter()
            .map(|&x| self.ground.labels_of(x))
            .collect()
    }
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self
            .family
            .iter()
            .map(|&x| {
                if x == 0 {
                    "∅".to_string()
                } else {
                    self.ground.format_subset(x)
                }
            })
            .collect();
        write!(
            f,
            "({}, {{{}}})",
            self.ground.format_subset(self.ground.full()),
            sets.join(", ")
        )
    }
}

/// A sequence of vertex flips, applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexFlipWord {
    pub steps: Vec<(Flip, u64)>,
}

impl VertexFlipWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn then(mut self, kind: Flip, x: u64) -> Self {
        self.steps.push((kind, x));
        self
    }

    pub fn apply(&self, m: &SetSystem) -> Result<SetSystem> {
        self.steps
            .iter()
            .try_fold(m.clone(), |acc, &(k, x)| acc.apply(k, x))
    }
}
