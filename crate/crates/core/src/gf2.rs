//! Linear algebra over GF(2) with rows packed into `u64` bitmasks.
//!
//! [`Gf2Matrix`] is square and indexed by a labelled ground set; it carries the
//! principal pivot transform and the support set system `M_A` of nonsingular
//! principal submatrices. [`BitMatrix`] is a plain rectangular matrix used for
//! binary matroid representations.

use std::fmt;

use crate::bits::{bits, low_mask, subsets};
use crate::deltamatroid::check_dense;
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::setsystem::{SetSystem, MAX_DENSE};

/// Default cap on `n` for [`Gf2Matrix::support_set_system`].
pub const SUPPORT_LIMIT: usize = 20;

#[inline]
fn parity(x: u64) -> bool {
    x.count_ones() & 1 == 1
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[u64]) -> usize {
    echelon(rows).len()
}

/// A reduced basis of the span of `rows`, one vector per distinct leading bit.
pub fn echelon(rows: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            let lead = 63 - b.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
            // keep the basis sorted by leading bit, highest first, so one pass reduces
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// Rectangular GF(2) matrix; bit `j` of `rows[i]` is entry `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<u64>,
    cols: usize,
}

impl BitMatrix {
    pub fn new(rows: Vec<u64>, cols: usize) -> Result<Self> {
        if cols > 64 {
            return Err(Error::Dimension(format!("{cols} columns exceed 64")));
        }
        let mask = low_mask(cols);
        if let Some(i) = rows.iter().position(|r| r & !mask != 0) {
            return Err(Error::Dimension(format!(
                "row {i} has entries beyond column {cols}"
            )));
        }
        Ok(BitMatrix { rows, cols })
    }

    /// From rows of 0/1 entries; every row must have the same length.
    pub fn from_01<R: AsRef<[u8]>>(rows: &[R], cols: usize) -> Result<Self> {
        let mut packed = Vec::with_capacity(rows.len());
        for (i, r) in rows.iter().enumerate() {
            packed.push(pack_row(r.as_ref(), cols, i)?);
        }
        BitMatrix::new(packed, cols)
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    /// Column `j` as a bitmask over rows.
    pub fn column(&self, j: usize) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | ((r >> j & 1) << i))
    }

    /// Rows restricted to the columns in `mask`.
    pub fn column_rank(&self, mask: u64) -> usize {
        rank(&self.rows.iter().map(|r| r & mask).collect::<Vec<_>>())
    }

    pub fn rank(&self) -> usize {
        rank(&self.rows)
    }

    /// Basis of the row space.
    pub fn row_space(&self) -> Vec<u64> {
        echelon(&self.rows)
    }

    /// Basis of the kernel `{x | R x = 0}`, vectors indexed by columns.
    pub fn kernel(&self) -> Vec<u64> {
        // reduced row echelon form with explicit pivot columns
        let mut rows: Vec<u64> = self.rows.clone();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i] >> c & 1 == 1) else {
                continue;
            };
            rows.swap(r, p);
            for i in 0..rows.len() {
                if i != r && rows[i] >> c & 1 == 1 {
                    rows[i] ^= rows[r];
                }
            }
            pivots.push((r, c));
            r += 1;
        }
        let pivot_cols: u64 = pivots.iter().fold(0, |acc, &(_, c)| acc | 1 << c);
        let free = low_mask(self.cols) & !pivot_cols;
        bits(free)
            .map(|f| {
                let mut v = 1u64 << f;
                for &(row, c) in &pivots {
                    if rows[row] >> f & 1 == 1 {
                        v |= 1 << c;
                    }
                }
                v
            })
            .collect()
    }

    /// `R x` as a bitmask over rows.
    pub fn mul_vec(&self, x: u64) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | (parity(r & x) as u64) << i)
    }
}

fn pack_row(r: &[u8], cols: usize, i: usize) -> Result<u64> {
    if r.len() != cols {
        return Err(Error::Dimension(format!(
            "row {i} has {} entries, expected {cols}",
            r.len()
        )));
    }
    let mut mask = 0u64;
    for (j, &e) in r.iter().enumerate() {
        match e {
            0 => {}
            1 => mask |= 1 << j,
            _ => {
                return Err(Error::Dimension(format!(
                    "entry ({i},{j}) is {e}, expected 0 or 1"
                )))
            }
        }
    }
    Ok(mask)
}

/// Square GF(2) matrix whose rows and columns are indexed by a ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    ground: GroundSet,
    rows: Vec<u64>,
}

impl Gf2Matrix {
    pub fn new(ground: GroundSet, rows: Vec<u64>) -> Result<Self> {
        if rows.len() != ground.len() {
            return Err(Error::Dimension(format!(
                "{} rows for {} labels",
                rows.len(),
                ground.len()
            )));
        }
        for (i, &r) in rows.iter().enumerate() {
            if r & !ground.full() != 0 {
                return Err(Error::Dimension(format!(
                    "row {i} has entries beyond column {}",
                    ground.len()
                )));
            }
        }
        Ok(Gf2Matrix { ground, rows })
    }

    pub fn from_01<R: AsRef<[u8]>>(ground: GroundSet, rows: &[R]) -> Result<Self> {
        let n = ground.len();
        let packed = rows
            .iter()
            .enumerate()
            .map(|(i, r)| pack_row(r.as_ref(), n, i))
            .collect::<Result<_>>()?;
        Gf2Matrix::new(ground, packed)
    }

    pub fn zero(ground: GroundSet) -> Self {
        let n = ground.len();
        Gf2Matrix {
            ground,
            rows: vec![0; n],
        }
    }

    pub fn identity(ground: GroundSet) -> Self {
        let rows = (0..ground.len()).map(|i| 1u64 << i).collect();
        Gf2Matrix { ground, rows }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn toggle(&mut self, i: usize, j: usize) {
        self.rows[i] ^= 1 << j;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n()).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `A x` as a bitmask.
    pub fn mul_vec(&self, x: u64) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | (parity(r & x) as u64) << i)
    }

    /// Determinant and nullity of the principal submatrix `A[X]`.
    pub fn det_nullity(&self, x: u64) -> Result<(bool, usize)> {
        self.ground.check_subset(x)?;
        Ok(self.det_nullity_unchecked(x))
    }

    pub(crate) fn det_nullity_unchecked(&self, x: u64) -> (bool, usize) {
        let sub: Vec<u64> = bits(x).map(|i| self.rows[i] & x).collect();
        let k = x.count_ones() as usize;
        let r = rank(&sub);
        (r == k, k - r)
    }

    /// Inverse of `A[X]` as rows indexed by the elements of `X`
    /// (`pinv[i]` for `i ∈ X`, other entries zero).
    fn principal_inverse(&self, x: u64) -> Option<Vec<u64>> {
        let n = self.n();
        let idx: Vec<usize> = bits(x).collect();
        let mut work: Vec<(u64, u64)> =
            idx.iter().map(|&i| (self.rows[i] & x, 1u64 << i)).collect();
        for (pos, &c) in idx.iter().enumerate() {
            let p = (pos..work.len()).find(|&r| work[r].0 >> c & 1 == 1)?;
            work.swap(pos, p);
            let (pl, pr) = work[pos];
            for (r, row) in work.iter_mut().enumerate() {
                if r != pos && row.0 >> c & 1 == 1 {
                    row.0 ^= pl;
                    row.1 ^= pr;
                }
            }
        }
        let mut inv = vec![0u64; n];
        for (pos, &c) in idx.iter().enumerate() {
            debug_assert_eq!(work[pos].0, 1 << c);
            inv[c] = work[pos].1;
        }
        Some(inv)
    }

    /// Principal pivot transform `A * X`.
    ///
    /// With `A = [[P, Q], [R, S]]` split along `X` and `Y = V − X`, the result is
    /// `[[P⁻¹, P⁻¹Q], [RP⁻¹, S + RP⁻¹Q]]` (signs vanish over GF(2)).
    pub fn ppt(&self, x: u64) -> Result<Gf2Matrix> {
        self.ground.check_subset(x)?;
        let pinv = self.principal_inverse(x).ok_or(Error::PivotUndefined(x))?;
        let y = self.ground.full() & !x;
        let combine = |sel: u64, source: &dyn Fn(usize) -> u64| {
            bits(sel).fold(0u64, |acc, k| acc ^ source(k))
        };
        let rows = (0..self.n())
            .map(|i| {
                if x >> i & 1 == 1 {
                    pinv[i] | combine(pinv[i], &|k| self.rows[k] & y)
                } else {
                    let rp = combine(self.rows[i] & x, &|k| pinv[k]);
                    rp | ((self.rows[i] & y) ^ combine(rp, &|k| self.rows[k] & y))
                }
            })
            .collect();
        Ok(Gf2Matrix {
            ground: self.ground.clone(),
            rows,
        })
    }

    /// `M_A`: subsets `X` with `det A[X] = 1`, with the default size cap.
    pub fn support_set_system(&self) -> Result<SetSystem> {
        self.support_set_system_with(SUPPORT_LIMIT)
    }

    /// `M_A` with an explicit cap on `n` (never above the dense-table bound).
    pub fn support_set_system_with(&self, limit: usize) -> Result<SetSystem> {
        check_dense("support set system", self.n(), limit.min(MAX_DENSE))?;
        let family: Vec<u64> = subsets(self.ground.full())
            .filter(|&x| self.det_nullity_unchecked(x).0)
            .collect();
        SetSystem::new(self.ground.clone(), family)
    }

    /// Principal submatrix `A[X]` over the restricted ground set.
    pub fn principal_submatrix(&self, x: u64) -> Result<Gf2Matrix> {
        self.ground.check_subset(x)?;
        let rows = bits(x)
            .map(|i| self.ground.reindex(self.rows[i] & x, x))
            .collect();
        Ok(Gf2Matrix {
            ground: self.ground.restrict(x),
            rows,
        })
    }

    /// Rows as 0/1 vectors.
    pub fn to_01(&self) -> Vec<Vec<u8>> {
        (0..self.n())
            .map(|i| (0..self.n()).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_01().iter().enumerate() {
            let cells: Vec<String> = row.iter().map(u8::to_string).collect();
            writeln!(f, "{} | {}", self.ground.label(i), cells.join(" "))?;
        }
        Ok(())
    }
}
