//! Exact integer polynomials in one (`y`) and two (`x`, `y`) variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial in `y` with arbitrary-precision integer coefficients.
///
/// Coefficients are stored densely in ascending degree; the highest stored
/// coefficient is never zero, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c0 + c1 y + c2 y^2 + ...`
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        let mut p = UniPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    /// Polynomial whose `d`-th coefficient is the number of times `d` occurs.
    pub fn from_degree_counts(counts: &[u64]) -> Self {
        Self::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `y + c`
    pub fn linear(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c), BigInt::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> Self {
        let c = c.into();
        Self::from_coeffs(self.coeffs.iter().map(|a| a * &c).collect())
    }

    /// Exact value at an integer point (Horner).
    pub fn evaluate<T: Into<BigInt>>(&self, y: T) -> BigInt {
        let y = y.into();
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &y + c)
    }

    /// `p(y + shift)`, e.g. `shift = -1` gives `p(y - 1)`.
    pub fn shift(&self, shift: i64) -> Self {
        let lin = UniPoly::linear(shift);
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| {
            &(&acc * &lin) + &UniPoly::constant(c.clone())
        })
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match d {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}")?,
            }
            match d {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{d}")?,
            }
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::from_coeffs::<BigInt>(coeffs)
    }
}

impl Add for UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: UniPoly) -> UniPoly {
        &self + &rhs
    }
}

impl AddAssign<&UniPoly> for UniPoly {
    fn add_assign(&mut self, rhs: &UniPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> Self {
        iter.fold(UniPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Bivariate polynomial in `x` and `y`, keyed by `(x-degree, y-degree)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial<T: Into<BigInt>>(dx: usize, dy: usize, c: T) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(dx, dy, c.into());
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn add_term(&mut self, dx: usize, dy: usize, c: BigInt) {
        let e = self.terms.entry((dx, dy)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(dx, dy));
        }
    }

    /// Nonzero terms in increasing `(x-degree, y-degree)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, dx: usize, dy: usize) -> BigInt {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_default()
    }

    pub fn evaluate<T: Into<BigInt>>(&self, x: T, y: T) -> BigInt {
        let (x, y) = (x.into(), y.into());
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * num_traits::pow(x.clone(), a) * num_traits::pow(y.clone(), b))
            .sum()
    }

    /// The diagonal `p(y, y)`.
    pub fn diagonal(&self) -> UniPoly {
        let deg = self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (&(a, b), c) in &self.terms {
            coeffs[a + b] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn mul_x(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + 1, b), c.clone()))
                .collect(),
        }
    }

    pub fn mul_y(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a, b + 1), c.clone()))
                .collect(),
        }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (&(a, b), c) in self.terms.iter().rev() {
            let mut s = String::new();
            let unit = a + b > 0 && c.abs().is_one();
            if c.is_negative() {
                s.push('-');
            }
            if !unit {
                s.push_str(&c.abs().to_string());
            }
            for (v, e) in [("x", a), ("y", b)] {
                match e {
                    0 => {}
                    1 => s.push_str(v),
                    _ => s.push_str(&format!("{v}^{e}")),
                }
            }
            parts.push(s);
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}
