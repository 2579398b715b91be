//! Matroids given by their bases, the Tutte polynomial, and binary matroids.
//!
//! A proper set system is a matroid exactly when it is an equicardinal
//! delta-matroid, so a [`Matroid`] is a validated [`SetSystem`] of bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bits::{bits, subsets};
use crate::deltamatroid::{check_dense, is_delta_matroid};
use crate::error::{Error, Result};
use crate::gf2::{rank, BitMatrix};
use crate::graph::Graph;
use crate::ground::GroundSet;
use crate::interlace::{poly_direct, PolyKind, DIRECT_LIMIT};
use crate::poly::{binomial, BiPoly, UniPoly};
use crate::setsystem::SetSystem;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    bases: SetSystem,
    rank: usize,
}

impl Matroid {
    pub fn new(bases: SetSystem) -> Result<Self> {
        let class = bases.classify();
        if !class.proper {
            return Err(Error::NotAMatroid("no bases".into()));
        }
        if !class.equicardinal {
            return Err(Error::NotAMatroid("bases have different sizes".into()));
        }
        if !is_delta_matroid(&bases) {
            return Err(Error::NotAMatroid("basis exchange fails".into()));
        }
        let rank = bases.family()[0].count_ones() as usize;
        Ok(Matroid { bases, rank })
    }

    pub fn from_bases<L, S, F, T>(labels: L, bases: F) -> Result<Self>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
        F: IntoIterator<Item = T>,
        T: IntoIterator,
        T::Item: AsRef<str>,
    {
        Matroid::new(SetSystem::from_labels(labels, bases)?)
    }

    /// `U_{k,n}` on elements `1..n`.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        let ground = GroundSet::numbered(n)?;
        check_dense("uniform matroid", n, DIRECT_LIMIT)?;
        if k > n {
            return Err(Error::NotAMatroid(format!("rank {k} exceeds {n} elements")));
        }
        let bases = subsets(ground.full()).filter(|x| x.count_ones() as usize == k);
        Matroid::new(SetSystem::new(ground, bases.collect::<Vec<_>>())?)
    }

    /// The set system of bases.
    pub fn bases(&self) -> &SetSystem {
        &self.bases
    }

    pub fn ground(&self) -> &GroundSet {
        self.bases.ground()
    }

    pub fn n(&self) -> usize {
        self.bases.n()
    }

    /// `r(V)`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `(r(X), n(X))` with `n(X) = min |X − B|` over bases `B`.
    pub fn rank_nullity(&self, x: u64) -> Result<(usize, usize)> {
        self.ground().check_subset(x)?;
        let nullity = self
            .bases
            .family()
            .iter()
            .map(|b| (x & !b).count_ones())
            .min()
            .unwrap_or(0) as usize;
        Ok((x.count_ones() as usize - nullity, nullity))
    }

    pub fn is_loop(&self, u: usize) -> bool {
        self.bases.family().iter().all(|b| b >> u & 1 == 0)
    }

    pub fn is_coloop(&self, u: usize) -> bool {
        self.bases.family().iter().all(|b| b >> u & 1 == 1)
    }

    /// Tutte polynomial from the rank sum
    /// `Σ_X (x-1)^{r(V)-r(X)} (y-1)^{n(X)}`.
    pub fn tutte(&self) -> Result<BiPoly> {
        let n = self.n();
        check_dense("tutte", n, DIRECT_LIMIT)?;
        // for equicardinal families |X ⊕ B| = 2|X − B| + r − |X|, so the
        // nullity comes from the distance table
        let dist = self.bases.distance_table()?;
        let r = self.rank as i64;
        let mut counts = vec![vec![0u64; n + 1]; r as usize + 1];
        for x in subsets(self.ground().full()) {
            let size = x.count_ones() as i64;
            let nullity = ((dist[x as usize] as i64 - r + size) / 2) as usize;
            let corank = (r - (size - nullity as i64)) as usize;
            counts[corank][nullity] += 1;
        }
        // expand (x-1)^a (y-1)^b
        let mut t = BiPoly::zero();
        for (a, row) in counts.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for i in 0..=a {
                    for j in 0..=b {
                        let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                        let coeff = BigInt::from(c)
                            * binomial(a as u64, i as u64)
                            * binomial(b as u64, j as u64)
                            * sign;
                        t.add_term(i, j, coeff);
                    }
                }
            }
        }
        Ok(t)
    }

    /// Tutte polynomial by deletion and contraction on the smallest element.
    /// `u` is a loop iff `M*u\u` is improper and a coloop iff `M\u` is improper.
    pub fn tutte_dc(&self) -> Result<BiPoly> {
        check_dense("tutte_dc", self.n(), DIRECT_LIMIT)?;
        Ok(tutte_dc_rec(&self.bases))
    }

    /// `t(y, y)` against `q1(y - 1)`.
    pub fn tutte_diagonal_check(&self) -> Result<DiagonalCheck> {
        let via_tutte = self.tutte()?.diagonal();
        let via_q1 = poly_direct(&self.bases, PolyKind::q1)?.shift(-1);
        let equal = via_tutte == via_q1;
        Ok(DiagonalCheck {
            via_tutte,
            via_q1,
            equal,
        })
    }

    /// `t(p-1, p-1)` split as `k (-2)^d` with `d = d_{M~*V}`.
    pub fn tutte_evaluation(&self, p: i64) -> Result<ModularEvaluation> {
        let t = self.tutte()?;
        let value = t.evaluate(BigInt::from(p - 1), BigInt::from(p - 1));
        ModularEvaluation::split(value, self.dual_distance()?, self.n(), p)
    }

    /// `t(-1, -1)` next to `(-1)^n (-2)^{d_{M~*V}}`.
    pub fn minus_one_check(&self) -> Result<(BigInt, BigInt)> {
        let value = self.tutte()?.evaluate(-1, -1);
        let sign = if self.n().is_multiple_of(2) { 1 } else { -1 };
        let expected =
            BigInt::from(sign) * num_traits::pow(BigInt::from(-2), self.dual_distance()? as usize);
        Ok((value, expected))
    }

    /// `d_{M~*V}`.
    pub fn dual_distance(&self) -> Result<u32> {
        self.bases.dual_pivot(self.ground().full()).min_size()
    }
}

fn tutte_dc_rec(m: &SetSystem) -> BiPoly {
    if m.n() == 0 {
        return BiPoly::one();
    }
    let del = m.delete_element(0);
    let con = m.pivot(1).delete_element(0);
    match (del.is_proper(), con.is_proper()) {
        (true, false) => tutte_dc_rec(&del).mul_y(),
        (false, true) => tutte_dc_rec(&con).mul_x(),
        _ => &tutte_dc_rec(&del) + &tutte_dc_rec(&con),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalCheck {
    pub via_tutte: UniPoly,
    pub via_q1: UniPoly,
    pub equal: bool,
}

/// A value `v` written as `k (-2)^d`, with the checks made on `k` for an even
/// modulus `p`: exact divisibility, `k` odd, and `k ≡ (-1)^n (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularEvaluation {
    pub p: i64,
    pub value: BigInt,
    pub d: u32,
    /// `None` when `(-2)^d` does not divide the value.
    pub k: Option<BigInt>,
    pub k_odd: bool,
    pub congruent: bool,
}

impl ModularEvaluation {
    pub fn split(value: BigInt, d: u32, n: usize, p: i64) -> Result<Self> {
        if p == 0 {
            return Err(Error::Arithmetic("modulus must be nonzero".into()));
        }
        let divisor = num_traits::pow(BigInt::from(-2), d as usize);
        let (q, r) = value.div_rem(&divisor);
        let k = r.is_zero().then_some(q);
        let sign = if n.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let k_odd = k.as_ref().is_some_and(|k| k.is_odd());
        let congruent = k
            .as_ref()
            .is_some_and(|k| (k - &sign).is_multiple_of(&BigInt::from(p)));
        Ok(ModularEvaluation {
            p,
            value,
            d,
            k,
            k_odd,
            congruent,
        })
    }

    /// All three conditions hold.
    pub fn holds(&self) -> bool {
        self.k.is_some() && self.k_odd && self.congruent
    }
}

/// `q1(M)(p - 2)` split against `d_{M~*V}`.
pub fn q1_modular_evaluation(m: &SetSystem, p: i64) -> Result<ModularEvaluation> {
    let q1 = poly_direct(m, PolyKind::q1)?;
    let d = m.dual_pivot(m.ground().full()).min_size()?;
    ModularEvaluation::split(q1.evaluate(p - 2), d, m.n(), p)
}

/// A matroid together with a GF(2) representation whose columns are the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatroid {
    matroid: Matroid,
    rep: BitMatrix,
}

impl BinaryMatroid {
    /// Column matroid of `rep`: the bases are the column sets of size `rank(rep)`
    /// that are independent.
    pub fn from_matrix(ground: GroundSet, rep: BitMatrix) -> Result<Self> {
        let n = ground.len();
        if rep.n_cols() != n {
            return Err(Error::Dimension(format!(
                "{} columns for {n} labels",
                rep.n_cols()
            )));
        }
        check_dense("binary matroid", n, DIRECT_LIMIT)?;
        let r = rep.rank();
        let bases: Vec<u64> = subsets(ground.full())
            .filter(|&x| x.count_ones() as usize == r && rep.column_rank(x) == r)
            .collect();
        let matroid = Matroid::new(SetSystem::new(ground, bases)?)?;
        Ok(BinaryMatroid { matroid, rep })
    }

    /// Cycle matroid of a graph on vertices `0..vertices`, one element per edge,
    /// represented by the vertex-edge incidence matrix.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut rows = vec![0u64; vertices];
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a >= vertices || b >= vertices {
                return Err(Error::Dimension(format!(
                    "edge {e} uses a vertex outside 0..{vertices}"
                )));
            }
            // a loop edge has a zero column
            if a != b {
                rows[a] |= 1 << e;
                rows[b] |= 1 << e;
            }
        }
        let rep = BitMatrix::new(rows, edges.len())?;
        BinaryMatroid::from_matrix(GroundSet::numbered(edges.len())?, rep)
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn representation(&self) -> &BitMatrix {
        &self.rep
    }

    /// Dimension of the bicycle space `C ∩ C⊥`, where `C` is the kernel of the
    /// representation and `C⊥` its row space.
    pub fn bicycle_dimension(&self) -> usize {
        let cycles = self.rep.kernel();
        let cocycles = self.rep.row_space();
        let sum: Vec<u64> = cycles.iter().chain(&cocycles).copied().collect();
        cycles.len() + cocycles.len() - rank(&sum)
    }

    /// Bipartite graph with colour classes `B` and `V − B`; `b ∈ B` is adjacent to
    /// `e ∉ B` iff `b` lies in the fundamental circuit of `e`.
    pub fn fundamental_graph(&self, b: u64) -> Result<Graph> {
        if !self.matroid.bases().contains(b) {
            return Err(Error::NotABasis(b));
        }
        // eliminate the columns of B into (vector, columns used, pivot row)
        let mut basis: Vec<(u64, u64, u64)> = Vec::new();
        for j in bits(b) {
            let (mut v, mut c) = (self.rep.column(j), 1u64 << j);
            for &(w, cw, p) in &basis {
                if v & p != 0 {
                    v ^= w;
                    c ^= cw;
                }
            }
            debug_assert!(v != 0, "basis columns are independent");
            let p = v & v.wrapping_neg();
            for w in basis.iter_mut() {
                if w.0 & p != 0 {
                    w.0 ^= v;
                    w.1 ^= c;
                }
            }
            basis.push((v, c, p));
        }
        let ground = self.matroid.ground().clone();
        let mut g = Graph::empty(ground.clone()).matrix().clone();
        for e in bits(ground.full() & !b) {
            let mut v = self.rep.column(e);
            let mut circuit = 0u64;
            for &(w, c, p) in &basis {
                if v & p != 0 {
                    v ^= w;
                    circuit ^= c;
                }
            }
            debug_assert_eq!(v, 0, "column lies in the span of the basis");
            for x in bits(circuit) {
                g.set(x, e, true);
                g.set(e, x, true);
            }
        }
        Graph::new(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u12() -> Matroid {
        Matroid::from_bases(["a", "b"], [vec!["a"], vec!["b"]]).unwrap()
    }

    fn k3() -> BinaryMatroid {
        // vertex-edge incidence of the triangle
        let rep = BitMatrix::from_01(&[[1u8, 0, 1], [1, 1, 0], [0, 1, 1]], 3).unwrap();
        BinaryMatroid::from_matrix(GroundSet::numbered(3).unwrap(), rep).unwrap()
    }

    fn c4() -> BinaryMatroid {
        let rep = BitMatrix::from_01(
            &[[1u8, 0, 0, 1], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]],
            4,
        )
        .unwrap();
        BinaryMatroid::from_matrix(GroundSet::numbered(4).unwrap(), rep).unwrap()
    }

    fn bi(terms: &[(usize, usize, i64)]) -> BiPoly {
        terms.iter().fold(BiPoly::zero(), |acc, &(a, b, c)| {
            &acc + &BiPoly::monomial(a, b, c)
        })
    }

    #[test]
    fn validation() {
        assert!(Matroid::from_bases(["a", "b"], [vec!["a"], vec!["a", "b"]]).is_err());
        let empty: Vec<Vec<&str>> = vec![];
        assert!(Matroid::from_bases(["a"], empty).is_err());
        // equicardinal but no exchange
        assert!(
            Matroid::from_bases(["a", "b", "c", "d"], [vec!["a", "b"], vec!["c", "d"]]).is_err()
        );
    }

    #[test]
    fn rank_and_nullity() {
        let m = u12();
        assert_eq!(m.rank_nullity(0b11).unwrap(), (1, 1));
        assert_eq!(m.rank_nullity(0).unwrap(), (0, 0));
        let k = k3();
        assert_eq!(k.matroid().rank(), 2);
        assert_eq!(k.matroid().rank_nullity(0b111).unwrap(), (2, 1));
    }

    #[test]
    fn tutte_small_cases() {
        assert_eq!(u12().tutte().unwrap(), bi(&[(1, 0, 1), (0, 1, 1)]));
        assert_eq!(u12().tutte_dc().unwrap(), u12().tutte().unwrap());
        let coloop = Matroid::from_bases(["a"], [vec!["a"]]).unwrap();
        assert_eq!(coloop.tutte().unwrap(), BiPoly::x());
        let lp = Matroid::from_bases(["a"], [Vec::<&str>::new()]).unwrap();
        assert_eq!(lp.tutte_dc().unwrap(), BiPoly::y());
        let trivial = Matroid::new(SetSystem::new(GroundSet::empty(), [0]).unwrap()).unwrap();
        assert_eq!(trivial.tutte_dc().unwrap(), BiPoly::one());
        assert_eq!(trivial.tutte().unwrap(), BiPoly::one());
        assert_eq!(
            k3().matroid().tutte().unwrap(),
            bi(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)])
        );
        let c = c4();
        assert_eq!(
            c.matroid().tutte_dc().unwrap(),
            bi(&[(3, 0, 1), (2, 0, 1), (1, 0, 1), (0, 1, 1)])
        );
    }

    #[test]
    fn diagonal_identity() {
        for m in [u12(), k3().matroid().clone(), c4().matroid().clone()] {
            let check = m.tutte_diagonal_check().unwrap();
            assert!(check.equal, "{check:?}");
        }
        assert_eq!(
            k3().matroid().tutte_diagonal_check().unwrap().via_tutte,
            UniPoly::from_coeffs(vec![0, 2, 1])
        );
    }

    #[test]
    fn binary_constructions() {
        let rep = BitMatrix::from_01(&[[1u8, 1, 1]], 3).unwrap();
        let u13 = BinaryMatroid::from_matrix(GroundSet::numbered(3).unwrap(), rep).unwrap();
        assert_eq!(u13.matroid().bases().family(), &[1, 2, 4]);
        let id = BitMatrix::from_01(&[[1u8, 0], [0, 1]], 2).unwrap();
        let free = BinaryMatroid::from_matrix(GroundSet::numbered(2).unwrap(), id).unwrap();
        assert_eq!(free.matroid().bases().family(), &[0b11]);
        assert_eq!(k3().matroid().bases().family(), &[0b011, 0b101, 0b110]);
    }

    #[test]
    fn bicycles() {
        assert_eq!(k3().bicycle_dimension(), 0);
        assert_eq!(c4().bicycle_dimension(), 1);
        assert_eq!(c4().matroid().dual_distance().unwrap(), 1);
        let empty =
            BinaryMatroid::from_matrix(GroundSet::empty(), BitMatrix::new(vec![], 0).unwrap())
                .unwrap();
        assert_eq!(empty.bicycle_dimension(), 0);
        let t = c4().matroid().tutte().unwrap();
        assert_eq!(t.evaluate(-1, -1), BigInt::from(-2));
    }

    #[test]
    fn evaluation_split() {
        let (v, expected) = k3().matroid().minus_one_check().unwrap();
        assert_eq!((v, expected), (BigInt::from(-1), BigInt::from(-1)));
        let (v, expected) = c4().matroid().minus_one_check().unwrap();
        assert_eq!((v, expected), (BigInt::from(-2), BigInt::from(-2)));
        let e = k3().matroid().tutte_evaluation(2).unwrap();
        assert_eq!(e.value, BigInt::from(3));
        assert!(e.holds());
        // C4 at p = 4: t(3,3) = 42 = (-21)(-2), and -21 is 3 mod 4, not 1
        let c = c4().matroid().tutte_evaluation(4).unwrap();
        assert_eq!(c.value, BigInt::from(42));
        assert_eq!(c.k, Some(BigInt::from(-21)));
        assert!(c.k_odd);
        assert!(!c.congruent);
    }

    #[test]
    fn fundamental_graphs() {
        let k = k3();
        let g = k.fundamental_graph(0b011).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
        assert_eq!(g.to_system().unwrap().pivot(0b011), *k.matroid().bases());
        let q1 = crate::graph::graph_poly(&g, PolyKind::q1).unwrap();
        assert_eq!(q1, UniPoly::from_coeffs(vec![3, 4, 1]));
        assert_eq!(q1.shift(-1), k.matroid().tutte().unwrap().diagonal());
        assert_eq!(k.fundamental_graph(0b111), Err(Error::NotABasis(0b111)));
    }
}
