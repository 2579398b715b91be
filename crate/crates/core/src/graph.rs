//! Graphs with loops, stored as symmetric GF(2) adjacency matrices.
//!
//! A graph `G` determines the set system `M_G` of vertex sets inducing a
//! nonsingular submatrix, and `M_G` determines `G` back. Loop complementation
//! toggles diagonal entries, pivots are principal pivot transforms.

use crate::bits::{bits, subsets};
use crate::deltamatroid::check_dense;
use crate::error::{Error, Result};
use crate::gf2::{rank, Gf2Matrix, SUPPORT_LIMIT};
use crate::ground::GroundSet;
use crate::interlace::{Limits, PolyKind};
use crate::poly::UniPoly;
use crate::setsystem::{Flip, SetSystem};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Gf2Matrix,
}

impl Graph {
    /// Wraps a symmetric matrix.
    pub fn new(adj: Gf2Matrix) -> Result<Self> {
        if !adj.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Graph { adj })
    }

    /// Edgeless, loopless graph.
    pub fn empty(ground: GroundSet) -> Self {
        Graph {
            adj: Gf2Matrix::zero(ground),
        }
    }

    /// From labelled edges and loops. An edge `(u, u)` is a loop; repeated edges
    /// are rejected since the matrix cannot hold parallel edges.
    pub fn from_edges<V, S, E, T, L, U>(vertices: V, edges: E, loops: L) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
        L: IntoIterator<Item = U>,
        U: AsRef<str>,
    {
        let ground = GroundSet::new(vertices)?;
        let mut adj = Gf2Matrix::zero(ground.clone());
        let mut add = |i: usize, j: usize, what: String| -> Result<()> {
            if adj.get(i, j) {
                return Err(Error::Precondition(format!("{what} listed twice")));
            }
            adj.set(i, j, true);
            adj.set(j, i, true);
            Ok(())
        };
        for (u, v) in edges {
            let (i, j) = (ground.index_of(u.as_ref())?, ground.index_of(v.as_ref())?);
            add(i, j, format!("edge {{{},{}}}", u.as_ref(), v.as_ref()))?;
        }
        for u in loops {
            let i = ground.index_of(u.as_ref())?;
            add(i, i, format!("loop {}", u.as_ref()))?;
        }
        Ok(Graph { adj })
    }

    pub fn matrix(&self) -> &Gf2Matrix {
        &self.adj
    }

    pub fn ground(&self) -> &GroundSet {
        self.adj.ground()
    }

    pub fn n(&self) -> usize {
        self.adj.n()
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.adj.get(u, u)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    /// Looped vertices as a mask.
    pub fn loops(&self) -> u64 {
        (0..self.n())
            .filter(|&u| self.has_loop(u))
            .fold(0, |acc, u| acc | 1 << u)
    }

    /// Edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| bits(self.adj.rows()[u] >> (u + 1)).map(move |k| (u, u + 1 + k)))
            .collect()
    }

    /// `N_G(u)`, not including `u` itself.
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj.rows()[u] & !(1 << u)
    }

    /// `n(G[X])`.
    pub fn nullity(&self, x: u64) -> Result<usize> {
        Ok(self.adj.det_nullity(x)?.1)
    }

    /// `n((G + Z)[X])` without building `G + Z`.
    fn nullity_toggled(&self, z: u64, x: u64) -> usize {
        let rows: Vec<u64> = bits(x)
            .map(|i| (self.adj.rows()[i] ^ (z & 1 << i)) & x)
            .collect();
        x.count_ones() as usize - rank(&rows)
    }

    /// `M_G` with the default size cap.
    pub fn to_system(&self) -> Result<SetSystem> {
        self.adj.support_set_system()
    }

    pub fn to_system_with(&self, limit: usize) -> Result<SetSystem> {
        self.adj.support_set_system_with(limit)
    }

    /// Reconstructs `G` from `M_G`: `{u}` is a loop iff `{u} ∈ M`, and `{u,v}` is
    /// an edge iff `({u,v} ∈ M) ⊕ ({u} ∈ M ∧ {v} ∈ M)`. The result is checked by
    /// recomputing `M_G`.
    pub fn from_system(m: &SetSystem) -> Result<Self> {
        Self::from_system_with(m, SUPPORT_LIMIT)
    }

    pub fn from_system_with(m: &SetSystem, limit: usize) -> Result<Self> {
        let n = m.n();
        let mut adj = Gf2Matrix::zero(m.ground().clone());
        for u in 0..n {
            if m.contains(1 << u) {
                adj.set(u, u, true);
            }
            for v in 0..u {
                let pair = m.contains(1 << u | 1 << v);
                let both = m.contains(1 << u) && m.contains(1 << v);
                if pair != both {
                    adj.set(u, v, true);
                    adj.set(v, u, true);
                }
            }
        }
        let g = Graph { adj };
        if &g.to_system_with(limit)? != m {
            return Err(Error::NotAGraph);
        }
        Ok(g)
    }

    /// `G + X`: toggles the loops on `X`.
    pub fn loop_complement(&self, x: u64) -> Result<Graph> {
        self.ground().check_subset(x)?;
        let mut adj = self.adj.clone();
        for u in bits(x) {
            adj.toggle(u, u);
        }
        Ok(Graph { adj })
    }

    /// `G * X`, defined when `A(G)[X]` is nonsingular.
    pub fn pivot(&self, x: u64) -> Result<Graph> {
        Ok(Graph {
            adj: self.adj.ppt(x)?,
        })
    }

    /// `G ~* X`, element by element as `+u *u +u`; on a single vertex this is
    /// defined exactly when the vertex (at that point) has no loop.
    pub fn dual_pivot(&self, x: u64) -> Result<Graph> {
        self.ground().check_subset(x)?;
        let mut g = self.clone();
        for u in bits(x) {
            let bit = 1u64 << u;
            g = g.loop_complement(bit)?.pivot(bit)?.loop_complement(bit)?;
        }
        Ok(g)
    }

    pub fn flip(&self, kind: Flip, x: u64) -> Result<Graph> {
        match kind {
            Flip::Pivot => self.pivot(x),
            Flip::LoopComplement => self.loop_complement(x),
            Flip::DualPivot => self.dual_pivot(x),
        }
    }

    /// `G \ X`, the subgraph induced by `V − X`.
    pub fn delete(&self, x: u64) -> Result<Graph> {
        self.ground().check_subset(x)?;
        Ok(Graph {
            adj: self.adj.principal_submatrix(self.ground().full() & !x)?,
        })
    }

    /// Minimal nonempty members of `M_G`: the looped singletons and the edges
    /// between two non-looped vertices, in canonical order.
    pub fn elementary_pivots(&self) -> Vec<u64> {
        let loops = self.loops();
        let mut out: Vec<u64> = bits(loops).map(|u| 1u64 << u).collect();
        out.extend(
            self.edges()
                .into_iter()
                .filter(|&(u, v)| loops >> u & 1 == 0 && loops >> v & 1 == 0)
                .map(|(u, v)| 1u64 << u | 1 << v),
        );
        out.sort_unstable();
        out
    }

    /// Complements the edges among `N_G(u)` without touching loops.
    pub fn local_complement(&self, u: usize) -> Result<Graph> {
        if u >= self.n() {
            return Err(Error::NotASubset {
                subset: 1u64.checked_shl(u as u32).unwrap_or(0),
                n: self.n(),
            });
        }
        let nb = self.neighbors(u);
        let mut adj = self.adj.clone();
        for a in bits(nb) {
            for b in bits(nb) {
                if a != b {
                    adj.toggle(a, b);
                }
            }
        }
        Ok(Graph { adj })
    }
}

/// A graph polynomial from its nullity sum:
/// `q1 = Σ y^{n(G[X])}`, `q2 = Σ y^{n(G+X)}`, `q3 = Σ y^{n((G+V)[X])}`,
/// `Q1 = Σ_X Σ_{Z⊆X} y^{n((G+Z)[X])}`.
pub fn graph_poly(g: &Graph, kind: PolyKind) -> Result<UniPoly> {
    graph_poly_with(g, kind, Limits::default())
}

pub fn graph_poly_with(g: &Graph, kind: PolyKind, limits: Limits) -> Result<UniPoly> {
    let n = g.n();
    let full = g.ground().full();
    let mut counts = vec![0u64; n + 1];
    match kind {
        PolyKind::Q1 => {
            check_dense("Q1", n, limits.double_sum)?;
            for x in subsets(full) {
                for z in subsets(x) {
                    counts[g.nullity_toggled(z, x)] += 1;
                }
            }
        }
        _ => {
            check_dense(kind.name(), n, limits.direct)?;
            for x in subsets(full) {
                let k = match kind {
                    PolyKind::q1 => g.nullity_toggled(0, x),
                    PolyKind::q2 => g.nullity_toggled(x, full),
                    _ => g.nullity_toggled(full, x),
                };
                counts[k] += 1;
            }
        }
    }
    Ok(UniPoly::from_degree_counts(&counts))
}

/// The marked-graph bracket at `B = 1`: `Σ_{X⊆V} y^{n((G+X)[X ∪ C])}`.
pub fn marked_bracket(g: &Graph, c: u64) -> Result<UniPoly> {
    g.ground().check_subset(c)?;
    let n = g.n();
    check_dense("marked bracket", n, Limits::default().direct)?;
    let mut counts = vec![0u64; n + 1];
    for x in subsets(g.ground().full()) {
        counts[g.nullity_toggled(x, x | c)] += 1;
    }
    Ok(UniPoly::from_degree_counts(&counts))
}
