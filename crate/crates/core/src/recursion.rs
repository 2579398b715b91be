//! Recursive computation of `q1`, `q2`, `q3` and `Q1` with explicit trees.
//!
//! Each step picks an element `u` on which the system splits and sums the
//! polynomial over two (or, for `Q1`, three) minors on `V − u`; a system on
//! which no element splits is a leaf with value `(y+1)^n` (resp. `(y+2)^n`).

use std::fmt::Write as _;

use crate::deltamatroid::{
    divisible_by_definition, is_delta_matroid, is_vf_closed, strongly_divisible_by_definition,
};
use crate::error::{Error, Result};
use crate::interlace::{poly_direct, PolyKind};
use crate::orbit::DEFAULT_ORBIT_CAP;
use crate::poly::UniPoly;
use crate::setsystem::SetSystem;

/// Above this ground-set size [`Check::Auto`] skips precondition checks.
pub const AUTO_CHECK_LIMIT: usize = 8;

/// Whether the hypotheses of a recursion are verified on entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Check {
    /// Check when `n ≤ AUTO_CHECK_LIMIT`.
    #[default]
    Auto,
    Always,
    Never,
}

/// Rule for picking the splitting element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ElementChoice {
    #[default]
    Smallest,
    Largest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecursionOptions {
    pub check: Check,
    pub choice: ElementChoice,
    /// Orbit cap for the vf-closure check.
    pub vf_cap: usize,
}

impl Default for RecursionOptions {
    fn default() -> Self {
        RecursionOptions {
            check: Check::Auto,
            choice: ElementChoice::Smallest,
            vf_cap: DEFAULT_ORBIT_CAP,
        }
    }
}

impl RecursionOptions {
    fn checks(&self, n: usize) -> bool {
        match self.check {
            Check::Auto => n <= AUTO_CHECK_LIMIT,
            Check::Always => true,
            Check::Never => false,
        }
    }

    fn order(&self, n: usize) -> Box<dyn Iterator<Item = usize>> {
        match self.choice {
            ElementChoice::Smallest => Box::new(0..n),
            ElementChoice::Largest => Box::new((0..n).rev()),
        }
    }
}

/// One node of a computation tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionTrace {
    /// Edge label from the parent, e.g. `\p`, `*p\p`, `~*p\p`; empty at the root.
    pub branch: String,
    pub system: SetSystem,
    /// Label of the splitting element; `None` at a leaf.
    pub element: Option<String>,
    pub value: UniPoly,
    pub children: Vec<RecursionTrace>,
}

impl RecursionTrace {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Leaves in depth-first, left-to-right order.
    pub fn leaves(&self) -> Vec<&RecursionTrace> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a RecursionTrace>) {
        if self.is_leaf() {
            out.push(self);
        }
        for c in &self.children {
            c.collect_leaves(out);
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(RecursionTrace::node_count)
            .sum::<usize>()
    }

    /// Every internal node equals the sum of its children.
    pub fn is_consistent(&self) -> bool {
        self.is_leaf()
            || (self
                .children
                .iter()
                .map(|c| c.value.clone())
                .sum::<UniPoly>()
                == self.value
                && self.children.iter().all(RecursionTrace::is_consistent))
    }

    /// Indented text rendering, one node per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let indent = "  ".repeat(depth);
        let label = if self.branch.is_empty() {
            String::new()
        } else {
            format!("{}: ", self.branch)
        };
        let _ = write!(out, "{indent}{label}{} = {}", self.system, self.value);
        match &self.element {
            Some(u) => {
                let _ = writeln!(out, "  [split on {u}]");
            }
            None => out.push('\n'),
        }
        for c in &self.children {
            c.render_into(out, depth + 1);
        }
    }
}

type Picker<'a> = &'a dyn Fn(&SetSystem, usize) -> bool;
type Splitter<'a> = &'a dyn Fn(&SetSystem, usize) -> Vec<(String, SetSystem)>;

struct Rule<'a> {
    splits: Picker<'a>,
    children: Splitter<'a>,
    leaf_base: i64,
}

fn run(m: &SetSystem, branch: String, rule: &Rule, opts: &RecursionOptions) -> RecursionTrace {
    let pick = opts.order(m.n()).find(|&u| (rule.splits)(m, u));
    match pick {
        None => RecursionTrace {
            branch,
            system: m.clone(),
            element: None,
            value: UniPoly::linear(rule.leaf_base).pow(m.n() as u32),
            children: Vec::new(),
        },
        Some(u) => {
            let children: Vec<RecursionTrace> = (rule.children)(m, u)
                .into_iter()
                .map(|(label, child)| run(&child, label, rule, opts))
                .collect();
            let value = children.iter().map(|c| c.value.clone()).sum();
            RecursionTrace {
                branch,
                system: m.clone(),
                element: Some(m.ground().label(u).to_string()),
                value,
                children,
            }
        }
    }
}

fn minors_q1(m: &SetSystem, u: usize) -> Vec<(String, SetSystem)> {
    let l = m.ground().label(u);
    vec![
        (format!("\\{l}"), m.delete_element(u)),
        (format!("*{l}\\{l}"), m.pivot(1 << u).delete_element(u)),
    ]
}

fn minors_q2(m: &SetSystem, u: usize) -> Vec<(String, SetSystem)> {
    let l = m.ground().label(u);
    vec![
        (format!("*{l}\\{l}"), m.pivot(1 << u).delete_element(u)),
        (
            format!("~*{l}\\{l}"),
            m.dual_pivot(1 << u).delete_element(u),
        ),
    ]
}

fn minors_q3(m: &SetSystem, u: usize) -> Vec<(String, SetSystem)> {
    let l = m.ground().label(u);
    vec![
        (
            format!("~*{l}\\{l}"),
            m.dual_pivot(1 << u).delete_element(u),
        ),
        (format!("\\{l}"), m.delete_element(u)),
    ]
}

fn minors_big_q1(m: &SetSystem, u: usize) -> Vec<(String, SetSystem)> {
    let mut v = minors_q1(m, u);
    let l = m.ground().label(u);
    v.push((
        format!("~*{l}\\{l}"),
        m.dual_pivot(1 << u).delete_element(u),
    ));
    v
}

fn require_proper(m: &SetSystem, op: &'static str) -> Result<()> {
    if m.is_proper() {
        Ok(())
    } else {
        Err(Error::Improper(op))
    }
}

/// `q1(M) = q1(M\u) + q1(M*u\u)` for `M` divisible by `u`, `(y+1)^n` otherwise.
pub fn q1_recursive(m: &SetSystem, opts: &RecursionOptions) -> Result<(UniPoly, RecursionTrace)> {
    require_proper(m, "q1_recursive")?;
    if opts.checks(m.n()) && !is_delta_matroid(m) {
        return Err(Error::Precondition(
            "q1 recursion needs a delta-matroid".into(),
        ));
    }
    let rule = Rule {
        splits: &divisible_by_definition,
        children: &minors_q1,
        leaf_base: 1,
    };
    let t = run(m, String::new(), &rule, opts);
    Ok((t.value.clone(), t))
}

/// `q2(M) = q2(M*u\u) + q2(M~*u\u)` when `M~*V` is divisible by `u`, and
/// `q3(M) = q3(M~*u\u) + q3(M\u)` when `M+V` is; `(y+1)^n` otherwise.
///
/// Divisibility of `M~*V` (resp. `M+V`) by `u` is read off `M~*u` (resp. `M+u`).
pub fn q2_q3_recursive(
    m: &SetSystem,
    kind: PolyKind,
    opts: &RecursionOptions,
) -> Result<(UniPoly, RecursionTrace)> {
    require_proper(m, "q2_q3_recursive")?;
    let full = m.ground().full();
    let (transformed, splits, children): (_, Picker, Splitter) = match kind {
        PolyKind::q2 => (
            m.dual_pivot(full),
            &|s: &SetSystem, u: usize| divisible_by_definition(&s.dual_pivot(1 << u), u),
            &minors_q2,
        ),
        PolyKind::q3 => (
            m.loop_complement(full),
            &|s: &SetSystem, u: usize| divisible_by_definition(&s.loop_complement(1 << u), u),
            &minors_q3,
        ),
        other => {
            return Err(Error::Precondition(format!(
                "{other} has no two-term recursion of this form"
            )))
        }
    };
    if opts.checks(m.n()) && !is_delta_matroid(&transformed) {
        let which = if kind == PolyKind::q2 { "M~*V" } else { "M+V" };
        return Err(Error::Precondition(format!(
            "{kind} recursion needs {which} to be a delta-matroid"
        )));
    }
    let rule = Rule {
        splits,
        children,
        leaf_base: 1,
    };
    let t = run(m, String::new(), &rule, opts);
    Ok((t.value.clone(), t))
}

/// `Q1(M) = Q1(M\u) + Q1(M*u\u) + Q1(M~*u\u)` for `M` strongly divisible by `u`,
/// `(y+2)^n` otherwise. Only valid for vf-closed delta-matroids.
#[allow(non_snake_case)]
pub fn Q1_recursive(m: &SetSystem, opts: &RecursionOptions) -> Result<(UniPoly, RecursionTrace)> {
    require_proper(m, "Q1_recursive")?;
    if opts.checks(m.n()) && !(is_delta_matroid(m) && is_vf_closed(m, opts.vf_cap)?) {
        return Err(Error::Precondition(
            "Q1 recursion needs a vf-closed delta-matroid".into(),
        ));
    }
    let rule = Rule {
        splits: &strongly_divisible_by_definition,
        children: &minors_big_q1,
        leaf_base: 2,
    };
    let t = run(m, String::new(), &rule, opts);
    Ok((t.value.clone(), t))
}

/// One level of the `Q1` three-term rule, with each term computed from its
/// defining sum, set against `Q1(M)` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeTermCheck {
    pub element: String,
    pub direct: UniPoly,
    pub terms: Vec<(String, UniPoly)>,
    pub sum: UniPoly,
}

impl ThreeTermCheck {
    pub fn agrees(&self) -> bool {
        self.direct == self.sum
    }
}

/// Evaluates the three-term rule at the first strongly dividing element; no
/// vf-closure assumption, so a disagreement exposes a system outside its scope.
#[allow(non_snake_case)]
pub fn Q1_three_term_check(
    m: &SetSystem,
    opts: &RecursionOptions,
) -> Result<Option<ThreeTermCheck>> {
    require_proper(m, "Q1_three_term_check")?;
    let Some(u) = opts
        .order(m.n())
        .find(|&u| strongly_divisible_by_definition(m, u))
    else {
        return Ok(None);
    };
    let direct = poly_direct(m, PolyKind::Q1)?;
    let terms = minors_big_q1(m, u)
        .into_iter()
        .map(|(label, child)| Ok((label, poly_direct(&child, PolyKind::Q1)?)))
        .collect::<Result<Vec<_>>>()?;
    let sum = terms.iter().map(|(_, p)| p.clone()).sum();
    Ok(Some(ThreeTermCheck {
        element: m.ground().label(u).to_string(),
        direct,
        terms,
        sum,
    }))
}

fn check_normal_vf(m: &SetSystem, opts: &RecursionOptions) -> Result<()> {
    require_proper(m, "normal step")?;
    if !m.is_normal() {
        return Err(Error::Precondition("the system is not normal".into()));
    }
    if opts.checks(m.n()) && !(is_delta_matroid(m) && is_vf_closed(m, opts.vf_cap)?) {
        return Err(Error::Precondition(
            "needs a vf-closed delta-matroid".into(),
        ));
    }
    Ok(())
}

fn element_of(m: &SetSystem, u: usize) -> Result<u64> {
    let bit = 1u64.checked_shl(u as u32).unwrap_or(0);
    if bit == 0 || u >= m.n() {
        return Err(Error::NotASubset {
            subset: bit,
            n: m.n(),
        });
    }
    Ok(bit)
}

fn step_node(
    m: &SetSystem,
    u: usize,
    parts: Vec<(String, SetSystem)>,
    eval: impl Fn(&SetSystem) -> Result<(UniPoly, RecursionTrace)>,
) -> Result<(UniPoly, RecursionTrace)> {
    let mut children = Vec::new();
    for (label, child) in parts {
        if !child.is_normal() {
            return Err(Error::Precondition(format!(
                "component {label} is not normal"
            )));
        }
        let (_, mut t) = eval(&child)?;
        t.branch = label;
        children.push(t);
    }
    let value: UniPoly = children.iter().map(|c| c.value.clone()).sum();
    let trace = RecursionTrace {
        branch: String::new(),
        system: m.clone(),
        element: Some(m.ground().label(u).to_string()),
        value: value.clone(),
        children,
    };
    Ok((value, trace))
}

/// `q1(M) = q1(M\u) + q1(M*X\u)` for a normal vf-closed delta-matroid, `X ∈ M`
/// and `u ∈ X`; both components are normal.
pub fn q1_normal_step(
    m: &SetSystem,
    x: u64,
    u: usize,
    opts: &RecursionOptions,
) -> Result<(UniPoly, RecursionTrace)> {
    check_normal_vf(m, opts)?;
    let bit = element_of(m, u)?;
    if !m.contains(x) || x & bit == 0 {
        return Err(Error::Precondition("need X in M with u in X".into()));
    }
    let l = m.ground().label(u);
    let xs = m.ground().format_subset(x);
    let parts = vec![
        (format!("\\{l}"), m.delete_element(u)),
        (format!("*{xs}\\{l}"), m.pivot(x).delete_element(u)),
    ];
    step_node(m, u, parts, |c| q1_recursive(c, opts))
}

/// `q2(M) = q2(M*{u,v}\{u,v}) + q2(M*{u}~*{v}\{u,v}) + q2(M~*{u}\u)` when
/// `{u,v} ∈ M` and `{u}, {v} ∉ M`.
pub fn q2_three_term_step(
    m: &SetSystem,
    u: usize,
    v: usize,
    opts: &RecursionOptions,
) -> Result<(UniPoly, RecursionTrace)> {
    check_normal_vf(m, opts)?;
    let (bu, bv) = (element_of(m, u)?, element_of(m, v)?);
    if u == v || !m.contains(bu | bv) || m.contains(bu) || m.contains(bv) {
        return Err(Error::Precondition(
            "need {u,v} in M and {u}, {v} not in M".into(),
        ));
    }
    let (lu, lv) = (m.ground().label(u), m.ground().label(v));
    let pair = bu | bv;
    let parts = vec![
        (
            format!("*{{{lu},{lv}}}\\{{{lu},{lv}}}"),
            m.pivot(pair).delete(pair)?,
        ),
        (
            format!("*{lu}~*{lv}\\{{{lu},{lv}}}"),
            m.pivot(bu).dual_pivot(bv).delete(pair)?,
        ),
        (format!("~*{lu}\\{lu}"), m.dual_pivot(bu).delete_element(u)),
    ];
    step_node(m, u, parts, |c| q2_q3_recursive(c, PolyKind::q2, opts))
}

/// `q3(M) = q3(M~*Y\u) + q3(M\u)` for `Y ∈ M+V` with `u ∈ Y`.
pub fn q3_normal_step(
    m: &SetSystem,
    y: u64,
    u: usize,
    opts: &RecursionOptions,
) -> Result<(UniPoly, RecursionTrace)> {
    check_normal_vf(m, opts)?;
    let bit = element_of(m, u)?;
    if y & bit == 0 || !m.loop_complement(m.ground().full()).contains(y) {
        return Err(Error::Precondition("need Y in M+V with u in Y".into()));
    }
    let l = m.ground().label(u);
    let ys = m.ground().format_subset(y);
    let parts = vec![
        (format!("~*{ys}\\{l}"), m.dual_pivot(y).delete_element(u)),
        (format!("\\{l}"), m.delete_element(u)),
    ];
    step_node(m, u, parts, |c| q2_q3_recursive(c, PolyKind::q3, opts))
}

/// Which case of the multiplicative form of the `q1` recursion applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepCase {
    /// `M*u\u` is improper: `q1(M) = (y+1) q1(M\u)`.
    Loop,
    /// `M\u` is improper: `q1(M) = (y+1) q1(M*u\u)`.
    Coloop,
    /// Both minors proper: `q1(M) = q1(M\u) + q1(M*u\u)`.
    Additive,
}

pub fn q1_multiplicative_step(
    m: &SetSystem,
    u: usize,
    opts: &RecursionOptions,
) -> Result<(StepCase, UniPoly)> {
    require_proper(m, "q1_multiplicative_step")?;
    let bit = element_of(m, u)?;
    let del = m.delete_element(u);
    let con = m.pivot(bit).delete_element(u);
    let q = |s: &SetSystem| q1_recursive(s, opts).map(|r| r.0);
    Ok(match (del.is_proper(), con.is_proper()) {
        (true, false) => (StepCase::Loop, &UniPoly::linear(1) * &q(&del)?),
        (false, true) => (StepCase::Coloop, &UniPoly::linear(1) * &q(&con)?),
        _ => (StepCase::Additive, q(&del)? + q(&con)?),
    })
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

    fn opts() -> RecursionOptions {
        RecursionOptions::default()
    }

    #[test]
    fn q1_tree_of_m0() {
        let (q, t) = q1_recursive(&m0(), &opts()).unwrap();
        assert_eq!(q, UniPoly::from_coeffs(vec![5, 3]));
        assert!(t.is_consistent());
        let leaves: Vec<String> = t.leaves().iter().map(|l| l.value.to_string()).collect();
        assert_eq!(leaves, ["1", "1", "y + 1", "y + 1", "y + 1"]);
        let branches: Vec<&str> = t.children.iter().map(|c| c.branch.as_str()).collect();
        assert_eq!(branches, ["\\p", "*p\\p"]);
        assert_eq!(t.children[0].system.to_string(), "({q,r}, {∅, {r}, {q,r}})");
        assert_eq!(t.children[1].system.to_string(), "({q,r}, {∅, {q}})");
    }

    #[test]
    fn q2_q3_of_m0() {
        assert_eq!(
            q2_q3_recursive(&m0(), PolyKind::q2, &opts()).unwrap().0,
            UniPoly::from_coeffs(vec![3, 4, 1])
        );
        assert_eq!(
            q2_q3_recursive(&m0(), PolyKind::q3, &opts()).unwrap().0,
            UniPoly::from_coeffs(vec![6, 2])
        );
        assert!(q2_q3_recursive(&m0(), PolyKind::Q1, &opts()).is_err());
    }

    #[test]
    fn big_q1_tree_of_m0() {
        let (q, t) = Q1_recursive(&m0(), &opts()).unwrap();
        assert_eq!(q, UniPoly::from_coeffs(vec![16, 10, 1]));
        let leaves: Vec<String> = t.leaves().iter().map(|l| l.value.to_string()).collect();
        assert_eq!(
            leaves,
            [
                "y + 2",
                "y + 2",
                "y + 2",
                "y^2 + 4y + 4",
                "y + 2",
                "y + 2",
                "y + 2"
            ]
        );
        assert_eq!(
            t.children[2].system.to_string(),
            "({q,r}, {{q}, {r}, {q,r}})"
        );
    }

    #[test]
    fn base_cases() {
        let single = SetSystem::from_labels(["a", "b"], [vec!["a"]]).unwrap();
        assert_eq!(
            q1_recursive(&single, &opts()).unwrap().0,
            UniPoly::linear(1).pow(2)
        );
        let u12 = SetSystem::from_labels(["a", "b"], [vec!["a"], vec!["b"]]).unwrap();
        assert_eq!(
            q1_recursive(&u12, &opts()).unwrap().0,
            UniPoly::from_coeffs(vec![2, 2])
        );
        let qrs = SetSystem::from_labels(
            ["q", "r", "s"],
            [
                vec!["q"],
                vec!["r"],
                vec!["s"],
                vec!["q", "r"],
                vec!["q", "s"],
                vec!["r", "s"],
            ],
        )
        .unwrap();
        assert_eq!(
            Q1_recursive(&qrs, &opts()).unwrap().0,
            UniPoly::linear(2).scale(9)
        );
    }

    #[test]
    fn three_term_mismatch_outside_vf_closed() {
        let m = SetSystem::from_labels(
            ["1", "2", "3"],
            [
                vec!["1"],
                vec!["2"],
                vec!["3"],
                vec!["1", "2"],
                vec!["1", "3"],
                vec!["2", "3"],
                vec!["1", "2", "3"],
            ],
        )
        .unwrap();
        assert!(matches!(
            Q1_recursive(&m, &opts()),
            Err(Error::Precondition(_))
        ));
        let c = Q1_three_term_check(&m, &opts()).unwrap().unwrap();
        assert_eq!(c.direct, UniPoly::from_coeffs(vec![14, 13]));
        assert_eq!(c.sum, UniPoly::from_coeffs(vec![14, 11, 2]));
        assert!(!c.agrees());
        assert_eq!(c.terms[0].1, UniPoly::from_coeffs(vec![6, 3]));
        let m0c = Q1_three_term_check(&m0(), &opts()).unwrap().unwrap();
        assert!(m0c.agrees());
    }

    #[test]
    fn normal_steps() {
        let m = m0();
        let (q, t) = q1_normal_step(&m, 0b001, 0, &opts()).unwrap();
        assert_eq!(q, UniPoly::from_coeffs(vec![5, 3]));
        assert!(t.children.iter().all(|c| c.system.is_normal()));
        let (q, _) = q1_normal_step(&m, 0b011, 0, &opts()).unwrap();
        assert_eq!(q, UniPoly::from_coeffs(vec![5, 3]));
        assert!(q1_normal_step(&m, 0b010, 1, &opts()).is_err());
        // path 1 - 3 - 2: {1,3} is an edge between non-loops
        let path =
            SetSystem::new(crate::GroundSet::numbered(3).unwrap(), [0, 0b101, 0b110]).unwrap();
        let (q, _) = q2_three_term_step(&path, 0, 2, &opts()).unwrap();
        assert_eq!(q, poly_direct(&path, PolyKind::q2).unwrap());
        let full = m.ground().full();
        for y in m
            .loop_complement(full)
            .family()
            .iter()
            .copied()
            .filter(|&y| y != 0)
        {
            let u = y.trailing_zeros() as usize;
            let (q, _) = q3_normal_step(&m, y, u, &opts()).unwrap();
            assert_eq!(q, UniPoly::from_coeffs(vec![6, 2]));
        }
    }

    #[test]
    fn multiplicative_cases() {
        let coloop = SetSystem::from_labels(["a"], [vec!["a"]]).unwrap();
        assert_eq!(
            q1_multiplicative_step(&coloop, 0, &opts()).unwrap(),
            (StepCase::Coloop, UniPoly::linear(1))
        );
        let lp = SetSystem::from_labels(["a"], [Vec::<&str>::new()]).unwrap();
        assert_eq!(
            q1_multiplicative_step(&lp, 0, &opts()).unwrap(),
            (StepCase::Loop, UniPoly::linear(1))
        );
        let (case, q) = q1_multiplicative_step(&m0(), 0, &opts()).unwrap();
        assert_eq!(case, StepCase::Additive);
        assert_eq!(q, UniPoly::from_coeffs(vec![5, 3]));
    }

    #[test]
    fn order_independent() {
        let largest = RecursionOptions {
            choice: ElementChoice::Largest,
            ..opts()
        };
        for kind in [PolyKind::q2, PolyKind::q3] {
            assert_eq!(
                q2_q3_recursive(&m0(), kind, &largest).unwrap().0,
                q2_q3_recursive(&m0(), kind, &opts()).unwrap().0
            );
        }
        assert_eq!(
            Q1_recursive(&m0(), &largest).unwrap().0,
            UniPoly::from_coeffs(vec![16, 10, 1])
        );
    }
}
