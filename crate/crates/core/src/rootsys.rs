//! Root systems of the simple Lie algebras and the grading defined by the
//! highest root.
//!
//! Roots are stored on a doubled integer lattice: every coordinate is twice
//! the coordinate of the usual orthonormal realization, so that the
//! half-integral roots of `E8`, `E7`, `E6` and `F4` stay integral. Only
//! ratios of inner products are ever used, which the scaling leaves alone.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use num_traits::ToPrimitive;

use crate::field::{q, qi64, Q};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub const ALL: [Family; 9] = [Family::A, Family::B, Family::C, Family::D, Family::E6, Family::E7, Family::E8, Family::F4, Family::G2];

    /// Fixed rank of an exceptional family.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 | Family::E7 | Family::E8 => "E",
            Family::F4 => "F",
            Family::G2 => "G",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "A" | "a" => Family::A,
            "B" | "b" => Family::B,
            "C" | "c" => Family::C,
            "D" | "d" => Family::D,
            "E6" | "e6" => Family::E6,
            "E7" | "e7" => Family::E7,
            "E8" | "e8" => Family::E8,
            "F4" | "f4" => Family::F4,
            "G2" | "g2" => Family::G2,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSystemError {
    InvalidRank {
        family: Family,
        rank: usize,
    },
    /// An internal consistency check failed; indicates a bug.
    Internal(String),
}

impl fmt::Display for RootSystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystemError::InvalidRank { family, rank } => {
                write!(f, "no simple Lie algebra of type {:?} with rank {}", family, rank)
            }
            RootSystemError::Internal(msg) => write!(f, "internal consistency failure: {}", msg),
        }
    }
}

type Root = Vec<i64>;

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn lex_positive(a: &[i64]) -> bool {
    a.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// A simple type `X_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Self {
        SimpleType { family, rank }
    }

    /// Dimension of the simple Lie algebra.
    pub fn dim(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 2),
            Family::B | Family::C => r * (2 * r + 1),
            Family::D => r * (2 * r - 1),
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
            Family::F4 => 52,
            Family::G2 => 14,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A reductive Lie algebra: simple ideals plus an abelian center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reductive {
    pub simple: Vec<SimpleType>,
    pub center: usize,
}

impl Reductive {
    /// Builds from possibly degenerate labels such as `D2`, `B1` or `A0`,
    /// which are rewritten to their standard forms.
    pub fn from_labels(labels: &[(Family, usize)], center: usize) -> Self {
        let mut out = Reductive { simple: Vec::new(), center };
        for &(family, rank) in labels {
            out.push_normalized(family, rank);
        }
        out.simple.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.family.cmp(&b.family)));
        out
    }

    fn push_normalized(&mut self, family: Family, rank: usize) {
        use Family::*;
        match (family, rank) {
            (_, 0) => {}
            (A | B | C, 1) => self.simple.push(SimpleType::new(A, 1)),
            (D, 1) => self.center += 1,
            (D, 2) => {
                self.simple.push(SimpleType::new(A, 1));
                self.simple.push(SimpleType::new(A, 1));
            }
            (D, 3) => self.simple.push(SimpleType::new(A, 3)),
            (f, r) => self.simple.push(SimpleType::new(f, r)),
        }
    }

    pub fn dim(&self) -> usize {
        self.simple.iter().map(SimpleType::dim).sum::<usize>() + self.center
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple.iter().map(|s| s.rank).sum()
    }

    /// Canonical isomorphism class: `C2` and `B2` are identified.
    pub fn iso_class(&self) -> (Vec<SimpleType>, usize) {
        let mut s: Vec<SimpleType> = self
            .simple
            .iter()
            .map(|t| match (t.family, t.rank) {
                (Family::C, 2) => SimpleType::new(Family::B, 2),
                _ => *t,
            })
            .collect();
        s.sort();
        (s, self.center)
    }

    pub fn isomorphic(&self, other: &Reductive) -> bool {
        self.iso_class() == other.iso_class()
    }
}

impl fmt::Display for Reductive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.simple.iter().map(|s| format!("{}", s)).collect();
        if self.center > 0 {
            parts.push(if self.center == 1 { String::from("u(1)") } else { format!("u(1)^{}", self.center) });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// All roots, doubled coordinates.
    roots: Vec<Root>,
    positive: Vec<Root>,
    simple: Vec<Root>,
    cartan: Vec<Vec<i64>>,
    highest: Root,
}

fn classical_roots(family: Family, rank: usize) -> Vec<Root> {
    let mut out = Vec::new();
    let d = if family == Family::A { rank + 1 } else { rank };
    let unit = |i: usize, c: i64| {
        let mut v = vec![0; d];
        v[i] = c;
        v
    };
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            out.push(add(&unit(i, 2), &unit(j, -2)));
            if family != Family::A && i < j {
                out.push(add(&unit(i, 2), &unit(j, 2)));
                out.push(add(&unit(i, -2), &unit(j, -2)));
            }
        }
        match family {
            Family::B => {
                out.push(unit(i, 2));
                out.push(unit(i, -2));
            }
            Family::C => {
                out.push(unit(i, 4));
                out.push(unit(i, -4));
            }
            _ => {}
        }
    }
    out
}

fn e8_roots() -> Vec<Root> {
    let mut out = classical_roots(Family::D, 8);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push((0..8).map(|k| if mask & (1 << k) != 0 { -1 } else { 1 }).collect());
        }
    }
    out
}

fn f4_roots() -> Vec<Root> {
    let mut out = classical_roots(Family::B, 4);
    for mask in 0u32..16 {
        out.push((0..4).map(|k| if mask & (1 << k) != 0 { -1 } else { 1 }).collect());
    }
    out
}

fn g2_roots() -> Vec<Root> {
    let mut out = classical_roots(Family::A, 2);
    for i in 0..3 {
        let long: Root = (0..3).map(|k| if k == i { 4 } else { -2 }).collect();
        out.push(long.iter().map(|x| -x).collect());
        out.push(long);
    }
    out
}

fn raw_roots(family: Family, rank: usize) -> Vec<Root> {
    match family {
        Family::A | Family::B | Family::C | Family::D => classical_roots(family, rank),
        Family::E8 => e8_roots(),
        Family::E7 => {
            let w = [0, 0, 0, 0, 0, 0, 2, 2];
            e8_roots().into_iter().filter(|r| dot(r, &w) == 0).collect()
        }
        Family::E6 => {
            let w1 = [0, 0, 0, 0, 0, 0, 2, 2];
            let w2 = [0, 0, 0, 0, 0, 2, -2, 0];
            e8_roots().into_iter().filter(|r| dot(r, &w1) == 0 && dot(r, &w2) == 0).collect()
        }
        Family::F4 => f4_roots(),
        Family::G2 => g2_roots(),
    }
}

/// Simple roots of the positive system `positive`: positive roots that are
/// not the sum of two positive roots. Sorted lexicographically descending.
fn simple_of(positive: &[Root]) -> Vec<Root> {
    let set: BTreeSet<&Root> = positive.iter().collect();
    let mut decomposable = BTreeSet::new();
    for (i, a) in positive.iter().enumerate() {
        for b in &positive[i + 1..] {
            let s = add(a, b);
            if set.contains(&s) {
                decomposable.insert(s);
            }
        }
    }
    let mut simple: Vec<Root> = positive.iter().filter(|r| !decomposable.contains(*r)).cloned().collect();
    simple.sort_by(|a, b| b.cmp(a));
    simple
}

fn cartan_of(simple: &[Root]) -> Result<Vec<Vec<i64>>, RootSystemError> {
    let n = simple.len();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let num = 2 * dot(&simple[i], &simple[j]);
            let den = dot(&simple[j], &simple[j]);
            if num % den != 0 {
                return Err(RootSystemError::Internal(format!("non-integral Cartan entry {}/{}", num, den)));
            }
            c[i][j] = num / den;
        }
    }
    Ok(c)
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<RootSystem, RootSystemError> {
        let valid = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            f => f.fixed_rank() == Some(rank),
        };
        if !valid {
            return Err(RootSystemError::InvalidRank { family, rank });
        }
        let roots: Vec<Root> = raw_roots(family, rank).into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let positive: Vec<Root> = roots.iter().filter(|r| lex_positive(r)).cloned().collect();
        let simple = simple_of(&positive);
        if simple.len() != rank {
            return Err(RootSystemError::Internal(format!("found {} simple roots, expected {}", simple.len(), rank)));
        }
        let cartan = cartan_of(&simple)?;
        let mut rs = RootSystem { family, rank, roots, positive, simple, cartan, highest: Vec::new() };
        let heights = rs.positive.iter().map(|r| rs.simple_coefficients(r).map(|c| c.iter().sum::<i64>()));
        let mut best: Option<(i64, usize)> = None;
        for (idx, h) in heights.enumerate() {
            let h = h?;
            if best.is_none_or(|(bh, _)| h > bh) {
                best = Some((h, idx));
            }
        }
        let (_, idx) = best.ok_or_else(|| RootSystemError::Internal("no positive roots".into()))?;
        rs.highest = rs.positive[idx].clone();
        rs.validate()?;
        Ok(rs)
    }

    fn validate(&self) -> Result<(), RootSystemError> {
        let set: BTreeSet<&Root> = self.roots.iter().collect();
        for a in &self.simple {
            if set.contains(&add(&self.highest, a)) {
                return Err(RootSystemError::Internal("theta + alpha_i is a root".into()));
            }
        }
        for (i, row) in self.cartan.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if (i == j && c != 2) || (i != j && c > 0) {
                    return Err(RootSystemError::Internal(format!("bad Cartan entry c[{}][{}] = {}", i, j, c)));
                }
            }
        }
        if self.roots.len() + self.rank != self.expected_dim() {
            return Err(RootSystemError::Internal(format!("{} roots do not match dimension {}", self.roots.len(), self.expected_dim())));
        }
        Ok(())
    }

    fn expected_dim(&self) -> usize {
        SimpleType::new(self.family, self.rank).dim()
    }

    /// Coefficients of a root in the basis of simple roots.
    pub fn simple_coefficients(&self, root: &[i64]) -> Result<Vec<i64>, RootSystemError> {
        let n = self.rank;
        let gram = Matrix::from_fn(n, n, |i, j| qi64(dot(&self.simple[i], &self.simple[j])));
        let rhs: Vec<Q> = self.simple.iter().map(|s| qi64(dot(s, root))).collect();
        let sol = gram.solve(&rhs).ok_or_else(|| RootSystemError::Internal("root outside span".into()))?;
        sol.iter()
            .map(|c| {
                if c.is_integer() {
                    c.to_integer().to_i64().ok_or_else(|| RootSystemError::Internal("overflow".into()))
                } else {
                    Err(RootSystemError::Internal(format!("non-integral coefficient {}", c)))
                }
            })
            .collect()
    }

    pub fn label(&self) -> String {
        format!("{}", SimpleType::new(self.family, self.rank))
    }

    pub fn dim(&self) -> usize {
        self.roots.len() + self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.highest
    }

    /// Root coordinates in the orthonormal realization.
    pub fn coordinates(&self, root: &[i64]) -> Vec<Q> {
        root.iter().map(|&x| q(x, 2)).collect()
    }

    /// Inner product in the orthonormal realization.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        q(dot(a, b), 4)
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.roots.binary_search_by(|r| r.as_slice().cmp(v)).is_ok()
    }

    /// `2(α|θ)/(θ|θ)`.
    pub fn theta_eigenvalue(&self, root: &[i64]) -> i64 {
        let num = 2 * dot(root, &self.highest);
        let den = dot(&self.highest, &self.highest);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    pub fn grade_by_highest_root(&self) -> FiveGrading {
        let mut dims: BTreeMap<i64, usize> = (-2..=2).map(|e| (e, 0)).collect();
        for r in &self.roots {
            *dims.entry(self.theta_eigenvalue(r)).or_insert(0) += 1;
        }
        *dims.get_mut(&0).unwrap() += self.rank;
        FiveGrading { dims }
    }

    /// Type of the reductive centralizer of the `sl2` spanned by `E_θ`, `H_θ`, `E_{-θ}`.
    pub fn theta_centralizer(&self) -> Result<Reductive, RootSystemError> {
        let orth: Vec<Root> = self.positive.iter().filter(|r| dot(r, &self.highest) == 0).cloned().collect();
        let simple = simple_of(&orth);
        let cartan = cartan_of(&simple)?;
        let mut labels = classify_cartan(&cartan)?;
        if self.family == Family::C {
            for t in labels.iter_mut() {
                if t.family == Family::B && t.rank == 2 {
                    t.family = Family::C;
                }
            }
        }
        let center = self.rank - 1 - simple.len();
        let pairs: Vec<(Family, usize)> = labels.iter().map(|t| (t.family, t.rank)).collect();
        Ok(Reductive::from_labels(&pairs, center))
    }

    pub fn minimal_orbit_report(&self) -> Result<MinOrbitReport, RootSystemError> {
        let grading = self.grade_by_highest_root();
        let centralizer = self.theta_centralizer()?;
        let dim_g1 = grading.dim(1);
        let dim_h = grading.dim(0) - 1;
        let report = MinOrbitReport {
            algebra_label: self.label(),
            dim_g: self.dim(),
            dim_g1,
            min_orbit_dim: dim_g1 + 2,
            gk_dim: (dim_g1 + 2) / 2,
            centralizer_label: format!("{}", centralizer),
            centralizer,
            dim_h,
        };
        report.verify()?;
        Ok(report)
    }
}

/// Dimensions of the eigenspaces of `ad H_θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiveGrading {
    pub dims: BTreeMap<i64, usize>,
}

impl FiveGrading {
    pub fn dim(&self, e: i64) -> usize {
        self.dims.get(&e).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.dims.iter().all(|(e, d)| self.dim(-e) == *d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinOrbitReport {
    pub algebra_label: String,
    pub dim_g: usize,
    pub dim_g1: usize,
    pub min_orbit_dim: usize,
    pub gk_dim: usize,
    pub centralizer_label: String,
    pub centralizer: Reductive,
    pub dim_h: usize,
}

impl MinOrbitReport {
    /// `dim g = dim h + 2 dim g1 + 3`.
    pub fn dimension_identity_holds(&self) -> bool {
        self.dim_g == self.dim_h + 2 * self.dim_g1 + 3
    }

    fn verify(&self) -> Result<(), RootSystemError> {
        let fail = |m: &str| Err(RootSystemError::Internal(format!("{}: {}", self.algebra_label, m)));
        if self.min_orbit_dim != self.dim_g1 + 2 || self.min_orbit_dim % 2 != 0 {
            return fail("minimal orbit dimension");
        }
        if 2 * self.gk_dim != self.min_orbit_dim {
            return fail("Gelfand-Kirillov dimension");
        }
        if !self.dimension_identity_holds() {
            return fail("dim g = dim h + 2 dim g1 + 3");
        }
        if self.centralizer.dim() != self.dim_h {
            return fail("centralizer type does not match dim h");
        }
        Ok(())
    }
}

/// Decomposes a Cartan matrix into connected components and names each.
pub fn classify_cartan(c: &[Vec<i64>]) -> Result<Vec<SimpleType>, RootSystemError> {
    let n = c.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && c[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let sub: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| c[i][j]).collect()).collect();
        out.push(classify_connected(&sub)?);
    }
    out.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.family.cmp(&b.family)));
    Ok(out)
}

fn classify_connected(c: &[Vec<i64>]) -> Result<SimpleType, RootSystemError> {
    let k = c.len();
    if k == 1 {
        return Ok(SimpleType::new(Family::A, 1));
    }
    let unknown = || RootSystemError::Internal(format!("unclassifiable Cartan matrix {:?}", c));
    let mut degree = vec![0usize; k];
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if c[i][j] != 0 {
                degree[i] += 1;
                degree[j] += 1;
                edges.push((i, j, c[i][j] * c[j][i]));
            }
        }
    }
    if edges.len() != k - 1 {
        return Err(unknown());
    }
    if edges.iter().any(|e| e.2 == 3) {
        return if k == 2 { Ok(SimpleType::new(Family::G2, 2)) } else { Err(unknown()) };
    }
    let doubles: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 == 2).collect();
    if degree.iter().any(|&d| d > 3) {
        return Err(unknown());
    }
    match doubles.len() {
        0 => {}
        1 => {
            if degree.iter().any(|&d| d > 2) {
                return Err(unknown());
            }
            let (u, v, _) = *doubles[0];
            if k == 4 && degree[u] == 2 && degree[v] == 2 {
                return Ok(SimpleType::new(Family::F4, 4));
            }
            let (leaf, other) = if degree[u] == 1 {
                (u, v)
            } else if degree[v] == 1 {
                (v, u)
            } else {
                return Err(unknown());
            };
            // c[other][leaf] = -2 means the leaf is the short root; B2 = C2
            let family = if k == 2 || c[other][leaf] == -2 { Family::B } else { Family::C };
            return Ok(SimpleType::new(family, k));
        }
        _ => return Err(unknown()),
    }
    let branches: Vec<usize> = (0..k).filter(|&i| degree[i] == 3).collect();
    match branches.len() {
        0 => Ok(SimpleType::new(Family::A, k)),
        1 => {
            let b = branches[0];
            let mut arms: Vec<usize> = (0..k).filter(|&j| j != b && c[b][j] != 0).map(|j| arm_length(c, b, j)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(SimpleType::new(Family::D, k)),
                [1, 2, 2] => Ok(SimpleType::new(Family::E6, 6)),
                [1, 2, 3] => Ok(SimpleType::new(Family::E7, 7)),
                [1, 2, 4] => Ok(SimpleType::new(Family::E8, 8)),
                _ => Err(unknown()),
            }
        }
        _ => Err(unknown()),
    }
}

fn arm_length(c: &[Vec<i64>], from: usize, first: usize) -> usize {
    let mut prev = from;
    let mut cur = first;
    let mut len = 1;
    loop {
        let next = (0..c.len()).find(|&j| j != prev && j != cur && c[cur][j] != 0);
        match next {
            Some(nx) => {
                prev = cur;
                cur = nx;
                len += 1;
            }
            None => return len,
        }
    }
}

/// Rank parameters for the classical rows of the dimension table.
///
/// Ranges are in the table's own parametrization: `sl_n` for the `A` row and
/// `n` for `B_n`, `C_n`, `D_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Config {
    pub a: RangeInclusive<usize>,
    pub b: RangeInclusive<usize>,
    pub c: RangeInclusive<usize>,
    pub d: RangeInclusive<usize>,
}

impl Default for Table1Config {
    fn default() -> Self {
        Table1Config { a: 3..=8, b: 2..=6, c: 2..=6, d: 3..=6 }
    }
}

/// Closed-form values of one table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub dim_g: usize,
    pub centralizer: Reductive,
    pub dim_g1: usize,
    pub gk_dim: usize,
}

/// Closed forms of the dimension table, in its `n` parametrization.
pub fn closed_form(family: Family, n: usize) -> ClosedForm {
    use Family::*;
    let cf = |dim_g, labels: &[(Family, usize)], center, dim_g1, gk_dim| ClosedForm {
        dim_g,
        centralizer: Reductive::from_labels(labels, center),
        dim_g1,
        gk_dim,
    };
    match family {
        // gl_{n-2} = sl_{n-2} + u(1)
        A => cf(n * n - 1, &[(A, n.saturating_sub(3))], usize::from(n >= 3), 2 * (n - 2), n - 1),
        B => cf(n * (2 * n + 1), &[(B, n - 2), (A, 1)], 0, 2 * (2 * n - 3), 2 * n - 2),
        C => cf(n * (2 * n + 1), &[(C, n - 1)], 0, 2 * (n - 1), n),
        D => cf(n * (2 * n - 1), &[(D, n - 2), (A, 1)], 0, 4 * (n - 2), 2 * n - 3),
        E6 => cf(78, &[(A, 5)], 0, 20, 11),
        E7 => cf(133, &[(D, 6)], 0, 32, 17),
        E8 => cf(248, &[(E7, 7)], 0, 56, 29),
        F4 => cf(52, &[(C, 3)], 0, 14, 8),
        G2 => cf(14, &[(A, 1)], 0, 4, 3),
    }
}

/// Rank of the algebra in the table parametrization.
pub fn table_rank(family: Family, n: usize) -> usize {
    match family {
        Family::A => n - 1,
        Family::B | Family::C | Family::D => n,
        f => f.fixed_rank().unwrap(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub family: Family,
    /// Table parameter `n` (`sl_n`, `B_n`, ...); the rank for exceptional rows.
    pub n: usize,
    pub report: MinOrbitReport,
    pub expected: ClosedForm,
}

impl Table1Row {
    pub fn dimension_identity_ok(&self) -> bool {
        self.report.dimension_identity_holds()
    }

    pub fn matches_closed_form(&self) -> bool {
        let r = &self.report;
        let e = &self.expected;
        r.dim_g == e.dim_g && r.dim_g1 == e.dim_g1 && r.gk_dim == e.gk_dim && r.centralizer.isomorphic(&e.centralizer)
    }
}

pub fn table1_report(config: &Table1Config) -> Result<Vec<Table1Row>, RootSystemError> {
    let mut params: Vec<(Family, usize)> = Vec::new();
    params.extend(config.a.clone().map(|n| (Family::A, n)));
    params.extend(config.b.clone().map(|n| (Family::B, n)));
    params.extend(config.c.clone().map(|n| (Family::C, n)));
    params.extend(config.d.clone().map(|n| (Family::D, n)));
    for f in [Family::E6, Family::E7, Family::E8, Family::F4, Family::G2] {
        params.push((f, f.fixed_rank().unwrap()));
    }
    params
        .into_iter()
        .map(|(family, n)| {
            let rs = RootSystem::build(family, table_rank(family, n))?;
            Ok(Table1Row { family, n, report: rs.minimal_orbit_report()?, expected: closed_form(family, n) })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl4_has_twelve_roots() {
        let rs = RootSystem::build(Family::A, 3).unwrap();
        assert_eq!(rs.num_roots(), 12);
        assert_eq!(rs.dim(), 15);
    }

    #[test]
    fn sl2_is_trivially_graded() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        assert_eq!(rs.num_roots(), 2);
        let g = rs.grade_by_highest_root();
        assert_eq!(g.dim(-2), 1);
        assert_eq!(g.dim(0), 1);
        assert_eq!(g.dim(2), 1);
        assert_eq!(g.dim(1), 0);
        assert_eq!(g.dim(-1), 0);
    }

    #[test]
    fn g2_dimension() {
        assert_eq!(RootSystem::build(Family::G2, 2).unwrap().dim(), 14);
    }

    #[test]
    fn rejects_invalid_ranks() {
        assert!(matches!(RootSystem::build(Family::B, 1), Err(RootSystemError::InvalidRank { .. })));
        assert!(RootSystem::build(Family::D, 2).is_err());
        assert!(RootSystem::build(Family::E7, 6).is_err());
        assert!(RootSystem::build(Family::A, 0).is_err());
    }

    #[test]
    fn a3_grading_by_enumeration() {
        let rs = RootSystem::build(Family::A, 3).unwrap();
        // independent binning straight from the coordinates
        let theta = rs.highest_root().to_vec();
        let tt = dot(&theta, &theta);
        let mut bins = BTreeMap::new();
        for r in rs.roots() {
            *bins.entry(2 * dot(r, &theta) / tt).or_insert(0usize) += 1;
        }
        assert_eq!(bins.get(&-2), Some(&1));
        assert_eq!(bins.get(&-1), Some(&4));
        assert_eq!(bins.get(&0), Some(&2));
        let g = rs.grade_by_highest_root();
        let expected: BTreeMap<i64, usize> = [(-2, 1), (-1, 4), (0, 5), (1, 4), (2, 1)].into_iter().collect();
        assert_eq!(g.dims, expected);
    }

    #[test]
    fn e8_grading() {
        let rs = RootSystem::build(Family::E8, 8).unwrap();
        assert_eq!(rs.num_roots(), 240);
        assert_eq!(rs.grade_by_highest_root().dim(1), 56);
    }

    #[test]
    fn exceptional_root_counts() {
        for (f, n) in [(Family::E6, 72), (Family::E7, 126), (Family::F4, 48), (Family::G2, 12)] {
            let rs = RootSystem::build(f, f.fixed_rank().unwrap()).unwrap();
            assert_eq!(rs.num_roots(), n, "{:?}", f);
        }
    }

    #[test]
    fn e8_centralizer_is_e7() {
        let r = RootSystem::build(Family::E8, 8).unwrap().minimal_orbit_report().unwrap();
        assert_eq!((r.dim_g, r.dim_g1, r.gk_dim), (248, 56, 29));
        assert_eq!(r.centralizer_label, "E7");
    }

    #[test]
    fn sl5_centralizer_is_gl3() {
        let r = RootSystem::build(Family::A, 4).unwrap().minimal_orbit_report().unwrap();
        assert_eq!(r.centralizer, Reductive::from_labels(&[(Family::A, 2)], 1));
        assert_eq!(r.centralizer_label, "A2+u(1)");
        assert_eq!((r.dim_g1, r.gk_dim), (6, 4));
    }

    #[test]
    fn c3_centralizer_is_c2() {
        let r = RootSystem::build(Family::C, 3).unwrap().minimal_orbit_report().unwrap();
        assert_eq!(r.centralizer_label, "C2");
        assert_eq!((r.dim_g1, r.gk_dim), (4, 3));
    }

    #[test]
    fn f4_and_d4_rows() {
        let f4 = RootSystem::build(Family::F4, 4).unwrap().minimal_orbit_report().unwrap();
        assert_eq!((f4.dim_g, f4.centralizer_label.as_str(), f4.dim_g1, f4.gk_dim), (52, "C3", 14, 8));
        let d4 = RootSystem::build(Family::D, 4).unwrap().minimal_orbit_report().unwrap();
        assert_eq!((d4.dim_g, d4.dim_g1, d4.gk_dim), (28, 8, 5));
        assert_eq!(d4.centralizer, Reductive::from_labels(&[(Family::A, 1); 3], 0));
    }

    #[test]
    fn b2_row() {
        let r = RootSystem::build(Family::B, 2).unwrap().minimal_orbit_report().unwrap();
        assert_eq!((r.dim_g1, r.gk_dim), (2, 2));
    }

    #[test]
    fn principal_equals_minimal_for_sl2() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        let r = rs.minimal_orbit_report().unwrap();
        assert_eq!(rs.dim() - rs.rank, 2);
        assert_eq!(r.min_orbit_dim, rs.dim() - rs.rank);
    }

    #[test]
    fn classifier_names_standard_diagrams() {
        for (f, r) in [(Family::B, 4), (Family::C, 4), (Family::D, 5), (Family::E6, 6), (Family::E7, 7)] {
            let rs = RootSystem::build(f, r).unwrap();
            let t = classify_cartan(rs.cartan_matrix()).unwrap();
            assert_eq!(t, vec![SimpleType::new(f, r)]);
        }
    }

    #[test]
    fn cartan_invariants_and_highest_root() {
        for f in Family::ALL {
            let r = f.fixed_rank().unwrap_or(4);
            let rs = RootSystem::build(f, r).unwrap();
            let theta = rs.highest_root().to_vec();
            assert!(rs.positive_roots().contains(&theta));
            for a in rs.simple_roots() {
                assert!(!rs.is_root(&add(&theta, a)));
            }
            let g = rs.grade_by_highest_root();
            assert_eq!(g.total(), rs.dim());
            assert!(g.is_symmetric());
            assert_eq!(g.dim(2), 1);
        }
    }
}
