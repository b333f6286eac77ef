//! Wick contractions of free massless fields at four labeled points, the
//! bilocal-field commutator formula, Frobenius t-algebras and the real
//! division-ring classification of their commutants.
//!
//! Two-point functions `Δ⁺_{kl}` are formal commuting symbols; no analytic
//! relation between them is used.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::field::Q;
use crate::linalg::{express_in_span, span_rank, Matrix};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BilocalError {
    Shape {
        expected: (usize, usize),
        found: (usize, usize),
    },
    NotClosed(String),
    /// The algebra does not act irreducibly; decompose first.
    Reducible {
        commutant_dim: usize,
    },
}

impl fmt::Display for BilocalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BilocalError::Shape { expected, found } => {
                write!(f, "shape mismatch: expected {}x{}, found {}x{}", expected.0, expected.1, found.0, found.1)
            }
            BilocalError::NotClosed(m) => write!(f, "not a t-algebra: {}", m),
            BilocalError::Reducible { commutant_dim } => {
                write!(f, "algebra acts reducibly (commutant of dimension {} is not a division ring); decompose it first", commutant_dim)
            }
        }
    }
}

/// `Δ⁺_{kl}` as an ordered pair of point labels.
pub type DeltaSym = (u8, u8);

/// Polynomial over `Q` in the commuting symbols `Δ⁺_{kl}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct DeltaPoly(BTreeMap<Vec<DeltaSym>, Q>);

impl DeltaPoly {
    pub fn zero() -> Self {
        DeltaPoly(BTreeMap::new())
    }

    pub fn constant(c: Q) -> Self {
        let mut p = DeltaPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn plus(k: u8, l: u8) -> Self {
        let mut p = DeltaPoly::zero();
        p.add_term(vec![(k, l)], Q::one());
        p
    }

    /// `Δ_{kl} = Δ⁺_{kl} − Δ⁺_{lk}`.
    pub fn commutator(k: u8, l: u8) -> Self {
        DeltaPoly::plus(k, l).sub(&DeltaPoly::plus(l, k))
    }

    /// `Δ_{ab,cd} = Δ⁺_{ac} Δ⁺_{bd} − Δ⁺_{ca} Δ⁺_{db}`.
    pub fn pair(a: u8, b: u8, c: u8, d: u8) -> Self {
        DeltaPoly::plus(a, c).mul(&DeltaPoly::plus(b, d)).sub(&DeltaPoly::plus(c, a).mul(&DeltaPoly::plus(d, b)))
    }

    fn add_term(&mut self, mut mono: Vec<DeltaSym>, c: Q) {
        if c.is_zero() {
            return;
        }
        mono.sort();
        let cur = self.0.remove(&mono).unwrap_or_else(Q::zero) + c;
        if !cur.is_zero() {
            self.0.insert(mono, cur);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<DeltaSym>, &Q)> {
        self.0.iter()
    }

    pub fn add(&self, o: &DeltaPoly) -> DeltaPoly {
        let mut out = self.clone();
        for (m, c) in &o.0 {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Q) -> DeltaPoly {
        let mut out = DeltaPoly::zero();
        for (m, c) in &self.0 {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn sub(&self, o: &DeltaPoly) -> DeltaPoly {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn mul(&self, o: &DeltaPoly) -> DeltaPoly {
        let mut out = DeltaPoly::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &o.0 {
                let mut m = m1.clone();
                m.extend_from_slice(m2);
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.0.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            let unit = a.is_one() && !m.is_empty();
            if !unit {
                write!(f, "{}", a)?;
            }
            for (j, (k, l)) in m.iter().enumerate() {
                if j > 0 || !unit {
                    write!(f, " ")?;
                }
                write!(f, "D+{}{}", k, l)?;
            }
        }
        Ok(())
    }
}

/// `φ_flavor(x_point)`; ordered by point, then flavor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldSymbol {
    pub point: u8,
    pub flavor: u16,
}

impl fmt::Display for FieldSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi{}(x{})", self.flavor, self.point)
    }
}

/// Linear combination of normal products of fields with `Δ⁺`-polynomial
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WickElement {
    terms: BTreeMap<Vec<FieldSymbol>, DeltaPoly>,
}

impl WickElement {
    pub fn zero() -> Self {
        WickElement::default()
    }

    pub fn scalar(p: DeltaPoly) -> Self {
        let mut w = WickElement::zero();
        w.add_term(Vec::new(), p);
        w
    }

    pub fn field(point: u8, flavor: u16) -> Self {
        WickElement::normal_product(vec![FieldSymbol { point, flavor }], Q::one())
    }

    pub fn normal_product(fields: Vec<FieldSymbol>, c: Q) -> Self {
        let mut w = WickElement::zero();
        w.add_term(fields, DeltaPoly::constant(c));
        w
    }

    fn add_term(&mut self, mut fields: Vec<FieldSymbol>, p: DeltaPoly) {
        if p.is_zero() {
            return;
        }
        fields.sort();
        let cur = self.terms.remove(&fields).unwrap_or_default().add(&p);
        if !cur.is_zero() {
            self.terms.insert(fields, cur);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<FieldSymbol>, &DeltaPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the empty normal product.
    pub fn central_part(&self) -> DeltaPoly {
        self.terms.get(&Vec::new()).cloned().unwrap_or_default()
    }

    pub fn without_central(&self) -> WickElement {
        let mut w = self.clone();
        w.terms.remove(&Vec::new());
        w
    }

    pub fn add(&self, o: &WickElement) -> WickElement {
        let mut out = self.clone();
        for (f, p) in &o.terms {
            out.add_term(f.clone(), p.clone());
        }
        out
    }

    pub fn scale_poly(&self, k: &DeltaPoly) -> WickElement {
        let mut out = WickElement::zero();
        for (f, p) in &self.terms {
            out.add_term(f.clone(), p.mul(k));
        }
        out
    }

    pub fn scale(&self, k: &Q) -> WickElement {
        self.scale_poly(&DeltaPoly::constant(k.clone()))
    }

    pub fn sub(&self, o: &WickElement) -> WickElement {
        self.add(&o.scale(&-Q::one()))
    }

    /// Applies the derivation `φ_i ↦ Σ_j A_ij φ_j` at every point.
    pub fn flavor_variation(&self, a: &Matrix<Q>) -> WickElement {
        let mut out = WickElement::zero();
        for (fields, p) in &self.terms {
            for pos in 0..fields.len() {
                let i = fields[pos].flavor as usize - 1;
                for j in 0..a.cols() {
                    let c = a.get(i, j);
                    if c.is_zero() {
                        continue;
                    }
                    let mut nf = fields.clone();
                    nf[pos].flavor = j as u16 + 1;
                    out.add_term(nf, p.scale(c));
                }
            }
        }
        out
    }
}

impl fmt::Display for WickElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (fields, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", p)?;
            if !fields.is_empty() {
                write!(f, " :")?;
                for (j, s) in fields.iter().enumerate() {
                    if j > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", s)?;
                }
                write!(f, ":")?;
            }
        }
        Ok(())
    }
}

/// Partial matchings of same-flavor fields between `a` and `b`; calls `f`
/// with the matched pairs and the uncontracted remainder.
fn matchings(a: &[FieldSymbol], b: &[FieldSymbol], f: &mut impl FnMut(&[(FieldSymbol, FieldSymbol)], Vec<FieldSymbol>)) {
    fn go(
        i: usize,
        a: &[FieldSymbol],
        b: &[FieldSymbol],
        used: &mut Vec<bool>,
        pairs: &mut Vec<(FieldSymbol, FieldSymbol)>,
        rest: &mut Vec<FieldSymbol>,
        f: &mut impl FnMut(&[(FieldSymbol, FieldSymbol)], Vec<FieldSymbol>),
    ) {
        if i == a.len() {
            let mut r = rest.clone();
            r.extend(b.iter().zip(used.iter()).filter(|(_, &u)| !u).map(|(s, _)| *s));
            f(pairs, r);
            return;
        }
        rest.push(a[i]);
        go(i + 1, a, b, used, pairs, rest, f);
        rest.pop();
        for j in 0..b.len() {
            if used[j] || b[j].flavor != a[i].flavor {
                continue;
            }
            used[j] = true;
            pairs.push((a[i], b[j]));
            go(i + 1, a, b, used, pairs, rest, f);
            pairs.pop();
            used[j] = false;
        }
    }
    let mut used = vec![false; b.len()];
    go(0, a, b, &mut used, &mut Vec::new(), &mut Vec::new(), f);
}

/// `[u, v]` by Wick's theorem: each non-empty set of contractions between
/// `u` and `v` contributes `Π Δ⁺_{ab} − Π Δ⁺_{ba}` times the remaining
/// normal product.
pub fn wick_commutator(u: &WickElement, v: &WickElement) -> WickElement {
    let mut out = WickElement::zero();
    for (fa, pa) in &u.terms {
        for (fb, pb) in &v.terms {
            let coef = pa.mul(pb);
            matchings(fa, fb, &mut |pairs, rest| {
                if pairs.is_empty() {
                    return;
                }
                let mut fwd = DeltaPoly::constant(Q::one());
                let mut bwd = DeltaPoly::constant(Q::one());
                for (x, y) in pairs {
                    fwd = fwd.mul(&DeltaPoly::plus(x.point, y.point));
                    bwd = bwd.mul(&DeltaPoly::plus(y.point, x.point));
                }
                out.add_term(rest, coef.mul(&fwd.sub(&bwd)));
            });
        }
    }
    out
}

/// `V_M(x_p, x_q) = Σ_ij M_ij :φ_i(x_p) φ_j(x_q):`.
pub fn bilocal_field(m: &Matrix<Q>, p: u8, q: u8) -> WickElement {
    let mut out = WickElement::zero();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let c = m.get(i, j);
            if c.is_zero() {
                continue;
            }
            let fields = vec![FieldSymbol { point: p, flavor: i as u16 + 1 }, FieldSymbol { point: q, flavor: j as u16 + 1 }];
            out.add_term(fields, DeltaPoly::constant(c.clone()));
        }
    }
    out
}

/// The four bilinear terms of `[V_M(x1,x2), V_M'(x3,x4)]`.
pub fn commutator_bilinear_terms(m: &Matrix<Q>, mp: &Matrix<Q>) -> WickElement {
    let mt = m.transpose();
    let mpt = mp.transpose();
    bilocal_field(&mt.mul(mp), 2, 4)
        .scale_poly(&DeltaPoly::commutator(1, 3))
        .add(&bilocal_field(&m.mul(&mpt), 1, 3).scale_poly(&DeltaPoly::commutator(2, 4)))
        .add(&bilocal_field(&m.mul(mp), 1, 4).scale_poly(&DeltaPoly::commutator(2, 3)))
        .add(&bilocal_field(&mp.mul(m), 3, 2).scale_poly(&DeltaPoly::commutator(1, 4)))
}

/// `tr(ᵗMM') Δ_{12,34} + tr(MM') Δ_{12,43}`, as produced by the double contractions.
pub fn central_term(m: &Matrix<Q>, mp: &Matrix<Q>) -> DeltaPoly {
    DeltaPoly::pair(1, 2, 3, 4).scale(&m.transpose().mul(mp).trace()).add(&DeltaPoly::pair(1, 2, 4, 3).scale(&m.mul(mp).trace()))
}

/// The central term with the two traces exchanged.
pub fn central_term_swapped(m: &Matrix<Q>, mp: &Matrix<Q>) -> DeltaPoly {
    DeltaPoly::pair(1, 2, 3, 4).scale(&m.mul(mp).trace()).add(&DeltaPoly::pair(1, 2, 4, 3).scale(&m.transpose().mul(mp).trace()))
}

fn check_square(m: &Matrix<Q>, l: usize) -> Result<(), BilocalError> {
    if m.rows() != l || m.cols() != l {
        return Err(BilocalError::Shape { expected: (l, l), found: (m.rows(), m.cols()) });
    }
    Ok(())
}

/// Compares the Wick commutator of `V_M(x1,x2)` and `V_M'(x3,x4)` with the
/// closed formula. The swapped-trace central term is recorded as a negative
/// control whenever `tr(MM') ≠ tr(ᵗMM')`.
pub fn verify_commutator_formula(m: &Matrix<Q>, mp: &Matrix<Q>) -> Result<Report, BilocalError> {
    check_square(m, m.rows())?;
    check_square(mp, m.rows())?;
    let mut r = Report::new("bilocal commutator");
    let lhs = wick_commutator(&bilocal_field(m, 1, 2), &bilocal_field(mp, 3, 4));
    let bil = lhs.without_central().sub(&commutator_bilinear_terms(m, mp));
    r.record("bilinear terms", "bilocal commutator formula", if bil.is_zero() { None } else { Some(format!("{}", bil)) });
    let central = lhs.central_part();
    let d = central.sub(&central_term(m, mp));
    r.record("central term", "bilocal commutator formula", if d.is_zero() { None } else { Some(format!("{}", d)) });
    let ds = central.sub(&central_term_swapped(m, mp));
    let defect = if ds.is_zero() { None } else { Some(format!("{}", ds)) };
    if m.mul(mp).trace() != m.transpose().mul(mp).trace() {
        r.record_negative("central term, traces exchanged", "bilocal commutator formula", defect);
    } else {
        r.record("central term, traces exchanged", "bilocal commutator formula", defect);
    }
    Ok(r)
}

/// `⟨M1, M2⟩ = tr(ᵗM1 M2)`.
pub fn frobenius(m1: &Matrix<Q>, m2: &Matrix<Q>) -> Result<Q, BilocalError> {
    if m1.rows() != m2.rows() || m1.cols() != m2.cols() {
        return Err(BilocalError::Shape { expected: (m1.rows(), m1.cols()), found: (m2.rows(), m2.cols()) });
    }
    Ok(m1.entries().iter().zip(m2.entries()).map(|(a, b)| a * b).sum())
}

/// Symmetry, positivity and `⟨M1 M2, M3⟩ = ⟨M1, M3 ᵗM2⟩`.
pub fn frobenius_property_check(m1: &Matrix<Q>, m2: &Matrix<Q>, m3: &Matrix<Q>) -> Result<Report, BilocalError> {
    let l = m1.rows();
    for m in [m1, m2, m3] {
        check_square(m, l)?;
    }
    let mut r = Report::new("Frobenius form");
    let a = frobenius(&m1.mul(m2), m3)?;
    let b = frobenius(m1, &m3.mul(&m2.transpose()))?;
    r.record_bool("invariance", "Frobenius invariance", a == b, || format!("{} != {}", a, b));
    let s1 = frobenius(m1, m2)?;
    let s2 = frobenius(m2, m1)?;
    r.record_bool("symmetry", "Frobenius symmetry", s1 == s2, || format!("{} != {}", s1, s2));
    for (name, m) in [("M1", m1), ("M2", m2), ("M3", m3)] {
        let n = frobenius(m, m)?;
        let ok = if m.is_zero() { n.is_zero() } else { n.is_positive() };
        r.record_bool(format!("positivity {}", name), "Frobenius positivity", ok, || format!("<M,M> = {}", n));
    }
    Ok(r)
}

fn flat(m: &Matrix<Q>) -> Vec<Q> {
    m.entries().to_vec()
}

fn from_flat(v: &[Q], l: usize) -> Matrix<Q> {
    Matrix::from_fn(l, l, |i, j| v[i * l + j].clone())
}

/// Span of real `L×L` matrices closed under product and transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TAlgebra {
    pub size: usize,
    pub basis: Vec<Matrix<Q>>,
    pub unital: bool,
}

impl TAlgebra {
    /// Checks closure of the span of `basis`; the basis is reduced to an
    /// independent subset.
    pub fn new(basis: Vec<Matrix<Q>>) -> Result<Self, BilocalError> {
        let size = basis.first().map_or(0, Matrix::rows);
        for m in &basis {
            check_square(m, size)?;
        }
        let mut indep: Vec<Matrix<Q>> = Vec::new();
        for m in basis {
            let mut trial: Vec<Vec<Q>> = indep.iter().map(flat).collect();
            trial.push(flat(&m));
            if span_rank(&trial) > indep.len() {
                indep.push(m);
            }
        }
        let span: Vec<Vec<Q>> = indep.iter().map(flat).collect();
        let inside = |m: &Matrix<Q>| m.is_zero() || express_in_span(&span, &flat(m)).is_some();
        for (i, x) in indep.iter().enumerate() {
            if !inside(&x.transpose()) {
                return Err(BilocalError::NotClosed(format!("transpose of basis element {}", i)));
            }
            for (j, y) in indep.iter().enumerate() {
                if !inside(&x.mul(y)) {
                    return Err(BilocalError::NotClosed(format!("product of basis elements {} and {}", i, j)));
                }
            }
        }
        let unital = size > 0 && inside(&Matrix::identity(size));
        Ok(TAlgebra { size, basis: indep, unital })
    }

    /// Smallest t-algebra containing the identity and `gens`.
    pub fn generated_by(gens: &[Matrix<Q>]) -> Result<Self, BilocalError> {
        let size = gens.first().map_or(0, Matrix::rows);
        let mut basis: Vec<Matrix<Q>> = vec![Matrix::identity(size)];
        let mut frontier: Vec<Matrix<Q>> = gens.to_vec();
        while let Some(x) = frontier.pop() {
            check_square(&x, size)?;
            let mut trial: Vec<Vec<Q>> = basis.iter().map(flat).collect();
            trial.push(flat(&x));
            if span_rank(&trial) == basis.len() {
                continue;
            }
            frontier.push(x.transpose());
            for b in &basis {
                frontier.push(x.mul(b));
                frontier.push(b.mul(&x));
            }
            basis.push(x);
        }
        TAlgebra::new(basis)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, m: &Matrix<Q>) -> bool {
        let span: Vec<Vec<Q>> = self.basis.iter().map(flat).collect();
        m.is_zero() || express_in_span(&span, &flat(m)).is_some()
    }
}

/// Basis of `{X : MX = XM for all M in the algebra}`.
pub fn commutant(a: &TAlgebra) -> Vec<Matrix<Q>> {
    let l = a.size;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for m in &a.basis {
        // (MX − XM)_{ij} as a linear form in the entries of X
        for i in 0..l {
            for j in 0..l {
                let mut row = vec![Q::zero(); l * l];
                for k in 0..l {
                    row[k * l + j] += m.get(i, k);
                    row[i * l + k] -= m.get(k, j);
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return (0..l).flat_map(|i| (0..l).map(move |j| Matrix::unit(l, i, j))).collect();
    }
    Matrix::from_rows(rows).kernel().iter().map(|v| from_flat(v, l)).collect()
}

/// The three real division rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DivisionAlgebra {
    R,
    C,
    H,
}

impl DivisionAlgebra {
    pub fn label(self) -> &'static str {
        match self {
            DivisionAlgebra::R => "R",
            DivisionAlgebra::C => "C",
            DivisionAlgebra::H => "H",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            DivisionAlgebra::R => 1,
            DivisionAlgebra::C => 2,
            DivisionAlgebra::H => 4,
        }
    }

    pub fn from_dim(d: usize) -> Option<Self> {
        match d {
            1 => Some(DivisionAlgebra::R),
            2 => Some(DivisionAlgebra::C),
            4 => Some(DivisionAlgebra::H),
            _ => None,
        }
    }

    /// `e_a e_b = sign · e_c` on the standard basis `1, i, j, k`.
    pub fn unit_product(self, a: usize, b: usize) -> (i64, usize) {
        const H: [[(i64, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        H[a][b]
    }

    /// Left multiplications by the basis units on `F ≅ ℝ^d`.
    pub fn left_regular(self) -> Vec<Matrix<Q>> {
        let d = self.dim();
        (0..d)
            .map(|a| {
                let mut m = Matrix::zeros(d, d);
                for b in 0..d {
                    let (s, c) = self.unit_product(a, b);
                    m.set(c, b, Q::from_integer(s.into()));
                }
                m
            })
            .collect()
    }

    /// Right multiplications by the basis units.
    pub fn right_regular(self) -> Vec<Matrix<Q>> {
        let d = self.dim();
        (0..d)
            .map(|a| {
                let mut m = Matrix::zeros(d, d);
                for b in 0..d {
                    let (s, c) = self.unit_product(b, a);
                    m.set(c, b, Q::from_integer(s.into()));
                }
                m
            })
            .collect()
    }

    /// Real component matrices of `Σ_m φ_m⁺(x1) φ_m(x2)`: entry `(a, b)` of
    /// the `c`-th matrix is the `e_c` coefficient of `ē_a e_b`, repeated over
    /// `n` copies.
    pub fn canonical_components(self, n: usize) -> Vec<Matrix<Q>> {
        let d = self.dim();
        (0..d)
            .map(|c| {
                let block = Matrix::from_fn(d, d, |a, b| {
                    let (s, e) = self.unit_product(a, b);
                    let conj = if a == 0 { 1 } else { -1 };
                    if e == c {
                        Q::from_integer((s * conj).into())
                    } else {
                        Q::zero()
                    }
                });
                Matrix::identity(n).kron(&block)
            })
            .collect()
    }

    /// `𝓜 = F ⊗ 1_N` acting on `ℝ^{N·d}` by right multiplication in each copy.
    pub fn flavor_algebra(self, n: usize) -> Vec<Matrix<Q>> {
        self.right_regular().iter().map(|m| Matrix::identity(n).kron(m)).collect()
    }

    /// Antisymmetric matrices commuting with the flavor algebra: the Lie
    /// algebra of `U(N, F)`.
    pub fn gauge_algebra(self, n: usize) -> Vec<Matrix<Q>> {
        let l = n * self.dim();
        let alg = TAlgebra { size: l, basis: self.flavor_algebra(n), unital: true };
        let mut so: Vec<Matrix<Q>> = Vec::new();
        for i in 0..l {
            for j in i + 1..l {
                so.push(Matrix::<Q>::unit(l, i, j).sub(&Matrix::unit(l, j, i)));
            }
        }
        // coefficients c with Σ c_k so_k commuting with 𝓜
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for m in &alg.basis {
            let brs: Vec<Matrix<Q>> = so.iter().map(|s| m.bracket(s)).collect();
            for e in 0..l * l {
                rows.push(brs.iter().map(|b| b.entries()[e].clone()).collect());
            }
        }
        if so.is_empty() {
            return Vec::new();
        }
        Matrix::from_rows(rows).kernel().iter().map(|c| so.iter().zip(c).fold(Matrix::zeros(l, l), |acc, (s, x)| acc.add(&s.scale(x)))).collect()
    }

    /// `dim U(N, F)`: `N(N−1)/2`, `N²`, `N(2N+1)`.
    pub fn gauge_dim(self, n: usize) -> usize {
        match self {
            DivisionAlgebra::R => n * (n.saturating_sub(1)) / 2,
            DivisionAlgebra::C => n * n,
            DivisionAlgebra::H => n * (2 * n + 1),
        }
    }
}

impl fmt::Display for DivisionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Division ring of the commutant of an irreducible t-algebra, with a basis
/// of the commutant. Irreducibility holds exactly when the commutant is a
/// division ring, i.e. when `x ᵗy + y ᵗx` is scalar for all commutant `x, y`.
pub fn commutant_type(a: &TAlgebra) -> Result<(DivisionAlgebra, Vec<Matrix<Q>>), BilocalError> {
    let c = commutant(a);
    let reducible = BilocalError::Reducible { commutant_dim: c.len() };
    let is_scalar = |m: &Matrix<Q>| {
        let d = m.get(0, 0).clone();
        (0..a.size).all(|i| (0..a.size).all(|j| *m.get(i, j) == if i == j { d.clone() } else { Q::zero() }))
    };
    for (i, x) in c.iter().enumerate() {
        for y in &c[i..] {
            let s = x.mul(&y.transpose()).add(&y.mul(&x.transpose()));
            if !is_scalar(&s) {
                return Err(reducible);
            }
        }
    }
    match DivisionAlgebra::from_dim(c.len()) {
        Some(f) => Ok((f, c)),
        None => Err(reducible),
    }
}

/// For the right ideal generated by `gens` inside `a`: the Frobenius
/// orthogonal complement is a right ideal and the transposed ideal is a
/// left ideal.
pub fn right_ideal_complement_check(a: &TAlgebra, gens: &[Matrix<Q>]) -> Report {
    let mut r = Report::new("right ideal complement");
    let mut ideal: Vec<Matrix<Q>> = Vec::new();
    for g in gens {
        for b in &a.basis {
            let x = g.mul(b);
            let mut trial: Vec<Vec<Q>> = ideal.iter().map(flat).collect();
            trial.push(flat(&x));
            if span_rank(&trial) > ideal.len() {
                ideal.push(x);
            }
        }
    }
    // complement inside the algebra: coefficients over a.basis orthogonal to the ideal
    let rows: Vec<Vec<Q>> = ideal.iter().map(|i| a.basis.iter().map(|b| frobenius(i, b).expect("same shape")).collect()).collect();
    let coeffs = if rows.is_empty() {
        (0..a.dim()).map(|k| (0..a.dim()).map(|j| if j == k { Q::one() } else { Q::zero() }).collect()).collect()
    } else {
        Matrix::from_rows(rows).kernel()
    };
    let comp: Vec<Matrix<Q>> =
        coeffs.iter().map(|c| a.basis.iter().zip(c).fold(Matrix::zeros(a.size, a.size), |acc, (b, x)| acc.add(&b.scale(x)))).collect();
    r.record_bool("dimensions", "orthogonal complement", ideal.len() + comp.len() == a.dim(), || {
        format!("{} + {} != {}", ideal.len(), comp.len(), a.dim())
    });
    let in_span = |set: &[Matrix<Q>], m: &Matrix<Q>| {
        let s: Vec<Vec<Q>> = set.iter().map(flat).collect();
        m.is_zero() || (!s.is_empty() && express_in_span(&s, &flat(m)).is_some())
    };
    let right = comp.iter().all(|c| a.basis.iter().all(|b| in_span(&comp, &c.mul(b))));
    r.record_bool("complement is a right ideal", "orthogonal complement", right, || "product leaves the complement".into());
    let tideal: Vec<Matrix<Q>> = ideal.iter().map(Matrix::transpose).collect();
    let left = tideal.iter().all(|t| a.basis.iter().all(|b| in_span(&tideal, &b.mul(t))));
    r.record_bool("transpose is a left ideal", "transposed ideal", left, || "product leaves the transposed ideal".into());
    r
}

/// The flavor algebra of `F ⊗ 1_N` is a t-algebra containing the canonical
/// components, and every `V_M` is invariant under `U(N, F)`.
pub fn canonical_form_check(family: DivisionAlgebra, n: usize) -> Report {
    let mut r = Report::new(format!("canonical form for {} with N={}", family, n));
    let basis = family.flavor_algebra(n);
    let alg = TAlgebra::new(basis.clone());
    r.record("t-algebra closure", "closure under the commutator products", alg.as_ref().err().map(|e| format!("{}", e)));
    let Ok(alg) = alg else { return r };
    let mut closed = true;
    for x in &basis {
        for y in &basis {
            for p in [x.transpose().mul(y), x.mul(&y.transpose()), x.mul(y), y.mul(x)] {
                closed &= alg.contains(&p);
            }
        }
    }
    r.record_bool("commutator products", "closure under the commutator products", closed, || "product leaves the span".into());
    r.record_bool("dimension", "flavor algebra", alg.dim() == family.dim(), || format!("dimension {}", alg.dim()));
    let comps = family.canonical_components(n);
    let all_in = comps.iter().all(|c| alg.contains(c));
    r.record_bool("canonical components", "canonical bilinear", all_in, || "component outside the flavor algebra".into());
    let gauge = family.gauge_algebra(n);
    r.record_bool("gauge dimension", "gauge group U(N,F)", gauge.len() == family.gauge_dim(n), || {
        format!("found {}, expected {}", gauge.len(), family.gauge_dim(n))
    });
    let mut bad = 0;
    for a in &gauge {
        for m in basis.iter().chain(&comps) {
            if !bilocal_field(m, 1, 2).flavor_variation(a).is_zero() {
                bad += 1;
            }
        }
    }
    r.record_bool("gauge invariance", "gauge group U(N,F)", bad == 0, || format!("{} non-invariant pairs", bad));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, qi64};

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| qi64(x)).collect()).collect())
    }

    #[test]
    fn single_field_commutator() {
        let c = wick_commutator(&WickElement::field(1, 1), &WickElement::field(2, 1));
        assert_eq!(c, WickElement::scalar(DeltaPoly::commutator(1, 2)));
        assert!(wick_commutator(&WickElement::field(1, 1), &WickElement::field(2, 2)).is_zero());
    }

    #[test]
    fn scalar_formula() {
        let one = m(&[&[1]]);
        assert!(verify_commutator_formula(&one, &one).unwrap().all_ok());
    }

    #[test]
    fn nonsymmetric_pair_needs_derived_traces() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let b = m(&[&[1, 2], &[3, 4]]);
        let r = verify_commutator_formula(&a, &b).unwrap();
        assert!(r.all_ok());
        assert!(r.find("central term, traces exchanged").unwrap().is_negative_control());
    }

    #[test]
    fn bilocal_transpose_swap() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(bilocal_field(&a.transpose(), 2, 1), bilocal_field(&a, 1, 2));
        assert!(bilocal_field(&Matrix::zeros(2, 2), 1, 2).is_zero());
    }

    #[test]
    fn frobenius_values() {
        assert_eq!(frobenius(&Matrix::identity(3), &Matrix::identity(3)).unwrap(), qi64(3));
        let e = Matrix::<Q>::unit(2, 0, 1);
        assert_eq!(frobenius(&e, &e).unwrap(), qi64(1));
        let x = Matrix::from_fn(2, 2, |i, j| q(i as i64 + 1, j as i64 + 2));
        assert!(frobenius_property_check(&x, &e, &x.transpose()).unwrap().all_ok());
    }

    #[test]
    fn quaternion_tables() {
        let l = DivisionAlgebra::H.left_regular();
        assert_eq!(l[1].mul(&l[2]), l[3]);
        let r = DivisionAlgebra::H.right_regular();
        // right multiplication reverses the order
        assert_eq!(r[1].mul(&r[2]), r[3].scale(&qi64(-1)));
        for x in &l {
            for y in &r {
                assert_eq!(x.mul(y), y.mul(x));
            }
        }
    }

    #[test]
    fn commutant_types() {
        let full = TAlgebra::generated_by(&[Matrix::unit(2, 0, 1)]).unwrap();
        assert_eq!(full.dim(), 4);
        assert_eq!(commutant_type(&full).unwrap().0, DivisionAlgebra::R);
        let cx = TAlgebra::new(DivisionAlgebra::C.left_regular()).unwrap();
        assert_eq!(commutant_type(&cx).unwrap().0, DivisionAlgebra::C);
        let hx = TAlgebra::new(DivisionAlgebra::H.left_regular()).unwrap();
        let (t, basis) = commutant_type(&hx).unwrap();
        assert_eq!(t, DivisionAlgebra::H);
        assert_eq!(basis.len(), 4);
        let diag = TAlgebra::new(vec![Matrix::identity(2), Matrix::unit(2, 0, 0)]).unwrap();
        assert!(matches!(commutant_type(&diag), Err(BilocalError::Reducible { .. })));
    }

    #[test]
    fn canonical_forms() {
        for (f, n) in [(DivisionAlgebra::R, 2), (DivisionAlgebra::C, 1), (DivisionAlgebra::H, 1)] {
            let r = canonical_form_check(f, n);
            assert!(r.all_ok(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn right_ideal() {
        let full = TAlgebra::generated_by(&[Matrix::unit(2, 0, 1)]).unwrap();
        assert!(right_ideal_complement_check(&full, &[Matrix::unit(2, 0, 0)]).all_ok());
    }
}
