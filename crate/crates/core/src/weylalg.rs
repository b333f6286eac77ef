//! Normal-ordered Weyl (CCR) algebra with Gaussian-rational coefficients.
//!
//! A [`WeylElement`] is a finite sum of normal-ordered monomials. Products
//! are reduced to normal order with `[c_i, c_j^*] = δ_ij`, one mode at a
//! time: different modes commute, and for a single mode
//!
//! ```text
//! (c*^p c^q)(c*^r c^s) = Σ_k C(q,k) C(r,k) k! c*^(p+r-k) c^(q+s-k)
//! ```

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::field::{binomial, factorial, Conjugate, Field, Qi, Q};
use crate::linalg::Matrix;

/// Label of a single bosonic mode. Modes are totally ordered; the order
/// fixes the canonical form of monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModeId {
    /// Positive-charge oscillator `a_i`.
    A(u16),
    /// Negative-charge oscillator `b_i`.
    B(u16),
    /// Generic oscillator `c_i`.
    C(u16),
    /// Field mode with labels `(n, ℓ, m)`.
    Nu(u16, u16, i16),
    /// Mode `k` of real flavor `r`.
    Flavor(u16, u16),
}

impl fmt::Display for ModeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModeId::A(i) => write!(f, "a{}", i),
            ModeId::B(i) => write!(f, "b{}", i),
            ModeId::C(i) => write!(f, "c{}", i),
            ModeId::Nu(n, l, m) => write!(f, "a[{},{},{}]", n, l, m),
            ModeId::Flavor(k, r) => write!(f, "c[{},{}]", k, r),
        }
    }
}

/// A creation (`dagger`) or annihilation operator of one mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub mode: ModeId,
    pub dagger: bool,
}

impl Ladder {
    pub fn cre(mode: ModeId) -> Self {
        Ladder { mode, dagger: true }
    }

    pub fn ann(mode: ModeId) -> Self {
        Ladder { mode, dagger: false }
    }

    pub fn adjoint(self) -> Self {
        Ladder { mode: self.mode, dagger: !self.dagger }
    }
}

/// Normal-ordered monomial `Π_mode c*^p c^q`, sorted by mode, no `(0,0)` entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(ModeId, u32, u32)>);

impl Monomial {
    pub fn identity() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_powers(mut powers: Vec<(ModeId, u32, u32)>) -> Self {
        powers.retain(|&(_, p, q)| p + q > 0);
        powers.sort_by_key(|x| x.0);
        for w in powers.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate mode in monomial");
        }
        Monomial(powers)
    }

    pub fn powers(&self) -> &[(ModeId, u32, u32)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, p, q)| p + q).sum()
    }

    /// Creators minus annihilators.
    pub fn level_shift(&self) -> i64 {
        self.0.iter().map(|&(_, p, q)| p as i64 - q as i64).sum()
    }

    pub fn adjoint(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(m, p, q)| (m, q, p)).collect())
    }

    /// Normal-ordered expansion of `self * other` with integer coefficients.
    fn product(&self, other: &Monomial) -> Vec<(Monomial, BigInt)> {
        let mut partial: Vec<(Vec<(ModeId, u32, u32)>, BigInt)> = vec![(Vec::new(), BigInt::one())];
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.0, &other.0);
        while i < x.len() || j < y.len() {
            let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
            let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
            if take_x {
                partial.iter_mut().for_each(|(m, _)| m.push(x[i]));
                i += 1;
            } else if take_y {
                partial.iter_mut().for_each(|(m, _)| m.push(y[j]));
                j += 1;
            } else {
                let (mode, p, q) = x[i];
                let (_, r, s) = y[j];
                let mut next = Vec::with_capacity(partial.len() * (q.min(r) as usize + 1));
                for k in 0..=q.min(r) {
                    let c = binomial(q as u64, k as u64) * binomial(r as u64, k as u64) * factorial(k);
                    let (np, nq) = (p + r - k, q + s - k);
                    for (m, coef) in &partial {
                        let mut m = m.clone();
                        if np + nq > 0 {
                            m.push((mode, np, nq));
                        }
                        next.push((m, coef * &c));
                    }
                }
                partial = next;
                i += 1;
                j += 1;
            }
        }
        partial.into_iter().map(|(m, c)| (Monomial(m), c)).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        for &(m, p, _) in &self.0 {
            match p {
                0 => {}
                1 => parts.push(format!("{}*", m)),
                _ => parts.push(format!("{}*^{}", m, p)),
            }
        }
        for &(m, _, q) in &self.0 {
            match q {
                0 => {}
                1 => parts.push(format!("{}", m)),
                _ => parts.push(format!("{}^{}", m, q)),
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Finite linear combination of normal-ordered monomials over `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeylElement {
    terms: BTreeMap<Monomial, Qi>,
}

impl WeylElement {
    pub fn zero() -> Self {
        WeylElement::default()
    }

    pub fn one() -> Self {
        WeylElement::scalar(Qi::one())
    }

    pub fn scalar(c: Qi) -> Self {
        WeylElement::term(Monomial::identity(), c)
    }

    pub fn term(m: Monomial, c: Qi) -> Self {
        let mut w = WeylElement::zero();
        w.add_term(m, c);
        w
    }

    pub fn cre(mode: ModeId) -> Self {
        WeylElement::term(Monomial(vec![(mode, 1, 0)]), Qi::one())
    }

    pub fn ann(mode: ModeId) -> Self {
        WeylElement::term(Monomial(vec![(mode, 0, 1)]), Qi::one())
    }

    pub fn ladder(l: Ladder) -> Self {
        if l.dagger {
            WeylElement::cre(l.mode)
        } else {
            WeylElement::ann(l.mode)
        }
    }

    /// Ordered product of ladder operators, normal ordered.
    pub fn word(ops: &[Ladder]) -> Self {
        ops.iter().fold(WeylElement::one(), |acc, &l| acc.mul(&WeylElement::ladder(l)))
    }

    pub fn add_term(&mut self, m: Monomial, c: Qi) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Qi)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Qi {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficient of the identity monomial.
    pub fn scalar_part(&self) -> Qi {
        self.coefficient(&Monomial::identity())
    }

    /// True if the element is a multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(Monomial::is_identity)
    }

    /// Drops the identity component.
    pub fn without_scalar(&self) -> Self {
        let mut w = self.clone();
        w.terms.remove(&Monomial::identity());
        w
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest increase of total occupation produced by any term.
    pub fn max_level_raise(&self) -> i64 {
        self.terms.keys().map(Monomial::level_shift).max().unwrap_or(0).max(0)
    }

    pub fn modes(&self) -> Vec<ModeId> {
        let mut v: Vec<ModeId> = self.terms.keys().flat_map(|m| m.0.iter().map(|x| x.0)).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn scale(&self, c: &Qi) -> Self {
        let mut out = WeylElement::zero();
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        self.scale(&Qi::real(c.clone()))
    }

    /// Normal-ordered product `self · other`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let mut out = WeylElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                for (m, k) in m1.product(m2) {
                    out.add_term(m, c.scale(&Q::from_integer(k)));
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &WeylElement) -> WeylElement {
        self.mul(other) - other.mul(self)
    }

    /// Formal adjoint: swaps creators and annihilators, conjugates coefficients.
    pub fn adjoint(&self) -> WeylElement {
        let mut out = WeylElement::zero();
        for (m, c) in &self.terms {
            out.add_term(m.adjoint(), c.conj());
        }
        out
    }

    /// `ad(self)^k (other)`.
    pub fn ad_pow(&self, other: &WeylElement, k: usize) -> WeylElement {
        (0..k).fold(other.clone(), |acc, _| self.commutator(&acc))
    }

    /// Renames modes; the map must be injective on the modes present.
    pub fn map_modes(&self, f: impl Fn(ModeId) -> ModeId) -> WeylElement {
        let mut out = WeylElement::zero();
        for (m, c) in &self.terms {
            let mono = Monomial::from_powers(m.0.iter().map(|&(id, p, q)| (f(id), p, q)).collect());
            out.add_term(mono, c.clone());
        }
        out
    }
}

impl Add for WeylElement {
    type Output = WeylElement;
    fn add(mut self, o: WeylElement) -> WeylElement {
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<'a> Add<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn add(self, o: &WeylElement) -> WeylElement {
        self.clone() + o.clone()
    }
}

impl Sub for WeylElement {
    type Output = WeylElement;
    fn sub(mut self, o: WeylElement) -> WeylElement {
        for (m, c) in o.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<'a> Sub<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn sub(self, o: &WeylElement) -> WeylElement {
        self.clone() - o.clone()
    }
}

impl Neg for WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        self.scale(&Qi::int(-1))
    }
}

impl<'a> Mul<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn mul(self, o: &WeylElement) -> WeylElement {
        WeylElement::mul(self, o)
    }
}

impl core::iter::Sum for WeylElement {
    fn sum<I: Iterator<Item = WeylElement>>(iter: I) -> WeylElement {
        iter.fold(WeylElement::zero(), |a, b| a + b)
    }
}

/// Deterministic textual form: terms in canonical monomial order.
impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg_real = c.im.is_zero() && c.re < Q::zero();
            let mag = if neg_real { -c.clone() } else { c.clone() };
            let sign = if neg_real { "-" } else { "+" };
            if idx == 0 {
                if neg_real {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            if m.is_identity() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{} {}", mag, m)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeylError {
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// The element is not of the form `φ̃ X φ + const`.
    NotInImage(String),
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylError::DimensionMismatch { expected, found } => {
                write!(f, "matrix size {} does not match polarization size {}", found, expected)
            }
            WeylError::NotInImage(m) => write!(f, "not a polarized quadratic: {}", m),
        }
    }
}

/// Pair of spinors `φ`, `φ̃` with `[φ^α, φ̃_β] = δ^α_β`.
#[derive(Clone, Debug)]
pub struct Polarization {
    pub phi: Vec<Ladder>,
    pub phi_tilde: Vec<(Qi, Ladder)>,
}

impl Polarization {
    /// `φ = (a_1..a_p, b_1*..b_q*)`, `φ̃ = (a_1*..a_p*, -b_1..-b_q)`.
    pub fn charged(a: &[ModeId], b: &[ModeId]) -> Self {
        let mut phi: Vec<Ladder> = a.iter().map(|&m| Ladder::ann(m)).collect();
        phi.extend(b.iter().map(|&m| Ladder::cre(m)));
        let mut phi_tilde: Vec<(Qi, Ladder)> = a.iter().map(|&m| (Qi::one(), Ladder::cre(m))).collect();
        phi_tilde.extend(b.iter().map(|&m| (Qi::int(-1), Ladder::ann(m))));
        Polarization { phi, phi_tilde }
    }

    /// Charged polarization on `a_1..a_p`, `b_1..b_q`.
    pub fn upq(p: u16, q: u16) -> Self {
        let a: Vec<ModeId> = (1..=p).map(ModeId::A).collect();
        let b: Vec<ModeId> = (1..=q).map(ModeId::B).collect();
        Polarization::charged(&a, &b)
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }

    /// `φ̃_α φ^β`.
    pub fn bilinear(&self, alpha: usize, beta: usize) -> WeylElement {
        let (s, l) = &self.phi_tilde[alpha];
        WeylElement::word(&[*l, self.phi[beta]]).scale(s)
    }

    /// `φ̃ X φ`, including any constant produced by normal ordering.
    pub fn quadratic(&self, x: &Matrix<Qi>) -> Result<WeylElement, WeylError> {
        let n = self.len();
        if x.rows() != n || x.cols() != n {
            return Err(WeylError::DimensionMismatch { expected: n, found: x.rows().max(x.cols()) });
        }
        let mut out = WeylElement::zero();
        for a in 0..n {
            for b in 0..n {
                let c = x.get(a, b);
                if !c.is_zero() {
                    out = out + self.bilinear(a, b).scale(c);
                }
            }
        }
        Ok(out)
    }

    /// Inverse of [`Polarization::quadratic`]: returns `X` and the scalar `c`
    /// with `w = φ̃ X φ + c`.
    pub fn extract_matrix(&self, w: &WeylElement) -> Result<(Matrix<Qi>, Qi), WeylError> {
        let n = self.len();
        let mut lookup: BTreeMap<Monomial, (usize, usize, Qi)> = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                for (m, c) in self.bilinear(a, b).terms() {
                    if m.degree() == 2 {
                        lookup.insert(m.clone(), (a, b, c.clone()));
                    }
                }
            }
        }
        let mut x = Matrix::zeros(n, n);
        for (m, c) in w.terms() {
            match m.degree() {
                0 => {}
                2 => {
                    let (a, b, k) = lookup.get(m).ok_or_else(|| WeylError::NotInImage(format!("monomial {} outside the span", m)))?;
                    let v = c.clone() * k.inv().expect("nonzero");
                    x.set(*a, *b, v);
                }
                d => return Err(WeylError::NotInImage(format!("term of degree {}", d))),
            }
        }
        let rebuilt = self.quadratic(&x)?;
        let rest = w - &rebuilt;
        if !rest.is_scalar() {
            return Err(WeylError::NotInImage(format!("residual {}", rest)));
        }
        Ok((x, rest.scalar_part()))
    }
}

/// Convenience constructor for `c_i^*`-style names used throughout tests and
/// generator tables.
pub fn a(i: u16) -> ModeId {
    ModeId::A(i)
}

pub fn b(i: u16) -> ModeId {
    ModeId::B(i)
}

/// `x* y` with `x`, `y` given as ladder operators.
pub fn pair(x: Ladder, y: Ladder) -> WeylElement {
    WeylElement::word(&[x, y])
}

pub fn cre(m: ModeId) -> Ladder {
    Ladder::cre(m)
}

pub fn ann(m: ModeId) -> Ladder {
    Ladder::ann(m)
}

/// Coordinates of a family of elements on the union of their monomials.
/// Column `j` of the returned matrix holds the coefficients of `elems[j]`.
pub fn coordinate_matrix(elems: &[WeylElement]) -> (Vec<Monomial>, Matrix<Qi>) {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for e in elems {
        for (m, _) in e.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let mut monos = vec![Monomial::identity(); index.len()];
    for (m, &i) in &index {
        monos[i] = m.clone();
    }
    let mut mat = Matrix::zeros(index.len(), elems.len());
    for (j, e) in elems.iter().enumerate() {
        for (m, c) in e.terms() {
            mat.set(index[m], j, c.clone());
        }
    }
    (monos, mat)
}

/// Coefficients `λ` with `Σ λ_j elems[j] = target`, if they exist.
pub fn express(elems: &[WeylElement], target: &WeylElement) -> Option<Vec<Qi>> {
    let mut all = elems.to_vec();
    all.push(target.clone());
    let (_, mat) = coordinate_matrix(&all);
    let n = elems.len();
    let a = Matrix::from_fn(mat.rows(), n, |i, j| mat.get(i, j).clone());
    let rhs: Vec<Qi> = (0..mat.rows()).map(|i| mat.get(i, n).clone()).collect();
    a.solve(&rhs)
}

/// Dimension of the linear span of `elems`.
pub fn span_dim(elems: &[WeylElement]) -> usize {
    if elems.is_empty() {
        return 0;
    }
    coordinate_matrix(elems).1.rank()
}

/// `c` with `[x, y] = c y`, if `y` is an eigenvector of `ad x`.
pub fn ad_eigenvalue(x: &WeylElement, y: &WeylElement) -> Option<Qi> {
    if y.is_zero() {
        return None;
    }
    let br = x.commutator(y);
    express(core::slice::from_ref(y), &br).map(|v| v[0].clone())
}

/// Coefficient vectors `λ` such that `Σ λ_j basis[j]` commutes with every
/// element of `against`.
pub fn centralizer_in_span(basis: &[WeylElement], against: &[WeylElement]) -> Vec<Vec<Qi>> {
    let n = basis.len();
    let mut rows: Vec<Vec<Qi>> = Vec::new();
    for g in against {
        let brackets: Vec<WeylElement> = basis.iter().map(|b| g.commutator(b)).collect();
        let (_, m) = coordinate_matrix(&brackets);
        for i in 0..m.rows() {
            rows.push(m.row(i).to_vec());
        }
    }
    if rows.is_empty() {
        return (0..n).map(|j| (0..n).map(|k| if j == k { Qi::one() } else { Qi::zero() }).collect()).collect();
    }
    Matrix::from_rows(rows).kernel()
}

/// Incremental echelon form of a span, keyed by leading monomial.
#[derive(Clone, Debug, Default)]
pub struct SpanReducer {
    rows: BTreeMap<Monomial, BTreeMap<Monomial, Qi>>,
}

impl SpanReducer {
    pub fn new(elems: &[WeylElement]) -> Self {
        let mut r = SpanReducer::default();
        for e in elems {
            r.insert(e);
        }
        r
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, w: &WeylElement) -> BTreeMap<Monomial, Qi> {
        let mut v: BTreeMap<Monomial, Qi> = w.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        let mut floor: Option<Monomial> = None;
        loop {
            let lead = match &floor {
                None => v.keys().next().cloned(),
                Some(f) => v.range(f.clone()..).map(|(k, _)| k.clone()).find(|k| k != f),
            };
            let Some(lead) = lead else { return v };
            if let Some(row) = self.rows.get(&lead) {
                let c = v[&lead].clone();
                for (m, x) in row {
                    let cur = &v.remove(m).unwrap_or_default() - &(x * &c);
                    if !cur.is_zero() {
                        v.insert(m.clone(), cur);
                    }
                }
            } else {
                floor = Some(lead);
            }
        }
    }

    /// Adds `w`; returns whether the span grew.
    pub fn insert(&mut self, w: &WeylElement) -> bool {
        let v = self.reduce(w);
        let Some((lead, c)) = v.iter().next().map(|(m, c)| (m.clone(), c.clone())) else { return false };
        let inv = crate::field::Field::inv(&c).expect("leading coefficient is nonzero");
        let row = v.into_iter().map(|(m, x)| (m, &x * &inv)).collect();
        self.rows.insert(lead, row);
        true
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.reduce(w).is_empty()
    }
}

/// `Σ λ_j elems[j]`.
pub fn combine(elems: &[WeylElement], coeffs: &[Qi]) -> WeylElement {
    elems.iter().zip(coeffs).map(|(e, c)| e.scale(c)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(i: u16) -> ModeId {
        ModeId::C(i)
    }

    #[test]
    fn ccr_single_mode() {
        let x = WeylElement::ann(c(1)).mul(&WeylElement::cre(c(1)));
        let expected = pair(cre(c(1)), ann(c(1))) + WeylElement::one();
        assert_eq!(x, expected);
    }

    #[test]
    fn distinct_modes_commute() {
        let x = WeylElement::ann(c(1)).mul(&WeylElement::cre(c(2)));
        assert_eq!(x, pair(cre(c(2)), ann(c(1))));
    }

    #[test]
    fn number_operator_square() {
        let n = pair(cre(c(1)), ann(c(1)));
        let n2 = n.mul(&n);
        let expected = WeylElement::word(&[cre(c(1)), cre(c(1)), ann(c(1)), ann(c(1))]) + n.clone();
        assert_eq!(n2, expected);
    }

    #[test]
    fn hopping_commutator() {
        let x = pair(cre(a(1)), ann(a(2)));
        let y = pair(cre(a(2)), ann(a(1)));
        let expected = pair(cre(a(1)), ann(a(1))) - pair(cre(a(2)), ann(a(2)));
        assert_eq!(x.commutator(&y), expected);
        assert!(x.commutator(&x).is_zero());
    }

    #[test]
    fn adjoint_rules() {
        let x = pair(cre(a(1)), cre(b(2)));
        assert_eq!(x.adjoint(), pair(ann(b(2)), ann(a(1))));
        let y = pair(cre(a(1)), ann(a(1))).scale(&Qi::i());
        assert_eq!(y.adjoint(), pair(cre(a(1)), ann(a(1))).scale(&-Qi::i()));
    }

    #[test]
    fn display_is_canonical() {
        let x = pair(ann(b(1)), cre(b(1))).scale(&Qi::int(-1)) + pair(cre(a(1)), cre(a(1)));
        assert_eq!(format!("{}", x), "-1 + a1*^2 - b1* b1");
        assert_eq!(format!("{}", WeylElement::zero()), "0");
    }

    #[test]
    fn quadratic_unit_matrix() {
        let pol = Polarization::upq(2, 2);
        let x = Matrix::unit(4, 0, 0);
        assert_eq!(pol.quadratic(&x).unwrap(), pair(cre(a(1)), ann(a(1))));
        assert!(matches!(pol.quadratic(&Matrix::unit(3, 0, 0)), Err(WeylError::DimensionMismatch { .. })));
    }

    #[test]
    fn charge_up_to_constant() {
        let pol = Polarization::upq(2, 2);
        let n = |m: ModeId| pair(cre(m), ann(m));
        let charge = n(a(1)) + n(a(2)) - n(b(1)) - n(b(2));
        let diff = &pol.quadratic(&Matrix::identity(4)).unwrap() - &charge;
        assert!(diff.is_scalar());
        // -b b* = -(b* b + 1), twice
        assert_eq!(diff.scalar_part(), Qi::int(-2));
        let beta = Matrix::from_fn(4, 4, |i, j| match (i == j, i < 2) {
            (false, _) => Qi::zero(),
            (true, true) => Qi::one(),
            (true, false) => Qi::int(-1),
        });
        let energy = n(a(1)) + n(a(2)) + n(b(1)) + n(b(2)) + WeylElement::scalar(Qi::int(2));
        assert_eq!(pol.quadratic(&beta).unwrap(), energy);
    }

    #[test]
    fn extract_inverts_quadratic() {
        let pol = Polarization::upq(2, 1);
        let x = Matrix::from_fn(3, 3, |i, j| Qi::new(crate::field::qi64((i * 3 + j) as i64), crate::field::q(1, 3)));
        let w = pol.quadratic(&x).unwrap() + WeylElement::scalar(Qi::int(5));
        let (y, k) = pol.extract_matrix(&w).unwrap();
        assert_eq!(y, x);
        // constant from the normal ordering plus the explicit 5
        assert_eq!(k, Qi::int(5));
        assert!(pol.extract_matrix(&pair(cre(a(1)), cre(a(1)))).is_err());
    }
}
