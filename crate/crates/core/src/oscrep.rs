//! Oscillator realizations of `su(2,2)`, `u(n,n)` and `so*(4n)` by quadratic
//! elements of the Weyl algebra, with exact relation checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::field::{Qi, Q};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::rootsys::{classify_cartan, Family, RootSystem};
use crate::weylalg::{a, ad_eigenvalue, ann, b, centralizer_in_span, cre, express, pair, span_dim, ModeId, Polarization, WeylElement, WeylError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// `su(2,2)` with the helicity operator.
    Su22,
    /// `u(n,n)` with the charge operator.
    Unn(u16),
    /// `so*(4n)` on `2n + 2n` oscillators.
    SoStar(u16),
    /// The compact `sp(2)` commuting with `so*(4n)`.
    Sp2Gauge(u16),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OscError {
    InvalidSize(String),
    Weyl(WeylError),
}

impl fmt::Display for OscError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OscError::InvalidSize(m) => write!(f, "invalid size: {}", m),
            OscError::Weyl(e) => write!(f, "{}", e),
        }
    }
}

impl From<WeylError> for OscError {
    fn from(e: WeylError) -> Self {
        OscError::Weyl(e)
    }
}

/// Chevalley generators of a realized algebra plus named extra elements.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub kind: AlgebraKind,
    pub label: String,
    pub cartan: Vec<Vec<i64>>,
    pub e: Vec<WeylElement>,
    pub f: Vec<WeylElement>,
    pub h: Vec<WeylElement>,
    pub extras: BTreeMap<String, WeylElement>,
    pub polarization: Polarization,
}

impl GeneratorSet {
    pub fn rank(&self) -> usize {
        self.e.len()
    }

    pub fn extra(&self, name: &str) -> &WeylElement {
        self.extras.get(name).unwrap_or_else(|| panic!("missing extra element {}", name))
    }

    /// All Chevalley generators, named.
    pub fn chevalley(&self) -> Vec<(String, WeylElement)> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            out.push((format!("E{}", i + 1), self.e[i].clone()));
            out.push((format!("F{}", i + 1), self.f[i].clone()));
            out.push((format!("H{}", i + 1), self.h[i].clone()));
        }
        out
    }

    /// Matrix `X` and scalar `c` with `w = φ̃ X φ + c`.
    pub fn image_matrix(&self, w: &WeylElement) -> Result<(Matrix<Qi>, Qi), OscError> {
        Ok(self.polarization.extract_matrix(w)?)
    }
}

fn neg(w: WeylElement) -> WeylElement {
    -w
}

fn number(m: ModeId) -> WeylElement {
    pair(cre(m), ann(m))
}

/// `sl(2n)` Chevalley triples of `u(n,n)` on `a_1..a_n`, `b_1..b_n`.
fn unn_triples(n: u16) -> (Vec<WeylElement>, Vec<WeylElement>) {
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 1..n {
        e.push(pair(cre(a(i)), ann(a(i + 1))));
        f.push(pair(cre(a(i + 1)), ann(a(i))));
    }
    e.push(pair(cre(a(n)), cre(b(1))));
    f.push(neg(pair(ann(b(1)), ann(a(n)))));
    for j in 1..n {
        e.push(neg(pair(ann(b(j)), cre(b(j + 1)))));
        f.push(neg(pair(ann(b(j + 1)), cre(b(j)))));
    }
    (e, f)
}

fn type_a_cartan(rank: usize) -> Vec<Vec<i64>> {
    (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// Charge operator `Σ a_i* a_i − Σ b_i* b_i` on `n + n` oscillators.
pub fn charge(n: u16) -> WeylElement {
    (1..=n).map(|i| number(a(i)) - number(b(i))).sum()
}

/// `Σ a_i* a_i + Σ b_i b_i*`.
pub fn energy(n: u16) -> WeylElement {
    (1..=n).map(|i| number(a(i)) + pair(ann(b(i)), cre(b(i)))).sum()
}

pub fn unn_generators(n: u16) -> Result<GeneratorSet, OscError> {
    if n < 1 {
        return Err(OscError::InvalidSize("u(n,n) needs n >= 1".into()));
    }
    let (e, f) = unn_triples(n);
    let h: Vec<WeylElement> = e.iter().zip(&f).map(|(x, y)| x.commutator(y)).collect();
    let mut extras = BTreeMap::new();
    extras.insert("Q".to_string(), charge(n));
    extras.insert("H".to_string(), energy(n));
    extras.insert("E_theta".to_string(), pair(cre(a(1)), cre(b(n))));
    extras.insert("F_theta".to_string(), neg(pair(ann(b(n)), ann(a(1)))));
    extras.insert("H_theta".to_string(), number(a(1)) + pair(ann(b(n)), cre(b(n))));
    Ok(GeneratorSet {
        kind: AlgebraKind::Unn(n),
        label: format!("u({},{})", n, n),
        cartan: type_a_cartan(2 * n as usize - 1),
        e,
        f,
        h,
        extras,
        polarization: Polarization::upq(n, n),
    })
}

pub fn su22_generators() -> GeneratorSet {
    let mut g = unn_generators(2).expect("n = 2 is valid");
    g.kind = AlgebraKind::Su22;
    g.label = "su(2,2)".into();
    let q = g.extras.remove("Q").expect("charge present");
    g.extras.insert("h".into(), q);
    g.extras.insert("H1_explicit".into(), number(a(1)) - number(a(2)));
    g.extras.insert("H2_explicit".into(), number(a(2)) + pair(ann(b(1)), cre(b(1))));
    g.extras.insert("H3_explicit".into(), number(b(2)) - number(b(1)));
    g
}

/// `a_i* b_j* − a_j* b_i*`.
pub fn e_ij(i: u16, j: u16) -> WeylElement {
    pair(cre(a(i)), cre(b(j))) - pair(cre(a(j)), cre(b(i)))
}

/// `(E, F, Q)` with `E = Σ a_i* b_i`, `F = Σ b_i* a_i`, `Q = [E, F]`.
pub fn sp2_triple(n: u16) -> [WeylElement; 3] {
    let m = 2 * n;
    let e: WeylElement = (1..=m).map(|i| pair(cre(a(i)), ann(b(i)))).sum();
    let f: WeylElement = (1..=m).map(|i| pair(cre(b(i)), ann(a(i)))).sum();
    let q = e.commutator(&f);
    [e, f, q]
}

/// The gauge triple of `sp2_triple` as a rank-one generator set.
pub fn sp2_generator_set(n: u16) -> GeneratorSet {
    let [e, f, q] = sp2_triple(n);
    GeneratorSet {
        kind: AlgebraKind::Sp2Gauge(n),
        label: "sp(2)".into(),
        cartan: vec![vec![2]],
        e: vec![e],
        f: vec![f],
        h: vec![q],
        extras: BTreeMap::new(),
        polarization: Polarization::upq(2 * n, 2 * n),
    }
}

/// Cartan matrix of type `D_{2n}` in the node order of the `so*(4n)` basis:
/// a chain `1 − 2 − … − (2n−1)` with node `2n` attached to `2n−2`.
/// For `n = 1` the two nodes are disconnected.
fn so_star_cartan(n: u16) -> Vec<Vec<i64>> {
    let r = 2 * n as usize;
    let mut c = vec![vec![0i64; r]; r];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for i in 0..r.saturating_sub(2) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
    }
    if r >= 4 {
        c[r - 3][r - 1] = -1;
        c[r - 1][r - 3] = -1;
    }
    c
}

pub fn so_star_generators(n: u16) -> Result<GeneratorSet, OscError> {
    if n < 1 {
        return Err(OscError::InvalidSize("so*(4n) needs n >= 1".into()));
    }
    let m = 2 * n;
    let mut e = Vec::new();
    let mut h = Vec::new();
    for i in 1..m {
        e.push(pair(cre(a(i)), ann(a(i + 1))) + pair(ann(b(i + 1)), cre(b(i))));
        h.push(number(a(i)) - number(a(i + 1)) + number(b(i)) - number(b(i + 1)));
    }
    e.push(e_ij(m - 1, m));
    h.push(number(a(m - 1)) + number(a(m)) + pair(ann(b(m - 1)), cre(b(m - 1))) + pair(ann(b(m)), cre(b(m))));
    // compact nodes: F = E*; the non-compact node: F = −E*
    let mut f: Vec<WeylElement> = e.iter().map(WeylElement::adjoint).collect();
    f[m as usize - 1] = pair(ann(a(m)), ann(b(m - 1))) - pair(ann(a(m - 1)), ann(b(m)));
    let mut extras = BTreeMap::new();
    for i in 1..=m {
        for j in i + 1..=m {
            extras.insert(format!("E[{},{}]", i, j), e_ij(i, j));
        }
    }
    extras.insert("E_theta".into(), e_ij(1, 2));
    extras.insert("F2n_explicit".into(), pair(ann(a(m)), ann(b(m - 1))) - pair(ann(a(m - 1)), ann(b(m))));
    extras.insert("Q".into(), charge(m));
    extras.insert("H".into(), energy(m));
    let [se, sf, sq] = sp2_triple(n);
    extras.insert("sp2.E".into(), se);
    extras.insert("sp2.F".into(), sf);
    extras.insert("sp2.Q".into(), sq);
    Ok(GeneratorSet {
        kind: AlgebraKind::SoStar(n),
        label: format!("so*({})", 4 * n),
        cartan: so_star_cartan(n),
        e,
        f,
        h,
        extras,
        polarization: Polarization::upq(m, m),
    })
}

fn eq_check(r: &mut Report, id: String, anchor: &str, lhs: &WeylElement, rhs: &WeylElement) {
    let d = lhs - rhs;
    let defect = if d.is_zero() { None } else { Some(format!("{}", d)) };
    r.record(id, anchor, defect);
}

/// Chevalley–Serre relations against `gens.cartan`.
pub fn check_chevalley(gens: &GeneratorSet) -> Report {
    let mut r = Report::new(format!("Chevalley relations of {}", gens.label));
    let n = gens.rank();
    let zero = WeylElement::zero();
    for i in 0..n {
        for j in 0..n {
            let c = Qi::int(gens.cartan[i][j]);
            let (si, sj) = (i + 1, j + 1);
            eq_check(&mut r, format!("[H{},E{}]", si, sj), "Cartan action", &gens.h[i].commutator(&gens.e[j]), &gens.e[j].scale(&c));
            eq_check(&mut r, format!("[H{},F{}]", si, sj), "Cartan action", &gens.h[i].commutator(&gens.f[j]), &gens.f[j].scale(&-c));
            eq_check(&mut r, format!("[H{},H{}]", si, sj), "Cartan commutativity", &gens.h[i].commutator(&gens.h[j]), &zero);
            let efs = gens.e[i].commutator(&gens.f[j]);
            if i == j {
                eq_check(&mut r, format!("[E{},F{}]", si, sj), "H_i = [E_i, F_i]", &efs, &gens.h[i]);
            } else {
                eq_check(&mut r, format!("[E{},F{}]", si, sj), "[E_i, F_j] = 0", &efs, &zero);
                let k = (1 - gens.cartan[i][j]) as usize;
                eq_check(&mut r, format!("serre+({},{})", si, sj), "Serre relation", &gens.e[i].ad_pow(&gens.e[j], k), &zero);
                eq_check(&mut r, format!("serre-({},{})", si, sj), "Serre relation", &gens.f[i].ad_pow(&gens.f[j], k), &zero);
            }
        }
    }
    r
}

/// Cartan matrix read off from `[H_i, E_j] = c_ij E_j`, if every `E_j` is an
/// eigenvector with integer eigenvalue.
pub fn read_cartan(gens: &GeneratorSet) -> Option<Vec<Vec<i64>>> {
    let n = gens.rank();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = ad_eigenvalue(&gens.h[i], &gens.e[j])?;
            if !v.is_real() || !v.re.is_integer() {
                return None;
            }
            c[i][j] = i64::try_from(v.re.to_integer()).ok()?;
        }
    }
    Some(c)
}

/// Nested bracket `[..[[x_1, x_2], x_3], .. x_k]`.
fn nested(xs: &[WeylElement]) -> WeylElement {
    let mut it = xs.iter();
    let first = it.next().cloned().unwrap_or_default();
    it.fold(first, |acc, x| acc.commutator(x))
}

/// Identities specific to each realization: adjoint pairings, highest-root
/// element, explicit Cartan elements and the central/charge operators.
pub fn check_structure(gens: &GeneratorSet) -> Report {
    let mut r = Report::new(format!("structure of {}", gens.label));
    let zero = WeylElement::zero();
    let et = gens.extra("E_theta");
    let ft = gens.extras.get("F_theta").cloned().unwrap_or_else(|| et.adjoint());
    match gens.kind {
        AlgebraKind::Su22 | AlgebraKind::Unn(_) => {
            let n = match gens.kind {
                AlgebraKind::Unn(n) => n,
                _ => 2,
            };
            // compact nodes satisfy F = E*, the non-compact node F = −E*
            for i in 0..gens.rank() {
                let sign = if i + 1 == n as usize { Qi::int(-1) } else { Qi::one() };
                eq_check(&mut r, format!("F{} = ±E{}*", i + 1, i + 1), "adjoint pairing", &gens.f[i], &gens.e[i].adjoint().scale(&sign));
            }
            eq_check(&mut r, "E_theta nested".into(), "E_theta = [[E_1, E_2], ...]", &nested(&gens.e), et);
            let ht = gens.extra("H_theta");
            eq_check(&mut r, "H_theta".into(), "H_theta = [E_theta, F_theta]", &et.commutator(&ft), ht);
            eq_check(&mut r, "[H_theta,E_theta]".into(), "[H_theta, E_theta] = 2 E_theta", &ht.commutator(et), &et.scale(&Qi::int(2)));
            eq_check(&mut r, "[H_theta,F_theta]".into(), "[H_theta, F_theta] = -2 F_theta", &ht.commutator(&ft), &ft.scale(&Qi::int(-2)));
            let central = match gens.kind {
                AlgebraKind::Su22 => gens.extra("h"),
                _ => gens.extra("Q"),
            };
            for (name, x) in gens.chevalley() {
                eq_check(&mut r, format!("[Q,{}]", name), "charge is central", &central.commutator(&x), &zero);
            }
            eq_check(&mut r, "[Q,E_theta]".into(), "charge is central", &central.commutator(et), &zero);
            let en = gens.extra("H");
            eq_check(&mut r, "[H,E_theta]".into(), "energy grading", &en.commutator(et), &et.scale(&Qi::int(2)));
            if gens.kind == AlgebraKind::Su22 {
                for i in 0..3 {
                    let explicit = gens.extra(&format!("H{}_explicit", i + 1));
                    eq_check(&mut r, format!("H{} explicit", i + 1), "explicit Cartan elements", &gens.h[i], explicit);
                }
            }
        }
        AlgebraKind::SoStar(n) => {
            let m = 2 * n as usize;
            for i in 0..m - 1 {
                eq_check(&mut r, format!("F{} = E{}*", i + 1, i + 1), "F_i = E_i^*", &gens.f[i], &gens.e[i].adjoint());
            }
            eq_check(&mut r, "F2n = -E2n*".into(), "adjoint pairing", &gens.f[m - 1], &-gens.e[m - 1].adjoint());
            eq_check(&mut r, "F2n explicit".into(), "explicit F_2n", &gens.f[m - 1], gens.extra("F2n_explicit"));
            let key = format!("E[{},{}]", m - 1, m);
            eq_check(&mut r, "E_2n = E[2n-1,2n]".into(), "E_{2n-1,2n} = E_2n", &gens.e[m - 1], gens.extra(&key));
            for i in 0..m {
                eq_check(&mut r, format!("[E{},E_theta]", i + 1), "E_theta is a highest-root vector", &gens.e[i].commutator(et), &zero);
            }
            let [se, sf, sq] = [gens.extra("sp2.E"), gens.extra("sp2.F"), gens.extra("sp2.Q")];
            eq_check(&mut r, "[E,F] = Q".into(), "sp(2) triple", &se.commutator(sf), gens.extra("Q"));
            eq_check(&mut r, "sp2.Q".into(), "sp(2) triple", sq, gens.extra("Q"));
            eq_check(&mut r, "[Q,E]".into(), "sp(2) triple", &sq.commutator(se), &se.scale(&Qi::int(2)));
            match theta_height(gens) {
                Some((coeffs, height)) => {
                    let expected = RootSystem::build(Family::D, m)
                        .ok()
                        .and_then(|rs| rs.simple_coefficients(rs.highest_root()).ok())
                        .map(|c| c.iter().sum::<i64>());
                    let ok = n == 1 || Some(height) == expected;
                    r.record_bool("E_theta height", "height of the highest root", ok, || {
                        format!("coefficients {:?}, height {}, expected {:?}", coeffs, height, expected)
                    });
                }
                None => r.record("E_theta height", "height of the highest root", Some("E_theta is not a weight vector".into())),
            }
        }
        AlgebraKind::Sp2Gauge(_) => {}
    }
    r
}

/// Simple-root coefficients of the weight of `E_theta` and their sum.
pub fn theta_height(gens: &GeneratorSet) -> Option<(Vec<Q>, i64)> {
    let et = gens.extras.get("E_theta")?;
    let n = gens.rank();
    let w: Vec<Q> = gens.h.iter().map(|h| ad_eigenvalue(h, et).map(|v| v.re)).collect::<Option<Vec<_>>>()?;
    let c = Matrix::from_fn(n, n, |i, j| Q::from_integer(gens.cartan[i][j].into()));
    let k = c.solve(&w)?;
    let sum: Q = k.iter().fold(Q::zero(), |acc, x| acc + x);
    if !sum.is_integer() {
        return None;
    }
    Some((k, i64::try_from(sum.to_integer()).ok()?))
}

/// All pairwise brackets between two families vanish.
pub fn check_dual_pair(left: &[(String, WeylElement)], right: &[(String, WeylElement)]) -> Report {
    let mut r = Report::new("mutual commutant");
    for (ln, x) in left {
        for (rn, y) in right {
            let d = x.commutator(y);
            r.record(format!("[{},{}]", ln, rn), "dual pair", if d.is_zero() { None } else { Some(format!("{}", d)) });
        }
    }
    r
}

/// Every `φ̃_α φ^β` for the charged polarization on `n + n` oscillators.
pub fn unn_basis(n: u16) -> Vec<(String, WeylElement)> {
    let pol = Polarization::upq(n, n);
    let k = pol.len();
    let mut out = Vec::new();
    for x in 0..k {
        for y in 0..k {
            out.push((format!("X[{},{}]", x + 1, y + 1), pol.bilinear(x, y)));
        }
    }
    out
}

/// Named so*(4n) generators: Chevalley triples and every `E_ij` with its adjoint.
pub fn so_star_full(gens: &GeneratorSet) -> Vec<(String, WeylElement)> {
    let mut out = gens.chevalley();
    for (k, v) in &gens.extras {
        if k.starts_with("E[") {
            out.push((k.clone(), v.clone()));
            out.push((format!("{}*", k), v.adjoint()));
        }
    }
    out
}

pub fn sp2_named(n: u16) -> Vec<(String, WeylElement)> {
    let [e, f, q] = sp2_triple(n);
    vec![("E".into(), e), ("F".into(), f), ("Q".into(), q)]
}

/// `E_12 E_34 + E_14 E_23 − E_13 E_24` in so*(8).
pub fn nilpotent_cone_defect() -> WeylElement {
    let p = |i, j| e_ij(i, j);
    p(1, 2).mul(&p(3, 4)) + p(1, 4).mul(&p(2, 3)) - p(1, 3).mul(&p(2, 4))
}

/// Same combination with `E_13` replaced by `E_14`; must not vanish.
pub fn nilpotent_cone_corrupted() -> WeylElement {
    let p = |i, j| e_ij(i, j);
    p(1, 2).mul(&p(3, 4)) + p(1, 4).mul(&p(2, 3)) - p(1, 4).mul(&p(2, 4))
}

pub fn nilpotent_cone_check() -> Report {
    let mut r = Report::new("nilpotent-cone relation in so*(8)");
    let d = nilpotent_cone_defect();
    r.record("E12E34+E14E23-E13E24", "nilpotent-cone relation", if d.is_zero() { None } else { Some(format!("{}", d)) });
    let c = nilpotent_cone_corrupted();
    r.record_negative("corrupted (E13 -> E14)", "nilpotent-cone relation", if c.is_zero() { None } else { Some(format!("{}", c)) });
    r
}

/// Which real form a matrix is tested against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormSpec {
    /// `sp(2n, R)`: real `X` with `X J + J ᵗX = 0`.
    SpReal { n: usize },
    /// `u(p,q)`: `X* β = −β X`.
    Upq { p: usize, q: usize },
    /// `so*(4n)`: `u(2n,2n)` plus `ᵗX σ = −σ X`.
    SoStar { n: usize },
}

impl FormSpec {
    pub fn size(&self) -> usize {
        match *self {
            FormSpec::SpReal { n } => 2 * n,
            FormSpec::Upq { p, q } => p + q,
            FormSpec::SoStar { n } => 4 * n,
        }
    }

    /// Signature matrix `diag(1,…,1,−1,…,−1)`.
    pub fn beta(&self) -> Matrix<Qi> {
        let (p, size) = match *self {
            FormSpec::SpReal { n } => (n, 2 * n),
            FormSpec::Upq { p, q } => (p, p + q),
            FormSpec::SoStar { n } => (2 * n, 4 * n),
        };
        Matrix::from_fn(size, size, |i, j| match (i == j, i < p) {
            (false, _) => Qi::zero(),
            (true, true) => Qi::one(),
            (true, false) => Qi::int(-1),
        })
    }

    /// Off-diagonal pairing `[[0, 1], [1, 0]]` in half-size blocks.
    pub fn sigma(&self) -> Matrix<Qi> {
        let s = self.size();
        let h = s / 2;
        Matrix::from_fn(s, s, |i, j| if (i < h) != (j < h) && i % h == j % h { Qi::one() } else { Qi::zero() })
    }

    /// Symplectic form `[[0, 1], [−1, 0]]` in half-size blocks.
    pub fn j(&self) -> Matrix<Qi> {
        let s = self.size();
        let h = s / 2;
        Matrix::from_fn(s, s, |i, j| {
            if i % h != j % h || (i < h) == (j < h) {
                Qi::zero()
            } else if i < h {
                Qi::one()
            } else {
                Qi::int(-1)
            }
        })
    }

    /// `β* = β`, `β² = 1`, `σ = ᵗσ`, `σ² = 1`, `J J* = −J² = 1`.
    pub fn forms_consistent(&self) -> bool {
        let one = Matrix::identity(self.size());
        let (bt, s, j) = (self.beta(), self.sigma(), self.j());
        bt.adjoint() == bt
            && bt.mul(&bt) == one
            && s.transpose() == s
            && s.mul(&s) == one
            && j.mul(&j.adjoint()) == one
            && j.mul(&j).scale(&Qi::int(-1)) == one
    }
}

/// Whether `x` lies in the real form described by `spec`.
pub fn matrix_membership(x: &Matrix<Qi>, spec: FormSpec) -> Result<bool, OscError> {
    let s = spec.size();
    if x.rows() != s || x.cols() != s {
        return Err(OscError::InvalidSize(format!("expected {}x{}, got {}x{}", s, s, x.rows(), x.cols())));
    }
    let anti_beta = |x: &Matrix<Qi>| {
        let bt = spec.beta();
        x.adjoint().mul(&bt).add(&bt.mul(x)).is_zero()
    };
    Ok(match spec {
        FormSpec::SpReal { .. } => {
            let j = spec.j();
            x.entries().iter().all(Qi::is_real) && x.mul(&j).add(&j.mul(&x.transpose())).is_zero()
        }
        FormSpec::Upq { .. } => anti_beta(x),
        FormSpec::SoStar { n } => {
            let sg = spec.sigma();
            let h = 2 * n;
            let block = |r0: usize, c0: usize| Matrix::from_fn(h, h, |i, j| x.get(r0 + i, c0 + j).clone());
            let (u, v, w, z) = (block(0, 0), block(0, h), block(h, 0), block(h, h));
            let block_form = u.add(&u.adjoint()).is_zero()
                && v.add(&v.transpose()).is_zero()
                && w == v.adjoint()
                && z.add(&u.transpose()).is_zero()
                && x.trace().is_zero();
            anti_beta(x) && x.transpose().mul(&sg).add(&sg.mul(x)).is_zero() && block_form
        }
    })
}

/// `Y − βY*β` and `i(Y + βY*β)` for every generator image `Y`: a spanning set
/// of the real form inside the complexification.
pub fn real_form_images(gens: &GeneratorSet, spec: FormSpec) -> Result<Vec<Matrix<Qi>>, OscError> {
    let bt = spec.beta();
    let mut out = Vec::new();
    let mut push = |y: Matrix<Qi>| {
        let t = bt.mul(&y.adjoint()).mul(&bt);
        out.push(y.sub(&t));
        out.push(y.add(&t).scale(&Qi::i()));
    };
    for (_, w) in gens.chevalley() {
        push(gens.image_matrix(&w)?.0);
    }
    Ok(out)
}

/// Membership of generator images and of all their brackets.
pub fn check_membership(gens: &GeneratorSet, spec: FormSpec) -> Result<Report, OscError> {
    let mut r = Report::new(format!("matrix membership in {}", gens.label));
    let imgs = real_form_images(gens, spec)?;
    for (k, x) in imgs.iter().enumerate() {
        r.record_bool(format!("image {}", k), "real-form conditions", matrix_membership(x, spec)?, || format!("{}", x));
    }
    for i in 0..imgs.len() {
        for j in i + 1..imgs.len() {
            let br = imgs[i].bracket(&imgs[j]);
            r.record_bool(format!("bracket ({},{})", i, j), "closure under brackets", matrix_membership(&br, spec)?, || format!("{}", br));
        }
    }
    Ok(r)
}

/// `ad(H_θ)` eigenvalue multiplicities on the `sl(4)` root vectors and Cartan
/// elements of the oscillator `su(2,2)`.
pub fn theta_grading_su22() -> BTreeMap<i64, usize> {
    let g = su22_generators();
    let ht = g.extra("H_theta").clone();
    let mut out = BTreeMap::new();
    for x in su22_basis() {
        let v = ad_eigenvalue(&ht, &x).expect("basis elements are weight vectors");
        let k = i64::try_from(v.re.to_integer()).expect("small eigenvalue");
        *out.entry(k).or_insert(0) += 1;
    }
    out
}

/// Fifteen-element basis of the oscillator `su(2,2)`: off-diagonal
/// `φ̃_α φ^β` and the three Cartan elements.
pub fn su22_basis() -> Vec<WeylElement> {
    let g = su22_generators();
    let pol = &g.polarization;
    let mut out: Vec<WeylElement> = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            if x != y {
                out.push(pol.bilinear(x, y));
            }
        }
    }
    out.extend(g.h.iter().cloned());
    out
}

/// Dimension of the centralizer of `{E_θ, F_θ, H_θ}` inside `su(2,2)`.
pub fn theta_commutant_dim_su22() -> usize {
    let g = su22_generators();
    let basis = su22_basis();
    let against = [g.extra("E_theta").clone(), g.extra("F_theta").clone(), g.extra("H_theta").clone()];
    centralizer_in_span(&basis, &against).len()
}

/// Result of the quadratic Casimir comparison for so*(4n).
#[derive(Clone, Debug)]
pub struct CasimirOutcome {
    pub n: u16,
    /// `C^u − Σ E_ij E_ij*`.
    pub compact_minus_raising: WeylElement,
    pub c_so: WeylElement,
    /// `λ` with `λ C^so − C^u + Σ E_ij E_ij*` scalar, if one exists.
    pub lambda: Option<Q>,
    /// Defect at the found `λ` (a scalar), or at `λ = 1` when none exists.
    pub defect: WeylElement,
    /// `([λ, μ, κ], c)` with `λ C^so = C^u − μ Σ E_ij E_ij* − κ H + c`.
    pub fitted: Option<([Q; 3], Q)>,
    pub report: Report,
}

/// `Σ_{a,b} (G⁻¹)_{ab} X̂_a X̂_b` for matrices `basis` with Gram matrix
/// `G_ab = tr(X_a X_b)`.
fn trace_casimir(pol: &Polarization, basis: &[Matrix<Qi>]) -> Result<WeylElement, OscError> {
    let k = basis.len();
    let gram = Matrix::from_fn(k, k, |i, j| basis[i].mul(&basis[j]).trace());
    let ginv = gram.inverse().ok_or_else(|| OscError::InvalidSize("degenerate trace form".into()))?;
    let imgs: Vec<WeylElement> = basis.iter().map(|x| pol.quadratic(x)).collect::<Result<_, _>>()?;
    let mut c = WeylElement::zero();
    for i in 0..k {
        for j in 0..k {
            let g = ginv.get(i, j);
            if !g.is_zero() {
                c = c + imgs[i].mul(&imgs[j]).scale(g);
            }
        }
    }
    Ok(c)
}

fn block_matrix(h: usize, u: &Matrix<Qi>, v: &Matrix<Qi>, w: &Matrix<Qi>, z: &Matrix<Qi>) -> Matrix<Qi> {
    Matrix::from_fn(2 * h, 2 * h, |i, j| match (i < h, j < h) {
        (true, true) => u.get(i, j).clone(),
        (true, false) => v.get(i, j - h).clone(),
        (false, true) => w.get(i - h, j).clone(),
        (false, false) => z.get(i - h, j - h).clone(),
    })
}

/// Builds `C^so` (trace form of the `4n`-dimensional matrices), `C^su`
/// (trace form of `2n × 2n` matrices embedded as `diag(u, −ᵗu)`),
/// `C^u = C^su + H²/2n`, and searches `λ ∈ Q` making
/// `D = λ C^so − C^u + Σ E_ij E_ij*` scalar.
pub fn casimir_defect(n: u16) -> Result<CasimirOutcome, OscError> {
    let gens = so_star_generators(n)?;
    let h = 2 * n as usize;
    let pol = &gens.polarization;
    let zero = Matrix::<Qi>::zeros(h, h);
    let anti = |i: usize, j: usize| Matrix::<Qi>::unit(h, i, j).sub(&Matrix::unit(h, j, i));

    let mut so_basis = Vec::new();
    for i in 0..h {
        for j in 0..h {
            let u = Matrix::unit(h, i, j);
            so_basis.push(block_matrix(h, &u, &zero, &zero, &u.transpose().scale(&Qi::int(-1))));
        }
    }
    for i in 0..h {
        for j in i + 1..h {
            so_basis.push(block_matrix(h, &zero, &anti(i, j), &zero, &zero));
            so_basis.push(block_matrix(h, &zero, &zero, &anti(i, j), &zero));
        }
    }
    let c_so = trace_casimir(pol, &so_basis)?;

    // sl(2n) basis, traced in the 2n-dimensional representation
    let mut sl_basis = Vec::new();
    for i in 0..h {
        for j in 0..h {
            if i != j {
                sl_basis.push(Matrix::unit(h, i, j));
            }
        }
    }
    for i in 0..h - 1 {
        sl_basis.push(Matrix::unit(h, i, i).sub(&Matrix::unit(h, i + 1, i + 1)));
    }
    let gram = Matrix::from_fn(sl_basis.len(), sl_basis.len(), |i, j| sl_basis[i].mul(&sl_basis[j]).trace());
    let ginv = gram.inverse().ok_or_else(|| OscError::InvalidSize("degenerate trace form".into()))?;
    let embed = |u: &Matrix<Qi>| block_matrix(h, u, &zero, &zero, &u.transpose().scale(&Qi::int(-1)));
    let sl_imgs: Vec<WeylElement> = sl_basis.iter().map(|u| pol.quadratic(&embed(u))).collect::<Result<_, _>>()?;
    let mut c_su = WeylElement::zero();
    for i in 0..sl_imgs.len() {
        for j in 0..sl_imgs.len() {
            let g = ginv.get(i, j);
            if !g.is_zero() {
                c_su = c_su + sl_imgs[i].mul(&sl_imgs[j]).scale(g);
            }
        }
    }
    let en = gens.extra("H");
    let c_u = c_su + en.mul(en).scale(&Qi::ratio(1, 2 * n as i64));

    let mut raising = WeylElement::zero();
    for i in 1..=h as u16 {
        for j in i + 1..=h as u16 {
            let x = e_ij(i, j);
            raising = raising + x.mul(&x.adjoint());
        }
    }
    let rest = c_u.clone() - raising.clone();

    // λ C^so − rest scalar: compare non-scalar parts
    let lambda = express(&[c_so.without_scalar()], &rest.without_scalar()).map(|v| v[0].clone());
    let lambda_q = lambda.as_ref().filter(|l| l.is_real()).map(|l| l.re.clone());
    let lam = lambda.clone().unwrap_or_else(Qi::one);
    let defect = c_so.scale(&lam) - rest.clone();

    // λ C^so − C^u + μ Σ E_ij E_ij* + κ H scalar
    let fit = express(
        &[c_so.without_scalar(), raising.without_scalar().scale(&Qi::int(-1)), en.without_scalar().scale(&Qi::int(-1))],
        &c_u.without_scalar(),
    );
    let fitted = fit.as_ref().map(|v| {
        let d = c_so.scale(&v[0]) - c_u.clone() + raising.scale(&v[1]) + en.scale(&v[2]);
        let coeffs = [v[0].re.clone(), v[1].re.clone(), v[2].re.clone()];
        (coeffs, d.scalar_part().re)
    });

    let mut report = Report::new(format!("Casimir relation in so*({})", 4 * n));
    let mut probes: Vec<(String, WeylElement)> = gens.chevalley();
    probes.push(("E_theta".into(), gens.extra("E_theta").clone()));
    for (name, x) in &probes {
        let d = c_so.commutator(x);
        report.record(format!("[C_so,{}]", name), "C^so is central", if d.is_zero() { None } else { Some(format!("{}", d)) });
    }
    // The literal combination is u(2n)-invariant but carries an uncancelled
    // multiple of H from the ordering of E_ij E_ij*, so it fails to commute
    // with the non-compact generators for every λ.
    let m = 2 * n as usize;
    let mut noncompact = Vec::new();
    for (name, x) in &probes {
        let d = defect.commutator(x);
        let compact = name != "E_theta" && name != &format!("E{}", m) && name != &format!("F{}", m);
        if compact {
            report.record(format!("[D,{}]", name), "Casimir defect is u(2n)-invariant", if d.is_zero() { None } else { Some(format!("{}", d)) });
        } else if !d.is_zero() {
            noncompact.push(format!("[D,{}] = {}", name, d));
        }
    }
    report.record_negative(
        "[D,non-compact]",
        "literal Casimir relation (not central)",
        if noncompact.is_empty() { None } else { Some(noncompact.join("; ")) },
    );
    report.record_negative(
        "lambda",
        "literal Casimir relation (no rational rescaling)",
        if lambda_q.is_some() { None } else { Some("no rational lambda makes the defect scalar".into()) },
    );
    report.record_bool("fitted relation", "lambda C^so = C^u - mu sum E E* - kappa H + c", fitted.is_some(), || {
        "no (lambda, mu, kappa) makes the defect scalar".into()
    });
    Ok(CasimirOutcome { n, compact_minus_raising: rest, c_so, lambda: lambda_q, defect, fitted, report })
}

/// Span dimension of a named family.
pub fn named_span_dim(xs: &[(String, WeylElement)]) -> usize {
    let v: Vec<WeylElement> = xs.iter().map(|(_, w)| w.clone()).collect();
    span_dim(&v)
}

/// Relation suite used by the command-line front end.
pub fn relations_report(gens: &GeneratorSet) -> Report {
    let mut r = check_chevalley(gens);
    r.title = format!("relations of {}", gens.label);
    r.extend(check_structure(gens));
    let cartan_ok = read_cartan(gens).as_ref() == Some(&gens.cartan);
    r.record_bool("cartan read-off", "Cartan action", cartan_ok, || format!("{:?}", read_cartan(gens)));
    let cls = classify_cartan(&gens.cartan).map(|v| v.iter().map(|t| format!("{}", t)).collect::<Vec<_>>());
    r.record_bool("cartan type", "Cartan matrix type", cls.is_ok(), || format!("{:?}", cls));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su22_explicit_forms() {
        let g = su22_generators();
        assert_eq!(g.h[0], number(a(1)) - number(a(2)));
        assert_eq!(g.extra("E_theta"), &pair(cre(a(1)), cre(b(2))));
        assert!(check_chevalley(&g).all_ok());
        let s = check_structure(&g);
        assert!(s.all_ok(), "{:?}", s.failures().collect::<Vec<_>>());
    }

    #[test]
    fn unn_small() {
        for n in 1..=3 {
            let g = unn_generators(n).unwrap();
            let r = relations_report(&g);
            assert!(r.all_ok(), "n={} {:?}", n, r.failures().collect::<Vec<_>>());
        }
        let g1 = unn_generators(1).unwrap();
        assert_eq!(g1.extra("H_theta"), &(number(a(1)) + pair(ann(b(1)), cre(b(1)))));
        assert!(unn_generators(0).is_err());
    }

    #[test]
    fn so_star_examples() {
        let g = so_star_generators(1).unwrap();
        assert_eq!(g.e[1], pair(cre(a(1)), cre(b(2))) - pair(cre(a(2)), cre(b(1))));
        let g2 = so_star_generators(2).unwrap();
        let h4 = number(a(3)) + number(a(4)) + pair(ann(b(3)), cre(b(3))) + pair(ann(b(4)), cre(b(4)));
        assert_eq!(g2.h[3], h4);
        assert_eq!(read_cartan(&g2).unwrap(), g2.cartan);
        let r = relations_report(&g2);
        assert!(r.all_ok(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn corrupted_generator_is_flagged() {
        let mut g = su22_generators();
        g.e[0] = g.e[0].clone() + pair(cre(a(2)), cre(b(1)));
        let r = check_chevalley(&g);
        assert!(!r.find("[E1,F2]").unwrap().holds);
    }

    #[test]
    fn forms_are_consistent() {
        for s in [FormSpec::SpReal { n: 2 }, FormSpec::Upq { p: 2, q: 2 }, FormSpec::SoStar { n: 1 }] {
            assert!(s.forms_consistent());
            assert!(matrix_membership(&Matrix::zeros(s.size(), s.size()), s).unwrap());
        }
        assert!(matrix_membership(&Matrix::zeros(3, 3), FormSpec::SoStar { n: 1 }).is_err());
    }

    #[test]
    fn e1_real_combinations() {
        let g = so_star_generators(1).unwrap();
        let spec = FormSpec::SoStar { n: 1 };
        let e = g.image_matrix(&g.e[0]).unwrap().0;
        let f = g.image_matrix(&g.f[0]).unwrap().0;
        assert!(matrix_membership(&e.sub(&f), spec).unwrap());
        assert!(matrix_membership(&e.add(&f).scale(&Qi::i()), spec).unwrap());
        assert!(!matrix_membership(&e.add(&f), spec).unwrap());
    }

    #[test]
    fn nilpotent_cone() {
        assert!(nilpotent_cone_check().all_ok());
    }

    #[test]
    fn su22_theta_grading_and_commutant() {
        let gr = theta_grading_su22();
        assert!(gr.keys().all(|k| (-2..=2).contains(k)));
        assert_eq!(gr[&2], 1);
        assert_eq!(gr[&-2], 1);
        assert_eq!(theta_commutant_dim_su22(), 4);
    }

    #[test]
    fn casimir_fit_n1() {
        let o = casimir_defect(1).unwrap();
        assert!(o.report.all_ok(), "{:?}", o.report.failures().collect::<Vec<_>>());
        assert!(o.lambda.is_none());
        let (c, k) = o.fitted.unwrap();
        assert_eq!(c, [crate::field::qi64(2), crate::field::qi64(-2), crate::field::qi64(-1)]);
        assert_eq!(k, crate::field::qi64(-4));
    }

    #[test]
    fn dual_pair_negative_control() {
        let l = [("N1".to_string(), number(a(1)))];
        let rr = [("X".to_string(), pair(cre(a(1)), ann(a(2))))];
        assert!(!check_dual_pair(&l, &rr).all_ok());
    }
}
