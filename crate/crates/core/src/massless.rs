//! Differential-operator realization of two pairs of oscillators on states
//! `P(z1, z2, z̄1, z̄2) e^{−z z̄}`, vacuum checks and the light-like momentum.
//!
//! Variables are ordered `z1, z2, z̄1, z̄2`. The factor `1/√2` lives in
//! `Q(i)[s]/(s² − 2)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::field::{factorial, Conjugate, Qi, QiS, Q};
use crate::oscrep::{charge, su22_generators};
use crate::poly::{monomials_up_to, Exponent, Poly};
use crate::report::Report;
use crate::weylalg::{Ladder, ModeId, WeylElement};

pub const NAMES: [&str; 4] = ["z1", "z2", "zb1", "zb2"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MasslessError {
    /// Only `a_1, a_2, b_1, b_2` are realized.
    UnsupportedMode(ModeId),
}

impl fmt::Display for MasslessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MasslessError::UnsupportedMode(m) => write!(f, "mode {} has no differential realization", m),
        }
    }
}

/// `P · e^{−z z̄}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GaussianPolyState {
    pub poly: Poly<QiS>,
}

impl GaussianPolyState {
    pub fn vacuum() -> Self {
        GaussianPolyState { poly: Poly::one() }
    }

    pub fn monomial(e: Exponent) -> Self {
        GaussianPolyState { poly: Poly::monomial(e, QiS::one()) }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussianPolyState { poly: self.poly.add(&o.poly) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussianPolyState { poly: self.poly.sub(&o.poly) }
    }

    pub fn scale(&self, k: &QiS) -> Self {
        GaussianPolyState { poly: self.poly.scale(k) }
    }

    /// Every coefficient lies in `Q(i)`.
    pub fn is_surd_free(&self) -> bool {
        self.poly.terms().all(|(_, c)| c.to_qi().is_some())
    }
}

impl fmt::Display for GaussianPolyState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] e^(-z zb)", self.poly.display(NAMES))
    }
}

fn z(a: usize) -> usize {
    a
}

fn zb(a: usize) -> usize {
    a + 2
}

/// Multiplication by `z_α` (`bar = false`) or `z̄_α`.
pub fn mul_coord(a: usize, bar: bool, s: &GaussianPolyState) -> GaussianPolyState {
    GaussianPolyState { poly: s.poly.mul_var(if bar { zb(a) } else { z(a) }) }
}

/// `∂_α (P e^{−zz̄}) = (∂_α P − z̄_α P) e^{−zz̄}`; with `bar`, `∂̄_α` and `z_α`.
pub fn gauss_deriv(a: usize, bar: bool, s: &GaussianPolyState) -> GaussianPolyState {
    let (d, m) = if bar { (zb(a), z(a)) } else { (z(a), zb(a)) };
    GaussianPolyState { poly: s.poly.deriv(d).sub(&s.poly.mul_var(m)) }
}

/// The realization `a_α* = (z_α − ∂̄_α)/√2`, `b_α* = (z̄_α − ∂_α)/√2`,
/// `a_α = (z̄_α + ∂_α)/√2`, `b_α = (z_α + ∂̄_α)/√2`, checked on polynomials of
/// degree `<= degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiffOpRealization {
    pub degree: u32,
}

pub fn realize_schrodinger(degree: u32) -> DiffOpRealization {
    DiffOpRealization { degree }
}

impl Default for DiffOpRealization {
    fn default() -> Self {
        DiffOpRealization { degree: 6 }
    }
}

impl DiffOpRealization {
    pub fn apply_ladder(&self, l: Ladder, s: &GaussianPolyState) -> Result<GaussianPolyState, MasslessError> {
        let (idx, is_a) = match l.mode {
            ModeId::A(i @ 1..=2) => (i as usize - 1, true),
            ModeId::B(i @ 1..=2) => (i as usize - 1, false),
            m => return Err(MasslessError::UnsupportedMode(m)),
        };
        // (multiply by z̄?, derivative is ∂̄?, sign of the derivative term)
        let (mul_bar, der_bar, sign) = match (is_a, l.dagger) {
            (true, true) => (false, true, -1),
            (false, true) => (true, false, -1),
            (true, false) => (true, false, 1),
            (false, false) => (false, true, 1),
        };
        let m = mul_coord(idx, mul_bar, s);
        let d = gauss_deriv(idx, der_bar, s);
        let sum = if sign > 0 { m.add(&d) } else { m.sub(&d) };
        Ok(sum.scale(&QiS::inv_sqrt2()))
    }

    /// Normal-ordered monomials act with annihilators first.
    pub fn apply(&self, w: &WeylElement, s: &GaussianPolyState) -> Result<GaussianPolyState, MasslessError> {
        let mut out = GaussianPolyState::default();
        for (mono, c) in w.terms() {
            let mut st = s.clone();
            for &(id, _, q) in mono.powers() {
                for _ in 0..q {
                    st = self.apply_ladder(Ladder::ann(id), &st)?;
                }
            }
            for &(id, p, _) in mono.powers() {
                for _ in 0..p {
                    st = self.apply_ladder(Ladder::cre(id), &st)?;
                }
            }
            out = out.add(&st.scale(&QiS::from(c.clone())));
        }
        Ok(out)
    }

    fn test_states(&self) -> Vec<GaussianPolyState> {
        monomials_up_to(self.degree).into_iter().map(GaussianPolyState::monomial).collect()
    }

    /// `[c_i, c_j*] = δ_ij`, all other brackets zero, on every monomial state.
    pub fn ccr_report(&self) -> Report {
        let mut r = Report::new(format!("CCR of the differential realization up to degree {}", self.degree));
        let modes = [ModeId::A(1), ModeId::A(2), ModeId::B(1), ModeId::B(2)];
        let ladders: Vec<Ladder> = modes.iter().flat_map(|&m| [Ladder::ann(m), Ladder::cre(m)]).collect();
        let states = self.test_states();
        for (i, &x) in ladders.iter().enumerate() {
            for &y in &ladders[i + 1..] {
                let expected = if x.mode == y.mode && x.dagger != y.dagger {
                    if x.dagger {
                        -1
                    } else {
                        1
                    }
                } else {
                    0
                };
                let mut bad = None;
                for st in &states {
                    let xy = self.apply_ladder(x, &self.apply_ladder(y, st).expect("realized"));
                    let yx = self.apply_ladder(y, &self.apply_ladder(x, st).expect("realized"));
                    let br = xy.expect("realized").sub(&yx.expect("realized"));
                    if br != st.scale(&QiS::from(Qi::int(expected))) {
                        bad = Some(format!("on {}: {}", st, br));
                        break;
                    }
                }
                r.record(format!("[{}, {}]", ladder_name(x), ladder_name(y)), "canonical commutation relations", bad);
            }
        }
        r
    }

    /// `R([X, Y]) = [R(X), R(Y)]` for the `su(2,2)` Chevalley generators, and
    /// quadratic generators keep coefficients in `Q(i)`.
    pub fn functoriality_report(&self) -> Report {
        let g = su22_generators();
        let mut r = Report::new("realization of su(2,2)");
        let named: Vec<(String, WeylElement)> = (0..g.rank())
            .flat_map(|i| [(format!("E{}", i + 1), g.e[i].clone()), (format!("F{}", i + 1), g.f[i].clone()), (format!("H{}", i + 1), g.h[i].clone())])
            .collect();
        let states = self.test_states();
        let mut surd = 0;
        for (i, (nx, x)) in named.iter().enumerate() {
            for st in &states {
                if !self.apply(x, st).expect("realized").is_surd_free() {
                    surd += 1;
                }
            }
            for (ny, y) in &named[i + 1..] {
                let br = x.commutator(y);
                let mut bad = None;
                for st in &states {
                    let lhs = self.apply(&br, st).expect("realized");
                    let rx = self.apply(x, &self.apply(y, st).expect("realized")).expect("realized");
                    let ry = self.apply(y, &self.apply(x, st).expect("realized")).expect("realized");
                    if lhs != rx.sub(&ry) {
                        bad = Some(format!("on {}", st));
                        break;
                    }
                }
                r.record(format!("[{},{}]", nx, ny), "realization is a homomorphism", bad);
            }
        }
        r.record_bool("no surds", "s^2 = 2 in bilinears", surd == 0, || format!("{} images carry s", surd));
        r
    }
}

fn ladder_name(l: Ladder) -> String {
    if l.dagger {
        format!("{}*", l.mode)
    } else {
        format!("{}", l.mode)
    }
}

/// `∫ x^k e^{−2x} dx` over `[0, ∞)`: `k! / 2^{k+1}`.
pub fn radial_moment(k: u32) -> Q {
    Q::new(factorial(k), BigInt::from(2).pow(k + 1))
}

/// `∫_ℂ |z|^{2a} e^{−2|z|²} d²z / π`, by `M(a) = (a/2) M(a−1)`, `M(0) = 1/2`.
pub fn gaussian_moment(a: u32) -> Q {
    (1..=a).fold(Q::new(1.into(), 2.into()), |m, k| m * Q::new(k.into(), 2.into()))
}

/// `⟨P e^{−zz̄}, Q e^{−zz̄}⟩` for the vacuum normalized as `(2/π) e^{−zz̄}`,
/// i.e. `(4/π²) ∫ conj(P) Q e^{−2zz̄}`.
pub fn inner_product(p: &GaussianPolyState, q: &GaussianPolyState) -> QiS {
    let mut acc = QiS::zero();
    for (ep, cp) in p.poly.terms() {
        // conj(z^a z̄^b) = z̄^a z^b
        let conj_e = [ep[2], ep[3], ep[0], ep[1]];
        for (eq, cq) in q.poly.terms() {
            let e = [conj_e[0] + eq[0], conj_e[1] + eq[1], conj_e[2] + eq[2], conj_e[3] + eq[3]];
            if e[0] != e[2] || e[1] != e[3] {
                continue;
            }
            let w = gaussian_moment(e[0]) * gaussian_moment(e[1]) * Q::from_integer(4.into());
            acc = acc + cp.conj() * cq.clone() * QiS::from(Qi::real(w));
        }
    }
    acc
}

/// Vacuum annihilation, the centre eigenvalue and the norm.
pub fn vacuum_checks() -> Report {
    let real = DiffOpRealization::default();
    let g = su22_generators();
    let vac = GaussianPolyState::vacuum();
    let mut r = Report::new("vacuum of the massless representation");
    let zero_on = |w: &WeylElement| {
        let img = real.apply(w, &vac).expect("realized");
        if img.is_zero() {
            None
        } else {
            Some(format!("{}", img))
        }
    };
    for (name, w) in [("E1", &g.e[0]), ("H1", &g.h[0]), ("E3", &g.e[2]), ("H3", &g.h[2])] {
        r.record(format!("{}|0> = 0", name), "compact invariance of the vacuum", zero_on(w));
    }
    for i in 0..3 {
        r.record(format!("F{}|0> = 0", i + 1), "lowest weight vector", zero_on(&g.f[i]));
    }
    let centre = g.h[0].clone() + g.h[1].scale(&Qi::int(2)) + g.h[2].clone();
    let img = real.apply(&centre, &vac).expect("realized");
    let two = vac.scale(&QiS::from(Qi::int(2)));
    r.record_bool("(H1+2H2+H3)|0> = 2|0>", "centre eigenvalue", img == two, || format!("{}", img));
    // (z z̄ − ∂̄ ∂) applied through the Gaussian rules
    let mut op = GaussianPolyState::default();
    for a in 0..2 {
        op = op.add(&mul_coord(a, true, &mul_coord(a, false, &vac)));
        op = op.sub(&gauss_deriv(a, true, &gauss_deriv(a, false, &vac)));
    }
    r.record_bool("(z zb - dbar d)|0> = 2|0>", "centre as a differential operator", op == two, || format!("{}", op));
    let h = real.apply(&charge(2), &vac).expect("realized");
    r.record_bool("h|0> = 0", "zero helicity vacuum", h.is_zero(), || format!("{}", h));
    let norm = inner_product(&vac, &vac);
    r.record_bool("<0|0> = 1", "vacuum normalization", norm == QiS::one(), || format!("{}", norm));
    let radial = radial_moment(1) * Q::from_integer(4.into());
    r.record_bool("radial form", "vacuum normalization", radial == Q::one(), || format!("{}", radial));
    r
}

/// `p_μ = z σ_μ z̄` as polynomials in `z1, z2, z̄1, z̄2`.
pub fn momentum() -> [Poly<Qi>; 4] {
    let zz = |a: usize, b: usize, c: Qi| Poly::var(z(a)).mul(&Poly::var(zb(b))).scale(&c);
    let one = Qi::one();
    let i = Qi::i();
    [
        zz(0, 0, one.clone()).add(&zz(1, 1, one.clone())),
        zz(0, 1, one.clone()).add(&zz(1, 0, one.clone())),
        zz(0, 1, -i.clone()).add(&zz(1, 0, i)),
        zz(0, 0, one.clone()).sub(&zz(1, 1, one)),
    ]
}

/// `p² = p₀² − p⃗² ≡ 0` and `p₀ = z z̄`.
pub fn lightlike_identity() -> Report {
    let p = momentum();
    let mut r = Report::new("light-like momentum");
    let sq = p[0].pow(2).sub(&p[1].pow(2)).sub(&p[2].pow(2)).sub(&p[3].pow(2));
    r.record_bool("p^2 = 0", "light-like momentum", sq.is_zero(), || sq.display(NAMES));
    let zzb = Poly::var(z(0)).mul(&Poly::var(zb(0))).add(&Poly::var(z(1)).mul(&Poly::var(zb(1))));
    r.record_bool("p0 = z zb", "light-like momentum", p[0] == zzb, || p[0].display(NAMES));
    r
}
