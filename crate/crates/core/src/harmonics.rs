//! Homogeneous harmonic polynomials `h_{nℓm}(z_1..z_4)` and the map from
//! Minkowski space into the compactified picture.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::field::{Conjugate, Field, Qi, Q};
use crate::linalg::Matrix;
use crate::poly::{monomials_of_degree, Poly};
use crate::report::Report;

pub type QiPoly = Poly<Qi>;

pub const Z_NAMES: [&str; 4] = ["z1", "z2", "z3", "z4"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HarmonicsError {
    InvalidLabel {
        n: u32,
        l: u32,
        m: i32,
    },
    /// `ω(x) = 0`: the point lies at conformal infinity.
    ConformalInfinity,
}

impl fmt::Display for HarmonicsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarmonicsError::InvalidLabel { n, l, m } => {
                write!(f, "invalid labels (n, l, m) = ({}, {}, {}): need n >= 1, l < n, |m| <= l", n, l, m)
            }
            HarmonicsError::ConformalInfinity => write!(f, "point at conformal infinity (omega = 0)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicPolynomial {
    pub n: u32,
    pub l: u32,
    pub m: i32,
    pub poly: QiPoly,
}

impl HarmonicPolynomial {
    /// Rescales so that the lexicographically leading coefficient is `c`.
    pub fn renormalize(&mut self, c: &Qi) {
        if let Some((_, lead)) = self.poly.leading() {
            let k = c.clone() * lead.inv().expect("nonzero leading coefficient");
            self.poly = self.poly.scale(&k);
        }
    }
}

/// `□ = Σ_α ∂²/∂z_α²`.
pub fn laplacian(p: &QiPoly) -> QiPoly {
    (0..4).fold(QiPoly::zero(), |acc, a| acc.add(&p.deriv(a).deriv(a)))
}

/// `H = z·∂/∂z + 1`.
pub fn conformal_hamiltonian(p: &QiPoly) -> QiPoly {
    (0..4).fold(p.clone(), |acc, a| acc.add(&p.deriv(a).mul_var(a)))
}

/// `L_j = i ε_{jkl} z_l ∂_k`, `j = 1, 2, 3`.
pub fn angular(j: usize, p: &QiPoly) -> QiPoly {
    // (k, l) with ε_{jkl} = +1; the (l, k) term enters with a minus sign
    let (k, l) = match j {
        1 => (1, 2),
        2 => (2, 0),
        3 => (0, 1),
        _ => panic!("angular momentum index must be 1, 2 or 3"),
    };
    p.deriv(k).mul_var(l).sub(&p.deriv(l).mul_var(k)).scale(&Qi::i())
}

pub fn angular_squared(p: &QiPoly) -> QiPoly {
    (1..=3).fold(QiPoly::zero(), |acc, j| acc.add(&angular(j, &angular(j, p))))
}

/// `L₋ = L_1 − i L_2`.
pub fn lowering(p: &QiPoly) -> QiPoly {
    angular(1, p).sub(&angular(2, p).scale(&Qi::i()))
}

fn check_labels(n: u32, l: u32, m: i32) -> Result<(), HarmonicsError> {
    if n == 0 || l >= n || m.unsigned_abs() > l {
        return Err(HarmonicsError::InvalidLabel { n, l, m });
    }
    Ok(())
}

/// `(z1 + i z2)^ℓ Σ_k c_k z4^{d−ℓ−2k} r^{2k}` with `r² = z1² + z2² + z3²`
/// and `c_{k+1} = −c_k m_k(m_k−1) / (2(k+1)(2k+2ℓ+3))`, `m_k = d−ℓ−2k`.
fn top_state(n: u32, l: u32) -> QiPoly {
    let d = n - 1;
    let plus = QiPoly::var(0).add(&QiPoly::var(1).scale(&Qi::i()));
    let r2 = (0..3).fold(QiPoly::zero(), |acc, a| acc.add(&QiPoly::var(a).pow(2)));
    let mut sum = QiPoly::zero();
    let mut c = Q::one();
    let mut k = 0u32;
    while l + 2 * k <= d {
        let mk = d - l - 2 * k;
        sum = sum.add(&QiPoly::var(3).pow(mk).mul(&r2.pow(k)).scale(&Qi::real(c.clone())));
        let num = Q::from_integer((mk as i64 * (mk as i64 - 1)).into());
        let den = Q::from_integer((2 * (k as i64 + 1) * (2 * k as i64 + 2 * l as i64 + 3)).into());
        c = -c * num / den;
        k += 1;
    }
    plus.pow(l).mul(&sum)
}

/// `h_{nℓm}`: the harmonic top state of spin `ℓ`, lowered `ℓ − m` times by
/// `L₋`, normalized so the lexicographically leading coefficient is 1.
pub fn build_harmonic(n: u32, l: u32, m: i32) -> Result<HarmonicPolynomial, HarmonicsError> {
    check_labels(n, l, m)?;
    let mut p = top_state(n, l);
    for _ in 0..(l as i32 - m) {
        p = lowering(&p);
    }
    let mut h = HarmonicPolynomial { n, l, m, poly: p };
    h.renormalize(&Qi::one());
    Ok(h)
}

/// Exact checks of harmonicity and the three eigenvalue equations.
pub fn verify_mode(h: &QiPoly, n: u32, l: u32, m: i32) -> Report {
    let mut r = Report::new(format!("harmonic mode ({}, {}, {})", n, l, m));
    let show = |p: &QiPoly| p.display(Z_NAMES);
    r.record_bool("nonzero", "mode polynomial", !h.is_zero(), || "zero polynomial".into());
    let lap = laplacian(h);
    r.record_bool("harmonic", "harmonicity", lap.is_zero(), || show(&lap));
    let e = conformal_hamiltonian(h).sub(&h.scale(&Qi::int(n as i64)));
    r.record_bool("energy", "conformal Hamiltonian eigenvalue", e.is_zero(), || show(&e));
    let ll = (l * (l + 1)) as i64;
    let a = angular_squared(h).sub(&h.scale(&Qi::int(ll)));
    r.record_bool("L^2", "total angular momentum", a.is_zero(), || show(&a));
    let l3 = angular(3, h).sub(&h.scale(&Qi::int(m as i64)));
    r.record_bool("L3", "magnetic quantum number", l3.is_zero(), || show(&l3));
    r
}

/// Number of linearly independent `h_{nℓm}` at level `n`.
pub fn mode_count(n: u32) -> usize {
    let mut vecs: Vec<Vec<Qi>> = Vec::new();
    let monos = monomials_of_degree(n - 1);
    for l in 0..n {
        for m in -(l as i32)..=(l as i32) {
            let h = build_harmonic(n, l, m).expect("valid labels").poly;
            vecs.push(monos.iter().map(|e| h.coefficient(e)).collect());
        }
    }
    crate::linalg::span_rank(&vecs)
}

/// Dimension of the kernel of `□` on homogeneous polynomials of degree `d`.
pub fn harmonic_space_dim(d: u32) -> usize {
    let src = monomials_of_degree(d);
    if d < 2 {
        return src.len();
    }
    let dst = monomials_of_degree(d - 2);
    let mut m = Matrix::zeros(dst.len(), src.len());
    for (j, e) in src.iter().enumerate() {
        let img = laplacian(&QiPoly::monomial(*e, Qi::one()));
        for (i, f) in dst.iter().enumerate() {
            m.set(i, j, img.coefficient(f));
        }
    }
    src.len() - m.rank()
}

/// `[L_j, L_k] = i ε_{jkl} L_l` and `[H, L²] = [H, L_3] = 0` on every
/// monomial of degree `<= d`.
pub fn operator_algebra_check(d: u32) -> Report {
    let mut r = Report::new("angular momentum algebra");
    let mut bad_l = 0;
    let mut bad_h = 0;
    for deg in 0..=d {
        for e in monomials_of_degree(deg) {
            let p = QiPoly::monomial(e, Qi::one());
            for (j, k, l) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
                let lhs = angular(j, &angular(k, &p)).sub(&angular(k, &angular(j, &p)));
                if lhs != angular(l, &p).scale(&Qi::i()) {
                    bad_l += 1;
                }
            }
            let hl2 = conformal_hamiltonian(&angular_squared(&p)).sub(&angular_squared(&conformal_hamiltonian(&p)));
            let hl3 = conformal_hamiltonian(&angular(3, &p)).sub(&angular(3, &conformal_hamiltonian(&p)));
            if !hl2.is_zero() || !hl3.is_zero() {
                bad_h += 1;
            }
        }
    }
    r.record_bool("[Lj,Lk]", "angular momentum commutators", bad_l == 0, || format!("{} failures", bad_l));
    r.record_bool("[H,L]", "commuting labels", bad_h == 0, || format!("{} failures", bad_h));
    r
}

/// `x = (x⁰, x¹, x², x³) ↦ z` with `z_j = x^j/ω`, `z_4 = (1 − x²)/(2ω)`,
/// `2ω = 1 + x² − 2i x⁰`, `x² = x⃗² − (x⁰)²`.
pub fn compactify(x: &[Q; 4]) -> Result<[Qi; 4], HarmonicsError> {
    let x2 = &x[1] * &x[1] + &x[2] * &x[2] + &x[3] * &x[3] - &x[0] * &x[0];
    let two_omega = Qi::new(Q::one() + &x2, -Q::from_integer(2.into()) * &x[0]);
    if two_omega.is_zero() {
        return Err(HarmonicsError::ConformalInfinity);
    }
    let inv_omega = two_omega.inv().expect("nonzero").scale(&Q::from_integer(2.into()));
    Ok([inv_omega.scale(&x[1]), inv_omega.scale(&x[2]), inv_omega.scale(&x[3]), inv_omega.scale(&((Q::one() - x2) / Q::from_integer(2.into())))])
}

/// `ω(x)`.
pub fn omega(x: &[Q; 4]) -> Qi {
    let x2 = &x[1] * &x[1] + &x[2] * &x[2] + &x[3] * &x[3] - &x[0] * &x[0];
    Qi::new((Q::one() + x2) / Q::from_integer(2.into()), -x[0].clone())
}

/// `Σ z_α² = conj(ω)/ω`.
pub fn compactify_identity_holds(x: &[Q; 4]) -> Result<bool, HarmonicsError> {
    let z = compactify(x)?;
    let s = z.iter().fold(Qi::zero(), |acc, v| acc + v.clone() * v.clone());
    let w = omega(x);
    Ok(s == w.conj() * w.inv().expect("nonzero"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::qi64;

    #[test]
    fn low_modes() {
        assert_eq!(build_harmonic(1, 0, 0).unwrap().poly, QiPoly::one());
        let h = build_harmonic(2, 1, 1).unwrap().poly;
        assert_eq!(h, QiPoly::var(0).add(&QiPoly::var(1).scale(&Qi::i())));
        assert!(verify_mode(&build_harmonic(2, 1, 0).unwrap().poly, 2, 1, 0).all_ok());
        assert!(build_harmonic(2, 2, 0).is_err());
    }

    #[test]
    fn non_harmonic_is_flagged() {
        let r = verify_mode(&QiPoly::var(0).pow(2), 3, 0, 0);
        assert!(!r.find("harmonic").unwrap().holds);
    }

    #[test]
    fn origin_maps_to_unit_vector() {
        let z = compactify(&[qi64(0), qi64(0), qi64(0), qi64(0)]).unwrap();
        assert_eq!(z, [Qi::zero(), Qi::zero(), Qi::zero(), Qi::one()]);
    }
}
