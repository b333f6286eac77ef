//! Exact coefficient rings.
//!
//! Everything in this crate is computed over the rationals `Q`, the Gaussian
//! rationals `Q(i)`, or the quadratic extension `Q(i)[s]/(s^2 - 2)` used to
//! carry the `1/sqrt(2)` of the Schrödinger realization without surds.

use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational.
pub type Q = BigRational;

/// Rational from a numerator/denominator pair of machine integers.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn qi64(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Commutative ring with exact arithmetic.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_q(v: Q) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_q(qi64(v))
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

/// Ring with an involutive conjugation (identity on `Q`).
pub trait Conjugate {
    fn conj(&self) -> Self;
}

impl Ring for Q {
    fn from_q(v: Q) -> Self {
        v
    }
}

impl Field for Q {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Conjugate for Q {
    fn conj(&self) -> Self {
        self.clone()
    }
}

/// Gaussian rational `re + i im`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Qi {
    pub re: Q,
    pub im: Q,
}

impl Qi {
    pub fn new(re: Q, im: Q) -> Self {
        Qi { re, im }
    }

    pub fn real(re: Q) -> Self {
        Qi { re, im: Q::zero() }
    }

    pub fn i() -> Self {
        Qi { re: Q::zero(), im: Q::one() }
    }

    pub fn int(v: i64) -> Self {
        Qi::real(qi64(v))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Qi::real(q(num, den))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Squared modulus.
    pub fn norm_sqr(&self) -> Q {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &Q) -> Self {
        Qi { re: &self.re * k, im: &self.im * k }
    }
}

impl Zero for Qi {
    fn zero() -> Self {
        Qi::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Qi {
    fn one() -> Self {
        Qi::real(Q::one())
    }
}

impl Add for Qi {
    type Output = Qi;
    fn add(self, o: Qi) -> Qi {
        Qi { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Qi {
    type Output = Qi;
    fn sub(self, o: Qi) -> Qi {
        Qi { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for Qi {
    type Output = Qi;
    fn mul(self, o: Qi) -> Qi {
        &self * &o
    }
}

impl<'a> Mul<&'a Qi> for &'a Qi {
    type Output = Qi;
    fn mul(self, o: &Qi) -> Qi {
        Qi { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl<'a> Add<&'a Qi> for &'a Qi {
    type Output = Qi;
    fn add(self, o: &Qi) -> Qi {
        Qi { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Qi> for &'a Qi {
    type Output = Qi;
    fn sub(self, o: &Qi) -> Qi {
        Qi { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Neg for Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi { re: -self.re, im: -self.im }
    }
}

impl Ring for Qi {
    fn from_q(v: Q) -> Self {
        Qi::real(v)
    }
}

impl Field for Qi {
    fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(Qi { re: &self.re / &n, im: -(&self.im / &n) })
    }
}

impl Conjugate for Qi {
    fn conj(&self) -> Self {
        Qi { re: self.re.clone(), im: -self.im.clone() }
    }
}

impl From<Q> for Qi {
    fn from(v: Q) -> Self {
        Qi::real(v)
    }
}

impl fmt::Display for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", imag_str(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "({}{}{})", self.re, sign, imag_str(&self.im.abs()))
            }
        }
    }
}

fn imag_str(im: &Q) -> String {
    if im.is_one() {
        String::from("i")
    } else if *im == -Q::one() {
        String::from("-i")
    } else {
        format!("{}i", im)
    }
}

/// Element `x + y s` of `Q(i)[s]/(s^2 - 2)`; `s` stands for `sqrt(2)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QiS {
    pub x: Qi,
    pub y: Qi,
}

impl QiS {
    pub fn new(x: Qi, y: Qi) -> Self {
        QiS { x, y }
    }

    /// `s/2 = 1/sqrt(2)`.
    pub fn inv_sqrt2() -> Self {
        QiS { x: Qi::zero(), y: Qi::ratio(1, 2) }
    }

    pub fn s() -> Self {
        QiS { x: Qi::zero(), y: Qi::one() }
    }

    /// The `Q(i)` value if the surd part vanishes.
    pub fn to_qi(&self) -> Option<Qi> {
        if self.y.is_zero() {
            Some(self.x.clone())
        } else {
            None
        }
    }
}

impl From<Qi> for QiS {
    fn from(x: Qi) -> Self {
        QiS { x, y: Qi::zero() }
    }
}

impl Zero for QiS {
    fn zero() -> Self {
        QiS::default()
    }
    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl One for QiS {
    fn one() -> Self {
        QiS { x: Qi::one(), y: Qi::zero() }
    }
}

impl Add for QiS {
    type Output = QiS;
    fn add(self, o: QiS) -> QiS {
        QiS { x: self.x + o.x, y: self.y + o.y }
    }
}

impl Sub for QiS {
    type Output = QiS;
    fn sub(self, o: QiS) -> QiS {
        QiS { x: self.x - o.x, y: self.y - o.y }
    }
}

impl Mul for QiS {
    type Output = QiS;
    fn mul(self, o: QiS) -> QiS {
        let two = Qi::int(2);
        let yy = &self.y * &o.y;
        QiS { x: &self.x * &o.x + &two * &yy, y: &self.x * &o.y + &self.y * &o.x }
    }
}

impl Neg for QiS {
    type Output = QiS;
    fn neg(self) -> QiS {
        QiS { x: -self.x, y: -self.y }
    }
}

impl Ring for QiS {
    fn from_q(v: Q) -> Self {
        QiS::from(Qi::real(v))
    }
}

impl Conjugate for QiS {
    fn conj(&self) -> Self {
        // s is real
        QiS { x: self.x.conj(), y: self.y.conj() }
    }
}

impl fmt::Display for QiS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            write!(f, "{}", self.x)
        } else if self.x.is_zero() {
            write!(f, "{}*s", self.y)
        } else {
            write!(f, "({}+{}*s)", self.x, self.y)
        }
    }
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_inverse() {
        let z = Qi::new(q(1, 2), q(-3, 4));
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, Qi::one());
        assert!(Qi::zero().inv().is_none());
    }

    #[test]
    fn surd_squares_to_two() {
        let s = QiS::s();
        assert_eq!(s.clone() * s, QiS::from(Qi::int(2)));
        let h = QiS::inv_sqrt2();
        assert_eq!(h.clone() * h, QiS::from(Qi::ratio(1, 2)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(format!("{}", Qi::i()), "i");
        assert_eq!(format!("{}", -Qi::i()), "-i");
        assert_eq!(format!("{}", Qi::new(q(1, 2), q(-1, 1))), "(1/2-i)");
        assert_eq!(format!("{}", Qi::int(-3)), "-3");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
