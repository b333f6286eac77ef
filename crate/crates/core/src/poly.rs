//! Sparse polynomials in four commuting variables over an exact ring.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::field::Ring;

pub type Exponent = [u32; 4];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F> {
    terms: BTreeMap<Exponent, F>,
}

impl<F: Ring> Default for Poly<F> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<F: Ring> Poly<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: F) -> Self {
        Self::monomial([0; 4], c)
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(e: Exponent, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, e: Exponent, c: F) {
        if c.is_zero() {
            return;
        }
        let cur = match self.terms.remove(&e) {
            Some(x) => x + c,
            None => c,
        };
        if !cur.is_zero() {
            self.terms.insert(e, cur);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &F)> {
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

    pub fn coefficient(&self, e: &Exponent) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    /// Term with the lexicographically largest exponent.
    pub fn leading(&self) -> Option<(&Exponent, &F)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &F) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c.clone() * k.clone());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn mul_var(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut e = *e;
            e[i] += 1;
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn deriv(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = *e;
            f[i] -= 1;
            out.add_term(f, c.clone() * F::from_i64(e[i] as i64));
        }
        out
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    pub fn eval(&self, x: &[F; 4]) -> F {
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..4 {
                for _ in 0..e[i] {
                    t = t * x[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn display(&self, names: [&str; 4]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "({})", c);
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => {
                        let _ = write!(s, "*{}", names[i]);
                    }
                    _ => {
                        let _ = write!(s, "*{}^{}", names[i], p);
                    }
                }
            }
        }
        s
    }
}

/// All exponents of total degree exactly `d`.
pub fn monomials_of_degree(d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                out.push([a, b, c, d - a - b - c]);
            }
        }
    }
    out
}

/// All exponents of total degree `<= d`.
pub fn monomials_up_to(d: u32) -> Vec<Exponent> {
    (0..=d).flat_map(monomials_of_degree).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{qi64, Q};

    #[test]
    fn product_and_derivative() {
        let x: Poly<Q> = Poly::var(0).add(&Poly::var(1));
        let sq = x.pow(2);
        assert_eq!(sq.coefficient(&[1, 1, 0, 0]), qi64(2));
        assert_eq!(sq.deriv(0), x.scale(&qi64(2)));
        assert!(sq.is_homogeneous(2));
        assert_eq!(monomials_of_degree(2).len(), 10);
        assert_eq!(monomials_up_to(6).len(), 210);
        assert_eq!(sq.leading(), Some((&[2, 0, 0, 0], &qi64(1))));
    }
}
