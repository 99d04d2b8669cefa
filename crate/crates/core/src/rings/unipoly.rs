//! Dense univariate polynomials over a field, lowest degree first.

use super::{EuclideanDomain, Field, GcdDomain, IntegralDomain, Ring};
use std::fmt;

/// Polynomial with coefficients in `F`, stored lowest degree first with a
/// nonzero trailing (highest-degree) coefficient; the zero polynomial is the
/// empty sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int_coeffs(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    /// c * x^k
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Self::new(vec![]);
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// x + c
    pub fn linear(c: F) -> Self {
        Self::new(vec![c, F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Applies a field homomorphism-like map to every coefficient.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv();
                UniPoly {
                    coeffs: self.coeffs.iter().map(|c| c.mul(&inv)).collect(),
                }
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::new(vec![]);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&F::from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(F::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = Ring::mul(&acc, &base);
            }
            base = Ring::mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Squarefree means gcd(p, p') is constant.
    pub fn is_squarefree(&self) -> bool {
        if self.coeffs.len() <= 1 {
            return true;
        }
        GcdDomain::gcd(self, &self.derivative()).degree() == Some(0)
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Ring for UniPoly<F> {
    fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }
    fn one() -> Self {
        UniPoly {
            coeffs: vec![F::one()],
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&rhs.coeff(k)));
        }
        Self::new(out)
    }
    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).sub(&rhs.coeff(k)));
        }
        Self::new(out)
    }
    fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || Ring::is_zero(rhs) {
            return Ring::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(F::from_i64(v))
    }
    fn size_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.size_bits()).max().unwrap_or(0)
    }
}

impl<F: Field> IntegralDomain for UniPoly<F> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Ring::is_zero(rhs) {
            return None;
        }
        if self.is_zero() {
            return Some(Ring::zero());
        }
        let (q, r) = EuclideanDomain::div_rem(self, rhs);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
    fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }
    fn unit_inv(&self) -> Self {
        assert!(self.is_unit(), "not a unit: {self}");
        Self::constant(self.coeffs[0].inv())
    }
}

impl<F: Field> GcdDomain for UniPoly<F> {
    /// Monic gcd; gcd(0,0) = 0.
    fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = EuclideanDomain::div_rem(&a, &b);
            a = b;
            b = r;
        }
        a.monic()
    }
    fn canonical_unit(&self) -> Self {
        match self.leading() {
            None => Ring::one(),
            Some(lc) => Self::constant(lc.inv()),
        }
    }
}

impl<F: Field> EuclideanDomain for UniPoly<F> {
    type Norm = usize;
    fn euclid_norm(&self) -> Option<usize> {
        self.degree()
    }
    fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!Ring::is_zero(rhs), "polynomial division by zero");
        let d = rhs.degree().unwrap();
        if self.degree().map_or(true, |n| n < d) {
            return (Ring::zero(), self.clone());
        }
        let lc_inv = rhs.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let n = self.degree().unwrap();
        let mut quo = vec![F::zero(); n - d + 1];
        for k in (d..=n).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].mul(&lc_inv);
            for j in 0..d {
                rem[k - d + j] = rem[k - d + j].sub(&q.mul(&rhs.coeffs[j]));
            }
            rem[k] = F::zero();
            quo[k - d] = q;
        }
        (Self::new(quo), Self::new(rem))
    }
}

/// Monic gcd of univariate polynomials over a field; gcd(0,0) = 0.
pub fn unipoly_gcd<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> UniPoly<F> {
    GcdDomain::gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = UniPoly<BigRational>;

    fn p(cs: &[i64]) -> P {
        P::from_int_coeffs(cs)
    }

    #[test]
    fn gcd_examples() {
        // (n^2 - 1, n - 1) -> n - 1
        assert_eq!(unipoly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        // (0, n + 2) -> n + 2
        assert_eq!(unipoly_gcd(&P::zero(), &p(&[2, 1])), p(&[2, 1]));
        // (n^2 + n, n^2 - n) -> n
        assert_eq!(unipoly_gcd(&p(&[0, 1, 1]), &p(&[0, -1, 1])), p(&[0, 1]));
        assert_eq!(unipoly_gcd(&P::zero(), &P::zero()), P::zero());
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[3, -2, 0, 7, 1]);
        let b = p(&[1, 2, 1]);
        let (q, r) = EuclideanDomain::div_rem(&a, &b);
        assert_eq!(Ring::add(&Ring::mul(&q, &b), &r), a);
        assert!(r.degree().unwrap() < b.degree().unwrap());
    }

    #[test]
    fn squarefree_detection() {
        assert!(p(&[-1, 0, 1]).is_squarefree()); // (n-1)(n+1)
        assert!(!Ring::mul(&p(&[-1, 1]), &p(&[1, -2, 1])).is_squarefree()); // (n-1)^3
    }
}
