//! Cyclotomic polynomials and factorization of univariate rationals into
//! cyclotomic parts.

use super::{EuclideanDomain, IntegralDomain, Ring, UniPoly};
use num_rational::BigRational;
use std::collections::BTreeMap;

pub type QPoly = UniPoly<BigRational>;

/// Highest index tried by default during recognition.
pub const DEFAULT_CYCLO_BOUND: u32 = 64;

/// Phi_d, generated by dividing q^d - 1 by all lower Phi_e with e | d.
pub fn cyclotomic_poly(d: u32) -> QPoly {
    assert!(d >= 1);
    let mut cache: BTreeMap<u32, QPoly> = BTreeMap::new();
    cyclo_rec(d, &mut cache)
}

fn cyclo_rec(d: u32, cache: &mut BTreeMap<u32, QPoly>) -> QPoly {
    if let Some(p) = cache.get(&d) {
        return p.clone();
    }
    // q^d - 1
    let mut qd1 = QPoly::monomial(<BigRational as Ring>::one(), d as usize);
    qd1 = Ring::sub(&qd1, &QPoly::one());
    let mut p = qd1;
    for e in 1..d {
        if d % e == 0 {
            let phi_e = cyclo_rec(e, cache);
            p = p.exact_div(&phi_e).expect("cyclotomic recurrence divides");
        }
    }
    cache.insert(d, p.clone());
    p
}

#[derive(Debug, Clone, PartialEq)]
pub struct CycloFactors {
    /// d -> multiplicity of Phi_d.
    pub multiplicities: BTreeMap<u32, u32>,
    /// Leftover factor with no cyclotomic divisor of index <= the bound.
    pub remainder: QPoly,
}

impl CycloFactors {
    pub fn reassemble(&self) -> QPoly {
        let mut p = self.remainder.clone();
        for (&d, &m) in &self.multiplicities {
            p = Ring::mul(&p, &cyclotomic_poly(d).pow(m));
        }
        p
    }

    /// Multiplicity of Phi_d (zero when absent).
    pub fn mult(&self, d: u32) -> u32 {
        self.multiplicities.get(&d).copied().unwrap_or(0)
    }

    pub fn is_pure_cyclotomic_times_unit(&self) -> bool {
        self.remainder.degree() == Some(0)
    }

    pub fn factored_string(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !self.remainder.is_one() {
            parts.push(format!("{}", self.remainder));
        }
        for (&d, &m) in &self.multiplicities {
            if m == 1 {
                parts.push(format!("Phi{d}"));
            } else {
                parts.push(format!("Phi{d}^{m}"));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Writes p as unit * prod Phi_d^(m_d) * remainder by trial exact division
/// for d = 1..=bound, repeated to multiplicity. The remainder absorbs
/// anything unrecognized.
pub fn cyclotomic_factor(p: &QPoly, bound: u32) -> CycloFactors {
    let mut multiplicities = BTreeMap::new();
    let mut rem = p.clone();
    if rem.is_zero() {
        return CycloFactors {
            multiplicities,
            remainder: rem,
        };
    }
    for d in 1..=bound {
        let phi = cyclotomic_poly(d);
        if phi.degree() > rem.degree() {
            continue;
        }
        let mut m = 0u32;
        while let Some(q) = rem.exact_div(&phi) {
            m += 1;
            rem = q;
            if rem.degree() == Some(0) {
                break;
            }
        }
        if m > 0 {
            multiplicities.insert(d, m);
        }
        if rem.degree() == Some(0) {
            break;
        }
    }
    CycloFactors {
        multiplicities,
        remainder: rem,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(cs)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), p(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), p(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn factor_one_minus_q2() {
        // 1 - q^2 = -Phi1 * Phi2
        let f = cyclotomic_factor(&p(&[1, 0, -1]), DEFAULT_CYCLO_BOUND);
        assert_eq!(f.mult(1), 1);
        assert_eq!(f.mult(2), 1);
        assert_eq!(f.remainder, p(&[-1]));
        assert_eq!(f.reassemble(), p(&[1, 0, -1]));
    }

    #[test]
    fn factor_with_multiplicities() {
        // Phi1^2 * Phi2^2 * Phi12 expanded
        let prod = Ring::mul(
            &Ring::mul(&cyclotomic_poly(1).pow(2), &cyclotomic_poly(2).pow(2)),
            &cyclotomic_poly(12),
        );
        let f = cyclotomic_factor(&prod, DEFAULT_CYCLO_BOUND);
        let expect: BTreeMap<u32, u32> = [(1, 2), (2, 2), (12, 1)].into_iter().collect();
        assert_eq!(f.multiplicities, expect);
        assert!(f.remainder.is_one());
        assert_eq!(f.reassemble(), prod);
    }

    #[test]
    fn constant_passes_through() {
        let f = cyclotomic_factor(&p(&[5]), DEFAULT_CYCLO_BOUND);
        assert!(f.multiplicities.is_empty());
        assert_eq!(f.remainder, p(&[5]));
    }
}
