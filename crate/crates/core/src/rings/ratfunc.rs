//! The field of rational functions in the single variable `q`, stored as
//! reduced fractions of integer polynomials.

use super::multipoly::multipoly_gcd;
use super::{EuclideanDomain, Field, GcdDomain, IntegralDomain, MultiPoly, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;

pub const RATFUNC_VAR: &str = "q";

/// Reduced fraction num/den of integer polynomials in `q`; the denominator
/// is nonzero with positive leading coefficient.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        Self::reduced(num, den)
    }

    fn reduced(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: Ring::one(),
            };
        }
        let g = multipoly_gcd(&num, &den).expect("gcd budget");
        let mut num = num.exact_div(&g).unwrap();
        let mut den = den.exact_div(&g).unwrap();
        if !den.canonical_unit().is_one() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc {
            num: p,
            den: Ring::one(),
        }
    }

    pub fn q() -> Self {
        Self::from_poly(MultiPoly::var(RATFUNC_VAR))
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_poly(MultiPoly::constant(BigInt::from(v)))
    }

    /// The q-bracket (j) = (1 - q^j)/(1 - q) for any integer j; for j < 0
    /// this is a genuine rational function.
    pub fn q_bracket(j: i64) -> Self {
        let q = MultiPoly::var(RATFUNC_VAR);
        let one: MultiPoly = Ring::one();
        if j == 0 {
            return Self::from_int(0);
        }
        if j > 0 {
            // 1 + q + ... + q^(j-1)
            let mut acc: MultiPoly = Ring::zero();
            for e in 0..j {
                acc = Ring::add(&acc, &q.pow(e as u32));
            }
            Self::from_poly(acc)
        } else {
            // (1 - q^j)/(1 - q) = -(1 + ... + q^(|j|-1)) / q^|j|
            let m = (-j) as u32;
            let mut acc: MultiPoly = Ring::zero();
            for e in 0..m {
                acc = Ring::add(&acc, &q.pow(e));
            }
            let _ = one;
            Self::new(acc.neg(), q.pow(m))
        }
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Evaluates at a rational point where the denominator does not vanish.
    pub fn eval_rat(&self, x: &BigRational) -> Option<BigRational> {
        let eval = |p: &MultiPoly| -> BigRational {
            let mut acc: BigRational = Zero::zero();
            for (e, c) in p.terms() {
                let deg = e.iter().sum::<u32>();
                let mut t = BigRational::from_integer(c.clone());
                for _ in 0..deg {
                    t *= x;
                }
                acc += t;
            }
            acc
        };
        let d = eval(&self.den);
        if Zero::is_zero(&d) {
            return None;
        }
        Some(eval(&self.num) / d)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        // Reduced canonical form makes cross-multiplication unnecessary,
        // but stay robust to representation drift.
        Ring::mul(&self.num, &other.den) == Ring::mul(&other.num, &self.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Self::reduced(
            Ring::add(
                &Ring::mul(&self.num, &rhs.den),
                &Ring::mul(&rhs.num, &self.den),
            ),
            Ring::mul(&self.den, &rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &rhs.neg())
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self::reduced(
            Ring::mul(&self.num, &rhs.num),
            Ring::mul(&self.den, &rhs.den),
        )
    }
    fn from_i64(v: i64) -> Self {
        Self::from_int(v)
    }
    fn size_bits(&self) -> u64 {
        self.num.size_bits().max(self.den.size_bits())
    }
}

impl IntegralDomain for RatFunc {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        Some(Ring::mul(self, &rhs.unit_inv()))
    }
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }
    fn unit_inv(&self) -> Self {
        assert!(!self.is_zero(), "zero is not a unit");
        Self::reduced(self.den.clone(), self.num.clone())
    }
}

impl GcdDomain for RatFunc {
    fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() && rhs.is_zero() {
            Ring::zero()
        } else {
            Ring::one()
        }
    }
    fn canonical_unit(&self) -> Self {
        if self.is_zero() {
            Ring::one()
        } else {
            self.unit_inv()
        }
    }
}

impl EuclideanDomain for RatFunc {
    type Norm = ();
    fn euclid_norm(&self) -> Option<()> {
        if self.is_zero() {
            None
        } else {
            Some(())
        }
    }
    fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        (self.exact_div(rhs).expect("division by zero"), Ring::zero())
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Self {
        self.unit_inv()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_values() {
        // (3) = 1 + q + q^2
        let b3 = RatFunc::q_bracket(3);
        let q = MultiPoly::var(RATFUNC_VAR);
        let expect = Ring::add(&Ring::add(&q.pow(2), &q), &Ring::one());
        assert_eq!(b3, RatFunc::from_poly(expect));
        // (0) = 0
        assert!(RatFunc::q_bracket(0).is_zero());
        // (-m) * q^m = -(m)
        let m = 2i64;
        let lhs = Ring::mul(
            &RatFunc::q_bracket(-m),
            &RatFunc::from_poly(MultiPoly::var(RATFUNC_VAR).pow(m as u32)),
        );
        assert_eq!(lhs, RatFunc::q_bracket(m).neg());
    }

    #[test]
    fn field_inverse() {
        let a = Ring::add(&RatFunc::q(), &RatFunc::from_int(2));
        let prod = Ring::mul(&a, &a.inv());
        assert!(prod.is_one());
    }

    #[test]
    fn bracket_at_q1_is_integer() {
        let b = RatFunc::q_bracket(5);
        let one = BigRational::from_integer(1.into());
        assert_eq!(b.eval_rat(&one).unwrap(), BigRational::from_integer(5.into()));
    }
}
