//! The field of rationals.

use super::{EuclideanDomain, Field, GcdDomain, IntegralDomain, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn size_bits(&self) -> u64 {
        self.numer().bits().max(self.denom().bits())
    }
}

impl IntegralDomain for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn is_unit(&self) -> bool {
        !Zero::is_zero(self)
    }
    fn unit_inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "zero is not a unit");
        self.recip()
    }
}

impl GcdDomain for BigRational {
    fn gcd(&self, rhs: &Self) -> Self {
        if Zero::is_zero(self) && Zero::is_zero(rhs) {
            Zero::zero()
        } else {
            One::one()
        }
    }
    fn canonical_unit(&self) -> Self {
        if Zero::is_zero(self) {
            One::one()
        } else {
            self.recip()
        }
    }
}

impl EuclideanDomain for BigRational {
    type Norm = ();
    fn euclid_norm(&self) -> Option<()> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(())
        }
    }
    fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        (self / rhs, Zero::zero())
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Sign of a rational, as -1, 0, or 1.
pub fn rat_sign(r: &BigRational) -> i32 {
    if Zero::is_zero(r) {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}
