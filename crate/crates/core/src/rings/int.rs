//! The ring of integers, backed by arbitrary-precision `BigInt`.

use super::{EuclideanDomain, GcdDomain, IntegralDomain, Ring};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

impl Ring for BigInt {
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
        BigInt::from(v)
    }
    fn size_bits(&self) -> u64 {
        self.bits()
    }
}

impl IntegralDomain for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = Integer::div_rem(self, rhs);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn is_unit(&self) -> bool {
        One::is_one(self) || One::is_one(&-self)
    }
    fn unit_inv(&self) -> Self {
        assert!(self.is_unit(), "not a unit: {self}");
        self.clone()
    }
}

impl GcdDomain for BigInt {
    /// Nonnegative gcd generating the ideal (a, b); gcd(0, 0) = 0.
    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }
    fn canonical_unit(&self) -> Self {
        if self.is_negative() {
            BigInt::from(-1)
        } else {
            One::one()
        }
    }
}

impl EuclideanDomain for BigInt {
    type Norm = BigUint;
    fn euclid_norm(&self) -> Option<BigUint> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.magnitude().clone())
        }
    }
    fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        // Round-to-nearest quotient keeps remainders at most |rhs|/2, which
        // bounds entry growth during elimination.
        let (mut q, mut r) = Integer::div_rem(self, rhs);
        if (r.magnitude() * 2u32) > *rhs.magnitude() {
            if (r.is_negative()) == (rhs.is_negative()) {
                q += 1;
                r -= rhs;
            } else {
                q -= 1;
                r += rhs;
            }
        }
        (q, r)
    }
}

/// gcd exposed in the module's operation vocabulary.
pub fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    GcdDomain::gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(int_gcd(&12.into(), &18.into()), 6.into());
        assert_eq!(int_gcd(&0.into(), &0.into()), 0.into());
        assert_eq!(int_gcd(&(-4).into(), &6.into()), 2.into());
    }

    #[test]
    fn div_rem_is_euclidean() {
        for a in -30i64..=30 {
            for b in -12i64..=12 {
                if b == 0 {
                    continue;
                }
                let (q, r) = EuclideanDomain::div_rem(&BigInt::from(a), &BigInt::from(b));
                assert_eq!(&q * b + &r, BigInt::from(a));
                assert!(r.magnitude() * 2u32 <= (BigInt::from(b).magnitude() * 2u32 - 1u32) + 1u32);
                if !Zero::is_zero(&r) {
                    assert!(r.magnitude() < BigInt::from(b).magnitude());
                }
            }
        }
    }
}
