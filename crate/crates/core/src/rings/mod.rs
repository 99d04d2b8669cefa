//! Exact arithmetic substrate: integers, rationals, univariate polynomials
//! over a field, sparse multivariate integer polynomials, and rational
//! functions in one variable.

mod cyclotomic;
mod int;
mod multipoly;
mod rat;
mod ratfunc;
mod unipoly;

pub use cyclotomic::{cyclotomic_factor, cyclotomic_poly, CycloFactors};
pub use multipoly::MultiPoly;
pub use ratfunc::RatFunc;
pub use unipoly::UniPoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("term budget exceeded ({0} terms)")]
    BudgetExceeded(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// Commutative ring with identity. Values are immutable; all operations are
/// pure functions, so concurrent use needs no synchronization.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(v: i64) -> Self;

    /// Rough size in bits of the largest integer inside the value; used by
    /// entry-growth guards.
    fn size_bits(&self) -> u64;
}

/// Integral domain with decidable exact division.
pub trait IntegralDomain: Ring {
    /// Returns `q` with `q * rhs == self` when such a quotient exists.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    fn is_unit(&self) -> bool;
    /// Inverse of a unit; panics on non-units.
    fn unit_inv(&self) -> Self;
    /// Whether fraction-free (Bareiss) elimination is the preferred exact
    /// determinant route for this ring.
    const BAREISS_FRIENDLY: bool = true;
}

/// GCD domain with a fixed canonical-associate convention, so that
/// "equal up to a unit" assertions become literal equalities.
pub trait GcdDomain: IntegralDomain {
    /// Canonical gcd: nonnegative over the integers, monic over F[x],
    /// positive lexicographic leading coefficient for multivariate
    /// polynomials. gcd(0,0) = 0.
    fn gcd(&self, rhs: &Self) -> Self;
    /// The unit `u` such that `u * self` is the canonical associate.
    /// For zero returns one.
    fn canonical_unit(&self) -> Self;

    fn canonical(&self) -> Self {
        self.mul(&self.canonical_unit())
    }

    fn is_canonical(&self) -> bool {
        self.is_zero() || self.canonical_unit().is_one()
    }

    /// Whether `self` divides `rhs`.
    fn divides(&self, rhs: &Self) -> bool {
        if self.is_zero() {
            return rhs.is_zero();
        }
        rhs.exact_div(self).is_some()
    }
}

/// Euclidean domain: division with remainder strictly decreasing a norm.
pub trait EuclideanDomain: GcdDomain {
    type Norm: Ord + Clone + std::fmt::Debug;
    /// None for zero.
    fn euclid_norm(&self) -> Option<Self::Norm>;
    /// `self = q * rhs + r` with `r` zero or of smaller norm than `rhs`.
    fn div_rem(&self, rhs: &Self) -> (Self, Self);
}

pub trait Field: EuclideanDomain {
    fn inv(&self) -> Self;
}
