//! Matrices over exact rings: Smith normal form over Euclidean domains,
//! determinants, the gcd-of-minors route, and cokernel structure.

mod det;
mod matrix;
mod minors;
mod qsnf;
mod snf;

pub use det::{det_bareiss, det_cofactor_memo, det_exact};
pub use matrix::RingMatrix;
pub use minors::{gcd_of_minors, refute_snf_by_specialization, snf_via_minors, MinorsDiag, Verdict};
pub use qsnf::snf_rat_poly;
pub use snf::{snf, snf_with_options, SnfOptions, SnfResult};

use crate::rings::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("matrix is not square")]
    NonSquare,
    #[error("minor size {0} out of range")]
    KOutOfRange(usize),
    #[error("minor gcd at step {step} is not divisible by the previous one")]
    NonDivisible { step: usize },
    #[error("entry growth exceeded the configured bit budget")]
    BudgetExceeded,
    #[error("matrix too large for this operation")]
    TooLarge,
}

/// Finitely generated abelian group: invariant factors > 1 plus free rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroupDesc {
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianGroupDesc {
    pub fn trivial() -> Self {
        AbelianGroupDesc {
            invariant_factors: vec![],
            free_rank: 0,
        }
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut p = BigInt::one();
        for f in &self.invariant_factors {
            p *= f;
        }
        Some(p)
    }
}

/// Structure of Z^n / rowspace(A): invariant factors greater than one and
/// free rank n - rank(A).
pub fn cokernel(a: &RingMatrix<BigInt>) -> Result<AbelianGroupDesc, MatError> {
    let res = snf(a, false)?;
    let rank = res.diagonal.iter().filter(|d| !crate::rings::Ring::is_zero(*d)).count();
    let invariant_factors = res
        .diagonal
        .iter()
        .filter(|d| !crate::rings::Ring::is_zero(*d) && !crate::rings::Ring::is_one(*d))
        .cloned()
        .collect();
    Ok(AbelianGroupDesc {
        invariant_factors,
        free_rank: a.cols() - rank,
    })
}

/// All k-subsets of 0..n in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Ring;

    #[test]
    fn combinations_basic() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn cokernel_examples() {
        // rows (2,0),(0,3) in Z^2 -> factors (6), free rank 0
        let a = RingMatrix::<BigInt>::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let g = cokernel(&a).unwrap();
        assert_eq!(g.invariant_factors, vec![BigInt::from(6)]);
        assert_eq!(g.free_rank, 0);
        // empty row set in Z^3 -> free rank 3
        let b = RingMatrix::<BigInt>::zero(0, 3);
        let g = cokernel(&b).unwrap();
        assert!(g.invariant_factors.is_empty());
        assert_eq!(g.free_rank, 3);
    }
}
