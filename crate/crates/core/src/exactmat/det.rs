//! Exact determinants: fraction-free elimination for rings with cheap exact
//! division, memoized cofactor expansion for small multivariate matrices.

use super::{MatError, RingMatrix};
use crate::rings::{IntegralDomain, Ring};

pub fn det_exact<R: IntegralDomain>(a: &RingMatrix<R>) -> Result<R, MatError> {
    if !a.is_square() {
        return Err(MatError::NonSquare);
    }
    if R::BAREISS_FRIENDLY {
        Ok(det_bareiss(a))
    } else {
        det_cofactor_memo(a)
    }
}

/// Bareiss fraction-free elimination; every division is exact over an
/// integral domain.
pub fn det_bareiss<R: IntegralDomain>(a: &RingMatrix<R>) -> R {
    let n = a.rows();
    if n == 0 {
        return R::one();
    }
    let mut m = a.clone();
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m.at(k, k).is_zero() {
            match (k + 1..n).find(|&r| !m.at(r, k).is_zero()) {
                Some(r) => {
                    m.swap_rows(k, r);
                    sign_flip = !sign_flip;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m
                    .at(k, k)
                    .mul(m.at(i, j))
                    .sub(&m.at(i, k).mul(m.at(k, j)));
                *m.at_mut(i, j) = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            *m.at_mut(i, k) = R::zero();
        }
        prev = m.at(k, k).clone();
    }
    let d = m.at(n - 1, n - 1).clone();
    if sign_flip {
        d.neg()
    } else {
        d
    }
}

/// Cofactor expansion memoized on column subsets; dimension capped because
/// the table has 2^n entries.
pub fn det_cofactor_memo<R: Ring>(a: &RingMatrix<R>) -> Result<R, MatError> {
    if !a.is_square() {
        return Err(MatError::NonSquare);
    }
    let n = a.rows();
    if n > 20 {
        return Err(MatError::TooLarge);
    }
    if n == 0 {
        return Ok(R::one());
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut memo: std::collections::HashMap<u32, R> = std::collections::HashMap::new();
    memo.insert(0, R::one());
    Ok(det_subset(a, full, &mut memo))
}

fn det_subset<R: Ring>(
    a: &RingMatrix<R>,
    mask: u32,
    memo: &mut std::collections::HashMap<u32, R>,
) -> R {
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let size = mask.count_ones() as usize;
    let row = a.rows() - size; // rows `row..` paired with the columns in `mask`
    let mut acc = R::zero();
    let mut sign_pos = true;
    for j in 0..a.cols() {
        if mask & (1 << j) == 0 {
            continue;
        }
        let entry = a.at(row, j);
        if !entry.is_zero() {
            let sub = det_subset(a, mask & !(1 << j), memo);
            let term = entry.mul(&sub);
            acc = if sign_pos { acc.add(&term) } else { acc.sub(&term) };
        }
        sign_pos = !sign_pos;
    }
    memo.insert(mask, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{BigInt, MultiPoly};

    #[test]
    fn det_small() {
        let a = RingMatrix::<BigInt>::from_i64_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(det_exact(&a).unwrap(), BigInt::from(-2));
        assert_eq!(det_cofactor_memo(&a).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn det_with_pivoting() {
        let a = RingMatrix::<BigInt>::from_i64_rows(&[&[0, 1, 2], &[3, 0, 4], &[5, 6, 0]]);
        let d = det_exact(&a).unwrap();
        assert_eq!(d, BigInt::from(0 * 0 * 0 + 1 * 4 * 5 + 2 * 3 * 6 - 2 * 0 * 5 - 4 * 6 * 0 - 1 * 3 * 0));
        assert_eq!(det_cofactor_memo(&a).unwrap(), d);
    }

    #[test]
    fn det_multivariate_routes_to_cofactor() {
        let x = MultiPoly::var("x");
        let y = MultiPoly::var("y");
        let one: MultiPoly = Ring::one();
        let a = RingMatrix::from_rows(vec![
            vec![x.clone(), one.clone()],
            vec![one.clone(), y.clone()],
        ]);
        let d = det_exact(&a).unwrap();
        assert_eq!(d, Ring::sub(&Ring::mul(&x, &y), &one));
    }

    #[test]
    fn det_singular() {
        let a = RingMatrix::<BigInt>::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(det_exact(&a).unwrap(), BigInt::from(0));
    }
}
