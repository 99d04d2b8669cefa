//! Smith normal form over Euclidean domains by row and column reduction.

use super::{det_exact, MatError, RingMatrix};
use crate::rings::{EuclideanDomain, GcdDomain, IntegralDomain, Ring};

#[derive(Debug, Clone)]
pub struct SnfOptions {
    pub want_transforms: bool,
    /// Abort when any intermediate entry exceeds this many bits.
    pub budget_bits: u64,
}

impl Default for SnfOptions {
    fn default() -> Self {
        SnfOptions {
            want_transforms: false,
            budget_bits: 1_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SnfResult<R: Ring> {
    /// Canonicalized invariant factors, length min(m, n); each divides the
    /// next, with zeros sorted to the end.
    pub diagonal: Vec<R>,
    /// (P, Q) with P * A * Q equal to the diagonal embedding; present when
    /// requested and then verified internally.
    pub transforms: Option<(RingMatrix<R>, RingMatrix<R>)>,
    /// det(P) * det(Q), tracked through every elementary operation, so
    /// det(A) = diagonal product / transform_unit for square A.
    pub transform_unit: R,
}

impl<R: Ring> SnfResult<R> {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn diagonal_product(&self) -> R {
        let mut p = R::one();
        for d in &self.diagonal {
            p = p.mul(d);
        }
        p
    }
}

pub fn snf<R: EuclideanDomain>(
    a: &RingMatrix<R>,
    want_transforms: bool,
) -> Result<SnfResult<R>, MatError> {
    snf_with_options(
        a,
        &SnfOptions {
            want_transforms,
            ..SnfOptions::default()
        },
    )
}

struct Work<R: Ring> {
    m: RingMatrix<R>,
    p: Option<RingMatrix<R>>,
    q: Option<RingMatrix<R>>,
    unit: R,
    budget_bits: u64,
}

impl<R: EuclideanDomain> Work<R> {
    fn check_budget(&self) -> Result<(), MatError> {
        if self.m.max_entry_bits() > self.budget_bits {
            Err(MatError::BudgetExceeded)
        } else {
            Ok(())
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.m.swap_rows(a, b);
        if let Some(p) = &mut self.p {
            p.swap_rows(a, b);
        }
        self.unit = self.unit.neg();
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.m.swap_cols(a, b);
        if let Some(q) = &mut self.q {
            q.swap_cols(a, b);
        }
        self.unit = self.unit.neg();
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, c: &R) {
        self.m.add_row_multiple(target, source, c);
        if let Some(p) = &mut self.p {
            p.add_row_multiple(target, source, c);
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, c: &R) {
        self.m.add_col_multiple(target, source, c);
        if let Some(q) = &mut self.q {
            q.add_col_multiple(target, source, c);
        }
    }

    fn scale_row(&mut self, i: usize, u: &R) {
        self.m.scale_row(i, u);
        if let Some(p) = &mut self.p {
            p.scale_row(i, u);
        }
        self.unit = self.unit.mul(u);
    }
}

pub fn snf_with_options<R: EuclideanDomain>(
    a: &RingMatrix<R>,
    opts: &SnfOptions,
) -> Result<SnfResult<R>, MatError> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = Work {
        m: a.clone(),
        p: opts.want_transforms.then(|| RingMatrix::identity(rows)),
        q: opts.want_transforms.then(|| RingMatrix::identity(cols)),
        unit: R::one(),
        budget_bits: opts.budget_bits,
    };
    let steps = rows.min(cols);

    'pivot: for k in 0..steps {
        // Locate a minimal-norm nonzero entry in the trailing block.
        let mut best: Option<(usize, usize, R::Norm)> = None;
        for i in k..rows {
            for j in k..cols {
                if let Some(norm) = w.m.at(i, j).euclid_norm() {
                    if best.as_ref().map_or(true, |(_, _, b)| norm < *b) {
                        best = Some((i, j, norm));
                    }
                }
            }
        }
        let Some((bi, bj, _)) = best else {
            break 'pivot; // trailing block is zero
        };
        w.swap_rows(k, bi);
        w.swap_cols(k, bj);

        'reduce: loop {
            // Clear column k with division-with-remainder; remainders have
            // smaller norm than the pivot and get swapped up next pass.
            let mut dirty = false;
            for i in k + 1..rows {
                if w.m.at(i, k).is_zero() {
                    continue;
                }
                let (quo, rem) = w.m.at(i, k).div_rem(w.m.at(k, k));
                if !quo.is_zero() {
                    w.add_row_multiple(i, k, &quo.neg());
                }
                if !rem.is_zero() {
                    w.swap_rows(k, i);
                    dirty = true;
                }
            }
            if dirty {
                w.check_budget()?;
                continue 'reduce;
            }
            for j in k + 1..cols {
                if w.m.at(k, j).is_zero() {
                    continue;
                }
                let (quo, rem) = w.m.at(k, j).div_rem(w.m.at(k, k));
                if !quo.is_zero() {
                    w.add_col_multiple(j, k, &quo.neg());
                }
                if !rem.is_zero() {
                    w.swap_cols(k, j);
                    dirty = true;
                }
            }
            if dirty {
                w.check_budget()?;
                continue 'reduce;
            }
            w.check_budget()?;

            // Pivot now divides its row and column; enforce divisibility of
            // the whole trailing block by folding a violating row in.
            for i in k + 1..rows {
                let violates = (k + 1..cols)
                    .any(|j| !w.m.at(k, k).divides(w.m.at(i, j)));
                if violates {
                    let one = R::one();
                    w.add_row_multiple(k, i, &one);
                    continue 'reduce;
                }
            }
            break 'reduce;
        }
    }

    // Canonicalize diagonal entries via unit row scalings.
    let mut diagonal = Vec::with_capacity(steps);
    for k in 0..steps {
        let d = w.m.at(k, k).clone();
        let u = d.canonical_unit();
        if !u.is_one() {
            w.scale_row(k, &u);
        }
        diagonal.push(w.m.at(k, k).clone());
    }

    let transforms = match (w.p, w.q) {
        (Some(p), Some(q)) => {
            let d = RingMatrix::diagonal_embedding(rows, cols, &diagonal);
            if p.mul(a).mul(&q) != d {
                panic!("internal SNF transform check failed");
            }
            for t in [&p, &q] {
                if t.rows() > 0 {
                    let det = det_exact(t).expect("square transform");
                    assert!(det.is_unit(), "transform determinant is not a unit");
                }
            }
            Some((p, q))
        }
        _ => None,
    };

    Ok(SnfResult {
        diagonal,
        transforms,
        transform_unit: w.unit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{BigInt, BigRational, UniPoly};

    fn zmat(rows: &[&[i64]]) -> RingMatrix<BigInt> {
        RingMatrix::from_i64_rows(rows)
    }

    fn diag_i64(res: &SnfResult<BigInt>) -> Vec<i64> {
        res.diagonal
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn snf_examples() {
        let r = snf(&zmat(&[&[2, 4], &[6, 8]]), true).unwrap();
        assert_eq!(diag_i64(&r), vec![2, 4]);

        let r = snf(&RingMatrix::<BigInt>::identity(3), false).unwrap();
        assert_eq!(diag_i64(&r), vec![1, 1, 1]);

        let r = snf(&zmat(&[&[6, 0], &[0, 4]]), true).unwrap();
        assert_eq!(diag_i64(&r), vec![2, 12]);
    }

    #[test]
    fn snf_over_polynomials() {
        // [[n^2, n], [n, 1]] over Q[n] -> (1, 0)
        type P = UniPoly<BigRational>;
        let n = P::from_int_coeffs(&[0, 1]);
        let n2 = P::from_int_coeffs(&[0, 0, 1]);
        let one = P::from_int_coeffs(&[1]);
        let a = RingMatrix::from_rows(vec![vec![n2, n.clone()], vec![n, one]]);
        let r = snf(&a, true).unwrap();
        assert_eq!(r.diagonal[0], P::from_int_coeffs(&[1]));
        assert!(crate::rings::Ring::is_zero(&r.diagonal[1]));
    }

    #[test]
    fn zero_rows_sort_last() {
        let r = snf(&zmat(&[&[0, 0], &[0, 7]]), false).unwrap();
        assert_eq!(diag_i64(&r), vec![7, 0]);
    }

    #[test]
    fn known_4x4() {
        let m = zmat(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]);
        let r = snf(&m, true).unwrap();
        assert_eq!(diag_i64(&r), vec![1, 3, 21, 0]);
    }

    #[test]
    fn unit_tracks_determinant() {
        let m = zmat(&[&[2, 4], &[6, 8]]);
        let r = snf(&m, false).unwrap();
        // det(A) * unit = product of diagonal
        let det = det_exact(&m).unwrap();
        assert_eq!(det * r.transform_unit.clone(), r.diagonal_product());
    }
}
