//! Fast Smith normal form for matrices over F[x] with F the rationals.
//!
//! Entries are held as integer polynomials; rows and columns are freely
//! rescaled by nonzero rationals (units of the ring), which keeps all
//! arithmetic in BigInt and bounds coefficient growth via per-row content
//! removal. Used for the large region matrices; validated against the
//! generic engine on small inputs.

use super::{det_bareiss, MatError, RingMatrix};
use crate::rings::{BigInt, BigRational, Ring, UniPoly};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

type ZP = Vec<BigInt>; // dense, lowest degree first, trailing coeff nonzero

fn zp_trim(p: &mut ZP) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn zp_deg(p: &ZP) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

fn zp_max_bits(p: &ZP) -> u64 {
    p.iter().map(|c| c.bits()).max().unwrap_or(0)
}

fn zp_mul(a: &ZP, b: &ZP) -> ZP {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zp_trim(&mut out);
    out
}

/// a*s - b, in place on `a`.
fn zp_scale_sub(a: &mut ZP, s: &BigInt, b: &ZP) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::from(0));
    }
    for (i, c) in a.iter_mut().enumerate() {
        *c *= s;
        if let Some(y) = b.get(i) {
            *c -= y;
        }
    }
    zp_trim(a);
}

fn zp_content(p: &ZP) -> BigInt {
    let mut g = BigInt::from(0);
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn zp_div_int(p: &mut ZP, d: &BigInt) {
    for c in p.iter_mut() {
        let (q, r) = c.div_rem(d);
        debug_assert!(r.is_zero());
        *c = q;
        let _ = r;
    }
}

/// Iterated pseudo-division: returns (quo, rem, pow) with
/// lc(b)^pow * a = quo * b + rem and deg rem < deg b.
fn zp_pseudo_divrem(a: &ZP, b: &ZP) -> (ZP, ZP, u32) {
    let db = zp_deg(b).expect("pseudo-division by zero");
    let lc = b.last().unwrap().clone();
    let mut r = a.clone();
    let mut quo: ZP = vec![];
    let mut pow = 0u32;
    while let Some(dr) = zp_deg(&r) {
        if dr < db {
            break;
        }
        let lead = r.last().unwrap().clone();
        // r = lc*r - lead * x^(dr-db) * b ; quo = lc*quo + lead * x^(dr-db)
        for c in quo.iter_mut() {
            *c *= &lc;
        }
        if quo.len() < dr - db + 1 {
            quo.resize(dr - db + 1, BigInt::from(0));
        }
        quo[dr - db] += &lead;
        for c in r.iter_mut() {
            *c *= &lc;
        }
        for j in 0..=db {
            let t = &lead * &b[j];
            r[dr - db + j] -= t;
        }
        zp_trim(&mut r);
        pow += 1;
    }
    zp_trim(&mut quo);
    (quo, r, pow)
}

/// Whether b divides a over Q[x] (b nonzero).
fn zp_divides(b: &ZP, a: &ZP) -> bool {
    if a.is_empty() {
        return true;
    }
    if zp_deg(a) < zp_deg(b) {
        return false;
    }
    let (_, rem, _) = zp_pseudo_divrem(a, b);
    rem.is_empty()
}

fn row_primitive(row: &mut [ZP]) {
    let mut g = BigInt::from(0);
    for e in row.iter() {
        g = g.gcd(&zp_content(e));
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for e in row.iter_mut() {
        zp_div_int(e, &g);
    }
}

fn to_zp_rows(a: &RingMatrix<UniPoly<BigRational>>) -> Vec<Vec<ZP>> {
    let mut rows = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        // Clear denominators per row: a unit row scaling over Q[x].
        let mut lcm = BigInt::from(1);
        for j in 0..a.cols() {
            for c in a.at(i, j).coeffs() {
                lcm = lcm.lcm(c.denom());
            }
        }
        let mut row: Vec<ZP> = Vec::with_capacity(a.cols());
        for j in 0..a.cols() {
            let mut e: ZP = a
                .at(i, j)
                .coeffs()
                .iter()
                .map(|c| {
                    let scaled = c * BigRational::from_integer(lcm.clone());
                    debug_assert!(scaled.denom().is_one());
                    scaled.numer().clone()
                })
                .collect();
            zp_trim(&mut e);
            row.push(e);
        }
        row_primitive(&mut row);
        rows.push(row);
    }
    rows
}

fn transpose_rows(rows: &mut Vec<Vec<ZP>>) {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<ZP>> = (0..n).map(|_| Vec::with_capacity(m)).collect();
    for row in rows.iter_mut() {
        for (j, e) in row.drain(..).enumerate() {
            out[j].push(e);
        }
    }
    *rows = out;
}

/// One parallel elimination pass clearing column k with row operations.
/// Returns true if every entry below the pivot ended up zero.
fn clear_column(rows: &mut [Vec<ZP>], k: usize) -> bool {
    let (head, tail) = rows.split_at_mut(k + 1);
    let pivot_row = &head[k];
    let pivot = pivot_row[k].clone();
    let dp = zp_deg(&pivot).expect("nonzero pivot");
    let lc = pivot.last().unwrap().clone();
    let cleared: Vec<bool> = tail
        .par_iter_mut()
        .map(|row| {
            if row[k].is_empty() {
                return true;
            }
            if dp == 0 {
                // Unit pivot (nonzero constant): single combination step.
                let e = std::mem::take(&mut row[k]);
                for (j, cell) in row.iter_mut().enumerate() {
                    if j == k {
                        continue;
                    }
                    let sub = zp_mul(&e, &pivot_row[j]);
                    zp_scale_sub(cell, &lc, &sub);
                }
                row[k] = vec![];
                row_primitive(row);
                true
            } else {
                let (quo, rem, pow) = zp_pseudo_divrem(&row[k], &pivot);
                let s = num_traits::pow::pow(lc.clone(), pow as usize);
                for (j, cell) in row.iter_mut().enumerate() {
                    if j == k {
                        continue;
                    }
                    let sub = zp_mul(&quo, &pivot_row[j]);
                    zp_scale_sub(cell, &s, &sub);
                }
                row[k] = rem;
                let ok = row[k].is_empty();
                row_primitive(row);
                ok
            }
        })
        .collect();
    cleared.into_iter().all(|c| c)
}

/// Smith normal form over Q[x] for rational-coefficient polynomial
/// matrices; returns the canonical (monic) diagonal.
pub fn snf_rat_poly(a: &RingMatrix<UniPoly<BigRational>>) -> Vec<UniPoly<BigRational>> {
    let (m, n) = (a.rows(), a.cols());
    let steps = m.min(n);
    let mut rows = to_zp_rows(a);
    let mut transposed = false;

    'outer: for k in 0..steps {
        'step: loop {
            // Pivot: minimal (degree, coefficient bits) in the trailing block.
            let (rc, cc) = if transposed { (n, m) } else { (m, n) };
            let mut best: Option<(usize, usize, (usize, u64))> = None;
            for i in k..rc {
                for j in k..cc {
                    let e = &rows[i][j];
                    if e.is_empty() {
                        continue;
                    }
                    let key = (zp_deg(e).unwrap(), zp_max_bits(e));
                    if best.as_ref().map_or(true, |(_, _, b)| key < *b) {
                        best = Some((i, j, key));
                    }
                }
            }
            let Some((bi, bj, _)) = best else {
                break 'outer;
            };
            rows.swap(k, bi);
            if bj != k {
                for row in rows.iter_mut() {
                    row.swap(k, bj);
                }
            }

            if !clear_column(&mut rows, k) {
                continue 'step;
            }
            transpose_rows(&mut rows);
            transposed = !transposed;
            if !clear_column(&mut rows, k) {
                continue 'step;
            }
            transpose_rows(&mut rows);
            transposed = !transposed;

            // Divisibility sweep over the trailing block.
            let pivot = rows[k][k].clone();
            let (rc, cc) = if transposed { (n, m) } else { (m, n) };
            let mut fold = None;
            'sweep: for i in k + 1..rc {
                for j in k + 1..cc {
                    if !zp_divides(&pivot, &rows[i][j]) {
                        fold = Some(i);
                        break 'sweep;
                    }
                }
            }
            if let Some(i) = fold {
                let (head, tail) = rows.split_at_mut(i);
                let target = &mut head[k];
                let source = &tail[0];
                for j in 0..target.len() {
                    let mut sum = std::mem::take(&mut target[j]);
                    if sum.len() < source[j].len() {
                        sum.resize(source[j].len(), BigInt::from(0));
                    }
                    for (c, y) in sum.iter_mut().zip(source[j].iter()) {
                        *c += y;
                    }
                    zp_trim(&mut sum);
                    target[j] = sum;
                }
                continue 'step;
            }
            break 'step;
        }
    }

    if transposed {
        transpose_rows(&mut rows);
    }
    let mut diag: Vec<UniPoly<BigRational>> = Vec::with_capacity(steps);
    for k in 0..steps {
        let e = &rows[k][k];
        let p = UniPoly::new(
            e.iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        );
        diag.push(p.monic());
    }
    diag
}

/// Exact determinant recovered from a known invariant-factor diagonal: the
/// determinant is a rational multiple of the diagonal product, pinned down
/// by one numeric evaluation.
pub fn det_from_diagonal(
    a: &RingMatrix<UniPoly<BigRational>>,
    diag: &[UniPoly<BigRational>],
) -> Result<UniPoly<BigRational>, MatError> {
    if !a.is_square() {
        return Err(MatError::NonSquare);
    }
    let mut product: UniPoly<BigRational> = Ring::one();
    for d in diag {
        if Ring::is_zero(d) {
            return Ok(Ring::zero());
        }
        product = Ring::mul(&product, d);
    }
    let mut point = BigRational::from_integer(0.into());
    let mut at = product.eval(&point);
    let mut tries = 0;
    while Zero::is_zero(&at) {
        tries += 1;
        point = BigRational::from_integer(tries.into());
        at = product.eval(&point);
        assert!(tries < 10_000, "diagonal product vanished at many points");
    }
    let numeric = det_bareiss(&a.map(|p| p.eval(&point)));
    let c = numeric / at;
    Ok(product.map_coeffs(|x| x * &c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::snf;
    use rand::{Rng, SeedableRng};

    type P = UniPoly<BigRational>;

    #[test]
    fn agrees_with_generic_engine_on_random_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let m = rng.gen_range(1..=4);
            let n = rng.gen_range(1..=4);
            let a = RingMatrix::from_fn(m, n, |_, _| {
                let deg = rng.gen_range(0..=2);
                P::new(
                    (0..=deg)
                        .map(|_| BigRational::from_integer(rng.gen_range(-4i64..=4).into()))
                        .collect(),
                )
            });
            let fast = snf_rat_poly(&a);
            let slow = snf(&a, false).unwrap().diagonal;
            assert_eq!(fast, slow, "matrix: {a}");
        }
    }

    #[test]
    fn det_recovery() {
        let q = P::from_int_coeffs(&[0, 1]);
        let one = P::one();
        let a = RingMatrix::from_rows(vec![
            vec![one.clone(), q.clone()],
            vec![q.clone(), one.clone()],
        ]);
        let diag = snf_rat_poly(&a);
        let det = det_from_diagonal(&a, &diag).unwrap();
        // 1 - q^2
        assert_eq!(det, P::from_int_coeffs(&[1, 0, -1]));
    }
}
