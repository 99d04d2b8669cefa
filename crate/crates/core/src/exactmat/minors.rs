//! The gcd-of-minors route to invariant factors, and the specialization
//! test that refutes candidate normal forms over Z[x].

use super::{combinations, det_exact, snf, MatError, RingMatrix};
use crate::rings::{BigInt, GcdDomain, IntegralDomain, MultiPoly, Ring};
use std::collections::BTreeMap;

/// gcd over all k x k minors, canonicalized; 0 when all minors vanish.
pub fn gcd_of_minors<R: GcdDomain>(a: &RingMatrix<R>, k: usize) -> Result<R, MatError> {
    if k == 0 || k > a.rows().min(a.cols()) {
        return Err(MatError::KOutOfRange(k));
    }
    let row_sets = combinations(a.rows(), k);
    let col_sets = combinations(a.cols(), k);
    let mut g = R::zero();
    'outer: for rs in &row_sets {
        for cs in &col_sets {
            let minor = det_exact(&a.submatrix(rs, cs))?;
            g = g.gcd(&minor);
            if !g.is_zero() && g.is_unit() {
                break 'outer;
            }
        }
    }
    Ok(g.canonical())
}

/// Diagonal candidate recovered from minor gcds.
#[derive(Debug, Clone, PartialEq)]
pub struct MinorsDiag<R: Ring> {
    /// alpha_k = gcd_k / gcd_(k-1), canonicalized; zeros once minors vanish.
    pub diagonal: Vec<R>,
    /// First position (0-based) whose minors all vanish, if any.
    pub vanish_from: Option<usize>,
    /// First position where alpha_k does not divide alpha_(k+1); such a
    /// candidate cannot be a Smith normal form.
    pub chain_violation: Option<usize>,
}

/// alpha_k = gcd_of_minors(k) / gcd_of_minors(k-1) where defined. Over a
/// unique factorization domain the quotient always exists (cofactor
/// expansion makes gcd_(k-1) divide every k x k minor); a failed division
/// is reported as NonDivisible.
pub fn snf_via_minors<R: GcdDomain>(a: &RingMatrix<R>) -> Result<MinorsDiag<R>, MatError> {
    let steps = a.rows().min(a.cols());
    let mut diagonal = Vec::with_capacity(steps);
    let mut vanish_from = None;
    let mut prev = R::one();
    for k in 1..=steps {
        if vanish_from.is_some() {
            diagonal.push(R::zero());
            continue;
        }
        let g = gcd_of_minors(a, k)?;
        if g.is_zero() {
            vanish_from = Some(k - 1);
            diagonal.push(R::zero());
            continue;
        }
        let alpha = g
            .exact_div(&prev)
            .ok_or(MatError::NonDivisible { step: k })?;
        diagonal.push(alpha.canonical());
        prev = g;
    }
    let chain_violation = (0..diagonal.len().saturating_sub(1))
        .find(|&i| !diagonal[i].divides(&diagonal[i + 1]));
    Ok(MinorsDiag {
        diagonal,
        vanish_from,
        chain_violation,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Refuted,
    Consistent,
}

/// Specializes a univariate-integer-polynomial matrix at an integer point
/// and compares the Smith normal form over Z against the specialized
/// candidate diagonal. A mismatch refutes the candidate as a normal form
/// over Z[x].
pub fn refute_snf_by_specialization(
    a: &RingMatrix<MultiPoly>,
    candidate: &[MultiPoly],
    point: &BigInt,
) -> Result<Verdict, MatError> {
    let vars: std::collections::BTreeSet<String> = a
        .entries()
        .chain(candidate.iter())
        .flat_map(|p| p.vars().iter().cloned())
        .collect();
    assert!(vars.len() <= 1, "specialization needs a single variable");
    let bindings: BTreeMap<String, BigInt> =
        vars.iter().map(|v| (v.clone(), point.clone())).collect();
    let eval = |p: &MultiPoly| -> BigInt {
        let local: BTreeMap<String, BigInt> = p
            .vars()
            .iter()
            .map(|v| (v.clone(), bindings[v].clone()))
            .collect();
        p.eval_all(&local).expect("all variables bound")
    };
    let specialized = a.map(|p| eval(p));
    let lhs = snf(&specialized, false)?.diagonal;
    let cand_vals: Vec<BigInt> = candidate.iter().map(eval).collect();
    let rhs = snf(&RingMatrix::diagonal(&cand_vals), false)?.diagonal;
    if lhs == rhs {
        Ok(Verdict::Consistent)
    } else {
        Ok(Verdict::Refuted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Ring;

    fn zmat(rows: &[&[i64]]) -> RingMatrix<BigInt> {
        RingMatrix::from_i64_rows(rows)
    }

    #[test]
    fn minor_gcds() {
        let a = zmat(&[&[2, 4], &[6, 8]]);
        assert_eq!(gcd_of_minors(&a, 1).unwrap(), BigInt::from(2));
        assert_eq!(gcd_of_minors(&a, 2).unwrap(), BigInt::from(8));
        let z = RingMatrix::<BigInt>::zero(2, 3);
        assert_eq!(gcd_of_minors(&z, 1).unwrap(), BigInt::from(0));
        assert_eq!(gcd_of_minors(&z, 2).unwrap(), BigInt::from(0));
        assert!(matches!(
            gcd_of_minors(&a, 3),
            Err(MatError::KOutOfRange(3))
        ));
    }

    #[test]
    fn via_minors_matches_snf() {
        let a = zmat(&[&[2, 4], &[6, 8]]);
        let d = snf_via_minors(&a).unwrap();
        assert_eq!(d.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(d.chain_violation, None);
        let one = zmat(&[&[7]]);
        assert_eq!(snf_via_minors(&one).unwrap().diagonal, vec![BigInt::from(7)]);
    }

    #[test]
    fn via_minors_on_zx_diag() {
        // diag(2, x) over Z[x]: minor gcds give the candidate (1, 2x), which
        // the specialization test then refutes.
        let x = MultiPoly::var("x");
        let two = MultiPoly::constant(2.into());
        let zero = MultiPoly::zero_poly();
        let a = RingMatrix::from_rows(vec![
            vec![two.clone(), zero.clone()],
            vec![zero.clone(), x.clone()],
        ]);
        let d = snf_via_minors(&a).unwrap();
        let two_x = Ring::mul(&two, &x);
        assert_eq!(d.diagonal, vec![Ring::one(), two_x.clone()]);
        let verdict =
            refute_snf_by_specialization(&a, &[MultiPoly::one(), two_x], &BigInt::from(2)).unwrap();
        assert_eq!(verdict, Verdict::Refuted);
    }

    #[test]
    fn specialization_consistent_cases() {
        let x = MultiPoly::var("x");
        let zero = MultiPoly::zero_poly();
        // diag(1, 6), candidate (1, 6), point 0 -> consistent
        let a = RingMatrix::from_rows(vec![
            vec![MultiPoly::one(), zero.clone()],
            vec![zero.clone(), MultiPoly::constant(6.into())],
        ]);
        let v = refute_snf_by_specialization(
            &a,
            &[MultiPoly::one(), MultiPoly::constant(6.into())],
            &BigInt::from(0),
        )
        .unwrap();
        assert_eq!(v, Verdict::Consistent);
        // diag(x, x), candidate (x, x), point 3 -> consistent
        let b = RingMatrix::from_rows(vec![
            vec![x.clone(), zero.clone()],
            vec![zero, x.clone()],
        ]);
        let v = refute_snf_by_specialization(&b, &[x.clone(), x], &BigInt::from(3)).unwrap();
        assert_eq!(v, Verdict::Consistent);
    }
}
