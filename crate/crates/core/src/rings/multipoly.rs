//! Sparse multivariate polynomials over the integers.
//!
//! Terms are kept in a `BTreeMap` from exponent vector to nonzero
//! coefficient; the exponent order is lexicographic in the sorted variable
//! list, so the last key is the lex leading term.

use super::{GcdDomain, IntegralDomain, Ring, RingError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Cap on intermediate term counts inside gcd computations.
pub const DEFAULT_TERM_BUDGET: usize = 500_000;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero_poly() -> Self {
        MultiPoly {
            vars: vec![],
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(vec![], c);
        }
        MultiPoly { vars: vec![], terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], BigInt::from(1));
        MultiPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    pub fn from_named_terms(terms: &[(Vec<(&str, u32)>, BigInt)]) -> Self {
        let mut acc = Self::zero_poly();
        for (vars, c) in terms {
            let mut t = Self::constant(c.clone());
            for (v, e) in vars {
                t = Ring::mul(&t, &Self::var(v).pow(*e));
            }
            acc = Ring::add(&acc, &t);
        }
        acc
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(Zero::zero());
        }
        if self.is_constant() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).max()
    }

    /// Drops variables that no longer occur and re-canonicalizes.
    fn normalized(vars: Vec<String>, terms: BTreeMap<Vec<u32>, BigInt>) -> Self {
        let n = vars.len();
        let mut used = vec![false; n];
        for e in terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) {
            return MultiPoly { vars, terms };
        }
        let keep: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
        let new_vars: Vec<String> = keep.iter().map(|&i| vars[i].clone()).collect();
        let mut new_terms = BTreeMap::new();
        for (e, c) in terms {
            let ne: Vec<u32> = keep.iter().map(|&i| e[i]).collect();
            new_terms.insert(ne, c);
        }
        MultiPoly {
            vars: new_vars,
            terms: new_terms,
        }
    }

    /// Rewrites both polynomials over the merged, sorted variable list.
    fn unify(
        a: &Self,
        b: &Self,
    ) -> (
        Vec<String>,
        BTreeMap<Vec<u32>, BigInt>,
        BTreeMap<Vec<u32>, BigInt>,
    ) {
        if a.vars == b.vars {
            return (a.vars.clone(), a.terms.clone(), b.terms.clone());
        }
        let mut vars: Vec<String> = a.vars.iter().chain(b.vars.iter()).cloned().collect();
        vars.sort();
        vars.dedup();
        let remap = |p: &Self| -> BTreeMap<Vec<u32>, BigInt> {
            let idx: Vec<usize> = p
                .vars
                .iter()
                .map(|v| vars.binary_search(v).unwrap())
                .collect();
            p.terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = vec![0u32; vars.len()];
                    for (i, &x) in e.iter().enumerate() {
                        ne[idx[i]] = x;
                    }
                    (ne, c.clone())
                })
                .collect()
        };
        (vars.clone(), remap(a), remap(b))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(BigInt::from(1));
        while e > 0 {
            if e & 1 == 1 {
                acc = Ring::mul(&acc, &base);
            }
            base = Ring::mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Lex leading term as (exponents, coefficient).
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// The unique term of maximal total degree, as a polynomial, if unique.
    pub fn top_total_degree_term(&self) -> Option<Self> {
        let top = self.total_degree()?;
        let mut hits = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() == top);
        let (e, c) = hits.next()?;
        if hits.next().is_some() {
            return None;
        }
        let mut terms = BTreeMap::new();
        terms.insert(e.clone(), c.clone());
        Some(Self::normalized(self.vars.clone(), terms))
    }

    /// Substitutes polynomials for variables; unbound variables stay
    /// symbolic. Binding a variable the polynomial does not mention is an
    /// error, except on the zero polynomial.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> Result<Self, RingError> {
        if self.terms.is_empty() {
            return Ok(Self::zero_poly());
        }
        for v in bindings.keys() {
            if !self.vars.contains(v) {
                return Err(RingError::UnknownVariable(v.clone()));
            }
        }
        let mut acc = Self::zero_poly();
        for (e, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let factor = match bindings.get(&self.vars[i]) {
                    Some(p) => p.pow(exp),
                    None => Self::var(&self.vars[i]).pow(exp),
                };
                t = Ring::mul(&t, &factor);
            }
            acc = Ring::add(&acc, &t);
        }
        Ok(acc)
    }

    /// Evaluates with every occurring variable bound to an integer.
    pub fn eval_all(&self, bindings: &BTreeMap<String, BigInt>) -> Result<BigInt, RingError> {
        if let Some(v) = self.vars.iter().find(|v| !bindings.contains_key(*v)) {
            return Err(RingError::UnknownVariable(v.clone()));
        }
        let polys: BTreeMap<String, MultiPoly> = bindings
            .iter()
            .filter(|(k, _)| self.vars.contains(k))
            .map(|(k, v)| (k.clone(), MultiPoly::constant(v.clone())))
            .collect();
        let subs = self.substitute(&polys)?;
        Ok(subs.as_constant().expect("fully bound"))
    }

    /// Integer content: nonnegative gcd of all coefficients.
    pub fn int_content(&self) -> BigInt {
        let mut g: BigInt = Zero::zero();
        for c in self.terms.values() {
            g = Integer::gcd(&g, c);
            if One::is_one(&g) {
                break;
            }
        }
        g
    }

    /// View as a dense polynomial in variable index `vi` of `self.vars`,
    /// with multi-polynomial coefficients.
    fn coeffs_in_var(&self, vi: usize) -> Vec<MultiPoly> {
        let deg = self.terms.keys().map(|e| e[vi]).max().unwrap_or(0) as usize;
        let mut out: Vec<BTreeMap<Vec<u32>, BigInt>> = vec![BTreeMap::new(); deg + 1];
        for (e, c) in &self.terms {
            let k = e[vi] as usize;
            let mut ne = e.clone();
            ne[vi] = 0;
            out[k].insert(ne, c.clone());
        }
        out.into_iter()
            .map(|terms| Self::normalized(self.vars.clone(), terms))
            .collect()
    }

    fn from_coeffs_in_var(var: &str, coeffs: &[MultiPoly]) -> MultiPoly {
        let x = Self::var(var);
        let mut acc = Self::zero_poly();
        for (k, c) in coeffs.iter().enumerate() {
            acc = Ring::add(&acc, &Ring::mul(c, &x.pow(k as u32)));
        }
        acc
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], x)
                    }
                })
                .collect();
            let mono = mono.join("*");
            if first {
                first = false;
                if mono.is_empty() {
                    write!(f, "{c}")?;
                } else if One::is_one(c) {
                    write!(f, "{mono}")?;
                } else if One::is_one(&-c) {
                    write!(f, "-{mono}")?;
                } else {
                    write!(f, "{c}*{mono}")?;
                }
            } else {
                let (sign, mag) = if c.is_negative() {
                    ("-", -c)
                } else {
                    ("+", c.clone())
                };
                if mono.is_empty() {
                    write!(f, " {sign} {mag}")?;
                } else if One::is_one(&mag) {
                    write!(f, " {sign} {mono}")?;
                } else {
                    write!(f, " {sign} {mag}*{mono}")?;
                }
            }
        }
        Ok(())
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        Self::zero_poly()
    }
    fn one() -> Self {
        Self::constant(BigInt::from(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let (vars, mut a, b) = Self::unify(self, rhs);
        for (e, c) in b {
            let entry = a.entry(e).or_insert_with(Zero::zero);
            *entry += c;
        }
        a.retain(|_, c| !Zero::is_zero(c));
        Self::normalized(vars, a)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &rhs.neg())
    }
    fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.terms.is_empty() || rhs.terms.is_empty() {
            return Self::zero_poly();
        }
        let (vars, a, b) = Self::unify(self, rhs);
        let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = out.entry(e).or_insert_with(Zero::zero);
                *entry += ca * cb;
            }
        }
        out.retain(|_, c| !Zero::is_zero(c));
        Self::normalized(vars, out)
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(BigInt::from(v))
    }
    fn size_bits(&self) -> u64 {
        self.terms.values().map(|c| c.bits()).max().unwrap_or(0)
    }
}

impl IntegralDomain for MultiPoly {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.terms.is_empty() {
            return None;
        }
        if self.terms.is_empty() {
            return Some(Self::zero_poly());
        }
        let (vars, a, b) = Self::unify(self, rhs);
        let (lt_e, lt_c) = {
            let (e, c) = b.iter().next_back().unwrap();
            (e.clone(), c.clone())
        };
        let mut rem = a;
        let mut quo: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&lt_e).any(|(x, y)| x < y) {
                return None;
            }
            let (qc, qr) = Integer::div_rem(&rc, &lt_c);
            if !Zero::is_zero(&qr) {
                return None;
            }
            let qe: Vec<u32> = re.iter().zip(&lt_e).map(|(x, y)| x - y).collect();
            for (eb, cb) in &b {
                let e: Vec<u32> = qe.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = rem.entry(e.clone()).or_insert_with(Zero::zero);
                *entry -= &qc * cb;
                if Zero::is_zero(entry) {
                    rem.remove(&e);
                }
            }
            quo.insert(qe, qc);
        }
        Some(Self::normalized(vars, quo))
    }
    fn is_unit(&self) -> bool {
        match self.as_constant() {
            Some(c) => One::is_one(&c) || One::is_one(&-&c),
            None => false,
        }
    }
    fn unit_inv(&self) -> Self {
        assert!(self.is_unit(), "not a unit: {self}");
        self.clone()
    }
    const BAREISS_FRIENDLY: bool = false;
}

impl GcdDomain for MultiPoly {
    fn gcd(&self, rhs: &Self) -> Self {
        multipoly_gcd_budgeted(self, rhs, DEFAULT_TERM_BUDGET)
            .expect("term budget exceeded in multivariate gcd")
    }
    fn canonical_unit(&self) -> Self {
        match self.leading_term() {
            None => Ring::one(),
            Some((_, c)) => {
                if c.is_negative() {
                    Self::constant(BigInt::from(-1))
                } else {
                    Ring::one()
                }
            }
        }
    }
}

/// gcd up to sign, normalized with positive lexicographic leading
/// coefficient. Recursion on variables with content/primitive-part
/// splitting; inside each variable a pseudo-remainder sequence reduced to
/// primitive part at every step.
pub fn multipoly_gcd(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, RingError> {
    multipoly_gcd_budgeted(a, b, DEFAULT_TERM_BUDGET)
}

pub fn multipoly_gcd_budgeted(
    a: &MultiPoly,
    b: &MultiPoly,
    budget: usize,
) -> Result<MultiPoly, RingError> {
    let g = gcd_inner(a, b, budget)?;
    Ok(g.canonical())
}

fn check_budget(p: &MultiPoly, budget: usize) -> Result<(), RingError> {
    if p.num_terms() > budget {
        Err(RingError::BudgetExceeded(p.num_terms()))
    } else {
        Ok(())
    }
}

fn gcd_inner(a: &MultiPoly, b: &MultiPoly, budget: usize) -> Result<MultiPoly, RingError> {
    if a.is_zero() {
        return Ok(b.clone());
    }
    if b.is_zero() {
        return Ok(a.clone());
    }
    if let (Some(ca), Some(cb)) = (a.as_constant(), b.as_constant()) {
        return Ok(MultiPoly::constant(Integer::gcd(&ca, &cb)));
    }
    let (vars, ta, tb) = MultiPoly::unify(a, b);
    let a = MultiPoly {
        vars: vars.clone(),
        terms: ta,
    };
    let b = MultiPoly {
        vars: vars.clone(),
        terms: tb,
    };
    let vi = vars.len() - 1;

    let ca = a.coeffs_in_var(vi);
    let cb = b.coeffs_in_var(vi);
    let cont_a = content_of(&ca, budget)?;
    let cont_b = content_of(&cb, budget)?;
    let cont_gcd = gcd_inner(&cont_a, &cont_b, budget)?;
    let pa = divide_coeffs(&ca, &cont_a);
    let pb = divide_coeffs(&cb, &cont_b);

    let pp_gcd = prs_gcd(&vars[vi], pa, pb, budget)?;
    let g = Ring::mul(&cont_gcd, &pp_gcd);
    check_budget(&g, budget)?;
    Ok(g)
}

fn content_of(coeffs: &[MultiPoly], budget: usize) -> Result<MultiPoly, RingError> {
    let mut g = MultiPoly::zero_poly();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = gcd_inner(&g, c, budget)?;
        if g.is_unit() {
            break;
        }
    }
    Ok(g.canonical())
}

fn divide_coeffs(coeffs: &[MultiPoly], d: &MultiPoly) -> Vec<MultiPoly> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                MultiPoly::zero_poly()
            } else {
                c.exact_div(d).expect("content divides coefficient")
            }
        })
        .collect()
}

fn poly_deg(coeffs: &[MultiPoly]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

/// Pseudo-remainder in the main variable: lc(b)^(da-db+1) * a mod b.
fn pseudo_rem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let da = poly_deg(a).unwrap();
    let db = poly_deg(b).unwrap();
    assert!(da >= db);
    let lc_b = b[db].clone();
    let mut r: Vec<MultiPoly> = a.to_vec();
    let mut steps_left = da - db + 1;
    while let Some(dr) = poly_deg(&r) {
        if dr < db {
            break;
        }
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c = Ring::mul(c, &lc_b);
        }
        steps_left -= 1;
        for j in 0..=db {
            r[dr - db + j] = Ring::sub(&r[dr - db + j], &Ring::mul(&lead, &b[j]));
        }
    }
    for _ in 0..steps_left {
        for c in r.iter_mut() {
            *c = Ring::mul(c, &lc_b);
        }
    }
    r
}

fn prs_gcd(
    main_var: &str,
    mut a: Vec<MultiPoly>,
    mut b: Vec<MultiPoly>,
    budget: usize,
) -> Result<MultiPoly, RingError> {
    if poly_deg(&a) < poly_deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let db = match poly_deg(&b) {
            None => {
                let cont = content_of(&a, budget)?;
                let pp = divide_coeffs(&a, &cont);
                return Ok(MultiPoly::from_coeffs_in_var(main_var, &pp));
            }
            Some(d) => d,
        };
        if db == 0 {
            // b is a unit after primitive reduction: coprime in the main
            // variable.
            return Ok(Ring::one());
        }
        let r = pseudo_rem(&a, &b);
        for c in &r {
            check_budget(c, budget)?;
        }
        let cont = content_of(&r, budget)?;
        let r = if cont.is_zero() {
            r
        } else {
            divide_coeffs(&r, &cont)
        };
        a = b;
        b = r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(name)
    }

    fn c(x: i64) -> MultiPoly {
        MultiPoly::constant(BigInt::from(x))
    }

    #[test]
    fn gcd_monomials() {
        let abc = Ring::mul(&Ring::mul(&v("a"), &v("b")), &v("c"));
        let ab = Ring::mul(&v("a"), &v("b"));
        assert_eq!(multipoly_gcd(&abc, &ab).unwrap(), ab);
    }

    #[test]
    fn gcd_difference_of_squares() {
        let a2b2 = Ring::sub(&v("a").pow(2), &v("b").pow(2));
        let amb = Ring::sub(&v("a"), &v("b"));
        assert_eq!(multipoly_gcd(&a2b2, &amb).unwrap(), amb);
    }

    #[test]
    fn gcd_with_content() {
        // ((de + e + 1) * e, e^2) -> e
        let p = Ring::mul(
            &Ring::add(&Ring::add(&Ring::mul(&v("d"), &v("e")), &v("e")), &c(1)),
            &v("e"),
        );
        let q = v("e").pow(2);
        assert_eq!(multipoly_gcd(&p, &q).unwrap(), v("e"));
    }

    #[test]
    fn exact_division() {
        let a = Ring::mul(
            &Ring::add(&v("a"), &v("b")),
            &Ring::sub(&v("a"), &Ring::mul(&c(2), &v("b"))),
        );
        let q = a.exact_div(&Ring::add(&v("a"), &v("b"))).unwrap();
        assert_eq!(q, Ring::sub(&v("a"), &Ring::mul(&c(2), &v("b"))));
        assert!(a.exact_div(&Ring::add(&v("a"), &c(1))).is_none());
    }

    #[test]
    fn substitute_examples() {
        // de + e + 1 with d = e = 1 -> 3
        let p = Ring::add(&Ring::add(&Ring::mul(&v("d"), &v("e")), &v("e")), &c(1));
        let mut b = BTreeMap::new();
        b.insert("d".to_string(), c(1));
        b.insert("e".to_string(), c(1));
        assert_eq!(p.substitute(&b).unwrap(), c(3));
        // d = q, e = q -> q^2 + q + 1
        let mut bq = BTreeMap::new();
        bq.insert("d".to_string(), v("q"));
        bq.insert("e".to_string(), v("q"));
        let expect = Ring::add(&Ring::add(&v("q").pow(2), &v("q")), &c(1));
        assert_eq!(p.substitute(&bq).unwrap(), expect);
        // zero polynomial, any bindings -> 0
        assert_eq!(MultiPoly::zero_poly().substitute(&bq).unwrap(), c(0));
        // unknown variable
        let mut bad = BTreeMap::new();
        bad.insert("zz".to_string(), c(1));
        assert!(matches!(
            p.substitute(&bad),
            Err(RingError::UnknownVariable(_))
        ));
    }

    #[test]
    fn canonical_sign() {
        let p = Ring::sub(&c(0), &v("a"));
        assert_eq!(p.canonical(), v("a"));
    }

    #[test]
    fn gcd_of_scaled_pair_is_associate_of_scale() {
        // gcd(a*g, b*g) with coprime a, b comes back as g (canonicalized).
        let g = Ring::add(&Ring::mul(&v("a"), &v("b")), &c(1));
        let p = Ring::mul(&v("a"), &g);
        let q = Ring::mul(&Ring::add(&v("b"), &c(1)), &g);
        assert_eq!(multipoly_gcd(&p, &q).unwrap(), g.canonical());
    }
}
