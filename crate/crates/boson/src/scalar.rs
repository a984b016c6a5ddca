//! Exact arithmetic in Z[q, q^-1] and its fraction field.
//!
//! [`LaurentPoly`] is a Laurent polynomial in one variable q with arbitrary
//! precision integer coefficients. [`RatScalar`] is a quotient of two Laurent
//! polynomials kept in a canonical reduced form, so that structural equality
//! coincides with equality in Q(q).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ScalarError;

/// Laurent polynomial over the integers; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut coeffs = BTreeMap::new();
        let c = coeff.into();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// q^exp
    pub fn q_power(exp: i64) -> Self {
        Self::monomial(exp, BigInt::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn high_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by q^k.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The bar involution q -> q^-1.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// gcd of all integer coefficients (positive; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    fn div_content(&self, c: &BigInt) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k / c)).collect(),
        }
    }

    /// Dense coefficient vector of the polynomial part after shifting the
    /// lowest exponent to zero. Empty for the zero polynomial.
    fn dense(&self) -> Vec<BigInt> {
        match (self.low_degree(), self.high_degree()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![BigInt::zero(); (hi - lo) as usize + 1];
                for (e, c) in &self.coeffs {
                    v[(e - lo) as usize] = c.clone();
                }
                v
            }
            _ => Vec::new(),
        }
    }

    fn from_dense(v: &[BigInt], low: i64) -> Self {
        let mut p = Self::zero();
        for (k, c) in v.iter().enumerate() {
            p.add_term(low + k as i64, c.clone());
        }
        p
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let a_low = self.low_degree().unwrap();
        let b_low = divisor.low_degree().unwrap();
        let mut rem = self.dense();
        let den = divisor.dense();
        let db = den.len() - 1;
        if rem.len() < den.len() {
            return None;
        }
        let dq = rem.len() - 1 - db;
        let mut quo = vec![BigInt::zero(); dq + 1];
        let lead = den[db].clone();
        for k in (0..=dq).rev() {
            let top = rem[db + k].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (t, d) in den.iter().enumerate() {
                rem[t + k] -= d * &q;
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(&quo, a_low - b_low))
    }

    /// Polynomial gcd up to sign and q-shift: the result has lowest exponent 0
    /// and positive leading coefficient. gcd of contents is included.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return normalize_gcd_output(other);
        }
        if other.is_zero() {
            return normalize_gcd_output(self);
        }
        let ca = self.content();
        let cb = other.content();
        let cg = ca.gcd(&cb);
        let a = primitive(&self.dense());
        let b = primitive(&other.dense());
        let g = dense_gcd(a, b);
        LaurentPoly::from_dense(&g, 0).scale(&cg)
    }
}

fn normalize_gcd_output(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let d = p.dense();
    let lead_neg = d.last().is_some_and(|c| c.is_negative());
    let out = LaurentPoly::from_dense(&d, 0);
    if lead_neg {
        -&out
    } else {
        out
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let v = trim(v.to_vec());
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    let mut out: Vec<BigInt> = v.iter().map(|c| c / &g).collect();
    if out.last().unwrap().is_negative() {
        for c in &mut out {
            *c = -(c.clone());
        }
    }
    out
}

/// Primitive pseudo-remainder sequence gcd on dense polynomials.
fn dense_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    primitive(&a)
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let top = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c *= &lead;
        }
        for (t, d) in b.iter().enumerate() {
            rem[t + k] -= d * &top;
        }
        rem = trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    rem
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", print_laurent(self))
    }
}

/// Print a Laurent polynomial in the text syntax, e.g. `1-q^2` or `2+q^-2`.
pub fn print_laurent(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (e, c)) in p.coeffs.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push('-');
        } else {
            out.push('+');
        }
        let coeff_part = if abs.is_one() && *e != 0 {
            None
        } else {
            Some(abs.to_string())
        };
        let q_part = match *e {
            0 => None,
            1 => Some("q".to_string()),
            e => Some(format!("q^{}", e)),
        };
        match (coeff_part, q_part) {
            (Some(c), Some(q)) => {
                out.push_str(&c);
                out.push('*');
                out.push_str(&q);
            }
            (Some(c), None) => out.push_str(&c),
            (None, Some(q)) => out.push_str(&q),
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Element of Q(q) stored as a reduced fraction of Laurent polynomials.
///
/// Canonical form: numerator and denominator are coprime with coprime integer
/// contents, the denominator is an ordinary polynomial with nonzero constant
/// term, and the denominator's lowest-degree coefficient is positive. With
/// this normalization structural equality is equality in Q(q).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatScalar {
    pub fn zero() -> Self {
        RatScalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatScalar {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_laurent(LaurentPoly::constant(n))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatScalar {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// q^exp
    pub fn q_power(exp: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_power(exp))
    }

    /// Build `num/den`, reducing to canonical form. Panics if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "denominator must be nonzero");
        let mut s = RatScalar { num, den };
        s.normalize();
        s
    }

    /// 1/(1-q^(2d)); the factor attached to a chord with symmetrizer d.
    pub fn one_over_one_minus_q2d(d: i64) -> Self {
        let den = LaurentPoly::from_terms([(0, BigInt::one()), (2 * d, -BigInt::one())]);
        Self::new(LaurentPoly::one(), den)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // shift the denominator to an ordinary polynomial with nonzero
        // constant term, moving the q-power into the numerator
        let dlow = self.den.low_degree().unwrap();
        if dlow != 0 {
            self.den = self.den.shifted(-dlow);
            self.num = self.num.shifted(-dlow);
        }
        if !self.den.is_one() && self.num.num_terms() == 1 {
            // a monomial numerator shares at most integer content with the
            // denominator
            let g = self.num.content().gcd(&self.den.content());
            if !g.is_one() {
                self.num = self.num.div_content(&g);
                self.den = self.den.div_content(&g);
            }
        } else if !self.den.is_one() {
            let g = self.num.gcd(&self.den);
            if !g.is_one() {
                // gcd is shift-normalized; reapply shifts so division is exact
                let nlow = self.num.low_degree().unwrap();
                let num_poly = self.num.shifted(-nlow);
                let num_q = num_poly.div_exact(&g).expect("gcd divides numerator");
                let den_q = self.den.div_exact(&g).expect("gcd divides denominator");
                self.num = num_q.shifted(nlow);
                self.den = den_q;
                let dlow2 = self.den.low_degree().unwrap();
                if dlow2 != 0 {
                    self.den = self.den.shifted(-dlow2);
                    self.num = self.num.shifted(-dlow2);
                }
            }
        }
        // sign: lowest-degree denominator coefficient positive
        if self.den.coeff(0).is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// The underlying Laurent polynomial when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<RatScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &RatScalar) -> Result<RatScalar, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// The bar involution q -> q^-1, a ring homomorphism.
    pub fn bar(&self) -> RatScalar {
        Self::new(self.num.bar(), self.den.bar())
    }

    pub fn pow(&self, n: i64) -> Result<RatScalar, ScalarError> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        let mut out = RatScalar::one();
        for _ in 0..n {
            out = &out * self;
        }
        Ok(out)
    }

    /// Laurent-series coefficients at q = 0 on the window `low..=high`.
    ///
    /// Defined whenever the denominator's lowest term is invertible over Q,
    /// which the canonical form guarantees for nonzero denominators.
    pub fn series_expand(
        &self,
        low: i64,
        high: i64,
    ) -> Result<BTreeMap<i64, BigRational>, ScalarError> {
        let mut out = BTreeMap::new();
        if self.is_zero() || low > high {
            return Ok(out);
        }
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(ScalarError::SeriesUndefined);
        }
        let start = self.num.low_degree().unwrap();
        let d0 = BigRational::from_integer(d0);
        let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
        for e in start..=high {
            let mut acc = BigRational::from_integer(self.num.coeff(e));
            for (t, dc) in self.den.terms() {
                if *t == 0 {
                    continue;
                }
                if let Some(prev) = coeffs.get(&(e - t)) {
                    acc -= BigRational::from_integer(dc.clone()) * prev;
                }
            }
            let val = acc / d0.clone();
            coeffs.insert(e, val.clone());
            if e >= low && !val.is_zero() {
                out.insert(e, val);
            }
        }
        Ok(out)
    }
}

impl Add for &RatScalar {
    type Output = RatScalar;
    fn add(self, rhs: &RatScalar) -> RatScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatScalar::new(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatScalar::new(num, den)
    }
}

impl Sub for &RatScalar {
    type Output = RatScalar;
    fn sub(self, rhs: &RatScalar) -> RatScalar {
        self + &(-rhs)
    }
}

impl Neg for &RatScalar {
    type Output = RatScalar;
    fn neg(self) -> RatScalar {
        RatScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatScalar {
    type Output = RatScalar;
    fn mul(self, rhs: &RatScalar) -> RatScalar {
        if self.is_zero() || rhs.is_zero() {
            return RatScalar::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // a monomial factor rescales the numerator; no polynomial gcd needed
        if rhs.den.is_one() && rhs.num.num_terms() == 1 {
            let (e, c) = rhs.num.terms().next().map(|(e, c)| (*e, c.clone())).unwrap();
            return self.mul_monomial(e, &c);
        }
        if self.den.is_one() && self.num.num_terms() == 1 {
            let (e, c) = self.num.terms().next().map(|(e, c)| (*e, c.clone())).unwrap();
            return rhs.mul_monomial(e, &c);
        }
        RatScalar::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl RatScalar {
    fn mul_monomial(&self, exp: i64, coeff: &BigInt) -> RatScalar {
        let num = self.num.shifted(exp).scale(coeff);
        let mut out = RatScalar {
            num,
            den: self.den.clone(),
        };
        // only the integer contents can newly collide
        if !out.den.is_one() {
            let g = out.num.content().gcd(&out.den.content());
            if !g.is_one() {
                out.num = out.num.div_content(&g);
                out.den = out.den.div_content(&g);
            }
        }
        if out.den.coeff(0).is_negative() {
            out.num = -&out.num;
            out.den = -&out.den;
        }
        out
    }
}

impl AddAssign<&RatScalar> for RatScalar {
    fn add_assign(&mut self, rhs: &RatScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatScalar> for RatScalar {
    fn sub_assign(&mut self, rhs: &RatScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatScalar> for RatScalar {
    fn mul_assign(&mut self, rhs: &RatScalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for RatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", print_scalar(self))
    }
}

/// Print a scalar standalone, e.g. `q^2/(1-q^2)^2`.
pub fn print_scalar(s: &RatScalar) -> String {
    if s.den.is_one() {
        return print_laurent(&s.num);
    }
    let num_str = if s.num.num_terms() > 1 {
        format!("({})", print_laurent(&s.num))
    } else {
        print_laurent(&s.num)
    };
    let factors = factor_denominator(&s.den);
    let den_str = if factors.len() == 1 {
        let (f, m) = &factors[0];
        if *m == 1 {
            format!("({})", print_laurent(f))
        } else {
            format!("({})^{}", print_laurent(f), m)
        }
    } else {
        let inner: Vec<String> = factors
            .iter()
            .map(|(f, m)| {
                if *m == 1 {
                    format!("({})", print_laurent(f))
                } else {
                    format!("({})^{}", print_laurent(f), m)
                }
            })
            .collect();
        format!("({})", inner.join("*"))
    };
    format!("{}/{}", num_str, den_str)
}

/// Print a scalar for use as a coefficient: wrapped in parentheses whenever it
/// is not a plain monomial.
pub fn print_scalar_coeff(s: &RatScalar) -> String {
    if s.den.is_one() && s.num.num_terms() <= 1 {
        print_laurent(&s.num)
    } else if s.den.is_one() {
        format!("({})", print_laurent(&s.num))
    } else {
        format!("({})", print_scalar(s))
    }
}

/// Greedy factorization of a denominator into `(1-q^k)' powers for display,
/// trying larger k first; any remainder is kept as a single factor.
fn factor_denominator(den: &LaurentPoly) -> Vec<(LaurentPoly, u32)> {
    let mut rest = den.clone();
    let mut factors: Vec<(LaurentPoly, u32)> = Vec::new();
    let max_k = rest.high_degree().unwrap_or(0).max(0);
    for k in (1..=max_k).rev() {
        let f = LaurentPoly::from_terms([(0, BigInt::one()), (k, -BigInt::one())]);
        let mut mult = 0u32;
        while let Some(q) = rest.div_exact(&f) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((f, mult));
        }
    }
    if !rest.is_one() || factors.is_empty() {
        factors.push((rest, 1));
    }
    factors.sort_by(|a, b| {
        let da = a.0.high_degree().unwrap_or(0);
        let db = b.0.high_degree().unwrap_or(0);
        da.cmp(&db).then(Ordering::Equal)
    });
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatScalar {
        RatScalar::q_power(1)
    }

    fn one_minus_q2() -> LaurentPoly {
        LaurentPoly::from_terms([(0, BigInt::from(1)), (2, BigInt::from(-1))])
    }

    #[test]
    fn laurent_basics() {
        let p = LaurentPoly::from_terms([(0, BigInt::from(1)), (2, BigInt::from(1))]);
        let r = &p * &p;
        assert_eq!(
            r,
            LaurentPoly::from_terms([
                (0, BigInt::from(1)),
                (2, BigInt::from(2)),
                (4, BigInt::from(1))
            ])
        );
        assert_eq!(p.bar().low_degree(), Some(-2));
    }

    #[test]
    fn zero_coefficients_not_stored() {
        let mut p = LaurentPoly::monomial(3, 5);
        p.add_term(3, BigInt::from(-5));
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn rat_normalization_structural_equality() {
        // (1-q^4)/(1-q^2) == 1+q^2
        let num = LaurentPoly::from_terms([(0, BigInt::from(1)), (4, BigInt::from(-1))]);
        let s = RatScalar::new(num, one_minus_q2());
        assert_eq!(
            s,
            RatScalar::from_laurent(LaurentPoly::from_terms([
                (0, BigInt::from(1)),
                (2, BigInt::from(1))
            ]))
        );
    }

    #[test]
    fn rat_denominator_sign_normalized() {
        // 1/(q^2-1) == -1/(1-q^2)
        let den = LaurentPoly::from_terms([(0, BigInt::from(-1)), (2, BigInt::from(1))]);
        let a = RatScalar::new(LaurentPoly::one(), den);
        let b = -&RatScalar::one_over_one_minus_q2d(1);
        assert_eq!(a, b);
    }

    #[test]
    fn field_axioms_on_random_values() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let rand_scalar = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut num = LaurentPoly::zero();
            let mut den = LaurentPoly::zero();
            for _ in 0..3 {
                num.add_term(rng.gen_range(-3..4), BigInt::from(rng.gen_range(-4i64..5)));
                den.add_term(rng.gen_range(0..3), BigInt::from(rng.gen_range(-4i64..5)));
            }
            if den.is_zero() {
                den = LaurentPoly::one();
            }
            RatScalar::new(num, den)
        };
        for _ in 0..200 {
            let a = rand_scalar(&mut rng);
            let b = rand_scalar(&mut rng);
            let c = rand_scalar(&mut rng);
            let lhs = &(&a + &b) * &c;
            let rhs = &(&a * &c) + &(&b * &c);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn bar_is_an_involution() {
        let s = RatScalar::new(
            LaurentPoly::from_terms([(-1, BigInt::from(2)), (3, BigInt::from(1))]),
            one_minus_q2(),
        );
        assert_eq!(s.bar().bar(), s);
        assert_eq!(q().bar(), RatScalar::q_power(-1));
        assert_eq!(RatScalar::one().bar(), RatScalar::one());
    }

    #[test]
    fn bar_of_boson_factor() {
        // bar(1/(1-q^2)) = -q^2/(1-q^2)
        let f = RatScalar::one_over_one_minus_q2d(1);
        let expected = &(-&RatScalar::q_power(2)) * &f;
        assert_eq!(f.bar(), expected);
    }

    #[test]
    fn series_geometric() {
        let f = RatScalar::one_over_one_minus_q2d(1);
        let s = f.series_expand(0, 4).unwrap();
        let one = BigRational::from_integer(BigInt::one());
        assert_eq!(s.len(), 3);
        assert_eq!(s[&0], one);
        assert_eq!(s[&2], one);
        assert_eq!(s[&4], one);
    }

    #[test]
    fn series_shifted_geometric() {
        // q^-2/(1-q^2) on [-2, 0] -> {-2: 1, 0: 1}
        let f = &RatScalar::q_power(-2) * &RatScalar::one_over_one_minus_q2d(1);
        let s = f.series_expand(-2, 0).unwrap();
        let one = BigRational::from_integer(BigInt::one());
        assert_eq!(s.len(), 2);
        assert_eq!(s[&-2], one);
        assert_eq!(s[&0], one);
    }

    #[test]
    fn series_polynomial_window() {
        // (1+q)/1 on [0,1] -> {0:1, 1:1}
        let f = RatScalar::from_laurent(LaurentPoly::from_terms([
            (0, BigInt::one()),
            (1, BigInt::one()),
        ]));
        let s = f.series_expand(0, 1).unwrap();
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn display_roundtrip_shapes() {
        let f = RatScalar::one_over_one_minus_q2d(1);
        assert_eq!(print_scalar(&f), "1/(1-q^2)");
        let g = &RatScalar::q_power(2) * &f.pow(2).unwrap();
        assert_eq!(print_scalar(&g), "q^2/(1-q^2)^2");
    }
}
