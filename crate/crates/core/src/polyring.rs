//! Dense polynomials over a [`FieldSpec`], base-p digit utilities and
//! Lucas-theorem expansion of binomial powers `(x^eta - mu)^t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// Polynomial with coefficients in ascending degree and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolynomialRepr")]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

#[derive(Deserialize)]
struct PolynomialRepr {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

impl TryFrom<PolynomialRepr> for Polynomial {
    type Error = Error;
    fn try_from(r: PolynomialRepr) -> Result<Self> {
        Polynomial::new(&r.field, r.coeffs)
    }
}

impl Polynomial {
    /// Validates the reprs and strips trailing zeros.
    pub fn new(field: &FieldSpec, coeffs: Vec<u32>) -> Result<Self> {
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(Self::from_coeffs(field, coeffs))
    }

    /// Like [`Polynomial::new`] without range checks; callers guarantee `c < q`.
    pub fn from_coeffs(field: &FieldSpec, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { field: field.clone(), coeffs }
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Polynomial { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: &FieldSpec, c: u32) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// `c x^deg`
    pub fn monomial(field: &FieldSpec, c: u32, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// `x^n - c`
    pub fn binomial(field: &FieldSpec, n: usize, c: u32) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = field.sub(coeffs[0], c);
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// Coefficient vector padded (or truncated) to length `n`.
    pub fn to_vector(&self, n: usize) -> Vec<u32> {
        let mut v = self.coeffs.clone();
        v.resize(n, 0);
        v
    }

    fn same(&self, other: &Polynomial) -> Result<()> {
        if self.field.same_field(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Self::from_coeffs(f, coeffs))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Self::from_coeffs(f, coeffs))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::from_coeffs(f, out))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = &self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { field: self.field.clone(), coeffs }
    }

    /// Euclidean division: `self = quot * divisor + rem` with `deg rem < deg divisor`.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.same(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let inv_lead = f.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, inv_lead);
            quot[top - dd] = factor;
            let base = top - dd;
            for (k, &dk) in divisor.coeffs.iter().enumerate() {
                rem[base + k] = f.sub(rem[base + k], f.mul(factor, dk));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(f, quot), Self::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &Polynomial) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic associate and the unit it was scaled by: `self = unit * monic`.
    pub fn monic(&self) -> (u32, Polynomial) {
        if self.is_zero() {
            return (0, self.clone());
        }
        let lead = self.lead();
        let inv = self.field.inv(lead).expect("nonzero leading coefficient");
        (lead, self.scale(inv))
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Polynomial) -> Result<Polynomial> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic().1)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `x^deg * self(1/x)`.
    pub fn reciprocal(&self) -> Polynomial {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::from_coeffs(&self.field, c)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

macro_rules! poly_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial operands from different fields")
            }
        }
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_op!(Add, add, checked_add);
poly_op!(Sub, sub, checked_sub);
poly_op!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = &self.field;
        Polynomial::from_coeffs(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

/// Base-p digits of a non-negative integer, least significant first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigitExpansion {
    pub value: u64,
    pub base: u64,
    pub digits: Vec<u64>,
}

impl DigitExpansion {
    /// Number of digits; `0` has the single digit `0`.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn leading(&self) -> u64 {
        *self.digits.last().expect("at least one digit")
    }
}

pub fn digits(t: u64, p: u64) -> DigitExpansion {
    let mut digits = Vec::new();
    let mut v = t;
    loop {
        digits.push(v % p);
        v /= p;
        if v == 0 {
            break;
        }
    }
    DigitExpansion { value: t, base: p, digits }
}

/// `V_t`: product of `(digit + 1)` over the base-p digits of `t`. This is the
/// number of nonzero terms of `(x^eta - mu)^t` in characteristic `p`.
pub fn v_weight(t: u64, p: u64) -> u64 {
    let mut v = t;
    let mut acc = 1;
    while v > 0 {
        acc *= v % p + 1;
        v /= p;
    }
    acc
}

/// `C(n, k) mod p` by Lucas' theorem.
pub fn binom_mod_p(n: u64, k: u64, p: u64) -> u64 {
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binom_mod(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    // n < p, so the numerator product never contains p
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * crate::arith::mod_inverse(den, p).expect("den is a unit mod p") % p
}

/// Expands `(x^eta - mu)^t`: the coefficient of `x^(eta j)` is
/// `C(t, j) (-mu)^(t - j)` reduced mod p.
pub fn binomial_power(eta: usize, mu: &FieldElement, t: u64) -> Polynomial {
    binomial_power_raw(mu.field(), eta, mu.repr(), t)
}

pub(crate) fn binomial_power_raw(field: &FieldSpec, eta: usize, mu: u32, t: u64) -> Polynomial {
    let p = field.p();
    let neg_mu = field.neg(mu);
    let mut coeffs = vec![0u32; eta * t as usize + 1];
    for j in 0..=t {
        let b = binom_mod_p(t, j, p);
        if b == 0 {
            continue;
        }
        let c = field.mul(field.from_int(b as i64), field.pow(neg_mu, t - j));
        coeffs[eta * j as usize] = c;
    }
    Polynomial::from_coeffs(field, coeffs)
}

/// A factorization `unit * prod(factor^multiplicity)` into monic irreducibles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub unit: u32,
    pub factors: Vec<(Polynomial, usize)>,
}

impl Factorization {
    pub fn expand(&self, field: &FieldSpec) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::constant(field, self.unit), |acc, (f, e)| &acc * &f.pow(*e as u64))
    }

    /// True for a single irreducible factor of multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Monic polynomial of degree `d` whose lower coefficients are the base-q digits of `idx`.
pub(crate) fn monic_from_index(field: &FieldSpec, d: usize, mut idx: u64) -> Polynomial {
    let q = field.q();
    let mut coeffs = Vec::with_capacity(d + 1);
    for _ in 0..d {
        coeffs.push((idx % q) as u32);
        idx /= q;
    }
    coeffs.push(1);
    Polynomial::from_coeffs(field, coeffs)
}

/// Complete factorization by trial division over monic candidates in
/// increasing (degree, integer encoding) order. `budget` caps the number of
/// candidate divisors examined.
pub fn factor_over_field(f: &Polynomial, budget: u128) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::InvalidParams("cannot factor the zero polynomial".into()));
    }
    let field = f.field().clone();
    let q = u128::from(field.q());
    let (unit, mut rest) = f.monic();
    let mut factors = Vec::new();
    let mut used: u128 = 0;
    let mut d = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * d {
        let count = q.checked_pow(d as u32).unwrap_or(u128::MAX);
        let needed = used.saturating_add(count);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        used = needed;
        for idx in 0..count as u64 {
            let cand = monic_from_index(&field, d, idx);
            let mut mult = 0;
            loop {
                let (quot, rem) = rest.divmod(&cand)?;
                if !rem.is_zero() {
                    break;
                }
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                factors.push((cand, mult));
            }
            if rest.degree().unwrap_or(0) < 2 * d {
                break;
            }
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) >= 1 {
        // whatever survives has no factor of degree <= deg/2
        match factors.iter_mut().find(|(g, _)| *g == rest) {
            Some(entry) => entry.1 += 1,
            None => factors.push((rest, 1)),
        }
    }
    Ok(Factorization { unit, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, m: u32) -> FieldSpec {
        FieldSpec::gf(p, m).unwrap()
    }

    fn poly(f: &FieldSpec, c: &[u32]) -> Polynomial {
        Polynomial::new(f, c.to_vec()).unwrap()
    }

    /// (x^eta - mu)^t by repeated multiplication.
    fn naive_power(f: &FieldSpec, eta: usize, mu: u32, t: u64) -> Polynomial {
        let base = Polynomial::binomial(f, eta, mu);
        (0..t).fold(Polynomial::one(f), |acc, _| &acc * &base)
    }

    #[test]
    fn divmod_basic() {
        let f = gf(5, 1);
        let (q, r) = poly(&f, &[4, 0, 1]).divmod(&poly(&f, &[4, 1])).unwrap();
        assert_eq!(q, poly(&f, &[1, 1]));
        assert!(r.is_zero());
        assert_eq!(
            poly(&f, &[1]).divmod(&Polynomial::zero(&f)).unwrap_err(),
            Error::DivisionByZero
        );
        let g = gf(3, 1);
        assert_eq!(
            poly(&f, &[1, 1]).checked_mul(&poly(&g, &[1])).unwrap_err(),
            Error::FieldMismatch
        );
    }

    #[test]
    fn mul_identity_and_square() {
        let f = gf(2, 1);
        let x1 = poly(&f, &[1, 1]);
        assert_eq!(&x1 * &Polynomial::one(&f), x1);
        assert_eq!(&x1 * &x1, poly(&f, &[1, 0, 1]));
        assert_eq!(Polynomial::zero(&f).degree(), None);
    }

    #[test]
    fn digit_tables() {
        assert_eq!(digits(7, 5).digits, vec![2, 1]);
        assert_eq!(digits(0, 3).digits, vec![0]);
        assert_eq!(digits(24, 5).digits, vec![4, 4]);
        assert_eq!(v_weight(7, 5), 6);
        assert_eq!(v_weight(0, 7), 1);
        assert_eq!(v_weight(24, 5), 25);
        assert_eq!(v_weight(10, 5), 3);
    }

    #[test]
    fn lucas() {
        assert_eq!(binom_mod_p(10, 5, 5), 2);
        assert_eq!(binom_mod_p(9, 0, 7), 1);
        assert_eq!(binom_mod_p(2, 1, 2), 0);
        // exhaustive against Pascal's triangle mod p
        for p in [2u64, 3, 5, 7] {
            let mut row = vec![1u64];
            for n in 0..60u64 {
                for (k, &c) in row.iter().enumerate() {
                    assert_eq!(binom_mod_p(n, k as u64, p), c % p, "C({n},{k}) mod {p}");
                }
                let mut next = vec![1u64; row.len() + 1];
                for k in 1..row.len() {
                    next[k] = (row[k - 1] + row[k]) % (p * 1_000_000);
                }
                row = next;
            }
        }
    }

    #[test]
    fn binomial_power_examples() {
        let f5 = gf(5, 1);
        let p = binomial_power(1, &f5.elem(4).unwrap(), 10);
        let mut expect = vec![0; 11];
        expect[0] = 1;
        expect[5] = 2;
        expect[10] = 1;
        assert_eq!(p, poly(&f5, &expect));
        assert_eq!(p.weight(), 3);
        assert_eq!(binomial_power(3, &f5.elem(2).unwrap(), 0), Polynomial::one(&f5));
        let f2 = gf(2, 1);
        assert_eq!(binomial_power(2, &f2.elem(1).unwrap(), 2), poly(&f2, &[1, 0, 0, 0, 1]));
    }

    #[test]
    fn lucas_matches_naive_expansion() {
        for (p, m) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (7, 1)] {
            let f = gf(p, m);
            for mu in [1, f.primitive()] {
                for eta in [1usize, 2] {
                    let mut naive = Polynomial::one(&f);
                    let base = Polynomial::binomial(&f, eta, mu);
                    for t in 0..=64u64 {
                        let lucas = binomial_power_raw(&f, eta, mu, t);
                        assert_eq!(lucas, naive, "GF({p}^{m}) mu={mu} eta={eta} t={t}");
                        assert_eq!(lucas.weight() as u64, v_weight(t, p));
                        naive = &naive * &base;
                    }
                }
            }
        }
        let f = gf(3, 1);
        assert_eq!(naive_power(&f, 1, 2, 4), binomial_power_raw(&f, 1, 2, 4));
    }

    #[test]
    fn factor_examples() {
        let f4 = gf(2, 2);
        let x3_omega = Polynomial::binomial(&f4, 3, 2);
        let fac = factor_over_field(&x3_omega, 1 << 20).unwrap();
        assert!(fac.is_irreducible());
        let f7 = gf(7, 1);
        let x2_1 = poly(&f7, &[1, 0, 1]);
        assert!(factor_over_field(&x2_1, 1 << 20).unwrap().is_irreducible());
        let lin = poly(&f7, &[3, 1]);
        assert_eq!(factor_over_field(&lin, 10).unwrap().factors, vec![(lin.clone(), 1)]);
        // x^4 - 1 over GF(5) splits into four linear factors
        let f5 = gf(5, 1);
        let fac = factor_over_field(&Polynomial::binomial(&f5, 4, 1), 1 << 20).unwrap();
        assert_eq!(fac.factors.len(), 4);
        assert_eq!(fac.expand(&f5), Polynomial::binomial(&f5, 4, 1));
    }

    #[test]
    fn factor_budget() {
        let f = gf(7, 1);
        let g = Polynomial::binomial(&f, 8, 3);
        assert!(matches!(factor_over_field(&g, 10), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn factor_with_multiplicity_and_unit() {
        let f = gf(3, 1);
        // 2 (x+1)^3 (x^2+1)
        let g = poly(&f, &[1, 1]).pow(3);
        let h = &(&g * &poly(&f, &[1, 0, 1])).scale(2) * &Polynomial::one(&f);
        let fac = factor_over_field(&h, 1 << 16).unwrap();
        assert_eq!(fac.unit, 2);
        assert_eq!(fac.factors, vec![(poly(&f, &[1, 1]), 3), (poly(&f, &[1, 0, 1]), 1)]);
        assert_eq!(fac.expand(&f), h);
    }

    #[test]
    fn json_shape() {
        let f = gf(5, 1);
        let p = poly(&f, &[1, 0, 3]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"field":{"p":5,"m":1,"modulus":[0,1]},"coeffs":[1,0,3]}"#);
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
