//! Finite fields GF(p^m) with a fixed modulus polynomial.
//!
//! Elements are encoded as integers in `[0, q)`: the residue class
//! `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` is stored as `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`.
//! Multiplication goes through exp/log tables that are built once at
//! construction, so a [`FieldSpec`] is immutable and cheap to clone.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};

/// Default upper bound on the field order.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 20;

/// Fields at or below this order get a full addition table.
const ADD_TABLE_LIMIT: u64 = 256;

struct Tables {
    p: u64,
    m: u32,
    q: u64,
    modulus: Vec<u32>,
    /// Smallest primitive element (by repr).
    generator: u32,
    /// `exp[k] = generator^k`, stored for `k < 2(q-1)` so log sums need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// A finite field GF(p^m). Cloning shares the precomputed tables.
#[derive(Clone)]
pub struct FieldSpec(Arc<Tables>);

/// Serialized form of a field: `{"p": .., "m": .., "modulus": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub m: u32,
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    /// Builds GF(p^m). Without an explicit modulus the lexicographically
    /// smallest monic irreducible of degree `m` is used, comparing
    /// coefficients from the constant term upwards.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        Self::with_bound(p, m, modulus, DEFAULT_MAX_ORDER)
    }

    /// Shorthand for a field with the default modulus.
    pub fn gf(p: u64, m: u32) -> Result<Self> {
        Self::new(p, m, None)
    }

    pub fn with_bound(p: u64, m: u32, modulus: Option<&[u32]>, bound: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidDegree);
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= bound)
            .ok_or(Error::FieldTooLarge { bound })?;

        let modulus = match modulus {
            Some(given) => {
                let ok = given.len() == m as usize + 1
                    && given[m as usize] == 1
                    && given.iter().all(|&c| u64::from(c) < p);
                if !ok {
                    return Err(Error::InvalidModulus { expected: m });
                }
                if m >= 2 && !prime_poly_irreducible(given, p) {
                    return Err(Error::ReducibleModulus);
                }
                given.to_vec()
            }
            None => smallest_irreducible(p, m),
        };

        let neg: Vec<u32> = (0..q as u32).map(|a| digit_neg(a, p)).collect();
        let add = (q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q as u32 {
                for b in 0..q as u32 {
                    t[(u64::from(a) * q + u64::from(b)) as usize] = digit_add(a, b, p);
                }
            }
            t
        });

        let slow = SlowMul { p, m, modulus: &modulus };
        let order = q - 1;
        let prime_divisors: Vec<u64> = arith::factorize(order).into_iter().map(|(r, _)| r).collect();
        let generator = (1..q as u32)
            .find(|&g| {
                prime_divisors
                    .iter()
                    .all(|&r| slow.pow(g, order / r) != 1)
            })
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u32;
        for k in 0..order {
            exp.push(acc);
            log[acc as usize] = k as u32;
            acc = slow.mul(acc, generator);
        }
        for k in 0..order as usize {
            exp.push(exp[k]);
        }

        Ok(FieldSpec(Arc::new(Tables {
            p,
            m,
            q,
            modulus,
            generator,
            exp,
            log,
            neg,
            add,
        })))
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        Self::new(d.p, d.m, Some(&d.modulus))
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p(),
            m: self.m(),
            modulus: self.0.modulus.clone(),
        }
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients, ascending degree.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The smallest primitive element by repr.
    pub fn primitive(&self) -> u32 {
        self.0.generator
    }

    /// Wraps a repr as an element of this field.
    pub fn elem(&self, repr: u32) -> Result<FieldElement> {
        self.check(repr)?;
        Ok(FieldElement { field: self.clone(), repr })
    }

    /// The element `-1`.
    pub fn minus_one(&self) -> u32 {
        self.neg(1)
    }

    /// The image of an integer under `Z -> GF(p)`.
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.p() as i64) as u32
    }

    /// `g^k` for the smallest primitive element `g`.
    pub fn primitive_power(&self, k: u64) -> u32 {
        self.0.exp[(k % (self.q() - 1)) as usize]
    }

    pub fn check(&self, repr: u32) -> Result<()> {
        if u64::from(repr) < self.q() {
            Ok(())
        } else {
            Err(Error::InvalidElement { repr: u64::from(repr), q: self.q() })
        }
    }

    pub fn same_field(&self, other: &FieldSpec) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let t = &*self.0;
        if t.p == 2 {
            return a ^ b;
        }
        if let Some(tab) = &t.add {
            return tab[a as usize * t.q as usize + b as usize];
        }
        if t.m == 1 {
            ((u64::from(a) + u64::from(b)) % t.p) as u32
        } else {
            digit_add(a, b, t.p)
        }
    }

    /// The q×q addition table, when one was built (odd p, q ≤ 256).
    pub(crate) fn add_table(&self) -> Option<&[u32]> {
        if self.0.p == 2 {
            None
        } else {
            self.0.add.as_deref()
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.0;
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &*self.0;
        let order = (t.q - 1) as u32;
        Ok(t.exp[((order - t.log[a as usize]) % order) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `pow(a, 0) = 1` for every `a`.
    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, found by scanning the divisors of `q - 1` upwards.
    pub fn element_order(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroElement);
        }
        Ok(arith::divisors(self.q() - 1)
            .into_iter()
            .find(|&e| self.pow(a, e) == 1)
            .expect("a^(q-1) = 1"))
    }

    pub fn is_primitive(&self, a: u32) -> bool {
        a != 0 && self.element_order(a) == Ok(self.q() - 1)
    }

    /// Euler's criterion: `a^((q-1)/2) = 1`.
    pub fn is_quadratic_residue(&self, a: u32) -> Result<bool> {
        if self.p() == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if a == 0 {
            return Err(Error::ZeroElement);
        }
        Ok(self.pow(a, (self.q() - 1) / 2) == 1)
    }

    /// The square root with the smaller repr, by exhaustive search.
    pub fn square_root(&self, a: u32) -> Result<u32> {
        if !self.is_quadratic_residue(a)? {
            return Err(Error::NonResidue);
        }
        (1..self.q() as u32)
            .find(|&d| self.mul(d, d) == a)
            .ok_or(Error::NonResidue)
    }

    /// The unique `lambda0` with `lambda0^(p^s) = lambda`.
    pub fn ps_root(&self, lambda: u32, s: u32) -> Result<u32> {
        if lambda == 0 {
            return Err(Error::ZeroElement);
        }
        let order = self.q() - 1;
        let ps_mod = arith::pow_mod(self.p(), u64::from(s), order);
        let inv = arith::mod_inverse(ps_mod, order).expect("p is coprime to q - 1");
        Ok(self.pow(lambda, inv))
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; modulus {:?})", self.p(), self.m(), self.modulus())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() == 1 {
            write!(f, "GF({})", self.p())
        } else {
            write!(f, "GF({}^{})", self.p(), self.m())
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.descriptor().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let d = FieldDescriptor::deserialize(deserializer)?;
        FieldSpec::from_descriptor(&d).map_err(serde::de::Error::custom)
    }
}

/// An element bound to its field. Arithmetic operators panic when the
/// operands come from different fields; the `try_*` methods report
/// [`Error::FieldMismatch`] instead.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    repr: u32,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn repr(&self) -> u32 {
        self.repr
    }

    pub fn is_zero(&self) -> bool {
        self.repr == 0
    }

    fn with(&self, repr: u32) -> FieldElement {
        FieldElement { field: self.field.clone(), repr }
    }

    fn binary(&self, other: &FieldElement, op: impl Fn(&FieldSpec, u32, u32) -> u32) -> Result<FieldElement> {
        if !self.field.same_field(&other.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.with(op(&self.field, self.repr, other.repr)))
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.binary(other, FieldSpec::add)
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.binary(other, FieldSpec::sub)
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.binary(other, FieldSpec::mul)
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        if !self.field.same_field(&other.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.with(self.field.div(self.repr, other.repr)?))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with(self.field.inv(self.repr)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(self.repr, e))
    }

    pub fn order(&self) -> Result<u64> {
        self.field.element_order(self.repr)
    }

    pub fn is_primitive(&self) -> bool {
        self.field.is_primitive(self.repr)
    }

    pub fn is_quadratic_residue(&self) -> Result<bool> {
        self.field.is_quadratic_residue(self.repr)
    }

    pub fn square_root(&self) -> Result<FieldElement> {
        Ok(self.with(self.field.square_root(self.repr)?))
    }

    pub fn ps_root(&self, s: u32) -> Result<FieldElement> {
        Ok(self.with(self.field.ps_root(self.repr, s)?))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.repr, self.field)
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u32(self.repr)
    }
}

macro_rules! element_op {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$try(rhs).expect("field element operands from different fields")
            }
        }
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

element_op!(Add, add, try_add);
element_op!(Sub, sub, try_sub);
element_op!(Mul, mul, try_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.field.neg(self.repr))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

fn digit_add(mut a: u32, mut b: u32, p: u64) -> u32 {
    let p = p as u32;
    let (mut out, mut place) = (0u32, 1u32);
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place = place.wrapping_mul(p);
    }
    out
}

fn digit_neg(mut a: u32, p: u64) -> u32 {
    let p = p as u32;
    let (mut out, mut place) = (0u32, 1u32);
    while a > 0 {
        out += ((p - a % p) % p) * place;
        a /= p;
        place = place.wrapping_mul(p);
    }
    out
}

/// Multiplication by explicit polynomial reduction, used to bootstrap the tables.
struct SlowMul<'a> {
    p: u64,
    m: u32,
    modulus: &'a [u32],
}

impl SlowMul<'_> {
    fn unpack(&self, mut a: u32) -> Vec<u64> {
        (0..self.m)
            .map(|_| {
                let d = u64::from(a) % self.p;
                a /= self.p as u32;
                d
            })
            .collect()
    }

    fn pack(&self, digits: &[u64]) -> u32 {
        digits.iter().rev().fold(0u64, |acc, &d| acc * self.p + d) as u32
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (p, m) = (self.p, self.m as usize);
        let (da, db) = (self.unpack(a), self.unpack(b));
        let mut prod = vec![0u64; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (m..2 * m).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            // x^m = -(modulus without its leading term)
            for (k, &mk) in self.modulus[..m].iter().enumerate() {
                let idx = deg - m + k;
                prod[idx] = (prod[idx] + (p - c) * u64::from(mk)) % p;
            }
            prod[deg] = 0;
        }
        self.pack(&prod[..m])
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// Remainder of `f` modulo monic `g` over GF(p), both ascending coefficient lists.
fn prime_poly_rem(f: &[u32], g: &[u32], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = f.iter().map(|&c| u64::from(c)).collect();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = r.pop().expect("nonempty");
        if lead == 0 {
            continue;
        }
        let shift = r.len() - dg;
        for (k, &gk) in g[..dg].iter().enumerate() {
            r[shift + k] = (r[shift + k] + (p - lead) * u64::from(gk) % p) % p;
        }
    }
    r
}

/// Exhaustive divisor search: no monic divisor of degree `1..=deg/2`.
fn prime_poly_irreducible(f: &[u32], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g: Vec<u32> = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                g.push((v % p) as u32);
                v /= p;
            }
            g.push(1);
            if prime_poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `m`, ordering candidates by
/// `(c_0, c_1, ..., c_{m-1})` lexicographically.
fn smallest_irreducible(p: u64, m: u32) -> Vec<u32> {
    let count = p.pow(m);
    for idx in 0..count {
        // c_0 is the most significant digit of idx
        let mut coeffs = vec![0u32; m as usize + 1];
        let mut v = idx;
        for j in (0..m as usize).rev() {
            coeffs[j] = (v % p) as u32;
            v /= p;
        }
        coeffs[m as usize] = 1;
        if m == 1 || prime_poly_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_defaults() {
        let f = FieldSpec::gf(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.q(), 2);
        let f5 = FieldSpec::new(5, 1, Some(&[0, 1])).unwrap();
        assert_eq!(f5.q(), 5);
    }

    #[test]
    fn gf4_modulus_and_omega() {
        let f = FieldSpec::gf(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // omega = class of x = repr 2; omega^2 = omega + 1 = repr 3
        assert_eq!(f.mul(2, 2), 3);
        assert!(f.is_primitive(2));
    }

    #[test]
    fn gf8_lexicographic_choice() {
        // (1,0,1) < (1,1,0) comparing from the constant term
        let f = FieldSpec::gf(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::gf(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            Error::ReducibleModulus
        );
        assert!(matches!(FieldSpec::gf(2, 21), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(
            FieldSpec::new(3, 2, Some(&[1, 0, 2])),
            Err(Error::InvalidModulus { .. })
        ));
        assert_eq!(FieldSpec::gf(3, 0).unwrap_err(), Error::InvalidDegree);
    }

    #[test]
    fn gf5_inverse_and_order() {
        let f = FieldSpec::gf(5, 1).unwrap();
        assert_eq!(f.inv(2).unwrap(), 3);
        assert_eq!(f.inv(0), Err(Error::DivisionByZero));
        assert_eq!(f.element_order(2).unwrap(), 4);
        assert_eq!(f.element_order(1).unwrap(), 1);
        assert_eq!(f.element_order(0), Err(Error::ZeroElement));
        assert!(!f.is_primitive(4));
        assert!(!f.is_primitive(1));
        assert_eq!(f.pow(3, 0), 1);
        assert_eq!(f.pow(0, 0), 1);
    }

    #[test]
    fn gf64_alpha21_has_order_3() {
        let f = FieldSpec::gf(2, 6).unwrap();
        let alpha = f.primitive();
        assert_eq!(f.element_order(f.pow(alpha, 21)).unwrap(), 3);
        assert_eq!(f.element_order(f.pow(alpha, 7)).unwrap(), 9);
    }

    #[test]
    fn residues_mod_7() {
        let f = FieldSpec::gf(7, 1).unwrap();
        assert!(!f.is_quadratic_residue(f.minus_one()).unwrap());
        assert!(f.is_quadratic_residue(1).unwrap());
        assert!(f.is_quadratic_residue(2).unwrap());
        assert_eq!(f.square_root(2).unwrap(), 3);
        assert_eq!(f.square_root(1).unwrap(), 1);
        assert_eq!(f.square_root(3), Err(Error::NonResidue));
        let f2 = FieldSpec::gf(2, 2).unwrap();
        assert_eq!(f2.is_quadratic_residue(1), Err(Error::EvenCharacteristic));
    }

    #[test]
    fn gf9_square_roots() {
        let f = FieldSpec::gf(3, 2).unwrap();
        for a in 1..9 {
            if f.is_quadratic_residue(a).unwrap() {
                let d = f.square_root(a).unwrap();
                assert_eq!(f.mul(d, d), a);
                assert!(d <= f.neg(d));
            }
        }
    }

    #[test]
    fn ps_roots() {
        let f4 = FieldSpec::gf(2, 2).unwrap();
        assert_eq!(f4.ps_root(2, 2).unwrap(), 2);
        let f2 = FieldSpec::gf(2, 1).unwrap();
        assert_eq!(f2.ps_root(1, 5).unwrap(), 1);
        let f5 = FieldSpec::gf(5, 1).unwrap();
        assert_eq!(f5.ps_root(2, 1).unwrap(), 2);
        assert_eq!(f5.ps_root(0, 1), Err(Error::ZeroElement));
    }

    #[test]
    fn element_wrapper() {
        let f = FieldSpec::gf(2, 2).unwrap();
        let g = FieldSpec::gf(3, 1).unwrap();
        let w = f.elem(2).unwrap();
        assert_eq!((&w * &w).repr(), 3);
        assert_eq!(w.try_add(&g.elem(1).unwrap()), Err(Error::FieldMismatch));
        assert!(f.elem(4).is_err());
        assert_eq!(w.inv().unwrap().repr(), 3);
        assert_eq!((-g.elem(1).unwrap()).repr(), 2);
    }

    #[test]
    fn descriptor_json() {
        let f = FieldSpec::gf(3, 2).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"p":3,"m":2,"modulus":[1,0,1]}"#);
        let back: FieldSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
