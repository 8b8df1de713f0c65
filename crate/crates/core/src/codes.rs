//! Repeated-root constacyclic codes.
//!
//! Two families are modelled:
//!
//! * single-root codes `C_i(eta, p^s, lambda0) = <(x^eta - lambda0)^i>` of
//!   length `eta * p^s`, with `gcd(eta, p) = 1`;
//! * pair-root codes `C_{i,j}(2p^s, lambda0) = <(x - delta)^i (x + delta)^j>`
//!   of length `2 p^s`, where `delta^2 = lambda0` and `i < j`.
//!
//! Both live in `GF(q)[x] / <x^n - lambda>` with `lambda = lambda0^(p^s)`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf::{FieldDescriptor, FieldSpec};
use crate::polyring::{binomial_power_raw, Polynomial};

/// Row-major matrix of field element reprs.
pub type Matrix = Vec<Vec<u32>>;

/// Which generator shape a code has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Generator `(x^eta - lambda0)^i`.
    Single { eta: usize, lambda0: u32 },
    /// Generator `(x - delta)^i (x + delta)^j`, `i < j`.
    Pair { delta: u32, j: u64 },
}

struct Inner {
    field: FieldSpec,
    family: Family,
    s: u32,
    i: u64,
    ps: u64,
    n: usize,
    k: usize,
    lambda: u32,
    generator: Polynomial,
}

/// An immutable constacyclic code descriptor; cloning is cheap.
#[derive(Clone)]
pub struct CodeSpec(Arc<Inner>);

fn prime_power(p: u64, s: u32) -> Result<u64> {
    if s == 0 {
        return Err(Error::InvalidParams("s must be positive".into()));
    }
    p.checked_pow(s)
        .filter(|&ps| ps <= 1 << 24)
        .ok_or_else(|| Error::InvalidParams(format!("p^s too large for p={p}, s={s}")))
}

/// Builds `C_i(eta, p^s, lambda0)`.
pub fn code_single(field: &FieldSpec, eta: usize, s: u32, lambda0: u32, i: u64) -> Result<CodeSpec> {
    let p = field.p();
    field.check(lambda0)?;
    if lambda0 == 0 {
        return Err(Error::ZeroElement);
    }
    if eta == 0 || crate::arith::gcd(eta as u64, p) != 1 {
        return Err(Error::EtaNotCoprime { eta: eta as u64, p });
    }
    let ps = prime_power(p, s)?;
    if i > ps {
        return Err(Error::ExponentOutOfRange { value: i, max: ps });
    }
    let n = eta * ps as usize;
    let generator = binomial_power_raw(field, eta, lambda0, i);
    let lambda = field.pow(lambda0, ps);
    Ok(CodeSpec(Arc::new(Inner {
        field: field.clone(),
        family: Family::Single { eta, lambda0 },
        s,
        i,
        ps,
        n,
        k: n - eta * i as usize,
        lambda,
        generator,
    })))
}

/// Builds `C_{i,j}(2p^s, lambda0)` with `delta` the canonical square root of
/// `lambda0`. `i > j` is normalized by swapping and negating `delta`; `i = j`
/// yields the single-root code `C_i(2, p^s, lambda0)`.
pub fn code_pair(field: &FieldSpec, s: u32, lambda0: u32, i: u64, j: u64) -> Result<CodeSpec> {
    field.check(lambda0)?;
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if lambda0 == 0 {
        return Err(Error::ZeroElement);
    }
    if !field.is_quadratic_residue(lambda0)? {
        return Err(Error::NonResidueLambda);
    }
    let delta = field.square_root(lambda0)?;
    code_pair_with_root(field, s, delta, i, j)
}

/// As [`code_pair`] but with an explicit root `delta`.
pub fn code_pair_with_root(field: &FieldSpec, s: u32, delta: u32, i: u64, j: u64) -> Result<CodeSpec> {
    field.check(delta)?;
    let p = field.p();
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if delta == 0 {
        return Err(Error::ZeroElement);
    }
    let ps = prime_power(p, s)?;
    for v in [i, j] {
        if v > ps {
            return Err(Error::ExponentOutOfRange { value: v, max: ps });
        }
    }
    let lambda0 = field.mul(delta, delta);
    if i == j {
        return code_single(field, 2, s, lambda0, i);
    }
    let (delta, i, j) = if i > j { (field.neg(delta), j, i) } else { (delta, i, j) };
    let generator = &binomial_power_raw(field, 1, delta, i) * &binomial_power_raw(field, 1, field.neg(delta), j);
    let n = 2 * ps as usize;
    Ok(CodeSpec(Arc::new(Inner {
        field: field.clone(),
        family: Family::Pair { delta, j },
        s,
        i,
        ps,
        n,
        k: n - (i + j) as usize,
        lambda: field.pow(lambda0, ps),
        generator,
    })))
}

impl CodeSpec {
    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn family(&self) -> Family {
        self.0.family
    }

    pub fn is_pair(&self) -> bool {
        matches!(self.0.family, Family::Pair { .. })
    }

    /// `eta` for single-root codes, `2` for pair-root codes.
    pub fn eta(&self) -> usize {
        match self.0.family {
            Family::Single { eta, .. } => eta,
            Family::Pair { .. } => 2,
        }
    }

    pub fn s(&self) -> u32 {
        self.0.s
    }

    /// `p^s`
    pub fn ps(&self) -> u64 {
        self.0.ps
    }

    pub fn i(&self) -> u64 {
        self.0.i
    }

    /// Second exponent of a pair-root code.
    pub fn j(&self) -> Option<u64> {
        match self.0.family {
            Family::Pair { j, .. } => Some(j),
            Family::Single { .. } => None,
        }
    }

    pub fn lambda0(&self) -> u32 {
        match self.0.family {
            Family::Single { lambda0, .. } => lambda0,
            Family::Pair { delta, .. } => self.0.field.mul(delta, delta),
        }
    }

    pub fn delta(&self) -> Option<u32> {
        match self.0.family {
            Family::Pair { delta, .. } => Some(delta),
            Family::Single { .. } => None,
        }
    }

    /// The shift constant `lambda` of the ambient ring `GF(q)[x]/<x^n - lambda>`.
    pub fn lambda(&self) -> u32 {
        self.0.lambda
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn k(&self) -> usize {
        self.0.k
    }

    pub fn generator(&self) -> &Polynomial {
        &self.0.generator
    }

    /// `x^n - lambda`
    pub fn ambient_modulus(&self) -> Polynomial {
        Polynomial::binomial(self.field(), self.n(), self.lambda())
    }

    pub fn is_zero_code(&self) -> bool {
        self.k() == 0
    }

    pub fn is_full_space(&self) -> bool {
        self.k() == self.n()
    }

    /// Closed-form dual: `C_i(eta, p^s, l0)` maps to `C_{p^s-i}(eta, p^s, l0^-1)` and
    /// `C_{i,j}` with root `delta` maps to `C_{p^s-j, p^s-i}` with root `-delta^-1`.
    pub fn dual(&self) -> CodeSpec {
        let f = self.field();
        let ps = self.ps();
        match self.family() {
            Family::Single { eta, lambda0 } => {
                let inv = f.inv(lambda0).expect("lambda0 is nonzero");
                code_single(f, eta, self.s(), inv, ps - self.i()).expect("dual parameters are valid")
            }
            Family::Pair { delta, j } => {
                let root = f.neg(f.inv(delta).expect("delta is nonzero"));
                code_pair_with_root(f, self.s(), root, ps - j, ps - self.i())
                    .expect("dual parameters are valid")
            }
        }
    }

    /// Same code parameters (family, exponents, roots).
    pub fn same_code(&self, other: &CodeSpec) -> bool {
        self.field() == other.field()
            && self.family() == other.family()
            && self.s() == other.s()
            && self.i() == other.i()
    }

    /// Wraps `coeffs` as a codeword after checking membership.
    pub fn codeword(&self, coeffs: Vec<u32>) -> Result<Codeword> {
        if !is_codeword(self, &coeffs)? {
            return Err(Error::InconsistentWord);
        }
        Ok(Codeword { code: self.clone(), coeffs })
    }

    /// The codeword whose code polynomial is `poly` (reduced into length `n`).
    pub fn codeword_from_poly(&self, poly: &Polynomial) -> Result<Codeword> {
        let reduced = poly.rem(&self.ambient_modulus())?;
        self.codeword(reduced.to_vector(self.n()))
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        let (kind, j, delta) = match self.family() {
            Family::Single { .. } => ("single", None, None),
            Family::Pair { delta, j } => {
                let canonical = self.field().square_root(self.lambda0()).ok();
                ("pair", Some(j), (canonical != Some(delta)).then_some(delta))
            }
        };
        CodeDescriptor {
            field: self.field().descriptor(),
            kind: kind.to_string(),
            eta: self.eta(),
            s: self.s(),
            lambda0: self.lambda0(),
            i: self.i(),
            j,
            delta,
        }
    }

    pub fn from_descriptor(d: &CodeDescriptor) -> Result<CodeSpec> {
        let field = FieldSpec::from_descriptor(&d.field)?;
        match d.kind.as_str() {
            "single" => code_single(&field, d.eta, d.s, d.lambda0, d.i),
            "pair" => {
                let j = d.j.ok_or_else(|| Error::InvalidParams("pair code requires j".into()))?;
                match d.delta {
                    Some(delta) => {
                        if field.mul(delta, delta) != d.lambda0 {
                            return Err(Error::InvalidParams("delta^2 != lambda0".into()));
                        }
                        code_pair_with_root(&field, d.s, delta, d.i, j)
                    }
                    None => code_pair(&field, d.s, d.lambda0, d.i, j),
                }
            }
            other => Err(Error::InvalidParams(format!("unknown code kind `{other}`"))),
        }
    }
}

impl PartialEq for CodeSpec {
    fn eq(&self, other: &Self) -> bool {
        self.same_code(other)
    }
}

impl Eq for CodeSpec {}

impl fmt::Debug for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family() {
            Family::Single { eta, lambda0 } => write!(
                f,
                "C_{}({}, {}^{}, {}) over {}",
                self.i(),
                eta,
                self.field().p(),
                self.s(),
                lambda0,
                self.field()
            ),
            Family::Pair { delta, j } => write!(
                f,
                "C_{{{},{}}}(2*{}^{}, delta={}) over {}",
                self.i(),
                j,
                self.field().p(),
                self.s(),
                delta,
                self.field()
            ),
        }
    }
}

/// JSON form of a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub field: FieldDescriptor,
    pub kind: String,
    pub eta: usize,
    pub s: u32,
    pub lambda0: u32,
    pub i: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<u64>,
    /// Explicit pair root when it differs from the canonical square root.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<u32>,
}

impl Serialize for CodeSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.descriptor().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CodeSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let d = CodeDescriptor::deserialize(deserializer)?;
        CodeSpec::from_descriptor(&d).map_err(serde::de::Error::custom)
    }
}

/// A word of a specific code.
#[derive(Clone, PartialEq, Eq)]
pub struct Codeword {
    code: CodeSpec,
    coeffs: Vec<u32>,
}

impl Codeword {
    pub fn code(&self) -> &CodeSpec {
        &self.code
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// Indices of nonzero symbols.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(idx, _)| idx)
            .collect()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(self.code.field(), self.coeffs.clone())
    }

    pub(crate) fn from_parts_unchecked(code: CodeSpec, coeffs: Vec<u32>) -> Self {
        Codeword { code, coeffs }
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// `(c_0, ..., c_{n-1}) -> (lambda c_{n-1}, c_0, ..., c_{n-2})`
pub fn constacyclic_shift(c: &Codeword) -> Codeword {
    let coeffs = shift_vector(c.code.field(), c.code.lambda(), &c.coeffs);
    Codeword { code: c.code.clone(), coeffs }
}

pub(crate) fn shift_vector(field: &FieldSpec, lambda: u32, v: &[u32]) -> Vec<u32> {
    let n = v.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    out.push(field.mul(lambda, v[n - 1]));
    out.extend_from_slice(&v[..n - 1]);
    out
}

/// Membership: the generator divides the code polynomial.
pub fn is_codeword(code: &CodeSpec, vector: &[u32]) -> Result<bool> {
    if vector.len() != code.n() {
        return Err(Error::LengthMismatch { expected: code.n(), got: vector.len() });
    }
    for &c in vector {
        code.field().check(c)?;
    }
    if code.is_zero_code() {
        return Ok(vector.iter().all(|&c| c == 0));
    }
    let poly = Polynomial::from_coeffs(code.field(), vector.to_vec());
    Ok(poly.rem(code.generator())?.is_zero())
}

/// Rows `x^t g(x)` for `t = 0..k`.
pub fn generator_matrix(code: &CodeSpec) -> Result<Matrix> {
    if code.k() == 0 {
        return Err(Error::DegenerateCode { n: code.n(), k: code.k() });
    }
    let g = code.generator().coeffs();
    Ok((0..code.k())
        .map(|t| {
            let mut row = vec![0u32; code.n()];
            row[t..t + g.len()].copy_from_slice(g);
            row
        })
        .collect())
}

/// Generator matrix of the dual code.
pub fn parity_check_matrix(code: &CodeSpec) -> Result<Matrix> {
    if code.k() == code.n() {
        return Err(Error::DegenerateCode { n: code.n(), k: code.k() });
    }
    generator_matrix(&code.dual())
}

/// `a . b` over the field.
pub fn inner_product(field: &FieldSpec, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

/// `A B^T`
pub fn mul_transpose(field: &FieldSpec, a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .map(|ra| b.iter().map(|rb| inner_product(field, ra, rb)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, m: u32) -> FieldSpec {
        FieldSpec::gf(p, m).unwrap()
    }

    #[test]
    fn negacyclic_length_25() {
        let f = gf(5, 1);
        let c = code_single(&f, 1, 2, f.minus_one(), 8).unwrap();
        assert_eq!((c.n(), c.k()), (25, 17));
        assert_eq!(c.generator(), &Polynomial::new(&f, vec![1, 1]).unwrap().pow(8));
        assert_eq!(c.lambda(), f.minus_one());
        let full = code_single(&f, 1, 2, 4, 0).unwrap();
        assert!(full.is_full_space());
        assert_eq!(full.generator(), &Polynomial::one(&f));
    }

    #[test]
    fn length_48_over_gf4() {
        let f = gf(2, 2);
        let c = code_single(&f, 3, 4, 2, 8).unwrap();
        assert_eq!((c.n(), c.k()), (48, 24));
    }

    #[test]
    fn construction_errors() {
        let f = gf(5, 1);
        assert!(matches!(code_single(&f, 5, 1, 1, 0), Err(Error::EtaNotCoprime { .. })));
        assert!(matches!(code_single(&f, 1, 1, 1, 6), Err(Error::ExponentOutOfRange { .. })));
        assert_eq!(code_single(&f, 1, 1, 0, 1).unwrap_err(), Error::ZeroElement);
        assert_eq!(code_pair(&f, 1, 2, 0, 1).unwrap_err(), Error::NonResidueLambda);
        assert_eq!(code_pair(&gf(2, 2), 1, 1, 0, 1).unwrap_err(), Error::EvenCharacteristic);
        assert!(matches!(code_pair(&f, 1, 1, 0, 6), Err(Error::ExponentOutOfRange { .. })));
    }

    #[test]
    fn pair_codes() {
        let f = gf(5, 1);
        let c = code_pair(&f, 1, 1, 0, 5).unwrap();
        assert_eq!((c.n(), c.k()), (10, 5));
        let f7 = gf(7, 1);
        let c = code_pair(&f7, 1, 2, 1, 7).unwrap();
        assert_eq!(c.delta(), Some(3));
        assert_eq!((c.n(), c.k()), (14, 6));
        let full = code_pair(&f7, 1, 2, 0, 0).unwrap();
        assert!(!full.is_pair());
        assert!(full.is_full_space());
    }

    #[test]
    fn pair_normalization() {
        let f = gf(7, 1);
        let a = code_pair(&f, 1, 2, 5, 2).unwrap();
        assert_eq!((a.i(), a.j()), (2, Some(5)));
        assert_eq!(a.delta(), Some(4));
        let b = code_pair_with_root(&f, 1, 4, 2, 5).unwrap();
        assert_eq!(a.generator(), b.generator());
        let diag = code_pair(&f, 1, 2, 3, 3).unwrap();
        assert_eq!(diag.family(), Family::Single { eta: 2, lambda0: 2 });
        assert_eq!(diag.k(), 14 - 6);
    }

    #[test]
    fn shift_wraps_with_lambda() {
        let f = gf(5, 1);
        let c = code_single(&f, 1, 1, f.minus_one(), 0).unwrap();
        let mut w = Codeword::from_parts_unchecked(c.clone(), vec![1, 0, 0, 0, 0]);
        let start = w.clone();
        w = constacyclic_shift(&w);
        assert_eq!(w.coeffs(), &[0, 1, 0, 0, 0]);
        for _ in 1..5 {
            w = constacyclic_shift(&w);
        }
        assert_eq!(w.coeffs(), &[4, 0, 0, 0, 0]);
        assert_ne!(w, start);
        let z = Codeword::from_parts_unchecked(c, vec![0; 5]);
        assert_eq!(constacyclic_shift(&z), z);
    }

    #[test]
    fn membership() {
        let f = gf(5, 1);
        let c = code_single(&f, 1, 2, f.minus_one(), 8).unwrap();
        assert!(is_codeword(&c, &c.generator().to_vector(25)).unwrap());
        assert!(is_codeword(&c, &[0; 25]).unwrap());
        let mut w = vec![0u32; 25];
        w[0] = 1;
        w[3] = 2;
        assert!(!is_codeword(&c, &w).unwrap());
        assert!(matches!(is_codeword(&c, &[0; 3]), Err(Error::LengthMismatch { .. })));
        let g = c.codeword(c.generator().to_vector(25)).unwrap();
        assert!(is_codeword(&c, constacyclic_shift(&g).coeffs()).unwrap());
    }

    #[test]
    fn duals() {
        let f = gf(5, 1);
        let c = code_single(&f, 1, 2, f.minus_one(), 8).unwrap();
        let d = c.dual();
        assert_eq!(d.family(), Family::Single { eta: 1, lambda0: 4 });
        assert_eq!(d.i(), 17);
        assert_eq!(d.dual(), c);
        assert!(code_single(&f, 1, 2, 4, 0).unwrap().dual().is_zero_code());
        let p = code_pair(&f, 1, 1, 0, 5).unwrap();
        let pd = p.dual();
        assert_eq!((pd.i(), pd.j()), (0, Some(5)));
        assert_eq!(pd.dual(), p);
    }

    #[test]
    fn generator_and_parity_matrices() {
        let f = gf(5, 1);
        let c = code_single(&f, 1, 1, 1, 1).unwrap();
        let g = generator_matrix(&c).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g[0], vec![4, 1, 0, 0, 0]);
        assert_eq!(g[3], vec![0, 0, 0, 4, 1]);
        let h = parity_check_matrix(&c).unwrap();
        assert_eq!(h, vec![vec![1, 1, 1, 1, 1]]);
        assert!(mul_transpose(&f, &g, &h).iter().flatten().all(|&x| x == 0));
        let full = code_single(&f, 1, 1, 1, 0).unwrap();
        let id = generator_matrix(&full).unwrap();
        for (r, row) in id.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                assert_eq!(v, u32::from(r == c));
            }
        }
        assert!(matches!(parity_check_matrix(&full), Err(Error::DegenerateCode { .. })));
        let zero = code_single(&f, 1, 1, 1, 5).unwrap();
        assert!(matches!(generator_matrix(&zero), Err(Error::DegenerateCode { .. })));
    }

    #[test]
    fn descriptor_roundtrip() {
        let f = gf(7, 1);
        let c = code_pair(&f, 1, 2, 5, 2).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains(r#""kind":"pair""#));
        let back: CodeSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        let s = code_single(&gf(2, 2), 3, 4, 2, 8).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"field":{"p":2,"m":2,"modulus":[1,1,1]},"kind":"single","eta":3,"s":4,"lambda0":2,"i":8}"#
        );
    }
}
