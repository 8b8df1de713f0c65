//! Brute-force ground truth for the closed forms.
//!
//! Nothing here consults the closed-form distance or dual formulas: distances
//! come from enumerating codewords, the dual comes from a null-space
//! computation, and irreducibility from polynomial arithmetic alone.

use serde::Serialize;

use crate::codes::{self, code_pair, code_single, CodeSpec, Matrix};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::linalg;
use crate::polyring::{factor_over_field, Polynomial};

/// Default enumeration budget (`2^20` words).
pub const DEFAULT_BUDGET: u128 = 1 << 20;

fn generator_rows(code: &CodeSpec) -> Matrix {
    if code.k() == 0 {
        Vec::new()
    } else {
        codes::generator_matrix(code).expect("k > 0")
    }
}

/// Basis of the dual code as the null space of the generator matrix.
pub fn dual_basis(code: &CodeSpec) -> Matrix {
    linalg::nullspace(code.field(), &generator_rows(code), code.n())
}

/// Minimum weight over all nonzero codewords.
pub fn exhaustive_min_distance(code: &CodeSpec, budget: u128) -> Result<u64> {
    linalg::span_min_weight(code.field(), &generator_rows(code), budget)?
        .map(|w| w as u64)
        .ok_or(Error::ZeroCode)
}

/// Minimum weight over all nonzero words of the null-space dual.
pub fn exhaustive_dual_distance(code: &CodeSpec, budget: u128) -> Result<u64> {
    linalg::span_min_weight(code.field(), &dual_basis(code), budget)?
        .map(|w| w as u64)
        .ok_or(Error::DegenerateCode { n: code.n(), k: code.k() })
}

/// Locality of every coordinate: one less than the lightest dual word
/// whose support contains it.
pub fn exhaustive_localities(code: &CodeSpec, budget: u128) -> Result<Vec<u64>> {
    let n = code.n();
    let mut best = vec![usize::MAX; n];
    linalg::for_each_span_vector(code.field(), &dual_basis(code), budget, |v| {
        let w = v.iter().filter(|&&x| x != 0).count();
        for (b, &x) in best.iter_mut().zip(v) {
            if x != 0 && w < *b {
                *b = w;
            }
        }
        true
    })?;
    if best.contains(&usize::MAX) {
        return Err(Error::DegenerateCode { n, k: code.k() });
    }
    Ok(best.into_iter().map(|w| w as u64 - 1).collect())
}

pub fn exhaustive_locality(code: &CodeSpec, index: usize, budget: u128) -> Result<u64> {
    if index >= code.n() {
        return Err(Error::ExponentOutOfRange { value: index as u64, max: code.n() as u64 - 1 });
    }
    Ok(exhaustive_localities(code, budget)?[index])
}

/// `G H^T = 0`, `rank G + rank H = n` for the closed-form dual `H`, the
/// dual generator equals the monic reciprocal of the check polynomial, and
/// dualizing twice returns the code.
pub fn verify_duality(code: &CodeSpec) -> bool {
    let field = code.field();
    let dual = code.dual();
    let g = generator_rows(code);
    let h = generator_rows(&dual);
    let orthogonal = codes::mul_transpose(field, &g, &h).iter().flatten().all(|&x| x == 0);
    let ranks = linalg::rank(field, &g) + linalg::rank(field, &h) == code.n();

    let Ok((check, rem)) = code.ambient_modulus().divmod(code.generator()) else {
        return false;
    };
    let reciprocal = check.reciprocal().monic().1;
    let generic = rem.is_zero() && reciprocal == *dual.generator();

    orthogonal && ranks && generic && dual.dual().same_code(code)
}

/// Irreducibility of `x^eta - a` from polynomial arithmetic only.
///
/// Uses exhaustive trial division when the number of candidate divisors
/// fits in `budget`, and the Ben-Or test otherwise.
pub fn verify_irreducible(eta: usize, a: &FieldElement, budget: u128) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    if eta == 0 {
        return Err(Error::InvalidParams("eta must be at least 1".into()));
    }
    let f = Polynomial::binomial(a.field(), eta, a.repr());
    if trial_division_cost(a.field().q(), eta) <= budget {
        let fac = factor_over_field(&f, budget)?;
        Ok(fac.is_irreducible())
    } else {
        ben_or_irreducible(&f)
    }
}

/// `sum_{d=1}^{eta/2} q^d`, saturating.
pub fn trial_division_cost(q: u64, eta: usize) -> u128 {
    let mut total = 0u128;
    let mut term = 1u128;
    for _ in 1..=eta / 2 {
        term = term.saturating_mul(u128::from(q));
        total = total.saturating_add(term);
    }
    total
}

/// Ben-Or: a polynomial `f` of degree `n` is irreducible iff
/// `gcd(f, x^(q^d) - x) = 1` for every `1 <= d <= n/2`.
pub fn ben_or_irreducible(f: &Polynomial) -> Result<bool> {
    let field = f.field();
    let n = f.degree().ok_or(Error::InvalidParams("zero polynomial".into()))?;
    if n == 0 {
        return Ok(false);
    }
    let f = f.monic().1;
    let x = Polynomial::monomial(field, 1, 1);
    let mut power = x.clone();
    for _ in 1..=n / 2 {
        power = power.pow_mod(u128::from(field.q()), &f)?;
        let g = f.gcd(&(&power - &x))?;
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The fixed sample of up to three `lambda0` per field: the first distinct
/// values among `1, g, -1, g^2, g^3, ...` for the smallest primitive `g`.
pub fn lambda_sample(field: &FieldSpec) -> Vec<u32> {
    let g = field.primitive();
    let mut seq = vec![1, g, field.minus_one()];
    seq.extend((2..field.q()).map(|k| field.pow(g, k)));
    let mut out: Vec<u32> = Vec::new();
    for v in seq {
        if !out.contains(&v) {
            out.push(v);
        }
        if out.len() == 3 {
            break;
        }
    }
    out
}

/// Parameters of the verification grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub primes: Vec<u64>,
    pub degrees: Vec<u32>,
    pub s_values: Vec<u32>,
    pub etas: Vec<usize>,
}

impl Default for Grid {
    fn default() -> Self {
        Self { primes: vec![2, 3, 5, 7], degrees: vec![1, 2], s_values: vec![1, 2], etas: vec![1, 2, 3] }
    }
}

impl Grid {
    pub fn fields(&self) -> Vec<FieldSpec> {
        let mut out = Vec::new();
        for &p in &self.primes {
            for &m in &self.degrees {
                out.push(FieldSpec::gf(p, m).expect("grid fields are small"));
            }
        }
        out
    }

    /// Every nonzero single-root code `C_i`, `0 <= i < p^s`, with `eta`
    /// coprime to `p`, and every pair-root code `C_{i,j}`, `0 <= i < j <= p^s`,
    /// for the sampled `lambda0` that are quadratic residues (odd `p`).
    pub fn codes(&self) -> Vec<CodeSpec> {
        let mut out = Vec::new();
        for field in self.fields() {
            let p = field.p();
            let sample = lambda_sample(&field);
            for &s in &self.s_values {
                let ps = p.pow(s);
                for &lambda0 in &sample {
                    for &eta in &self.etas {
                        if (eta as u64).is_multiple_of(p) {
                            continue;
                        }
                        for i in 0..ps {
                            out.push(code_single(&field, eta, s, lambda0, i).expect("grid code"));
                        }
                    }
                    if p == 2 || !field.is_quadratic_residue(lambda0).unwrap_or(false) {
                        continue;
                    }
                    for i in 0..ps {
                        for j in i + 1..=ps {
                            out.push(code_pair(&field, s, lambda0, i, j).expect("grid code"));
                        }
                    }
                }
            }
        }
        out
    }

    /// `(eta, lambda0)` instances of the single-root family over each field.
    pub fn single_instances(&self) -> Vec<(FieldSpec, usize, u32, u32)> {
        let mut out = Vec::new();
        for field in self.fields() {
            let sample = lambda_sample(&field);
            for &s in &self.s_values {
                for &lambda0 in &sample {
                    for &eta in &self.etas {
                        if !(eta as u64).is_multiple_of(field.p()) {
                            out.push((field.clone(), eta, s, lambda0));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Which oracle comparison to run over a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Distance,
    Dual,
    Locality,
    Duality,
    Irreducible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub subject: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: Check,
    pub rows: Vec<CheckRow>,
    /// Instances outside the enumeration budget.
    pub out_of_budget: usize,
}

impl CheckReport {
    pub fn mismatches(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass).count()
    }
}

fn row(subject: String, expected: impl ToString, observed: impl ToString) -> CheckRow {
    let (expected, observed) = (expected.to_string(), observed.to_string());
    CheckRow { pass: expected == observed, subject, expected, observed }
}

/// Compares closed forms against the oracles over `grid`. Instances whose
/// enumeration exceeds `budget` words are counted, not compared.
pub fn run_check(check: Check, grid: &Grid, budget: u128) -> Result<CheckReport> {
    use crate::distance;
    let mut rows = Vec::new();
    let mut out_of_budget = 0;
    let q_dim = |code: &CodeSpec, dim: usize| linalg::span_size(code.field(), dim);

    match check {
        Check::Irreducible => {
            for field in grid.fields() {
                for a in 1..field.q() as u32 {
                    let elem = field.elem(a)?;
                    for eta in 1..=12usize {
                        let closed = crate::irred::binomial_irreducible(eta as u64, &elem)?;
                        let oracle = verify_irreducible(eta, &elem, budget)?;
                        rows.push(row(format!("{field} x^{eta} - {a}"), closed, oracle));
                    }
                }
            }
        }
        _ => {
            for code in grid.codes() {
                let subject = code.to_string();
                match check {
                    Check::Distance => {
                        if q_dim(&code, code.k()) > budget {
                            out_of_budget += 1;
                            continue;
                        }
                        let closed = distance::min_distance(&code)?.d;
                        rows.push(row(subject, closed, exhaustive_min_distance(&code, budget)?));
                    }
                    Check::Dual => {
                        if code.k() == code.n() {
                            continue;
                        }
                        if q_dim(&code, code.n() - code.k()) > budget {
                            out_of_budget += 1;
                            continue;
                        }
                        let closed = distance::min_distance(&code.dual())?.d;
                        rows.push(row(subject, closed, exhaustive_dual_distance(&code, budget)?));
                    }
                    Check::Locality => {
                        if code.k() == code.n() {
                            continue;
                        }
                        if q_dim(&code, code.n() - code.k()) > budget {
                            out_of_budget += 1;
                            continue;
                        }
                        let r = distance::min_distance(&code.dual())?.d - 1;
                        let observed = exhaustive_localities(&code, budget)?;
                        let bad = observed.iter().position(|&x| x != r);
                        let shown = match bad {
                            Some(idx) => format!("{} at index {idx}", observed[idx]),
                            None => r.to_string(),
                        };
                        rows.push(row(subject, r, shown));
                    }
                    Check::Duality => rows.push(row(subject, true, verify_duality(&code))),
                    Check::Irreducible => unreachable!(),
                }
            }
        }
    }
    Ok(CheckReport { check, rows, out_of_budget })
}
