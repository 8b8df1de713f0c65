//! Systematic encoding and single-erasure local repair.
//!
//! Repair reads the `r = d_dual - 1` symbols in the support of a shifted
//! minimum-weight dual codeword, which is known in closed form.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::codes::{is_codeword, shift_vector, CodeSpec, Codeword};
use crate::gf::FieldSpec;
use crate::distance;
use crate::error::{Error, Result};
use crate::polyring::Polynomial;

/// `c(x) = x^(n-k) u(x) - (x^(n-k) u(x) mod g(x))`; the message occupies
/// positions `n-k..n`.
pub fn encode(code: &CodeSpec, message: &[u32]) -> Result<Codeword> {
    check_message(code, message)?;
    let field = code.field();
    let shifted = Polynomial::from_coeffs(field, message.to_vec()).shift(code.n() - code.k());
    let parity = shifted.rem(code.generator())?;
    let c = &shifted - &parity;
    Ok(Codeword::from_parts_unchecked(code.clone(), c.to_vector(code.n())))
}

fn check_message(code: &CodeSpec, message: &[u32]) -> Result<()> {
    if code.k() == 0 {
        return Err(Error::DegenerateCode { n: code.n(), k: 0 });
    }
    if message.len() != code.k() {
        return Err(Error::LengthMismatch { expected: code.k(), got: message.len() });
    }
    message.iter().try_for_each(|&u| code.field().check(u))
}

/// Largest lookup table (in entries) the fast paths may precompute.
const TABLE_LIMIT: usize = 1 << 22;

/// Systematic encoder reusing precomputed division tables.
#[derive(Debug, Clone)]
pub struct SystematicEncoder {
    code: CodeSpec,
    divider: Option<Divider>,
}

impl SystematicEncoder {
    pub fn new(code: &CodeSpec) -> Result<Self> {
        if code.k() == 0 {
            return Err(Error::DegenerateCode { n: code.n(), k: 0 });
        }
        Ok(Self { code: code.clone(), divider: Divider::new(code) })
    }

    pub fn code(&self) -> &CodeSpec {
        &self.code
    }

    pub fn encode(&self, message: &[u32]) -> Result<Codeword> {
        let Some(divider) = &self.divider else {
            return encode(&self.code, message);
        };
        check_message(&self.code, message)?;
        let field = self.code.field();
        let nk = self.code.n() - self.code.k();
        let mut c = vec![0u32; self.code.n()];
        c[nk..].copy_from_slice(message);
        divider.reduce(field, &mut c);
        for x in &mut c[..nk] {
            *x = field.neg(*x);
        }
        c[nk..].copy_from_slice(message);
        Ok(Codeword::from_parts_unchecked(self.code.clone(), c))
    }
}

/// Division by the (monic, typically sparse) generator with precomputed
/// multiples of its nonzero coefficients.
#[derive(Debug, Clone)]
struct Divider {
    degree: usize,
    /// Exponents `j < degree` with `g_j != 0`.
    offsets: Vec<usize>,
    /// `neg_multiples[c * offsets.len() + idx] = -c * g_{offsets[idx]}`.
    neg_multiples: Vec<u32>,
}

impl Divider {
    fn new(code: &CodeSpec) -> Option<Self> {
        let field = code.field();
        let g = code.generator();
        let degree = g.degree()?;
        if !g.is_monic() {
            return None;
        }
        let offsets: Vec<usize> = (0..degree).filter(|&j| g.coeff(j) != 0).collect();
        let q = field.q() as usize;
        if q.saturating_mul(offsets.len()) > TABLE_LIMIT {
            return None;
        }
        let mut neg_multiples = Vec::with_capacity(q * offsets.len());
        for c in 0..q as u32 {
            neg_multiples.extend(offsets.iter().map(|&j| field.neg(field.mul(c, g.coeff(j)))));
        }
        Some(Self { degree, offsets, neg_multiples })
    }

    /// Reduces `word` modulo `g` in place; the remainder is left in `word[..degree]`.
    fn reduce(&self, field: &FieldSpec, word: &mut [u32]) {
        let width = self.offsets.len();
        for top in (self.degree..word.len()).rev() {
            let c = word[top] as usize;
            if c == 0 {
                continue;
            }
            word[top] = 0;
            let base = top - self.degree;
            let row = &self.neg_multiples[c * width..(c + 1) * width];
            let pairs = self.offsets.iter().zip(row);
            if field.p() == 2 {
                pairs.for_each(|(&j, &r)| word[base + j] ^= r);
            } else if let Some(tab) = field.add_table() {
                let q = field.q() as usize;
                pairs.for_each(|(&j, &r)| word[base + j] = tab[word[base + j] as usize * q + r as usize]);
            } else {
                pairs.for_each(|(&j, &r)| word[base + j] = field.add(word[base + j], r));
            }
        }
    }

    fn divides(&self, field: &FieldSpec, word: &[u32]) -> bool {
        let mut rem = word.to_vec();
        self.reduce(field, &mut rem);
        rem[..self.degree.min(rem.len())].iter().all(|&x| x == 0)
    }
}

/// How to recompute one erased symbol from its helpers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepairPlan {
    pub erased_index: usize,
    pub helper_indices: Vec<usize>,
    /// Dual-word coefficient at each helper.
    pub coefficients: BTreeMap<usize, u32>,
    /// Inverse of the dual-word coefficient at the erased position.
    pub scale: u32,
    /// Number of dual-code shifts applied to the minimum-weight word.
    pub shift: usize,
}

impl RepairPlan {
    /// `-scale * sum_h coefficients[h] * word[h]`; only helper positions are read.
    pub fn recover(&self, code: &CodeSpec, word: &[Option<u32>]) -> Result<u32> {
        let field = code.field();
        let mut acc = 0u32;
        for (&h, &w) in &self.coefficients {
            let v = word[h].ok_or(Error::TooManyErasures(2))?;
            acc = field.add(acc, field.mul(w, v));
        }
        Ok(field.neg(field.mul(self.scale, acc)))
    }
}

/// Plan for `erased_index`, shifting the minimum-weight dual word the fewest
/// times needed to cover it.
pub fn repair_plan(code: &CodeSpec, erased_index: usize) -> Result<RepairPlan> {
    let n = code.n();
    if code.k() == 0 || code.k() == n {
        return Err(Error::DegenerateCode { n, k: code.k() });
    }
    if erased_index >= n {
        return Err(Error::ExponentOutOfRange { value: erased_index as u64, max: n as u64 - 1 });
    }
    let word = distance::min_weight_dual_word(code)?;
    let lambda = word.code().lambda();
    Ok(plan_from_dual_word(code.field(), lambda, word.coeffs(), erased_index))
}

/// Shifts `word` (a codeword of the dual, whose constant is `dual_lambda`)
/// until its support covers `erased_index`.
fn plan_from_dual_word(field: &FieldSpec, dual_lambda: u32, word: &[u32], erased_index: usize) -> RepairPlan {
    let n = word.len();
    let shift = word
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(s, _)| (erased_index + n - s) % n)
        .min()
        .expect("dual word is nonzero");
    let mut w = word.to_vec();
    for _ in 0..shift {
        w = shift_vector(field, dual_lambda, &w);
    }
    let scale = field.inv(w[erased_index]).expect("erased position is in the support");
    let coefficients: BTreeMap<usize, u32> = w
        .iter()
        .enumerate()
        .filter(|&(h, &c)| c != 0 && h != erased_index)
        .map(|(h, &c)| (h, c))
        .collect();
    RepairPlan {
        erased_index,
        helper_indices: coefficients.keys().copied().collect(),
        coefficients,
        scale,
        shift,
    }
}

/// Fills the single erasure (`None`) in `received`.
pub fn repair(code: &CodeSpec, received: &[Option<u32>]) -> Result<Codeword> {
    let plan = match find_erasure(code, received)? {
        Some(e) => Some(repair_plan(code, e)?),
        None => None,
    };
    apply(code, plan.as_ref(), None, received)
}

fn find_erasure(code: &CodeSpec, received: &[Option<u32>]) -> Result<Option<usize>> {
    if received.len() != code.n() {
        return Err(Error::LengthMismatch { expected: code.n(), got: received.len() });
    }
    for v in received.iter().flatten() {
        code.field().check(*v)?;
    }
    let erased: Vec<usize> = received
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_none())
        .map(|(i, _)| i)
        .collect();
    if erased.len() > 1 {
        return Err(Error::TooManyErasures(erased.len()));
    }
    Ok(erased.first().copied())
}

fn apply(
    code: &CodeSpec,
    plan: Option<&RepairPlan>,
    divider: Option<&Divider>,
    received: &[Option<u32>],
) -> Result<Codeword> {
    let mut word: Vec<u32> = received.iter().map(|v| v.unwrap_or(0)).collect();
    if let Some(plan) = plan {
        word[plan.erased_index] = plan.recover(code, received)?;
    }
    let member = match divider {
        Some(d) => d.divides(code.field(), &word),
        None => is_codeword(code, &word)?,
    };
    if !member {
        return Err(Error::InconsistentWord);
    }
    Ok(Codeword::from_parts_unchecked(code.clone(), word))
}

/// Repairs many words of one code, caching a plan per erased index.
#[derive(Debug, Clone)]
pub struct Repairer {
    code: CodeSpec,
    dual_word: Vec<u32>,
    dual_lambda: u32,
    plans: Vec<Option<RepairPlan>>,
    divider: Option<Divider>,
}

impl Repairer {
    pub fn new(code: &CodeSpec) -> Result<Self> {
        if code.k() == 0 || code.k() == code.n() {
            return Err(Error::DegenerateCode { n: code.n(), k: code.k() });
        }
        let word = distance::min_weight_dual_word(code)?;
        Ok(Self {
            code: code.clone(),
            dual_lambda: word.code().lambda(),
            dual_word: word.into_coeffs(),
            plans: vec![None; code.n()],
            divider: Divider::new(code),
        })
    }

    pub fn plan(&mut self, erased_index: usize) -> Result<&RepairPlan> {
        if self.plans.get(erased_index).is_some_and(Option::is_none) {
            let plan = plan_from_dual_word(self.code.field(), self.dual_lambda, &self.dual_word, erased_index);
            self.plans[erased_index] = Some(plan);
        }
        self.plans
            .get(erased_index)
            .and_then(Option::as_ref)
            .ok_or(Error::ExponentOutOfRange { value: erased_index as u64, max: self.code.n() as u64 - 1 })
    }

    pub fn repair(&mut self, received: &[Option<u32>]) -> Result<Codeword> {
        let code = self.code.clone();
        match find_erasure(&code, received)? {
            Some(e) => {
                self.plan(e)?;
                let plan = self.plans[e].as_ref().expect("plan cached");
                apply(&code, Some(plan), self.divider.as_ref(), received)
            }
            None => apply(&code, None, self.divider.as_ref(), received),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{code_pair, code_single};
    use crate::gf::FieldSpec;
    use rand::{Rng, SeedableRng};

    #[test]
    fn encode_examples() {
        let f = FieldSpec::gf(5, 1).unwrap();
        let c = code_single(&f, 1, 1, 1, 1).unwrap();
        assert_eq!(encode(&c, &[1, 0, 0, 0]).unwrap().coeffs(), &[4, 1, 0, 0, 0]);
        assert_eq!(encode(&c, &[0; 4]).unwrap().weight(), 0);
        assert!(matches!(encode(&c, &[1, 0]), Err(Error::LengthMismatch { .. })));
        let zero = code_single(&f, 1, 1, 1, 5).unwrap();
        assert!(matches!(encode(&zero, &[]), Err(Error::DegenerateCode { .. })));
    }

    #[test]
    fn plan_examples() {
        let f = FieldSpec::gf(5, 1).unwrap();
        let c = code_single(&f, 1, 1, 1, 1).unwrap();
        let plan = repair_plan(&c, 2).unwrap();
        assert_eq!(plan.helper_indices, vec![0, 1, 3, 4]);
        let plan = repair_plan(&c, 0).unwrap();
        assert_eq!(plan.shift, 0);

        let f4 = FieldSpec::gf(2, 2).unwrap();
        let c = code_single(&f4, 3, 4, 2, 8).unwrap();
        for e in 0..48 {
            assert_eq!(repair_plan(&c, e).unwrap().helper_indices.len(), 1);
        }
    }

    #[test]
    fn round_trips() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let f7 = FieldSpec::gf(7, 1).unwrap();
        let f9 = FieldSpec::gf(3, 2).unwrap();
        let codes = [
            code_single(&f7, 1, 2, 3, 8).unwrap(),
            code_single(&f9, 2, 1, f9.primitive(), 1).unwrap(),
            code_pair(&f7, 1, 2, 1, 5).unwrap(),
        ];
        for code in &codes {
            let enc = SystematicEncoder::new(code).unwrap();
            let mut rep = Repairer::new(code).unwrap();
            let r = distance::locality(code).unwrap().r as usize;
            for _ in 0..200 {
                let u: Vec<u32> = (0..code.k()).map(|_| rng.gen_range(0..f7.q() as u32)).collect();
                let u: Vec<u32> = u.into_iter().map(|x| x % code.field().q() as u32).collect();
                let c = enc.encode(&u).unwrap();
                assert_eq!(c, encode(code, &u).unwrap());
                assert!(is_codeword(code, c.coeffs()).unwrap());
                let e = rng.gen_range(0..code.n());
                let mut received: Vec<Option<u32>> = c.coeffs().iter().copied().map(Some).collect();
                received[e] = None;
                assert_eq!(rep.plan(e).unwrap().helper_indices.len(), r);
                assert_eq!(rep.repair(&received).unwrap(), c);
                assert_eq!(repair(code, &received).unwrap(), c);
            }
        }
    }

    #[test]
    fn repair_errors() {
        let f = FieldSpec::gf(5, 1).unwrap();
        let c = code_single(&f, 1, 1, 1, 1).unwrap();
        assert_eq!(
            repair(&c, &[None, None, Some(0), Some(0), Some(0)]).unwrap_err(),
            Error::TooManyErasures(2)
        );
        // words of <x - 1> have coordinate sum zero
        let ok = repair(&c, &[None, Some(1), Some(1), Some(1), Some(1)]).unwrap();
        assert_eq!(ok.coeffs(), &[1, 1, 1, 1, 1]);
        let c2 = code_single(&f, 1, 1, 1, 2).unwrap();
        let bad = [None, Some(1), Some(0), Some(0), Some(0)];
        assert_eq!(repair(&c2, &bad).unwrap_err(), Error::InconsistentWord);
        assert_eq!(Repairer::new(&c2).unwrap().repair(&bad).unwrap_err(), Error::InconsistentWord);
    }
}
