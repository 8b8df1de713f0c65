//! Irreducibility of binomials `x^eta - a` over GF(q).
//!
//! `x^eta - a` (eta >= 2) is irreducible iff every prime factor of eta
//! divides the order `e` of `a` but not `(q - 1)/e`, and `q = 1 mod 4`
//! whenever `4 | eta`. The certificate re-expresses this through the prime
//! factorization of `q - 1`, which makes the admissible `eta` enumerable.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, BTreeSet};

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::FieldElement;

/// Allowed exponent of 2 in an admissible `eta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum E0Rule {
    /// `q - 1 = 0 mod 4`: any exponent.
    Free,
    /// `q - 1 = 2 mod 4`: exponent 0 or 1.
    ZeroOrOne,
    /// `q` even: exponent 0.
    Zero,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IrreducibilityCertificate {
    pub a: FieldElement,
    /// Multiplicative order of `a`.
    pub e: u64,
    /// `(p_i, l_i)` with `p_0 = 2` always first (possibly `l_0 = 0`).
    pub q_minus_1_factorization: Vec<(u64, u32)>,
    /// Indices `i` with `p_i^{l_i} | e`.
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub e0_rule: E0Rule,
}

impl IrreducibilityCertificate {
    /// Primes that may appear in an admissible `eta`, with their exponent cap.
    pub fn allowed_primes(&self) -> Vec<(u64, Option<u32>)> {
        self.s
            .iter()
            .filter_map(|&idx| {
                let (prime, ell) = self.q_minus_1_factorization[idx];
                if ell == 0 {
                    return None;
                }
                if idx != 0 {
                    return Some((prime, None));
                }
                match self.e0_rule {
                    E0Rule::Free => Some((2, None)),
                    E0Rule::ZeroOrOne => Some((2, Some(1))),
                    E0Rule::Zero => None,
                }
            })
            .collect()
    }
}

/// Decides whether `x^eta - a` is irreducible; `eta = 1` always is.
pub fn binomial_irreducible(eta: u64, a: &FieldElement) -> Result<bool> {
    if eta == 0 {
        return Err(Error::InvalidParams("eta must be at least 1".into()));
    }
    let e = a.order()?;
    if eta == 1 {
        return Ok(true);
    }
    let q = a.field().q();
    let cofactor = (q - 1) / e;
    let primes_ok = arith::factorize(eta)
        .iter()
        .all(|&(r, _)| e % r == 0 && !cofactor.is_multiple_of(r));
    let four_ok = !eta.is_multiple_of(4) || q % 4 == 1;
    Ok(primes_ok && four_ok)
}

pub fn certificate(a: &FieldElement) -> Result<IrreducibilityCertificate> {
    let e = a.order()?;
    let q_minus_1 = a.field().q() - 1;
    let mut factorization = arith::factorize(q_minus_1);
    if factorization.first().map(|f| f.0) != Some(2) {
        factorization.insert(0, (2, 0));
    }
    let s = factorization
        .iter()
        .enumerate()
        .filter(|(_, &(prime, ell))| e % prime.pow(ell) == 0)
        .map(|(idx, _)| idx)
        .collect();
    let e0_rule = match q_minus_1 % 4 {
        0 => E0Rule::Free,
        2 => E0Rule::ZeroOrOne,
        _ => E0Rule::Zero,
    };
    Ok(IrreducibilityCertificate { a: a.clone(), e, q_minus_1_factorization: factorization, s, e0_rule })
}

/// Largest accepted `max_eta`; keeps the cross-assertion affordable.
pub const MAX_ETA_LIMIT: u64 = 1 << 20;

/// All `eta <= max_eta` with `x^eta - a` irreducible, ascending.
///
/// Products of the allowed primes are generated smallest-first from a heap;
/// the result is then checked against [`binomial_irreducible`] for every
/// `eta <= max_eta`.
pub fn admissible_eta(a: &FieldElement, max_eta: u64) -> Result<Vec<u64>> {
    if max_eta == 0 || max_eta > MAX_ETA_LIMIT {
        return Err(Error::InvalidParams(format!("max eta must lie in [1, {MAX_ETA_LIMIT}]")));
    }
    let cert = certificate(a)?;
    let primes = cert.allowed_primes();

    let mut out = Vec::new();
    let mut seen = BTreeSet::from([1u64]);
    let mut heap = BinaryHeap::from([Reverse(1u64)]);
    while let Some(Reverse(eta)) = heap.pop() {
        out.push(eta);
        for &(prime, cap) in &primes {
            let Some(next) = eta.checked_mul(prime).filter(|&v| v <= max_eta) else {
                continue;
            };
            if let Some(cap) = cap {
                if multiplicity(next, prime) > cap {
                    continue;
                }
            }
            if seen.insert(next) {
                heap.push(Reverse(next));
            }
        }
    }

    let listed: BTreeSet<u64> = out.iter().copied().collect();
    for eta in 1..=max_eta {
        if binomial_irreducible(eta, a)? != listed.contains(&eta) {
            return Err(Error::Inconsistent(format!(
                "admissible eta generator disagrees with the irreducibility criterion at eta = {eta}"
            )));
        }
    }
    Ok(out)
}

fn multiplicity(mut n: u64, prime: u64) -> u32 {
    let mut k = 0;
    while n.is_multiple_of(prime) {
        n /= prime;
        k += 1;
    }
    k
}
