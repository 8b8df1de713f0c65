//! Minimum distance, dual distance and locality of repeated-root
//! constacyclic codes.
//!
//! Every distance is computed twice, once as a minimum of `V_t` over the
//! relevant range of `t` and once from the leading base-p digit of `p^s - i`,
//! and the two are asserted equal. The minimizing exponent also yields an
//! explicit codeword of minimum weight.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::codes::{CodeSpec, Codeword, Family, Matrix};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg;
use crate::polyring::{binomial_power_raw, v_weight, Polynomial};

/// A minimum distance together with a codeword attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceWitness {
    pub d: u64,
    /// Digit length of `p^s - e` for the exponent `e` that attains the minimum.
    pub nu: u32,
    /// Leading digit of `p^s - e`.
    pub tau: u64,
    /// Smallest `t` minimizing the weight expression.
    pub t_star: u64,
    /// Code polynomial of weight `d`.
    pub witness: Polynomial,
}

/// `(n, k, d, d_dual, r)` of a code with nontrivial locality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrcProfile {
    pub n: usize,
    pub k: usize,
    pub d: u64,
    pub d_dual: u64,
    pub r: u64,
}

/// Digit length `nu` and leading digit `tau` of `p^s - i`, by integer arithmetic.
pub fn nu_tau(p: u64, s: u32, i: u64) -> Result<(u32, u64)> {
    let ps = p.pow(s);
    if i >= ps {
        return Err(Error::ExponentOutOfRange { value: i, max: ps.saturating_sub(1) });
    }
    let mut x = ps - i;
    let mut nu = 0u32;
    let mut tau = 0u64;
    while x > 0 {
        tau = x;
        x /= p;
        nu += 1;
    }
    Ok((nu, tau))
}

/// `(p - tau + 1) p^(s - nu)` for `1 <= i < p^s`, `1` for `i = 0`, and
/// `None` (no nonzero word) for `i = p^s`.
pub fn closed_form_single(p: u64, s: u32, i: u64) -> Option<u64> {
    let ps = p.pow(s);
    if i >= ps {
        return None;
    }
    if i == 0 {
        return Some(1);
    }
    let (nu, tau) = nu_tau(p, s, i).expect("i < p^s");
    Some((p - tau + 1) * p.pow(s - nu))
}

/// Smallest `V_t` over `lo <= t < hi` and the smallest `t` attaining it.
pub fn v_min(p: u64, lo: u64, hi: u64) -> Option<(u64, u64)> {
    (lo..hi).fold(None, |best, t| {
        let v = v_weight(t, p);
        match best {
            Some((bv, _)) if bv <= v => best,
            _ => Some((v, t)),
        }
    })
}

/// Distance of a single-root code `C_i(eta, p^s, lambda0)`.
pub fn min_distance_single(code: &CodeSpec) -> Result<DistanceWitness> {
    let Family::Single { eta, lambda0 } = code.family() else {
        return Err(Error::InvalidParams("expected a single-root code".into()));
    };
    let p = code.field().p();
    let (s, i, ps) = (code.s(), code.i(), code.ps());
    if i >= ps {
        return Err(Error::ZeroCode);
    }
    let (d, t_star) = v_min(p, i, ps).expect("nonempty range");
    let closed = closed_form_single(p, s, i).expect("i < p^s");
    assert_eq!(d, closed, "V-minimum and digit closed form disagree for {code}");
    let (nu, tau) = nu_tau(p, s, i)?;
    Ok(DistanceWitness {
        d,
        nu,
        tau,
        t_star,
        witness: binomial_power_raw(code.field(), eta, lambda0, t_star),
    })
}

/// Distance of a pair-root code `C_{i,j}(2p^s, lambda0)`.
///
/// Words `(x - delta)^t (x + delta)^(p^s)` with `i <= t < j` have weight
/// `2 V_t`; words `(x^2 - lambda0)^t` with `j <= t` have weight `V_t`.
pub fn min_distance_pair(code: &CodeSpec) -> Result<DistanceWitness> {
    let Family::Pair { delta, j } = code.family() else {
        return Err(Error::InvalidParams("expected a pair-root code".into()));
    };
    let field = code.field();
    let p = field.p();
    let (s, i, ps) = (code.s(), code.i(), code.ps());
    if i >= ps {
        return Err(Error::ZeroCode);
    }
    let doubled = v_min(p, i, j).map(|(v, t)| (2 * v, t));
    let plain = v_min(p, j, ps);
    let (d, t_star, from_doubled) = match (doubled, plain) {
        (Some((a, ta)), Some((b, _))) if a <= b => (a, ta, true),
        (Some((a, ta)), None) => (a, ta, true),
        (_, Some((b, tb))) => (b, tb, false),
        (None, None) => unreachable!("i < j <= p^s leaves a nonempty range"),
    };

    let closed = [
        closed_form_single(p, s, i).map(|v| 2 * v),
        closed_form_single(p, s, j),
    ]
    .into_iter()
    .flatten()
    .min()
    .expect("i < p^s");
    assert_eq!(d, closed, "V-minimum and digit closed form disagree for {code}");

    let (witness, (nu, tau)) = if from_doubled {
        let left = binomial_power_raw(field, 1, delta, t_star);
        let right = binomial_power_raw(field, 1, field.neg(delta), ps);
        (&left * &right, nu_tau(p, s, i)?)
    } else {
        let lambda0 = field.mul(delta, delta);
        (binomial_power_raw(field, 2, lambda0, t_star), nu_tau(p, s, j)?)
    };
    Ok(DistanceWitness { d, nu, tau, t_star, witness })
}

/// Dispatches on the code family.
pub fn min_distance(code: &CodeSpec) -> Result<DistanceWitness> {
    match code.family() {
        Family::Single { .. } => min_distance_single(code),
        Family::Pair { .. } => min_distance_pair(code),
    }
}

/// General repeated-root distance from a factorization of `x^eta - lambda0`.
///
/// `multiplicities` lists each monic irreducible factor `m` with its
/// exponent `e` in the generator `prod m^e`. The distance is
/// `min V_t * d(Cbar_t)` where `Cbar_t` is the length-`eta` code generated by
/// the factors with `e > t`; zero codes are skipped. The simple-root
/// distances are found by enumeration, bounded by `budget` words each.
pub fn massey_distance(
    field: &FieldSpec,
    eta: usize,
    s: u32,
    lambda0: u32,
    multiplicities: &[(Polynomial, u64)],
    budget: u128,
) -> Result<u64> {
    let p = field.p();
    let ps = p.pow(s);
    let product = multiplicities
        .iter()
        .fold(Polynomial::one(field), |acc, (m, _)| &acc * m);
    let all_monic = multiplicities.iter().all(|(m, _)| m.is_monic() && m.degree() >= Some(1));
    if !all_monic || product != Polynomial::binomial(field, eta, lambda0) {
        return Err(Error::IncompleteFactorization);
    }
    if let Some(&(_, e)) = multiplicities.iter().find(|(_, e)| *e > ps) {
        return Err(Error::ExponentOutOfRange { value: e, max: ps });
    }

    let mut cache: HashMap<Vec<bool>, Option<u64>> = HashMap::new();
    let mut best: Option<u64> = None;
    for t in 0..ps {
        let key: Vec<bool> = multiplicities.iter().map(|(_, e)| *e > t).collect();
        let dbar = match cache.get(&key) {
            Some(&v) => v,
            None => {
                let v = simple_root_distance(field, eta, multiplicities, &key, budget)?;
                cache.insert(key, v);
                v
            }
        };
        if let Some(dbar) = dbar {
            let cand = v_weight(t, p) * dbar;
            best = Some(best.map_or(cand, |b| b.min(cand)));
        }
    }
    best.ok_or(Error::ZeroCode)
}

/// Distance of the length-`eta` code generated by the selected factors, `None` for the zero code.
fn simple_root_distance(
    field: &FieldSpec,
    eta: usize,
    factors: &[(Polynomial, u64)],
    selected: &[bool],
    budget: u128,
) -> Result<Option<u64>> {
    let g = factors
        .iter()
        .zip(selected)
        .filter(|(_, &sel)| sel)
        .fold(Polynomial::one(field), |acc, ((m, _), _)| &acc * m);
    let deg = g.degree().expect("nonzero");
    if deg == eta {
        return Ok(None);
    }
    let rows: Matrix = (0..eta - deg).map(|t| g.shift(t).to_vector(eta)).collect();
    Ok(linalg::span_min_weight(field, &rows, budget)?.map(|w| w as u64))
}

/// Full profile; requires `0 < k < n`.
pub fn locality(code: &CodeSpec) -> Result<LrcProfile> {
    if code.k() == 0 || code.k() == code.n() {
        return Err(Error::DegenerateCode { n: code.n(), k: code.k() });
    }
    let d = min_distance(code)?.d;
    let d_dual = min_distance(&code.dual())?.d;
    Ok(LrcProfile { n: code.n(), k: code.k(), d, d_dual, r: d_dual - 1 })
}

/// A word of the dual code with weight `d_dual`.
pub fn min_weight_dual_word(code: &CodeSpec) -> Result<Codeword> {
    let dual = code.dual();
    if dual.is_zero_code() {
        return Err(Error::DegenerateCode { n: code.n(), k: code.k() });
    }
    let w = min_distance(&dual)?;
    Ok(Codeword::from_parts_unchecked(dual.clone(), w.witness.to_vector(dual.n())))
}
