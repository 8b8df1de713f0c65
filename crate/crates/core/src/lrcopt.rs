//! The Singleton-like bound `d <= n - k - ceil(k/r) + 2`, optimality checks,
//! classification into the ten known optimal families, and enumeration of all
//! optimal codes in a family.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::codes::{code_pair, code_single, CodeSpec, Family};
use crate::distance::{self, LrcProfile};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::irred;

/// `n - k - ceil(k/r) + 2`; may be negative for far-from-optimal parameters.
pub fn singleton_like_bound(n: u64, k: u64, r: u64) -> Result<i64> {
    if k == 0 || k >= n || r == 0 {
        return Err(Error::InvalidParams(format!(
            "Singleton-like bound needs 1 <= k < n and r >= 1 (n={n}, k={k}, r={r})"
        )));
    }
    Ok(n as i64 - k as i64 - k.div_ceil(r) as i64 + 2)
}

/// One of the ten known optimal families, with its free parameter.
///
/// Classes 1-6 are single-root codes `C_i(eta, p^s, lambda0)`, classes 7-10
/// pair-root codes `C_{i,j}(2p^s, lambda0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    /// `p = 2`, `eta = 1`, `i = 2^(s-1) + 1`.
    Class1,
    /// `p` odd, `eta = 1`, `i = p^(s-1) + 1`.
    Class2,
    /// `i = p^(s-ell-1)`.
    Class3 { ell: u32 },
    /// `p` odd, `eta = 1`, `i = 2`.
    Class4,
    /// `s = 1`, `p` odd, `eta = 1`, `i = t`.
    Class5 { t: u64 },
    /// `eta = 1`, `i = p^s - 1` (repetition code).
    Class6,
    /// `(i, j) = (0, p^s)`.
    Class7,
    /// `(i, j) = (0, p^(s-k-1))`.
    Class8 { k: u32 },
    /// `(i, j) = (0, 2)`.
    Class9,
    /// `s = 1`, `(i, j) = (i, p)`.
    Class10 { i: u64 },
}

impl ClassLabel {
    pub fn number(&self) -> u8 {
        match self {
            ClassLabel::Class1 => 1,
            ClassLabel::Class2 => 2,
            ClassLabel::Class3 { .. } => 3,
            ClassLabel::Class4 => 4,
            ClassLabel::Class5 { .. } => 5,
            ClassLabel::Class6 => 6,
            ClassLabel::Class7 => 7,
            ClassLabel::Class8 { .. } => 8,
            ClassLabel::Class9 => 9,
            ClassLabel::Class10 { .. } => 10,
        }
    }

    pub fn parameter(&self) -> Option<(&'static str, u64)> {
        match *self {
            ClassLabel::Class3 { ell } => Some(("ell", u64::from(ell))),
            ClassLabel::Class5 { t } => Some(("t", t)),
            ClassLabel::Class8 { k } => Some(("k", u64::from(k))),
            ClassLabel::Class10 { i } => Some(("i", i)),
            _ => None,
        }
    }

    /// The `(n, k, d, r)` the family promises for the given `p`, `s`, `eta`.
    pub fn table_profile(&self, p: u64, s: u32, eta: u64) -> (u64, u64, u64, u64) {
        let ps = p.pow(s);
        match *self {
            ClassLabel::Class1 => (ps, ps / 2 - 1, 4, 1),
            ClassLabel::Class2 => (ps, ps - ps / p - 1, 3, p - 1),
            ClassLabel::Class3 { ell } => {
                (eta * ps, eta * (ps - p.pow(s - ell - 1)), 2, p.pow(ell + 1) - 1)
            }
            ClassLabel::Class4 => (ps, ps - 2, 2, ps - ps / p - 1),
            ClassLabel::Class5 { t } => (p, p - t, t + 1, p - t),
            ClassLabel::Class6 => (ps, 1, ps, 1),
            ClassLabel::Class7 => (2 * ps, ps, 2, 1),
            ClassLabel::Class8 { k } => (2 * ps, 2 * ps - p.pow(s - k - 1), 2, 2 * p.pow(k + 1) - 1),
            ClassLabel::Class9 => (2 * ps, 2 * ps - 2, 2, 2 * ps - 2 * ps / p - 1),
            ClassLabel::Class10 { i } => (2 * p, p - i, 2 * (i + 1), 1),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Class {}", self.number())?;
        if let Some((name, v)) = self.parameter() {
            write!(f, " ({name}={v})")?;
        }
        Ok(())
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let param = self.parameter();
        let mut map = serializer.serialize_map(Some(1 + usize::from(param.is_some())))?;
        map.serialize_entry("table1_class", &self.number())?;
        if let Some((name, v)) = param {
            map.serialize_entry(name, &v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimalityReport {
    pub profile: LrcProfile,
    pub d_bound: i64,
    pub optimal: bool,
    pub classes: Vec<ClassLabel>,
}

/// Profile, bound and class membership of a code with `0 < k < n`.
pub fn check_optimal(code: &CodeSpec) -> Result<OptimalityReport> {
    let profile = distance::locality(code)?;
    let d_bound = singleton_like_bound(profile.n as u64, profile.k as u64, profile.r)?;
    let optimal = profile.d as i64 == d_bound;
    let classes = classify(code);
    if !classes.is_empty() && !optimal {
        return Err(Error::Inconsistent(format!("{code} matches {classes:?} but is not optimal")));
    }
    Ok(OptimalityReport { profile, d_bound, optimal, classes })
}

/// All family shapes the code matches (possibly none).
pub fn classify(code: &CodeSpec) -> Vec<ClassLabel> {
    let p = code.field().p();
    let s = code.s();
    let ps = code.ps();
    let i = code.i();
    let mut out = Vec::new();
    match code.family() {
        Family::Single { eta, .. } => {
            let unit = eta == 1;
            if unit && p == 2 && s >= 2 && i == ps / 2 + 1 {
                out.push(ClassLabel::Class1);
            }
            if unit && p >= 3 && s >= 2 && i == ps / p + 1 {
                out.push(ClassLabel::Class2);
            }
            if let Some(ell) = (0..s).find(|&ell| i == p.pow(s - ell - 1)) {
                out.push(ClassLabel::Class3 { ell });
            }
            if unit && p >= 3 && s >= 2 && i == 2 {
                out.push(ClassLabel::Class4);
            }
            if unit && p >= 3 && s == 1 && (2..p).contains(&i) {
                out.push(ClassLabel::Class5 { t: i });
            }
            if unit && s >= 2 && i == ps - 1 {
                out.push(ClassLabel::Class6);
            }
        }
        Family::Pair { j, .. } => {
            if p < 3 {
                return out;
            }
            if i == 0 && j == ps {
                out.push(ClassLabel::Class7);
            }
            if s >= 2 && i == 0 {
                if let Some(k) = (0..s).find(|&k| j == p.pow(s - k - 1)) {
                    out.push(ClassLabel::Class8 { k });
                }
            }
            if s >= 2 && i == 0 && j == 2 {
                out.push(ClassLabel::Class9);
            }
            if s == 1 && (1..p).contains(&i) && j == p {
                out.push(ClassLabel::Class10 { i });
            }
        }
    }
    out
}

/// The optimal exponents `i in [1, p^s - 1]` predicted when `x^eta - lambda0`
/// is irreducible, assembled interval by interval.
pub fn predicted_optimal_single(p: u64, s: u32, eta: usize) -> BTreeSet<u64> {
    let ps = p.pow(s);
    let low = ps / p;
    let unit = eta == 1;
    let odd = p >= 3;
    let mut out = BTreeSet::new();

    // [1, p^(s-1) - 1]
    for k in 1..s {
        out.insert(p.pow(s - k - 1));
    }
    if unit && odd && s >= 2 {
        out.insert(2);
    }
    // p^(s-1)
    out.insert(low);
    // [p^(s-1) + 1, p^s - p^(s-1)]
    if unit && odd {
        if s >= 2 {
            out.insert(low + 1);
        } else {
            out.extend(2..p);
        }
    }
    // [p^s - p^(s-1) + 1, p^s - 1]
    if unit && p == 2 && s >= 2 {
        out.insert(ps / 2 + 1);
    }
    if unit && s >= 2 {
        out.insert(ps - 1);
    }
    out
}

/// Every optimal `C_i(eta, p^s, lambda0)`, `1 <= i <= p^s - 1`, by brute scan.
///
/// When `x^eta - lambda0` is irreducible the scan must agree with
/// [`predicted_optimal_single`] and every optimal code must carry a class;
/// disagreement is reported as [`Error::Inconsistent`].
pub fn enumerate_optimal_single(
    field: &FieldSpec,
    eta: usize,
    s: u32,
    lambda0: u32,
) -> Result<Vec<(u64, OptimalityReport)>> {
    let probe = code_single(field, eta, s, lambda0, 0)?;
    let ps = probe.ps();
    let mut found = Vec::new();
    for i in 1..ps {
        let code = code_single(field, eta, s, lambda0, i)?;
        let report = check_optimal(&code)?;
        if report.optimal {
            found.push((i, report));
        }
    }

    if irred::binomial_irreducible(eta as u64, &field.elem(lambda0)?)? {
        let scanned: BTreeSet<u64> = found.iter().map(|(i, _)| *i).collect();
        let predicted = predicted_optimal_single(field.p(), s, eta);
        if scanned != predicted {
            return Err(Error::Inconsistent(format!(
                "scan {scanned:?} differs from prediction {predicted:?} for eta={eta}, s={s} over {field}"
            )));
        }
        if let Some((i, _)) = found.iter().find(|(_, r)| r.classes.is_empty()) {
            return Err(Error::Inconsistent(format!("optimal i={i} carries no class")));
        }
    }
    Ok(found)
}

/// Result of scanning the pair-root family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairEnumeration {
    pub optimal: Vec<((u64, u64), OptimalityReport)>,
    /// Optimal pairs outside the four pair families.
    pub findings: Vec<(u64, u64)>,
}

/// Every optimal `C_{i,j}(2p^s, lambda0)` with `0 <= i < j <= p^s`.
///
/// Class membership is checked for soundness only; optimal pairs outside
/// the known families are listed in `findings`.
pub fn enumerate_optimal_pair(field: &FieldSpec, s: u32, lambda0: u32, budget: u128) -> Result<PairEnumeration> {
    code_pair(field, s, lambda0, 0, 1)?;
    let ps = u128::from(field.p().pow(s));
    let needed = ps * (ps + 1) / 2;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let ps = ps as u64;
    let mut optimal = Vec::new();
    let mut findings = Vec::new();
    for i in 0..ps {
        for j in i + 1..=ps {
            let code = code_pair(field, s, lambda0, i, j)?;
            let report = check_optimal(&code)?;
            if report.optimal {
                if report.classes.is_empty() {
                    findings.push((i, j));
                }
                optimal.push(((i, j), report));
            }
        }
    }
    Ok(PairEnumeration { optimal, findings })
}
