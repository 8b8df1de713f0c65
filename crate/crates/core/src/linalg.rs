//! Dense linear algebra over a [`FieldSpec`]: row reduction, null spaces and
//! exhaustive enumeration of row spans.

use crate::codes::Matrix;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(field: &FieldSpec, m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                let pivot_row = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(field: &FieldSpec, m: &Matrix) -> usize {
    let mut work = m.clone();
    rref(field, &mut work).len()
}

/// A basis of `{v : m v^T = 0}` for vectors of length `cols`.
pub fn nullspace(field: &FieldSpec, m: &Matrix, cols: usize) -> Matrix {
    let mut work: Matrix = m.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let pivots = rref(field, &mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u32; cols];
            v[fc] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(work[row][fc]);
            }
            v
        })
        .collect()
}

/// `q^rows`, saturating.
pub fn span_size(field: &FieldSpec, rows: usize) -> u128 {
    u128::from(field.q()).checked_pow(rows as u32).unwrap_or(u128::MAX)
}

/// Visits every nonzero vector of the span of `rows` (assumed linearly
/// independent) until `visit` returns `false`.
pub fn for_each_span_vector(
    field: &FieldSpec,
    rows: &Matrix,
    budget: u128,
    mut visit: impl FnMut(&[u32]) -> bool,
) -> Result<()> {
    let needed = span_size(field, rows.len());
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    if rows.is_empty() {
        return Ok(());
    }
    let n = rows[0].len();
    let q = field.q() as u32;
    // multiples[t][c] = c * rows[t]
    let multiples: Vec<Vec<Vec<u32>>> = rows
        .iter()
        .map(|row| (0..q).map(|c| row.iter().map(|&x| field.mul(c, x)).collect()).collect())
        .collect();
    let mut stack: Vec<Vec<u32>> = vec![vec![0u32; n]; rows.len() + 1];
    let mut digits = vec![0u32; rows.len()];
    let k = rows.len();
    // odometer over coefficient vectors; stack[t] holds sum_{u < t} c_u rows[u]
    let mut level = 0;
    loop {
        while level < k {
            let (lo, hi) = stack.split_at_mut(level + 1);
            let src = &lo[level];
            let dst = &mut hi[0];
            let mult = &multiples[level][digits[level] as usize];
            for ((d, &a), &b) in dst.iter_mut().zip(src).zip(mult) {
                *d = field.add(a, b);
            }
            level += 1;
        }
        if digits.iter().any(|&c| c != 0) && !visit(&stack[k]) {
            return Ok(());
        }
        // advance the odometer from the last digit
        let mut t = k;
        loop {
            if t == 0 {
                return Ok(());
            }
            t -= 1;
            digits[t] += 1;
            if digits[t] < q {
                break;
            }
            digits[t] = 0;
        }
        level = t;
    }
}

/// Minimum weight of a nonzero vector in the span, `None` for an empty span.
pub fn span_min_weight(field: &FieldSpec, rows: &Matrix, budget: u128) -> Result<Option<usize>> {
    let mut best: Option<usize> = None;
    for_each_span_vector(field, rows, budget, |v| {
        let w = v.iter().filter(|&&x| x != 0).count();
        if best.is_none_or(|b| w < b) {
            best = Some(w);
        }
        w > 1
    })?;
    Ok(best)
}
