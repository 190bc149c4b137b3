//! Smith normal form over the integers with checked 64-bit arithmetic.

use crate::error::{Error, Result};

/// Free rank and invariant factors `d₁ | d₂ | …` (all ≥ 2) of a finitely
/// generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub rank: usize,
    pub invariant_factors: Vec<u64>,
}

fn overflow(op: &str) -> Error {
    Error::Overflow(format!("Smith normal form reduction: {op}"))
}

/// Extended gcd: `(g, x, y)` with `a·x + b·y = g ≥ 0`.
fn ext_gcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    let narrow = |v: i128| i64::try_from(v).map_err(|_| overflow("gcd coefficients"));
    Ok((narrow(old_r)?, narrow(old_s)?, narrow(old_t)?))
}

fn lin(a: i64, x: i64, b: i64, y: i64) -> Result<i64> {
    a.checked_mul(x)
        .zip(b.checked_mul(y))
        .and_then(|(u, v)| u.checked_add(v))
        .ok_or_else(|| overflow("row/column combination"))
}

struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    fn at(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    /// Replaces rows `(r1, r2)` by `(a·r1 + b·r2, c·r1 + d·r2)`.
    fn combine_rows(&mut self, r1: usize, r2: usize, [a, b, c, d]: [i64; 4]) -> Result<()> {
        for j in 0..self.cols {
            let (x, y) = (self.at(r1, j), self.at(r2, j));
            self.set(r1, j, lin(a, x, b, y)?);
            self.set(r2, j, lin(c, x, d, y)?);
        }
        Ok(())
    }

    fn combine_cols(&mut self, c1: usize, c2: usize, [a, b, c, d]: [i64; 4]) -> Result<()> {
        for i in 0..self.rows {
            let (x, y) = (self.at(i, c1), self.at(i, c2));
            self.set(i, c1, lin(a, x, b, y)?);
            self.set(i, c2, lin(c, x, d, y)?);
        }
        Ok(())
    }
}

/// Unimodular 2×2 step that puts `gcd(x, y)` first and zero second.
///
/// Plain elimination when `x | y`, so the pivot never changes without shrinking.
fn gcd_step(x: i64, y: i64) -> Result<[i64; 4]> {
    if y % x == 0 {
        return Ok([1, 0, -(y / x), 1]);
    }
    let (g, s, t) = ext_gcd(x, y)?;
    Ok([s, t, -(y / g), x / g])
}

/// Classifies `ℤ^generators / ⟨columns of relations⟩`.
///
/// `relations` is given row by row and must have `generators` rows of equal length.
pub fn smith_normal_form(relations: &[Vec<i64>], generators: usize) -> Result<Classification> {
    if relations.len() != generators {
        return Err(Error::Validity(format!(
            "presentation has {} rows for {generators} generators",
            relations.len()
        )));
    }
    let cols = relations.first().map_or(0, Vec::len);
    if relations.iter().any(|r| r.len() != cols) {
        return Err(Error::Validity("ragged presentation matrix".to_string()));
    }
    let mut m = Matrix {
        rows: generators,
        cols,
        data: relations.iter().flatten().copied().collect(),
    };

    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < m.rows && t < m.cols {
        // pivot: smallest nonzero absolute value in the trailing block
        let pivot = (t..m.rows)
            .flat_map(|i| (t..m.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m.at(i, j) != 0)
            .min_by_key(|&(i, j)| m.at(i, j).unsigned_abs());
        let Some((pi, pj)) = pivot else { break };
        if pi != t {
            m.combine_rows(t, pi, [0, 1, 1, 0])?;
        }
        if pj != t {
            m.combine_cols(t, pj, [0, 1, 1, 0])?;
        }
        loop {
            let mut changed = false;
            for i in t + 1..m.rows {
                let x = m.at(i, t);
                if x != 0 {
                    m.combine_rows(t, i, gcd_step(m.at(t, t), x)?)?;
                    changed = true;
                }
            }
            for j in t + 1..m.cols {
                let y = m.at(t, j);
                if y != 0 {
                    m.combine_cols(t, j, gcd_step(m.at(t, t), y)?)?;
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // the pivot must divide the rest of the block
            let p = m.at(t, t);
            let bad = (t + 1..m.rows)
                .flat_map(|i| (t + 1..m.cols).map(move |j| (i, j)))
                .find(|&(i, j)| m.at(i, j) % p != 0);
            match bad {
                Some((i, _)) => m.combine_rows(t, i, [1, 1, 0, 1])?,
                None => break,
            }
        }
        diagonal.push(m.at(t, t).unsigned_abs());
        t += 1;
    }

    // each pivot divides the block after it, so the diagonal is a divisor chain
    Ok(Classification {
        rank: generators - diagonal.len(),
        invariant_factors: diagonal.into_iter().filter(|&d| d != 1).collect(),
    })
}
