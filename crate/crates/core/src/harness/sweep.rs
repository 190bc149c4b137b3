//! Exhaustive check of the two inequalities that close the case analysis for
//! Boltyanskii compacta containing a codimension-one cube.
//!
//! For a base `Y` with `dim Y = 2` and a fiber `F` with `d_F ≥ n − 2`:
//!
//! * (a) if `d_Y` is not full-valued then `n − 1 ≰ d_Y + (n − 3)`;
//! * (b) `dim(d_Y ⊞ d_F) ≥ n`.
//!
//! Both are checked over every uniform dimension type with bases `≤ bound`.

use serde::Serialize;

use crate::decorated::{Decoration, DecoratedNumber};
use crate::dimtype::DimensionType;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SweepCheck {
    /// `n − 1 ≤ d_Y + (n − 3)` held for a non-full-valued `d_Y`.
    NotFullValuedBound,
    /// `dim(d_Y ⊞ d_F) < n`.
    ProductDimension,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: SweepCheck,
    pub base_type: String,
    pub fiber_type: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: u64,
    pub bound: u64,
    pub base_candidates: usize,
    pub non_full_valued_bases: usize,
    pub fiber_candidates: usize,
    pub checks: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "cube sweep n={} bound={}\n  base types (dim 2): {} ({} not full-valued)\n  fiber types (>= C({})): {}\n  checks: {}\n",
            self.n,
            self.bound,
            self.base_candidates,
            self.non_full_valued_bases,
            self.n - 2,
            self.fiber_candidates,
            self.checks
        );
        for c in &self.counterexamples {
            out.push_str(&format!(
                "  counterexample {:?}: d_Y = {}{}\n",
                c.check,
                c.base_type,
                c.fiber_type
                    .as_ref()
                    .map(|f| format!(", d_F = {f}"))
                    .unwrap_or_default()
            ));
        }
        out.push_str(if self.passed() {
            "result: pass (no counterexamples)\n"
        } else {
            "result: FAIL\n"
        });
        out
    }
}

/// Every valid exception-free dimension type with `q` and base in `0..=bound`,
/// in order of `(q, base, decoration)`.
pub fn uniform_types(bound: u64) -> Vec<DimensionType> {
    let mut out = Vec::new();
    for q in 0..=bound {
        for base in 0..=bound {
            for deco in [Decoration::Minus, Decoration::None, Decoration::Plus] {
                let Ok(entry) = DecoratedNumber::new(base, deco) else {
                    continue;
                };
                if let Ok(d) = DimensionType::uniform(q, entry) {
                    out.push(d);
                }
            }
        }
    }
    out
}

pub fn cube_theorem_sweep(n: u64, bound: u64) -> Result<SweepReport> {
    if n < 4 {
        return Err(Error::Validity(format!("cube sweep needs n >= 4, got {n}")));
    }
    if bound < n {
        return Err(Error::Validity(format!(
            "cube sweep needs bound >= n, got bound {bound} < {n}"
        )));
    }
    let grid = uniform_types(bound);
    let bases: Vec<&DimensionType> = grid.iter().filter(|d| d.dim() == ExtNat::Finite(2)).collect();
    let fiber_floor = DimensionType::constant(n - 2);
    let fibers: Vec<&DimensionType> = grid.iter().filter(|d| fiber_floor.leq(d)).collect();
    let target = DimensionType::constant(n - 1);

    let mut report = SweepReport {
        n,
        bound,
        base_candidates: bases.len(),
        non_full_valued_bases: 0,
        fiber_candidates: fibers.len(),
        checks: 0,
        counterexamples: Vec::new(),
    };
    for dy in &bases {
        if !dy.is_full_valued() {
            report.non_full_valued_bases += 1;
            report.checks += 1;
            if target.leq(&dy.plus_int(n - 3)?) {
                report.counterexamples.push(Counterexample {
                    check: SweepCheck::NotFullValuedBound,
                    base_type: dy.to_string(),
                    fiber_type: None,
                });
            }
        }
        for df in &fibers {
            report.checks += 1;
            if dy.boxplus(df)?.dim() < ExtNat::Finite(n) {
                report.counterexamples.push(Counterexample {
                    check: SweepCheck::ProductDimension,
                    base_type: dy.to_string(),
                    fiber_type: Some(df.to_string()),
                });
            }
        }
    }
    Ok(report)
}
