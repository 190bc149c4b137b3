//! Dimension-type bounds behind the union, decomposition and fiber theorems.

use crate::dimtype::DimensionType;
use crate::error::Result;

/// `D₁ ⊕ D₂ + 1`: bounds `d_X` for `X = A ∪ B` with `d_A ≤ D₁`, `d_B ≤ D₂`.
pub fn union_bound(d1: &DimensionType, d2: &DimensionType) -> Result<DimensionType> {
    d1.oplus(d2)?.plus_int(1)
}

/// `D_f ⊕ D_Y`: bounds `d_X` for a map whose fibers have type `≤ D_f` onto a
/// base of type `≤ D_Y`.
pub fn fiber_bound(fiber: &DimensionType, base: &DimensionType) -> Result<DimensionType> {
    fiber.oplus(base)
}

/// Whether `d_X ≤ D₁ ⊕ D₂ + 1`, the hypothesis under which `X` splits as
/// `A ∪ B` with `d_A ≤ D₁` and `d_B ≤ D₂`.
pub fn decomposition_bound_holds(
    dx: &DimensionType,
    d1: &DimensionType,
    d2: &DimensionType,
) -> Result<bool> {
    Ok(dx.leq(&union_bound(d1, d2)?))
}
