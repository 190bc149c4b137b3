//! Bockstein bases of abelian groups and dimensions with coefficients.
//!
//!     cargo run --example bockstein_basis

use dimcalc::{
    bockstein_basis, dim_with_coefficients, smith_normal_form, AbelianGroupExpr, DimensionType,
};

fn main() -> dimcalc::Result<()> {
    // Z^2 / <(2, 0), (0, 12)>, relations are the columns
    let rel = vec![vec![2, 0], vec![0, 12]];
    let class = smith_normal_form(&rel, 2)?;
    println!("pres{rel:?}: rank {}, invariant factors {:?}", class.rank, class.invariant_factors);

    let groups = vec![
        AbelianGroupExpr::FreePart(1),
        AbelianGroupExpr::Rationals,
        AbelianGroupExpr::circle(5)?,
        AbelianGroupExpr::local(3)?,
        AbelianGroupExpr::presentation(rel),
        AbelianGroupExpr::direct_sum(vec![AbelianGroupExpr::circle(3)?, AbelianGroupExpr::cyclic(3)?])?,
        AbelianGroupExpr::direct_sum(vec![AbelianGroupExpr::FreePart(2), AbelianGroupExpr::cyclic(30)?])?,
    ];
    let b3 = DimensionType::boltyanskii(3)?;
    println!("B3 = {b3}");
    for g in &groups {
        println!("sigma({g}) = {}", bockstein_basis(g)?);
        println!("  dim_G under B3 = {}", dim_with_coefficients(&b3, g)?);
    }
    Ok(())
}
