//! Dimension types and their operations: boxplus, star, oplus, `+n`, `dim`,
//! the order, and values on individual Bockstein groups.
//!
//!     cargo run --example type_arithmetic

use dimcalc::{BocksteinGroup, Decoration, DecoratedNumber, DimensionType};

fn main() -> dimcalc::Result<()> {
    // D(Q) = 2, and 3- at every prime except 5, where the entry is 4+
    let d1 = DimensionType::uniform(2, DecoratedNumber::new(3, Decoration::Minus)?)?
        .with_entry(5, DecoratedNumber::new(4, Decoration::Plus)?)?;
    let b4 = DimensionType::boltyanskii(4)?;
    println!("D1 = {d1}");
    println!("B4 = {b4}");

    for p in [2, 5] {
        for g in BocksteinGroup::at_prime(p) {
            println!("  D1({g}) = {}", d1.evaluate(g));
        }
    }
    println!("  D1(Q) = {}", d1.evaluate(BocksteinGroup::Q));

    println!("D1 boxplus B4 = {}", d1.boxplus(&b4)?);
    println!("star(D1)      = {}", d1.star()?);
    println!("D1 oplus B4   = {}", d1.oplus(&b4)?);
    println!("D1 + 1        = {}", d1.plus_int(1)?);
    println!("dim(D1)       = {}", d1.dim());

    let sq = b4.boxplus(&b4)?;
    println!("dim(B4 boxplus B4) = {}", sq.dim());
    println!("C(3) <= B4: {}", DimensionType::constant(3).leq(&b4));
    println!("B4 <= C(4): {}", b4.leq(&DimensionType::constant(4)));
    println!("B4 is Boltyanskii in dimension 4: {}", b4.is_boltyanskii(4));
    println!("C(4) full-valued: {}", DimensionType::constant(4).is_full_valued());

    // star is undefined on an entry 0+
    let zero_plus = DimensionType::uniform(0, DecoratedNumber::new(0, Decoration::Plus)?)?;
    match zero_plus.star() {
        Ok(t) => println!("star({zero_plus}) = {t}"),
        Err(e) => println!("star({zero_plus}): {e}"),
    }
    Ok(())
}
