//! Seeded random checks of the algebraic laws of boxplus and oplus.
//!
//!     cargo run --example random_laws -- <seed> <count>

use dimcalc::harness::laws::check_laws;

fn main() -> dimcalc::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().map_or(0, |s| s.parse().expect("integer seed"));
    let count = args.next().map_or(2_000, |s| s.parse().expect("integer count"));
    let report = check_laws(seed, count)?;
    print!("{}", report.to_text());
    Ok(())
}
