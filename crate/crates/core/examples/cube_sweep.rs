//! Exhaustive sweep over uniform dimension types for the cube-theorem case analysis.
//!
//!     cargo run --release --example cube_sweep -- 6 8

use dimcalc::harness::cube_theorem_sweep;

fn main() -> dimcalc::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(6);
    let bound = args.next().unwrap_or(n + 2);
    let report = cube_theorem_sweep(n, bound)?;
    print!("{}", report.to_text());
    std::process::exit(if report.passed() { 0 } else { 1 });
}
