//! Scenario scripts: the builtin ones over a parameter range, and a custom one.
//!
//!     cargo run --example scenarios [path/to/scenario.txt]

use std::collections::BTreeMap;

use dimcalc::harness::{builtin, run_scenario, Scenario, BUILTINS};

fn main() -> dimcalc::Result<()> {
    for (name, _) in BUILTINS {
        let s = builtin(name)?;
        let ok = (6..=12)
            .map(|n| run_scenario(&s, &BTreeMap::from([("n".to_string(), n)])))
            .collect::<dimcalc::Result<Vec<_>>>()?
            .iter()
            .all(|r| r.passed);
        println!("{name}: n = 6..12 {}", if ok { "pass" } else { "FAIL" });
    }

    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable scenario file"),
        None => include_str!("union_bound.scn").to_string(),
    };
    let s = Scenario::parse("custom", &text)?;
    let report = run_scenario(&s, &BTreeMap::new())?;
    print!("{}", report.to_text());
    Ok(())
}
