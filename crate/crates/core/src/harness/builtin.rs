//! Scenarios shipped with the library.

use crate::error::{Error, Result};

use super::scenario::Scenario;

const UNION_HALVES: &str = "\
# The pair that splits an n-dimensional Boltyanskii compactum, n >= 6.
param n = 6
let D1 = {q=2; *=3-}
let D2 = {q=n-4; *=(n-5)+}
(D1 oplus D2) + 1 == B(n)
unionbound(D1, D2) == B(n)
dim((D1 + 1) boxplus D2) == n - 1
decomposes(B(n), D1, D2) == true
";

const BOLTYANSKII_SQUARE: &str = "\
# dim(X x X) = 2 dim X - 1 for an n-dimensional Boltyanskii compactum.
param n = 4
dim(B(n) boxplus B(n)) == n + n - 1
boltyanskii(B(n), n) == true
fullvalued(B(n)) == false
";

const BOUND_IDENTITIES: &str = "\
# D boxplus n = D oplus n = D + n and the product sits below the union operation.
param n = 6
let D1 = {q=2; *=3-}
let D2 = {q=n-4; *=(n-5)+}
D1 boxplus n == D1 + n
D1 oplus n == D1 + n
D1 boxplus D2 <= D1 oplus D2
fiberbound(n - 3, B(3)) == B(3) + (n - 3)
";

/// `(name, source)` for every builtin scenario.
pub const BUILTINS: [(&str, &str); 3] = [
    ("section4", UNION_HALVES),
    ("boltyanskii-square", BOLTYANSKII_SQUARE),
    ("bound-identities", BOUND_IDENTITIES),
];

pub fn builtin(name: &str) -> Result<Scenario> {
    let (name, text) = BUILTINS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownScenario(name.to_string()))?;
    Scenario::parse(name, text)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::harness::run_scenario;

    fn with_n(n: u64) -> BTreeMap<String, u64> {
        BTreeMap::from([("n".to_string(), n)])
    }

    #[test]
    fn all_builtins_parse_and_pass_on_defaults() {
        for (name, _) in BUILTINS {
            let s = builtin(name).unwrap();
            let r = run_scenario(&s, &BTreeMap::new()).unwrap();
            assert!(r.passed, "{}", r.to_text());
        }
    }

    #[test]
    fn union_halves_range() {
        let s = builtin("section4").unwrap();
        for n in 6..=20 {
            assert!(run_scenario(&s, &with_n(n)).unwrap().passed);
        }
    }

    #[test]
    fn boltyanskii_square_range() {
        let s = builtin("boltyanskii-square").unwrap();
        for n in 2..=12 {
            assert!(run_scenario(&s, &with_n(n)).unwrap().passed);
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(builtin("nope"), Err(Error::UnknownScenario(_))));
    }
}
