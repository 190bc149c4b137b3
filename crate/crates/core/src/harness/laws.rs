//! Seeded random checks of the algebraic laws of `⊞`, `⋆` and `⊕`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::decorated::{Decoration, DecoratedNumber};
use crate::dimtype::DimensionType;
use crate::error::Result;

/// Primes that may carry exceptional entries in generated types.
pub const SAMPLE_PRIMES: [u64; 4] = [2, 3, 5, 7];

fn random_entry(rng: &mut impl Rng, q: u64, max_base: u64) -> DecoratedNumber {
    loop {
        let deco = match rng.gen_range(0..3) {
            0 => Decoration::Minus,
            1 => Decoration::None,
            _ => Decoration::Plus,
        };
        if deco == Decoration::None {
            return DecoratedNumber::plain(q);
        }
        if let Ok(e) = DecoratedNumber::new(rng.gen_range(0..=max_base), deco) {
            return e;
        }
    }
}

/// A uniformly drawn valid dimension type with bases in `0..=max_base`
/// and exceptions among [`SAMPLE_PRIMES`].
pub fn random_type(rng: &mut impl Rng, max_base: u64) -> DimensionType {
    let q = rng.gen_range(0..=max_base);
    let mut d = DimensionType::uniform(q, random_entry(rng, q, max_base))
        .expect("generated entries are valid");
    for p in SAMPLE_PRIMES {
        if rng.gen_bool(0.3) {
            d = d
                .with_entry(p, random_entry(rng, q, max_base))
                .expect("generated entries are valid");
        }
    }
    d
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawFailure {
    pub law: &'static str,
    pub operands: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub seed: u64,
    pub instances: usize,
    pub failures: Vec<LawFailure>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("laws seed={} instances={}\n", self.seed, self.instances);
        for f in &self.failures {
            out.push_str(&format!("  FAIL {}: {}\n", f.law, f.operands.join(", ")));
        }
        out.push_str(if self.passed() { "result: pass\n" } else { "result: FAIL\n" });
        out
    }
}

/// Runs `instances` rounds of every law on random operands.
pub fn check_laws(seed: u64, instances: usize) -> Result<LawReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let zero = DimensionType::constant(0);
    for _ in 0..instances {
        let a = random_type(&mut rng, 8);
        let b = random_type(&mut rng, 8);
        let c = random_type(&mut rng, 8);
        let n = rng.gen_range(0..6u64);
        let mut fail = |law: &'static str, ok: bool, ops: &[&DimensionType]| {
            if !ok {
                failures.push(LawFailure {
                    law,
                    operands: ops.iter().map(|d| d.to_string()).collect(),
                });
            }
        };
        let ab = a.boxplus(&b)?;
        fail("boxplus commutative", ab == b.boxplus(&a)?, &[&a, &b]);
        fail(
            "boxplus associative",
            ab.boxplus(&c)? == a.boxplus(&b.boxplus(&c)?)?,
            &[&a, &b, &c],
        );
        fail("boxplus identity", a.boxplus(&zero)? == a, &[&a]);
        let cn = DimensionType::constant(n);
        fail("D boxplus n = D + n", a.boxplus(&cn)? == a.plus_int(n)?, &[&a, &cn]);
        if let (Ok(sa), Ok(_)) = (a.star(), b.star()) {
            fail("star involution", sa.star()? == a, &[&a]);
            let sum = a.oplus(&b)?;
            fail("boxplus <= oplus", ab.leq(&sum), &[&a, &b]);
            fail("oplus commutative", sum == b.oplus(&a)?, &[&a, &b]);
            fail("D oplus n = D + n", a.oplus(&cn)? == a.plus_int(n)?, &[&a, &cn]);
        }
    }
    Ok(LawReport {
        seed,
        instances,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laws_hold_for_a_few_seeds() {
        for seed in 0..3 {
            let r = check_laws(seed, 500).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        assert_eq!(check_laws(9, 50).unwrap(), check_laws(9, 50).unwrap());
        let mut r1 = ChaCha8Rng::seed_from_u64(1);
        let mut r2 = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(random_type(&mut r1, 5), random_type(&mut r2, 5));
    }
}
