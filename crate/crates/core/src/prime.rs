//! Primality, factorization, and functions on the set of primes with finite support.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set is exact for all of `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn check_prime(p: u64) -> Result<u64> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(Error::NotPrime(p))
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Brent's variant of Pollard rho. `n` must be odd and composite.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn collect_factors(n: u64, out: &mut BTreeSet<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.insert(n);
        return;
    }
    let d = pollard_rho(n);
    collect_factors(d, out);
    collect_factors(n / d, out);
}

/// The distinct prime divisors of `n` in increasing order. Empty for `0` and `1`.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = BTreeSet::new();
    if n == 0 {
        return Vec::new();
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n.is_multiple_of(p) {
            out.insert(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
    }
    collect_factors(n, &mut out);
    out.into_iter().collect()
}

/// A function from primes to `T` that differs from `default` at finitely many primes.
///
/// Exceptions equal to the default are never stored, so `==` decides equality
/// of the underlying functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeMap<T> {
    default: T,
    exceptions: BTreeMap<u64, T>,
}

impl<T: Clone + Eq> PrimeMap<T> {
    pub fn uniform(default: T) -> Self {
        PrimeMap {
            default,
            exceptions: BTreeMap::new(),
        }
    }

    pub fn default_value(&self) -> &T {
        &self.default
    }

    pub fn exceptions(&self) -> &BTreeMap<u64, T> {
        &self.exceptions
    }

    pub fn get(&self, p: u64) -> &T {
        self.exceptions.get(&p).unwrap_or(&self.default)
    }

    /// Sets the value at prime `p`.
    pub fn set(&mut self, p: u64, value: T) -> Result<()> {
        check_prime(p)?;
        if value == self.default {
            self.exceptions.remove(&p);
        } else {
            self.exceptions.insert(p, value);
        }
        Ok(())
    }

    pub fn with(mut self, p: u64, value: T) -> Result<Self> {
        self.set(p, value)?;
        Ok(self)
    }

    /// Default value followed by every exceptional value.
    pub fn values(&self) -> impl Iterator<Item = &T> {
        std::iter::once(&self.default).chain(self.exceptions.values())
    }

    pub fn all(&self, pred: impl FnMut(&T) -> bool) -> bool {
        self.values().all(pred)
    }

    pub fn try_map<U: Clone + Eq>(
        &self,
        mut f: impl FnMut(&T) -> Result<U>,
    ) -> Result<PrimeMap<U>> {
        let mut out = PrimeMap::uniform(f(&self.default)?);
        for (&p, v) in &self.exceptions {
            let image = f(v)?;
            if image != out.default {
                out.exceptions.insert(p, image);
            }
        }
        Ok(out)
    }

    pub fn map<U: Clone + Eq>(&self, mut f: impl FnMut(&T) -> U) -> PrimeMap<U> {
        self.try_map(|v| Ok(f(v))).expect("infallible map")
    }

    /// Pointwise combination; the support of the result is within the union of supports.
    pub fn try_zip_with<U: Clone + Eq, V: Clone + Eq>(
        &self,
        other: &PrimeMap<U>,
        mut f: impl FnMut(&T, &U) -> Result<V>,
    ) -> Result<PrimeMap<V>> {
        let mut out = PrimeMap::uniform(f(&self.default, &other.default)?);
        let keys: BTreeSet<u64> = self
            .exceptions
            .keys()
            .chain(other.exceptions.keys())
            .copied()
            .collect();
        for p in keys {
            let image = f(self.get(p), other.get(p))?;
            if image != out.default {
                out.exceptions.insert(p, image);
            }
        }
        Ok(out)
    }

    pub fn zip_with<U: Clone + Eq, V: Clone + Eq>(
        &self,
        other: &PrimeMap<U>,
        mut f: impl FnMut(&T, &U) -> V,
    ) -> PrimeMap<V> {
        self.try_zip_with(other, |a, b| Ok(f(a, b)))
            .expect("infallible zip")
    }

    /// Pairs of values that occur together at some prime: one pair per
    /// exceptional prime of either side, plus the pair of defaults, which is
    /// attained at every prime outside both supports.
    pub fn zipped_values<'a, U: Clone + Eq>(
        &'a self,
        other: &'a PrimeMap<U>,
    ) -> Vec<(&'a T, &'a U)> {
        let keys: BTreeSet<u64> = self
            .exceptions
            .keys()
            .chain(other.exceptions.keys())
            .copied()
            .collect();
        std::iter::once((&self.default, &other.default))
            .chain(keys.into_iter().map(|p| (self.get(p), other.get(p))))
            .collect()
    }
}
