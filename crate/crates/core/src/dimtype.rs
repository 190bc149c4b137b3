//! Dimension types: functions on the Bockstein basis stored as a value at `ℚ`
//! together with one decorated number per prime.

use std::cmp::Ordering;
use std::fmt;

use crate::decorated::{Decoration, DecoratedNumber};
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::prime::{check_prime, PrimeMap};

/// A member of the Bockstein basis `σ = {ℚ, ℤ_p, ℤ_{p^∞}, ℤ_(p)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BocksteinGroup {
    Q,
    /// The cyclic group `ℤ/p`.
    Zp(u64),
    /// The p-adic circle.
    ZpInfinity(u64),
    /// Integers localized at p.
    ZpLocal(u64),
}

impl BocksteinGroup {
    pub fn cyclic(p: u64) -> Result<Self> {
        Ok(BocksteinGroup::Zp(check_prime(p)?))
    }

    pub fn circle(p: u64) -> Result<Self> {
        Ok(BocksteinGroup::ZpInfinity(check_prime(p)?))
    }

    pub fn local(p: u64) -> Result<Self> {
        Ok(BocksteinGroup::ZpLocal(check_prime(p)?))
    }

    pub fn prime(&self) -> Option<u64> {
        match *self {
            BocksteinGroup::Q => None,
            BocksteinGroup::Zp(p) | BocksteinGroup::ZpInfinity(p) | BocksteinGroup::ZpLocal(p) => {
                Some(p)
            }
        }
    }

    /// The three basis groups at `p`, in the order `ℤ_p, ℤ_{p^∞}, ℤ_(p)`.
    pub fn at_prime(p: u64) -> [BocksteinGroup; 3] {
        [
            BocksteinGroup::Zp(p),
            BocksteinGroup::ZpInfinity(p),
            BocksteinGroup::ZpLocal(p),
        ]
    }
}

impl fmt::Display for BocksteinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BocksteinGroup::Q => f.write_str("Q"),
            BocksteinGroup::Zp(p) => write!(f, "Z_{p}"),
            BocksteinGroup::ZpInfinity(p) => write!(f, "Z_{p}^inf"),
            BocksteinGroup::ZpLocal(p) => write!(f, "Z_({p})"),
        }
    }
}

/// Values of a dimension type on `ℤ_p`, `ℤ_{p^∞}`, `ℤ_(p)` given `D(ℚ)` and
/// the decorated entry at p.
pub(crate) fn expand_entry(q: ExtNat, entry: DecoratedNumber) -> [ExtNat; 3] {
    let n = entry.base();
    match entry.decoration() {
        Decoration::None => [n, n, n],
        Decoration::Plus => {
            let local = n.succ().expect("plus entries stay below u64::MAX");
            [n, n, q.max(local)]
        }
        Decoration::Minus => {
            let circle = n.pred().expect("minus entries have positive base");
            [n, circle, q.max(n)]
        }
    }
}

/// A dimension type `D: σ → ℕ ∪ {0, ∞}`.
///
/// Holds `D(ℚ)`, a default decorated entry for all primes, and finitely many
/// exceptional primes. The representation is canonical, so derived equality
/// is equality of functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimensionType {
    q: ExtNat,
    entries: PrimeMap<DecoratedNumber>,
}

fn normalize_entry(q: ExtNat, entry: DecoratedNumber) -> Result<DecoratedNumber> {
    if entry.decoration() == Decoration::None && entry.base() != q {
        return Err(Error::Validity(format!(
            "regular entry {entry} must equal the value {q} at Q"
        )));
    }
    // With D(Q) = inf the singular entry inf+ is the same function as the regular one.
    if q.is_infinite() && entry.base().is_infinite() {
        return Ok(DecoratedNumber::plain(ExtNat::Infinite));
    }
    Ok(entry)
}

impl DimensionType {
    /// A type with the same entry at every prime.
    pub fn uniform(q: impl Into<ExtNat>, entry: DecoratedNumber) -> Result<Self> {
        let q = q.into();
        let entry = normalize_entry(q, entry)?;
        Ok(DimensionType {
            q,
            entries: PrimeMap::uniform(entry),
        })
    }

    /// Overrides the entry at prime `p`.
    pub fn with_entry(mut self, p: u64, entry: DecoratedNumber) -> Result<Self> {
        let entry = normalize_entry(self.q, entry)?;
        self.entries.set(p, entry)?;
        Ok(self)
    }

    fn from_entries(q: ExtNat, entries: PrimeMap<DecoratedNumber>) -> Result<Self> {
        let entries = entries.try_map(|e| normalize_entry(q, *e))?;
        Ok(DimensionType { q, entries })
    }

    /// The type sending every basis group to `n`.
    pub fn constant(n: impl Into<ExtNat>) -> Self {
        let n = n.into();
        DimensionType {
            q: n,
            entries: PrimeMap::uniform(DecoratedNumber::plain(n)),
        }
    }

    /// `B_n`: `(n−1)⁺` at every prime and `n − 1` at `ℚ`.
    pub fn boltyanskii(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validity("B_n needs n >= 1".to_string()));
        }
        Self::uniform(n - 1, DecoratedNumber::new(n - 1, Decoration::Plus)?)
    }

    /// `D(ℚ)`.
    pub fn q(&self) -> ExtNat {
        self.q
    }

    pub fn default_entry(&self) -> DecoratedNumber {
        *self.entries.default_value()
    }

    pub fn exceptions(&self) -> impl Iterator<Item = (u64, DecoratedNumber)> + '_ {
        self.entries.exceptions().iter().map(|(&p, &e)| (p, e))
    }

    /// `D(p)` as a decorated number.
    pub fn entry(&self, p: u64) -> DecoratedNumber {
        *self.entries.get(p)
    }

    pub(crate) fn entries(&self) -> &PrimeMap<DecoratedNumber> {
        &self.entries
    }

    pub fn evaluate(&self, group: BocksteinGroup) -> ExtNat {
        let [zp, circle, local] = match group {
            BocksteinGroup::Q => return self.q,
            BocksteinGroup::Zp(p) | BocksteinGroup::ZpInfinity(p) | BocksteinGroup::ZpLocal(p) => {
                expand_entry(self.q, self.entry(p))
            }
        };
        match group {
            BocksteinGroup::Zp(_) => zp,
            BocksteinGroup::ZpInfinity(_) => circle,
            _ => local,
        }
    }

    /// Pointwise order, decided on decorated entries.
    pub fn leq(&self, other: &DimensionType) -> bool {
        self.q <= other.q
            && self
                .entries
                .zipped_values(&other.entries)
                .into_iter()
                .all(|(a, b)| a <= b)
    }

    /// `D₁ ⊞ D₂`, the type of a product.
    pub fn boxplus(&self, other: &DimensionType) -> Result<DimensionType> {
        let q = self.q.checked_add(other.q)?;
        let entries = self.entries.try_zip_with(&other.entries, |a, b| {
            DecoratedNumber::from_result(
                a.base().checked_add(b.base())?,
                a.decoration().product(b.decoration()),
            )
        })?;
        Self::from_entries(q, entries)
    }

    /// `D*`, exchanging `+` and `−` at every prime.
    pub fn star(&self) -> Result<DimensionType> {
        let entries = self.entries.try_map(|e| e.star())?;
        Self::from_entries(self.q, entries)
    }

    /// `D₁ ⊕ D₂ = (D₁* ⊞ D₂*)*`.
    pub fn oplus(&self, other: &DimensionType) -> Result<DimensionType> {
        self.star()?.boxplus(&other.star()?)?.star()
    }

    /// `D + n` as functions.
    pub fn plus_int(&self, n: u64) -> Result<DimensionType> {
        let q = self.q.checked_add(n.into())?;
        let entries = self.entries.try_map(|e| e.add_int(n))?;
        Self::from_entries(q, entries)
    }

    /// `dim D`, the supremum over the whole basis.
    pub fn dim(&self) -> ExtNat {
        self.entries
            .values()
            .flat_map(|e| expand_entry(self.q, *e))
            .fold(self.q, ExtNat::max)
    }

    /// Whether an `n`-dimensional compactum of this type would be a
    /// Boltyanskii compactum: `dim D = n` and `D ≤ B_n`.
    pub fn is_boltyanskii(&self, n: u64) -> bool {
        match Self::boltyanskii(n) {
            Ok(b) => self.dim() == ExtNat::Finite(n) && self.leq(&b),
            Err(_) => false,
        }
    }

    pub fn is_full_valued(&self) -> bool {
        *self == Self::constant(self.dim())
    }
}

impl PartialOrd for DimensionType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.leq(other), other.leq(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for DimensionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{q={}; *={}", self.q, self.default_entry())?;
        for (p, e) in self.exceptions() {
            write!(f, "; {p}={e}")?;
        }
        f.write_str("}")
    }
}
