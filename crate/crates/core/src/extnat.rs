use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A value of `ℕ ∪ {0, ∞}`: the range of a dimension function.
///
/// `Infinite` sits above every finite value. Addition absorbs into `Infinite`
/// and finite sums are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Finite(0);

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtNat::Infinite)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinite => None,
        }
    }

    pub fn checked_add(self, rhs: ExtNat) -> Result<ExtNat> {
        match (self, rhs) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => a
                .checked_add(b)
                .map(ExtNat::Finite)
                .ok_or_else(|| Error::Overflow(format!("{a} + {b}"))),
            _ => Ok(ExtNat::Infinite),
        }
    }

    /// `self - 1`, with `∞ - 1 = ∞`. `None` for zero.
    pub fn pred(self) -> Option<ExtNat> {
        match self {
            ExtNat::Finite(0) => None,
            ExtNat::Finite(v) => Some(ExtNat::Finite(v - 1)),
            ExtNat::Infinite => Some(ExtNat::Infinite),
        }
    }

    /// `self + 1`, with `∞ + 1 = ∞`.
    pub fn succ(self) -> Result<ExtNat> {
        self.checked_add(ExtNat::Finite(1))
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Finite(v)
    }
}

impl PartialOrd for ExtNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => a.cmp(b),
            (ExtNat::Finite(_), ExtNat::Infinite) => Ordering::Less,
            (ExtNat::Infinite, ExtNat::Finite(_)) => Ordering::Greater,
            (ExtNat::Infinite, ExtNat::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinite => f.write_str("inf"),
        }
    }
}
