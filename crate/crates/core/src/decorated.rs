use std::fmt;

use crate::error::{Error, Result};
use crate::extnat::ExtNat;

/// The p-singularity class carried next to `D(ℤ_p)`.
///
/// Variant order is the tie-break of the decorated order: `n⁻ < n < n⁺`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decoration {
    Minus,
    None,
    Plus,
}

impl Decoration {
    /// The sign product used by `⊞`: `ε ⊗ none = ε`, `ε ⊗ ε = ε`, `+ ⊗ − = −`.
    pub fn product(self, other: Decoration) -> Decoration {
        use Decoration::*;
        match (self, other) {
            (None, e) | (e, None) => e,
            (Plus, Plus) => Plus,
            (Minus, _) | (_, Minus) => Minus,
        }
    }

    /// Exchanges `+` and `−`.
    pub fn flip(self) -> Decoration {
        match self {
            Decoration::Minus => Decoration::Plus,
            Decoration::None => Decoration::None,
            Decoration::Plus => Decoration::Minus,
        }
    }

    pub fn suffix(self) -> &'static str {
        match self {
            Decoration::Minus => "-",
            Decoration::None => "",
            Decoration::Plus => "+",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Decoration::Minus => "minus",
            Decoration::None => "none",
            Decoration::Plus => "plus",
        }
    }
}

/// A decorated number `n^ε`.
///
/// The derived order is lexicographic on `(base, decoration)`, which is exactly
/// the chain `… < n⁻ < n < n⁺ < (n+1)⁻ < …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedNumber {
    base: ExtNat,
    decoration: Decoration,
}

impl DecoratedNumber {
    /// Rejects `0⁻` and `∞⁻`, and `n⁺` whose localization value `n + 1`
    /// does not fit in a `u64`.
    pub fn new(base: impl Into<ExtNat>, decoration: Decoration) -> Result<Self> {
        let base = base.into();
        if decoration == Decoration::Minus {
            match base {
                ExtNat::Finite(0) => {
                    return Err(Error::Validity(
                        "0- would send Z_p^inf to -1".to_string(),
                    ))
                }
                ExtNat::Infinite => {
                    return Err(Error::Validity(
                        "inf- is not canonical, write inf+".to_string(),
                    ))
                }
                _ => {}
            }
        }
        if decoration == Decoration::Plus && base == ExtNat::Finite(u64::MAX) {
            return Err(Error::Overflow(format!("{}+ has no successor", u64::MAX)));
        }
        Ok(DecoratedNumber { base, decoration })
    }

    pub fn plain(base: impl Into<ExtNat>) -> Self {
        DecoratedNumber {
            base: base.into(),
            decoration: Decoration::None,
        }
    }

    /// Builds the result of an operation, folding `∞⁻` into `∞⁺`. The two are
    /// the same function on the Bockstein groups since `∞ − 1 = ∞`.
    pub(crate) fn from_result(base: ExtNat, decoration: Decoration) -> Result<Self> {
        match (base, decoration) {
            (ExtNat::Infinite, Decoration::Minus) => Self::new(base, Decoration::Plus),
            _ => Self::new(base, decoration),
        }
    }

    pub fn base(&self) -> ExtNat {
        self.base
    }

    pub fn decoration(&self) -> Decoration {
        self.decoration
    }

    /// The involution exchanging `+` and `−`. `0⁺` and `∞⁺` have no image.
    pub fn star(self) -> Result<Self> {
        if self.decoration == Decoration::Plus
            && matches!(self.base, ExtNat::Finite(0) | ExtNat::Infinite)
        {
            return Err(Error::ImageNotRepresentable {
                what: self.to_string(),
            });
        }
        Ok(DecoratedNumber {
            base: self.base,
            decoration: self.decoration.flip(),
        })
    }

    pub fn add_int(self, n: u64) -> Result<Self> {
        Self::new(self.base.checked_add(n.into())?, self.decoration)
    }
}

impl fmt::Display for DecoratedNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base, self.decoration.suffix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;
    use Decoration::*;

    fn dn(base: u64, d: Decoration) -> DecoratedNumber {
        DecoratedNumber::new(base, d).unwrap()
    }

    #[test]
    fn order_chain() {
        assert_eq!(dn(3, Minus).cmp(&dn(3, Plus)), Ordering::Less);
        assert_eq!(dn(3, Plus).cmp(&dn(4, Minus)), Ordering::Less);
        assert_eq!(dn(5, None).cmp(&dn(5, None)), Ordering::Equal);
        assert!(dn(3, Minus) < dn(3, None) && dn(3, None) < dn(3, Plus));
        assert!(dn(1000, Plus) < DecoratedNumber::new(ExtNat::Infinite, None).unwrap());
    }

    #[test]
    fn sign_product_table() {
        for e in [Minus, None, Plus] {
            assert_eq!(e.product(None), e);
            assert_eq!(None.product(e), e);
        }
        assert_eq!(Plus.product(Plus), Plus);
        assert_eq!(Minus.product(Minus), Minus);
        assert_eq!(Plus.product(Minus), Minus);
        assert_eq!(Minus.product(Plus), Minus);
    }

    #[test]
    fn rejected_forms() {
        assert!(DecoratedNumber::new(0, Minus).is_err());
        assert!(DecoratedNumber::new(ExtNat::Infinite, Minus).is_err());
        assert!(DecoratedNumber::new(u64::MAX, Plus).is_err());
        assert!(DecoratedNumber::new(0, Plus).is_ok());
    }

    #[test]
    fn star_domain() {
        assert_eq!(dn(3, Minus).star().unwrap(), dn(3, Plus));
        assert_eq!(dn(5, None).star().unwrap(), dn(5, None));
        assert!(matches!(
            dn(0, Plus).star(),
            Err(Error::ImageNotRepresentable { .. })
        ));
        let inf_plus = DecoratedNumber::new(ExtNat::Infinite, Plus).unwrap();
        assert!(inf_plus.star().is_err());
    }

    #[test]
    fn infinite_minus_folds_to_plus() {
        let d = DecoratedNumber::from_result(ExtNat::Infinite, Minus).unwrap();
        assert_eq!(d.decoration(), Plus);
    }
}
