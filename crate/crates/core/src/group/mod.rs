//! Bockstein bases `σ(G)` of abelian groups and `dim_G` through the Bockstein theorem.

mod snf;

use std::fmt;

pub use snf::{smith_normal_form, Classification};

use crate::dimtype::{expand_entry, BocksteinGroup, DimensionType};
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::prime::{check_prime, prime_divisors, PrimeMap};

/// An abelian group built from presentations and the special groups of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbelianGroupExpr {
    /// `ℤ^generators` modulo the column span of `relations` (given row by row).
    FinitelyGenerated {
        generators: usize,
        relations: Vec<Vec<i64>>,
    },
    Rationals,
    /// `ℤ_{p^∞}`.
    PAdicCircle(u64),
    /// `ℤ_(p)`.
    PLocalIntegers(u64),
    /// `ℤ^rank`.
    FreePart(usize),
    /// `ℤ/m`, `m ≥ 2`.
    Cyclic(u64),
    DirectSum(Vec<AbelianGroupExpr>),
}

impl AbelianGroupExpr {
    pub fn presentation(relations: Vec<Vec<i64>>) -> Self {
        AbelianGroupExpr::FinitelyGenerated {
            generators: relations.len(),
            relations,
        }
    }

    pub fn cyclic(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Validity(format!("Z/{m} needs m >= 2")));
        }
        Ok(AbelianGroupExpr::Cyclic(m))
    }

    pub fn circle(p: u64) -> Result<Self> {
        Ok(AbelianGroupExpr::PAdicCircle(check_prime(p)?))
    }

    pub fn local(p: u64) -> Result<Self> {
        Ok(AbelianGroupExpr::PLocalIntegers(check_prime(p)?))
    }

    pub fn direct_sum(parts: Vec<AbelianGroupExpr>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Validity("empty direct sum".to_string()));
        }
        Ok(AbelianGroupExpr::DirectSum(parts))
    }

    /// Checks the constructor invariants on a whole tree.
    pub fn validate(&self) -> Result<()> {
        match self {
            AbelianGroupExpr::Cyclic(m) if *m < 2 => Err(Error::Validity(format!(
                "Z/{m} needs m >= 2"
            ))),
            AbelianGroupExpr::PAdicCircle(p) | AbelianGroupExpr::PLocalIntegers(p) => {
                check_prime(*p).map(|_| ())
            }
            AbelianGroupExpr::DirectSum(parts) if parts.is_empty() => {
                Err(Error::Validity("empty direct sum".to_string()))
            }
            AbelianGroupExpr::DirectSum(parts) => parts.iter().try_for_each(Self::validate),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for AbelianGroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbelianGroupExpr::FinitelyGenerated { relations, .. } => {
                f.write_str("pres[")?;
                for (i, row) in relations.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                    write!(f, "[{}]", cells.join(","))?;
                }
                f.write_str("]")
            }
            AbelianGroupExpr::Rationals => f.write_str("Q"),
            AbelianGroupExpr::PAdicCircle(p) => write!(f, "Zpinf({p})"),
            AbelianGroupExpr::PLocalIntegers(p) => write!(f, "Zloc({p})"),
            AbelianGroupExpr::FreePart(r) => write!(f, "Z^{r}"),
            AbelianGroupExpr::Cyclic(m) => write!(f, "Z/{m}"),
            AbelianGroupExpr::DirectSum(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "({})", parts.join(" + "))
            }
        }
    }
}

/// The divisibility data the four σ(G) clauses depend on.
///
/// The zero group counts as divisible by every prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralProfile {
    /// `G / tor G ≠ 0`.
    pub free_quotient_nonzero: bool,
    /// `G / tor G` is p-divisible.
    pub free_quotient_divisible: PrimeMap<bool>,
    /// `p-tor G ≠ 0`.
    pub torsion_nonzero: PrimeMap<bool>,
    /// `p-tor G` is p-divisible.
    pub torsion_divisible: PrimeMap<bool>,
}

impl StructuralProfile {
    fn finitely_generated(class: &Classification) -> Result<Self> {
        let mut torsion_nonzero = PrimeMap::uniform(false);
        for &d in &class.invariant_factors {
            for p in prime_divisors(d) {
                torsion_nonzero.set(p, true)?;
            }
        }
        // nonzero finitely generated p-torsion is never p-divisible
        let torsion_divisible = torsion_nonzero.map(|nz| !nz);
        Ok(StructuralProfile {
            free_quotient_nonzero: class.rank > 0,
            free_quotient_divisible: PrimeMap::uniform(class.rank == 0),
            torsion_nonzero,
            torsion_divisible,
        })
    }

    fn direct_sum(&self, other: &StructuralProfile) -> StructuralProfile {
        StructuralProfile {
            free_quotient_nonzero: self.free_quotient_nonzero || other.free_quotient_nonzero,
            free_quotient_divisible: self
                .free_quotient_divisible
                .zip_with(&other.free_quotient_divisible, |a, b| *a && *b),
            torsion_nonzero: self
                .torsion_nonzero
                .zip_with(&other.torsion_nonzero, |a, b| *a || *b),
            torsion_divisible: self
                .torsion_divisible
                .zip_with(&other.torsion_divisible, |a, b| *a && *b),
        }
    }
}

pub fn profile(group: &AbelianGroupExpr) -> Result<StructuralProfile> {
    group.validate()?;
    profile_unchecked(group)
}

fn profile_unchecked(group: &AbelianGroupExpr) -> Result<StructuralProfile> {
    let all = PrimeMap::uniform(true);
    let none = PrimeMap::uniform(false);
    Ok(match group {
        AbelianGroupExpr::FinitelyGenerated {
            generators,
            relations,
        } => StructuralProfile::finitely_generated(&smith_normal_form(relations, *generators)?)?,
        AbelianGroupExpr::FreePart(rank) => StructuralProfile::finitely_generated(&Classification {
            rank: *rank,
            invariant_factors: Vec::new(),
        })?,
        AbelianGroupExpr::Cyclic(m) => StructuralProfile::finitely_generated(&Classification {
            rank: 0,
            invariant_factors: vec![*m],
        })?,
        AbelianGroupExpr::Rationals => StructuralProfile {
            free_quotient_nonzero: true,
            free_quotient_divisible: all.clone(),
            torsion_nonzero: none,
            torsion_divisible: all,
        },
        AbelianGroupExpr::PAdicCircle(p) => StructuralProfile {
            free_quotient_nonzero: false,
            free_quotient_divisible: all.clone(),
            torsion_nonzero: none.with(*p, true)?,
            torsion_divisible: all,
        },
        AbelianGroupExpr::PLocalIntegers(p) => StructuralProfile {
            free_quotient_nonzero: true,
            free_quotient_divisible: all.clone().with(*p, false)?,
            torsion_nonzero: none,
            torsion_divisible: all,
        },
        AbelianGroupExpr::DirectSum(parts) => {
            let mut profiles = parts.iter().map(profile_unchecked);
            let first = profiles
                .next()
                .ok_or_else(|| Error::Validity("empty direct sum".to_string()))??;
            profiles.try_fold(first, |acc, next| Ok::<_, Error>(acc.direct_sum(&next?)))?
        }
    })
}

/// Which of `ℤ_p`, `ℤ_{p^∞}`, `ℤ_(p)` belong to σ(G) at one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PrimeMembership {
    pub cyclic: bool,
    pub circle: bool,
    pub local: bool,
}

impl PrimeMembership {
    fn flags(&self) -> [bool; 3] {
        [self.cyclic, self.circle, self.local]
    }
}

/// A subset of the Bockstein basis, described prime-by-prime with finite support.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaSet {
    pub contains_q: bool,
    pub membership: PrimeMap<PrimeMembership>,
}

impl SigmaSet {
    pub fn empty() -> Self {
        SigmaSet {
            contains_q: false,
            membership: PrimeMap::uniform(PrimeMembership::default()),
        }
    }

    /// A finite set of basis groups.
    pub fn from_groups(groups: impl IntoIterator<Item = BocksteinGroup>) -> Result<Self> {
        let mut out = SigmaSet::empty();
        for g in groups {
            let mut m = match g.prime() {
                None => {
                    out.contains_q = true;
                    continue;
                }
                Some(p) => *out.membership.get(p),
            };
            match g {
                BocksteinGroup::Zp(_) => m.cyclic = true,
                BocksteinGroup::ZpInfinity(_) => m.circle = true,
                BocksteinGroup::ZpLocal(_) => m.local = true,
                BocksteinGroup::Q => unreachable!(),
            }
            out.membership.set(g.prime().unwrap_or_default(), m)?;
        }
        Ok(out)
    }

    pub fn contains(&self, group: BocksteinGroup) -> bool {
        match group {
            BocksteinGroup::Q => self.contains_q,
            BocksteinGroup::Zp(p) => self.membership.get(p).cyclic,
            BocksteinGroup::ZpInfinity(p) => self.membership.get(p).circle,
            BocksteinGroup::ZpLocal(p) => self.membership.get(p).local,
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.contains_q && self.membership.all(|m| m.flags() == [false; 3])
    }

    /// Finite list of members, or `None` when infinitely many primes contribute.
    pub fn finite_members(&self) -> Option<Vec<BocksteinGroup>> {
        if *self.membership.default_value() != PrimeMembership::default() {
            return None;
        }
        let mut out = Vec::new();
        if self.contains_q {
            out.push(BocksteinGroup::Q);
        }
        for (&p, m) in self.membership.exceptions() {
            for (flag, g) in m.flags().into_iter().zip(BocksteinGroup::at_prime(p)) {
                if flag {
                    out.push(g);
                }
            }
        }
        Some(out)
    }
}

impl fmt::Display for SigmaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const GENERIC: [&str; 3] = ["Z_p", "Z_p^inf", "Z_(p)"];
        let mut items = Vec::new();
        if self.contains_q {
            items.push("Q".to_string());
        }
        let default = self.membership.default_value().flags();
        for k in 0..3 {
            if !default[k] {
                continue;
            }
            let missing: Vec<String> = self
                .membership
                .exceptions()
                .iter()
                .filter(|(_, m)| !m.flags()[k])
                .map(|(p, _)| p.to_string())
                .collect();
            if missing.is_empty() {
                items.push(format!("{}: all p", GENERIC[k]));
            } else {
                items.push(format!("{}: all p except {}", GENERIC[k], missing.join(", ")));
            }
        }
        for (&p, m) in self.membership.exceptions() {
            let groups = BocksteinGroup::at_prime(p);
            for k in 0..3 {
                if m.flags()[k] && !default[k] {
                    items.push(groups[k].to_string());
                }
            }
        }
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// `σ(G)`.
pub fn bockstein_basis(group: &AbelianGroupExpr) -> Result<SigmaSet> {
    let prof = profile(group)?;
    let torsion = prof
        .torsion_nonzero
        .zip_with(&prof.torsion_divisible, |nz, div| (*nz, *div));
    let membership = prof
        .free_quotient_divisible
        .zip_with(&torsion, |free_div, &(nz, div)| PrimeMembership {
            cyclic: !div,
            circle: nz && div,
            local: !free_div,
        });
    Ok(SigmaSet {
        contains_q: prof.free_quotient_nonzero && prof.free_quotient_divisible.all(|d| *d),
        membership,
    })
}

/// `sup { D(H) : H ∈ S }`, with the empty supremum taken as 0.
pub fn sup_over(dim_type: &DimensionType, sigma: &SigmaSet) -> ExtNat {
    let mut best = ExtNat::ZERO;
    if sigma.contains_q {
        best = dim_type.q();
    }
    for (entry, members) in dim_type.entries().zipped_values(&sigma.membership) {
        let values = expand_entry(dim_type.q(), *entry);
        for (flag, v) in members.flags().into_iter().zip(values) {
            if flag {
                best = best.max(v);
            }
        }
    }
    best
}

/// `dim_G` of a compactum with dimension type `dim_type`.
pub fn dim_with_coefficients(dim_type: &DimensionType, group: &AbelianGroupExpr) -> Result<ExtNat> {
    Ok(sup_over(dim_type, &bockstein_basis(group)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decorated::{Decoration, DecoratedNumber};
    use BocksteinGroup::*;

    fn z() -> AbelianGroupExpr {
        AbelianGroupExpr::FreePart(1)
    }

    #[test]
    fn profile_of_integers() {
        let p = profile(&z()).unwrap();
        assert!(p.free_quotient_nonzero);
        assert_eq!(p.free_quotient_divisible, PrimeMap::uniform(false));
        assert_eq!(p.torsion_nonzero, PrimeMap::uniform(false));
    }

    #[test]
    fn profile_of_circle_plus_cyclic() {
        let circle = AbelianGroupExpr::circle(3).unwrap();
        let p = profile(&circle).unwrap();
        assert!(*p.torsion_nonzero.get(3) && *p.torsion_divisible.get(3));
        let sum = AbelianGroupExpr::direct_sum(vec![circle, AbelianGroupExpr::cyclic(3).unwrap()])
            .unwrap();
        let p = profile(&sum).unwrap();
        assert!(*p.torsion_nonzero.get(3));
        assert!(!*p.torsion_divisible.get(3));
    }

    #[test]
    fn basis_of_integers_and_rationals() {
        let s = bockstein_basis(&z()).unwrap();
        assert!(!s.contains_q);
        assert_eq!(
            *s.membership.default_value(),
            PrimeMembership { cyclic: false, circle: false, local: true }
        );
        assert!(s.membership.exceptions().is_empty());
        assert_eq!(s.to_string(), "{Z_(p): all p}");

        let q = bockstein_basis(&AbelianGroupExpr::Rationals).unwrap();
        assert_eq!(q, SigmaSet::from_groups([Q]).unwrap());
        assert_eq!(q.to_string(), "{Q}");
    }

    #[test]
    fn basis_groups_are_their_own_basis() {
        for p in [2, 3, 5, 97] {
            let cases = [
                (AbelianGroupExpr::Cyclic(p), Zp(p)),
                (AbelianGroupExpr::PAdicCircle(p), ZpInfinity(p)),
                (AbelianGroupExpr::PLocalIntegers(p), ZpLocal(p)),
            ];
            for (g, b) in cases {
                assert_eq!(bockstein_basis(&g).unwrap(), SigmaSet::from_groups([b]).unwrap());
            }
        }
    }

    #[test]
    fn basis_of_finite_sum() {
        let g = AbelianGroupExpr::presentation(vec![vec![2, 0], vec![0, 12]]);
        let s = bockstein_basis(&g).unwrap();
        assert_eq!(s.finite_members().unwrap(), vec![Zp(2), Zp(3)]);
        assert_eq!(s.to_string(), "{Z_2, Z_3}");
    }

    #[test]
    fn mixed_display() {
        let g = AbelianGroupExpr::direct_sum(vec![z(), AbelianGroupExpr::Cyclic(2)]).unwrap();
        let s = bockstein_basis(&g).unwrap();
        assert_eq!(s.to_string(), "{Z_(p): all p, Z_2}");
        let local = bockstein_basis(&AbelianGroupExpr::PLocalIntegers(3)).unwrap();
        assert_eq!(local.to_string(), "{Z_(3)}");
        let trivial = bockstein_basis(&AbelianGroupExpr::FreePart(0)).unwrap();
        assert!(trivial.is_empty());
        assert_eq!(trivial.to_string(), "{}");
    }

    #[test]
    fn invalid_groups() {
        assert!(AbelianGroupExpr::cyclic(1).is_err());
        assert!(AbelianGroupExpr::circle(6).is_err());
        assert!(AbelianGroupExpr::direct_sum(vec![]).is_err());
        assert!(profile(&AbelianGroupExpr::PLocalIntegers(9)).is_err());
    }

    #[test]
    fn dim_with_coefficients_examples() {
        for n in 1..10 {
            let b = DimensionType::boltyanskii(n).unwrap();
            assert_eq!(dim_with_coefficients(&b, &z()).unwrap(), n.into());
        }
        let d = DimensionType::uniform(2, DecoratedNumber::new(3, Decoration::Minus).unwrap())
            .unwrap();
        assert_eq!(
            dim_with_coefficients(&d, &AbelianGroupExpr::Rationals).unwrap(),
            2.into()
        );
        let c = DimensionType::constant(5);
        for g in [z(), AbelianGroupExpr::Cyclic(6), AbelianGroupExpr::PAdicCircle(7)] {
            assert_eq!(dim_with_coefficients(&c, &g).unwrap(), 5.into());
        }
        assert_eq!(
            dim_with_coefficients(&c, &AbelianGroupExpr::FreePart(0)).unwrap(),
            0.into()
        );
    }

    #[test]
    fn exceptional_primes_are_visited() {
        // D is 3- only at p = 5; sigma(Z/5) picks exactly that entry
        let d = DimensionType::constant(1)
            .with_entry(5, DecoratedNumber::new(3, Decoration::Minus).unwrap())
            .unwrap();
        assert_eq!(
            dim_with_coefficients(&d, &AbelianGroupExpr::Cyclic(5)).unwrap(),
            3.into()
        );
        assert_eq!(
            dim_with_coefficients(&d, &AbelianGroupExpr::Cyclic(7)).unwrap(),
            1.into()
        );
        assert_eq!(
            dim_with_coefficients(&d, &AbelianGroupExpr::PAdicCircle(5)).unwrap(),
            2.into()
        );
    }
}
