//! Exact calculator for cohomological dimension types.
//!
//! * [`DimensionType`] with the operations `⊞` ([`DimensionType::boxplus`]),
//!   `⋆` ([`DimensionType::star`]), `⊕` ([`DimensionType::oplus`]), `+n` and `dim`.
//! * [`group`]: Bockstein bases `σ(G)` of abelian groups, via Smith normal form
//!   for presented groups, and `dim_G` through the Bockstein theorem.
//! * [`harness`]: scenario scripts and the exhaustive cube-theorem sweep.
//! * [`expr`]: the text language used by scenarios and the `dimcalc` binary.

pub mod decorated;
pub mod dimtype;
pub mod error;
pub mod expr;
pub mod extnat;
pub mod group;
pub mod harness;
pub mod prime;

pub use decorated::{Decoration, DecoratedNumber};
pub use dimtype::{BocksteinGroup, DimensionType};
pub use error::{Error, Position, Result};
pub use extnat::ExtNat;
pub use group::{
    bockstein_basis, dim_with_coefficients, smith_normal_form, AbelianGroupExpr, SigmaSet,
};
