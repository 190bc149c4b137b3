//! Executable replays of the dimension-type arithmetic in the union,
//! decomposition and fiber theorems and in the cube-theorem case analysis.

pub mod bounds;
mod builtin;
pub mod laws;
mod scenario;
mod sweep;

pub use bounds::{decomposition_bound_holds, fiber_bound, union_bound};
pub use builtin::{builtin, BUILTINS};
pub use scenario::{run_scenario, Claim, ClaimKind, ClaimReport, Report, Scenario};
pub use sweep::{cube_theorem_sweep, uniform_types, Counterexample, SweepCheck, SweepReport};
