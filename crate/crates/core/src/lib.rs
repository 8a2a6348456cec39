//! Decision engine for looseness questions: given a map, can it be deformed
//! away from itself (no points left where the deformed map agrees with the
//! original)?
//!
//! Three families of queries are implemented, all decided by exact integer
//! arithmetic over a small, sourced knowledge base of framed-bordism facts:
//!
//! * frame-bundle projections `V_{r,k} -> G_{r,k}` and their oriented lifts
//!   ([`stiefel`]),
//! * unit-sphere bundles of oriented plane bundles, including tensor powers
//!   of the canonical line bundle over complex projective space
//!   ([`bundles`]),
//! * maps out of spheres classified by their stable class ([`spheres`]).
//!
//! Every decision returns a [`Verdict`]: `Loose`, `NotLoose`, or an honest
//! `Unknown`, together with a trace of the rules applied and the numbers
//! they computed. `Unknown` is never silently downgraded to `NotLoose`.

pub mod abelian;
pub mod bundles;
pub mod error;
pub mod grassmann;
mod serde_big;
pub mod spheres;
pub mod stems;
pub mod stiefel;
pub mod verdict;

pub use abelian::{
    element_order, in_gcd_image, is_zero_multiple, FgAbGroup, GroupElement, Order, OrderKnowledge,
    TriBool,
};
pub use bundles::{decide_cp_tensor, decide_plane_bundle, PlaneBundleInput};
pub use error::{Error, Result};
pub use grassmann::{
    euler_grassmann, euler_schubert_oracle, in_stable_range, stiefel_dims, GrassmannData,
};
pub use spheres::{decide_sphere_map, omega_class, SphereMapInput};
pub use stems::{
    becker_schultz_constraint, refine, HomogeneousConstraint, SoClassFact, StemEntry, StemTable,
};
pub use stiefel::{corollary_sweep, decide_stiefel, SweepRow};
pub use verdict::{Outcome, RuleApplication, RuleId, Verdict};
