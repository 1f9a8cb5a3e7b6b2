//! Closed-form cohomology groups, rings and periods of the two families.

mod groups;
mod invariants;
mod ring;

pub use groups::{finite_cohomology, vz_cohomology, CohomologyGroup, Summand};
pub use invariants::{invariants, q8_h2_action, DerivedInvariants, FamilyTag, H2Action};
pub use ring::{CohClass, ProductRule, Ring, RingGenerator, RingPresentation, Symbol};
