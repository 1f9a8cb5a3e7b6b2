//! Finite kernels `Z_a ⋊ (Z_b × Q_{2^i})` (quaternion factor optional) and
//! their twisting automorphisms.

mod element;
mod finite;
mod spec;
mod theta;

pub use element::{Element, Presentation, QuaternionPart};
pub use finite::FiniteGroup;
pub use spec::{
    validate, validate_with_cap, CheckedSpec, Family, GroupSpec, QuaternionTwist, ThetaSpec,
    DEFAULT_ORDER_CAP,
};
pub use theta::{theta_permutation, ThetaMap};
