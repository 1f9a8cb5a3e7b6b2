pub mod arith;
pub mod closed_form;
pub mod error;
pub mod group;
pub mod linalg;
pub mod oracle;
pub mod par;
pub mod verify;

pub use error::{Error, Result};
