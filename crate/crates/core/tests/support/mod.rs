//! Fixtures and checks shared by the integration tests and the acceptance
//! runner. Each including crate uses a different subset.
#![allow(dead_code)]

pub mod goldens;
pub mod invariants;
pub mod positions;
