//! Helpers shared by the integration test targets. Each target uses a
//! different subset.

#![allow(dead_code)]

pub mod checks;
pub mod oracle;
pub mod play;
