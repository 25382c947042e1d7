//! Associated graded rings and modules of local rings, computed exactly
//! over prime fields.

pub mod engine;
pub mod error;
pub mod fstar;
pub mod graded;
pub mod hk;
pub mod local;
pub mod oracle;
pub mod poly;
pub mod session;

pub use error::{Error, Result};
