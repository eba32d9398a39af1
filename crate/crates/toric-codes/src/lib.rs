//! File formats, built-in corpora, reports and the command-line driver for
//! `toric-codes-core`.

pub mod cli;
pub mod compute;
pub mod corpus;
pub mod error;
pub mod export;
pub mod format;
pub mod patterns;
pub mod verify;

pub use error::{AppError, AppResult};
