#![no_std]

extern crate alloc;

pub mod classify;
pub mod code;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod monomial;

pub use binomial::Binomial;
pub use code::{Code, Codeword};
pub use error::{Error, Result};
pub use groebner::{EngineConfig, GroebnerBasis};
pub use monomial::ExponentVector;
pub use order::{MonomialOrder, TermOrder};
pub mod binomial;
pub mod groebner;
pub mod order;
pub mod toric;
