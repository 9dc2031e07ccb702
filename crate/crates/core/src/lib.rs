pub mod arith;
pub mod asm;
pub mod bijection;
pub mod error;
pub mod formulas;
pub mod report;
pub mod sample;
pub mod schur;
pub mod vertex;

pub use error::{Error, Result};
