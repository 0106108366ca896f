#![no_std]
extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod algebra;
pub mod charpoly;
pub mod error;
pub mod exec;
pub mod irreps;
mod modular;
pub mod operator;
pub mod poly;
pub mod polycert;
pub mod ratmat;
pub mod spectrum;
pub mod witness;

pub use error::{Error, Result};
