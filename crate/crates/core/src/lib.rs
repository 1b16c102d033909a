pub mod cli;
pub mod error;
pub mod fock;
pub mod generators;
pub mod irreps;
pub mod model;
pub mod special_cases;
pub mod specfun;

pub use error::{Error, Result};
