pub mod config;
pub mod diagnostics;
pub mod error;
pub mod experiment;
pub mod kernel;
pub mod mapping;
pub mod mesh;
pub mod problems;
pub mod quadrature;
pub mod solver;

pub use error::{Error, Result};
