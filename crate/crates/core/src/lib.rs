pub mod catalog;
pub mod cli;
pub mod error;
pub mod graph;
pub mod group;
pub mod kappa;
pub mod number;
pub mod power;

pub use error::{Error, Result};
