pub mod catalog;
pub mod cli;
pub mod error;
pub mod eval;
pub mod expr;
pub mod mccoy;
pub mod poly;
pub mod radical;
pub mod report;
pub mod search;
pub mod suite;
pub mod ring;

pub use error::{Error, Result};
