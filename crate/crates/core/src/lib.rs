pub mod error;
pub mod coxeter;
pub mod numfield;
pub mod presentations;
pub mod roots;
pub mod virtual_artin;
pub mod wordproblem;

pub use error::{Error, Result};
