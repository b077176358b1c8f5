pub mod binary;
pub mod cli;
pub mod error;
pub mod graph;
pub mod krawtchouk;
pub mod linalg;
pub mod terwilliger;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{QMatrix, Rational};
