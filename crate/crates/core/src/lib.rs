pub mod cli;
pub mod codes;
pub mod craig;
pub mod error;
pub mod exactnum;
pub mod lift;
pub mod records;
pub mod svp;

pub use error::{Error, Result};
