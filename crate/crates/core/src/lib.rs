pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod packets;
pub mod paramfile;
pub mod parameters;
pub mod langlands;
pub mod report;
pub mod speh;

pub use error::{Error, Result};
