pub mod error;
pub mod characterize;
pub mod cli;
pub mod elements;
pub mod exact;
pub mod oracle;
pub mod rootsys;
pub mod wright;

pub use error::{Error, Result};
