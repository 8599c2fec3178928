pub mod cli;
pub mod coherent;
pub mod error;
pub mod exact;
pub mod export;
pub mod repmat;
pub mod report;
pub mod specfn;
pub mod states;
pub mod wick;

pub use error::{Error, Result};
pub use report::{CheckEntry, Status, VerificationReport};
