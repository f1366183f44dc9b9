pub mod classify;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod factor;
pub mod families;
pub mod oracle;
pub mod resolvents;

pub use error::{Error, Result};
