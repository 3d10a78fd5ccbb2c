pub mod crystal;
pub mod error;
pub mod expansions;
pub mod oracle;
pub mod par;
pub mod shapes;
pub mod ssdt;
pub mod tableaux;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
