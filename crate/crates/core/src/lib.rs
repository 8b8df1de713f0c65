pub mod arith;
pub mod cli;
pub mod codec;
pub mod codes;
pub mod distance;
pub mod error;
pub mod gf;
pub mod irred;
pub mod linalg;
pub mod lrcopt;
pub mod oracle;
pub mod polyring;

pub use error::{Error, Result};
pub use gf::{FieldElement, FieldSpec};
pub use polyring::Polynomial;
