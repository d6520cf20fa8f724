pub mod algebra;
pub mod cli;
pub mod equiv;
pub mod error;
pub mod families;
pub mod linalg;
pub mod modrep;
pub mod ncpoly;

pub use error::{Error, Result};
