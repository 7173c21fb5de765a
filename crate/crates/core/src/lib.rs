pub mod algebra;
pub mod cellular;
pub mod compose;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod rep;
pub mod scalars;

pub use error::{Error, Result};
