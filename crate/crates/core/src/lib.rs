//! Explicit conditional bounds for logarithmic derivatives and logarithms of
//! Selberg-class L-functions, with the numerical machinery to test them.

pub mod arithmetic;
pub mod bounds;
pub mod character;
pub mod consts;
pub mod error;
pub mod explicit;
pub mod kernel;
pub mod lfunc;
pub mod numeric;
pub mod opt;
pub mod quad;
pub mod selberg;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
