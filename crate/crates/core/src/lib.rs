//! Inversion and major-index statistics on fillings of Young diagrams, the
//! coefficients they generate, and explicit bijections between fillings and
//! Carlitz-type codes.

pub mod cocharge;
pub mod codes;
pub mod error;
pub mod genfun;
pub mod hl;
pub mod hook;
pub mod shapes;
pub mod t1;
pub mod verify;
pub mod word_codes;

pub use error::{Error, Result};
