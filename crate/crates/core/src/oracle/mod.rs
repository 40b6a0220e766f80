//! Presentation-based cross-check of the homology computations.

mod presentation;
mod class;
mod schreier;

pub use class::*;
pub use presentation::*;
pub use schreier::*;
