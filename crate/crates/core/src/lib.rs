//! Exact computations with the level-4 braid group `B_n[4]`.
//!
//! The crate is organised bottom-up:
//!
//! * [`braid`] and [`zn`]: braid words, Burau matrices at `t = -1`, winding
//!   numbers and the finite quotient `Z_n = B_n / B_n[4]`.
//! * [`h1`]: the rational first homology `H_1(B_n[4]; Q)` in its canonical
//!   basis, with a rewriting engine and the `Z_n`-action.
//! * [`psi`]: the double-cover detection maps into pair vectors.
//! * [`rep`]: characters, isotypic splitting, multiplicities, torsion points.
//! * [`oracle`]: an independent Reidemeister–Schreier computation of the same
//!   homology from a presentation of the pure braid group.
//! * [`formulas`]: closed-form Euler characteristic and Betti arithmetic.
//! * [`verify`]: named check suites shared by the CLI and the tests.

pub mod braid;
pub mod error;
pub mod formulas;
pub mod h1;
pub mod linalg;
pub mod oracle;
pub mod pairs;
pub mod psi;
pub mod random;
pub mod rep;
pub mod verify;
pub mod zn;

pub use error::{Error, Result};
pub use linalg::Q;
