//! Characters, isotypic pieces and multiplicities for `Z_n`-modules.

mod characters;
mod labels;
mod module;
mod multiplicity;
mod seeds;
mod torsion;

pub use characters::*;
pub use labels::*;
pub use module::*;
pub use multiplicity::*;
pub use seeds::*;
pub use torsion::*;
