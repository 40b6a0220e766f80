//! `H_1(B_n[4]; Q)` in the basis `S`, with the rewriting engine and the
//! conjugation action of `B_n`.

mod action;
mod basis;
mod expr;
mod reduce;

pub use action::{
    act, commutator_class, commutator_expression, forgetful, generator_matrix, sigma_on_symbol,
    stabilization_map, tau_boundary, twist_on_symbol, Generator, H1Space,
};
pub use basis::{dim_h1, enumerate_basis, BasisSymbol, H1Vector};
pub use expr::{Factor, ModuleExpression, Term};
pub use reduce::{reduce, reduce_str, vector_expression};
