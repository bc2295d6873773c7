//! The centrally extended superalgebra g: basis, structure constants and PBW normal forms.

pub mod basis;
pub mod dictionary;
pub mod pbw;
pub mod suite;
pub mod table;

pub use basis::{level0_to_symbols, Letter, LetterPoly, LieBasisElement};
pub use dictionary::{
    c0, chevalley_to_matrix, non_simple_roots, pbw_normal_form, rho_basis, rho_symbol, LieError,
};
pub use pbw::{
    is_pbw_monomial, lie_normal_form, BracketSource, Entry, LieTable, LinPoly, StraightenError,
    Straightener,
};
pub use suite::{antisymmetry_failures, jacobi_failures, lie_checks, verify_lie_suite};
pub use table::{diagonal_to_cartan, structure_bracket, LieVector, StructureTable};
