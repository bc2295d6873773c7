//! Exact free Z2-graded associative algebras and their Koszul-signed tensor powers.

pub mod expr;
pub mod poly;
pub mod scalar;
pub mod symbol;
pub mod tensor;
pub mod word;

pub use expr::{Expr, ExprAlgebra, FreeEval};
pub use poly::{FreePolynomial, SuperPolynomial};
pub use scalar::{ParseScalarError, Scalar};
pub use symbol::{index_parity, Degree, Family, GeneratorSymbol, Parity, SymbolError};
pub use tensor::{FreeTensor, TensorPolynomial};
pub use word::{Generator, Word};

/// Errors raised by graded operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("operand is not parity-homogeneous")]
    MixedParity,
    #[error("tensor expression not allowed here")]
    TensorNotAllowed,
    #[error("tensor factors may not themselves contain tensors")]
    NestedTensor,
    #[error("cannot combine a non-scalar polynomial with a tensor")]
    TensorMismatch,
}
