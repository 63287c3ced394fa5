//! Exact-arithmetic engine for Yang–Baxter operators built from finite-dimensional
//! unital associative algebras, their enhancements, (modified) Markov traces of
//! braids, and the Alexander polynomial of braid closures.

pub mod algebra;
pub mod braid;
pub mod invariant;
pub mod oracle;
pub mod ring;
pub mod tensor;
pub mod ybop;

pub use algebra::{Algebra, AlgebraError, LinMap};
pub use braid::{BraidError, BraidWord};
pub use invariant::{Enhancement, InvariantError};
pub use oracle::OracleError;
pub use ring::{Monomial, Rational, RingError, Scalar, Substitution, Var};
pub use tensor::{TensorError, TensorOp};
pub use ybop::{YbCase, YbError, YbOperator};
