//! Exact Leonard systems over Q and finite fields.
//!
//! The crate builds Leonard systems from the thirteen parameter-array families
//! of the Askey scheme (q-Racah through Orphan), realizes them as concrete
//! matrices, computes their zero diagonal space, and checks the type-level
//! classification tables by exact evaluation.
//!
//! Layout:
//! - [`field`]: exact arithmetic over Q, GF(p), GF(p^k)
//! - [`matrix`]: dense matrices with exact rank, kernels, inverses
//! - [`parray`]: the thirteen type constructors and parameter-array transforms
//! - [`realization`]: split/standard basis matrices, idempotents, intersection numbers
//! - [`zerodiag`]: the matrices M, L, T and the zero diagonal space
//! - [`analysis`]: classification predicates, identity-testing campaigns, the
//!   diameter-two counterexample

pub mod analysis;
pub mod field;
pub mod matrix;
pub mod parray;
pub mod realization;
pub mod zerodiag;

pub use field::{parse_element, FieldContext, FieldElement, FieldError};
pub use matrix::Matrix;
pub use parray::{LeonardType, Param, ParameterArray, TypeSpec};
pub use realization::{IdempotentSet, IntersectionNumbers, LeonardRealization};
pub use zerodiag::{ZCoefficients, ZSpaceReport};


