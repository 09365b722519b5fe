//! Decision procedures and verification tools for `GL_n(ℝ)`-distinguished
//! representations of `GL_n(ℂ)`.
//!
//! Representations are described by Langlands parameters, multisets of
//! characters `κ_{m,s}(z) = (z/|z|)^m |z|^{2s}` of `ℂ^×`. The crate decides
//! distinction for generic and unitary representations, computes the
//! distinguished minimal `U(n)`-type, evaluates local ε-factors, runs the
//! highest-derivative necessity test, enumerates `B\G/H` double cosets, and
//! numerically checks the rank-one kernel integrals.
//!
//! Exact scalars live in [`exactnum`]; everything combinatorial is exact.
//! Only [`kernelnum`] uses floating point.

pub mod cosets;
pub mod derivatives;
pub mod distinction;
mod error;
pub mod exactnum;
pub mod factors;
pub mod kernelnum;
pub mod ktypes;
pub mod params;

pub use error::Error;
pub use exactnum::{GaussianRational, Rational};
pub use params::{CharacterCx, LanglandsParameter, UnitaryBlock, UnitaryRep};
