//! Exact scalars over ℚ and ℚ(i), and exact real rank of matrix families.

mod gaussian;
mod matrix;
mod rational;

pub use gaussian::GaussianRational;
pub use matrix::{real_rank, ExactMatrix};
pub use rational::Rational;

