//! Exact-arithmetic positivity structures in Lie groups: total
//! positivity in GL(n), the positive semigroup of Sp(2n, R), and the
//! positive structure of SO(3, q), together with the Coxeter-group
//! combinatorics (reduced words, braid moves) that ties them together.
//! Every computation is over the rationals; every identity is checked
//! bit-exactly.

pub mod error;
pub mod flag;
pub mod gl;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod so3q;
pub mod sp;
pub mod weyl;

pub use error::{Error, Result};
pub use matrix::RatMatrix;
pub use scalar::ExactScalar;
