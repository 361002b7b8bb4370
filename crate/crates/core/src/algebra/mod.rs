//! Sparse Laurent polynomials over the rationals, their tensor squares, and
//! homogeneous derivations.

mod derivation;
mod laurent;
mod tensor;

pub use derivation::{derive, derive_iter, is_locally_nilpotent_on, DerivationRule};
pub use laurent::{evaluate, multiply, LaurentElement};
pub use tensor::{tensor_multiply, tensor_power, TensorElement};

pub(crate) use laurent::rational_pow;
