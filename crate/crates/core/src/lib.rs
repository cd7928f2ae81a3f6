//! Best rank-one approximation of dense real tensors.
//!
//! The crate provides, for a real d-mode tensor T:
//!
//! * dense tensor arithmetic: inner products, contractions against vectors,
//!   symmetry detection, and the decomposition of the mode set into maximal
//!   symmetry blocks ([`tensor`]);
//! * the order-2 baseline: Jacobi eigendecomposition, dominant singular
//!   pairs, and the discriminant / Kronecker-sum detectors ([`matrix`]);
//! * alternating (higher-order power method) solvers for the best rank-one
//!   approximation, free or with factors tied inside symmetry blocks, with
//!   stationarity and Pythagoras certificates ([`optimizer`]);
//! * complete enumeration of critical points and eigenpairs for symmetric
//!   2 x ... x 2 tensors, count censuses against the (d-1)^n - 1 bound, and
//!   first-order eigenpair perturbation checks ([`critical`]);
//! * the one-parameter family of symmetric 2x2x2 tensors whose best
//!   rank-one approximations are not all symmetric ([`family`]);
//! * a plain-text tensor format ([`io`]) and a tiny deterministic RNG
//!   ([`rng`]).

pub mod critical;
pub mod error;
pub mod family;
pub mod io;
mod linalg;
pub mod matrix;
pub mod optimizer;
mod poly;
mod resultant;
pub mod rng;
pub mod tensor;

pub use error::{Error, Result};
pub use tensor::{ModePartition, Rank1Approx, Tensor, UnitVector};
