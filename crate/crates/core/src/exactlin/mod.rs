//! Exact rational scalars and sparse linear algebra over the rationals.

mod matrix;
mod scalar;

pub use matrix::{axpy, dense_to_sparse, sparse_to_dense, Echelon, Matrix, SparseVec};
pub use scalar::Scalar;
