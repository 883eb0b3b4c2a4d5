//! Exact linear algebra on n×n matrices viewed as vectors of length n²:
//! echelon spans, algebra closure and block dimensions.

mod closure;
mod field;
mod matrix;
mod subspace;

pub use closure::{algebra_closure, algebra_closure_dense, block_dims, verify_product_closed, CLOSURE_CAP_FACTOR};
pub use field::{Approx, Exact, Field};
pub use matrix::{MatVec, SparseMatrix};
pub use subspace::{span_dim, SubspaceBasis};
