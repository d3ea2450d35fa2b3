//! Exact linear algebra over word spaces.

pub mod dense;
pub mod echelon;
pub mod sparse;
pub mod subspace;
pub mod words;

pub use dense::Matrix;
pub use echelon::{rank_of, rref, Echelon};
pub use sparse::{axpy, dot, from_entries, get, normalize, scale, Accumulator, SparseMatrix, SparseVec};
pub use subspace::Subspace;
pub use words::{concat, content, encode, factor, letters, pow, split, WordSpace};
