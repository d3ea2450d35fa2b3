//! Exact analysis of N-homogeneous algebras `A = Tens(V)/(R)`, `R ⊆ V^{⊗N}`:
//! generalized Koszulity, global dimension, the AS-Gorenstein criterion, Frobenius
//! structure of the Yoneda algebra, and Hochschild (co)homology dimension tables.

pub mod algebra;
pub mod error;
pub mod field;
pub mod gorenstein;
pub mod hochschild;
pub mod koszul;
pub mod linalg;
pub mod yoneda;

pub use error::{Error, Result};
pub use field::{Field, Fp, Rational};
