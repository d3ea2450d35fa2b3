//! AS-Gorenstein criterion, Frobenius structure of `E(A)`, ν, φ and the twist.

pub mod criterion;
pub mod cubic;
pub mod ext;
pub mod frobenius;

pub use criterion::{gorenstein_verdict, pairings_nondegenerate, GorensteinCertificate, GorensteinFailure};
pub use cubic::{q_matrix_cubic, CubicQ};
pub use ext::{ext_k_a_dims, ext_slice};
pub use frobenius::{frobenius_ea_check, frobenius_pairing, nu_automorphism, pairing_of_forms, phi_automorphism, twist_verdict, FrobeniusData, SymmetryClass, TwistVerdict};
