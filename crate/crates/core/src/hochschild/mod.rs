//! Bimodule Koszul complex, Hochschild (co)homology with twisted coefficients, the dualizing complex
//! `L'_{r−l}(A)` and the duality check.

pub mod bimodule;
pub mod coefficients;
pub mod duality;
pub mod dualizing;
pub mod oracle;
mod triple;

pub use bimodule::{bimodule_exactness, bimodule_identities, bimodule_slice, collapse_matches_one_sided, hochschild_dimension, BimoduleExactness};
pub use coefficients::{hh_chain_slice, hh_cochain_slice, hh_cohomology_dims, hh_homology_dims, TwistedBimodule};
pub use duality::{calibrate_shift, duality_check, duality_tables, DualityReport, DualityRow, SHIFT_ORIENTATION};
pub use dualizing::{dualizing_slice, ext_ae_dims, twisted_multiplication_check, TwistedMultiplicationReport};
pub use oracle::hochschild_bar_homology;
