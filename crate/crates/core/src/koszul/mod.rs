//! W spaces, Koszul complexes, exactness verdicts, structural checks and the bar-complex oracle.

pub mod bar;
pub mod checks;
pub mod complex;
pub mod one_sided;
pub mod verdict;
pub mod wspaces;

pub use checks::{confluence_check, distributivity_check, extra_condition, global_dimension, Distributivity, GlobalDimension};
pub use complex::{ComplexSlice, Direction};
pub use verdict::{koszulity_verdict, KoszulMethod, KoszulStatus, KoszulVerdict};
pub use wspaces::{jump, WSpaces};
