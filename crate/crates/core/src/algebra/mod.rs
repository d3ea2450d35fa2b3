//! Presentations, graded components, products, dual algebras, Manin products, automorphisms.

pub mod presentation;
pub mod presets;
pub mod rewriting;
pub mod view;

pub use presentation::Presentation;
pub use view::{ideal_component, Element, GradedAlgebra};
pub mod automorphism;
pub mod constructions;

pub use automorphism::GradedMap;
pub use constructions::{dual_algebra, manin_product, ManinKind};
