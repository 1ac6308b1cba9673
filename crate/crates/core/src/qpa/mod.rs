//! Graded quadratic pair algebras, right modules, their axiom suites,
//! induced homology products and Massey products.

pub mod algebra;
pub mod homology;
pub mod laws;
pub mod massey;

pub use algebra::{Action, GradedQpa, Products, RightModule, Table};
pub use laws::{check_module_axioms, check_qpa_axioms};
pub use homology::{property_h, HomologyRing};
pub use massey::{Brackets, Coset, Lifts, MasseyResult};
