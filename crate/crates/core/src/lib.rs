//! Exact arithmetic for quadratic pair modules and algebras, symmetric track
//! groups and E∞ structures, with law checkers, Toda brackets (Massey
//! products) and cup-one squares.

pub mod check;
pub mod einfty;
pub mod enumerate;
pub mod error;
pub mod groups;
pub mod instances;
pub mod qpa;
pub mod qpm;
pub mod report;
pub mod trackgroup;

pub use error::{Error, Result};
