//! Core graph types and structural queries on trees.

pub mod abc;
pub mod canonical;
pub mod kragujevac;
pub mod paths;
pub mod properties;
pub mod tree;

pub use kragujevac::build_kragujevac;
