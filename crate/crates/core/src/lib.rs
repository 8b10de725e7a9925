//! Exact inertia indices of signed graphs.
//!
//! The crate computes the positive/negative inertia indices and the nullity
//! of signed adjacency matrices exactly, the structural parameters that
//! bound them (cyclomatic number, pendant vertices, balance,
//! cycle-disjointness), and verifies the lower bounds
//!
//! ```text
//! i+(Γ) >= (n - p)/2 - θ,   i-(Γ) >= (n - p)/2 - θ,   η(Γ) <= p + 2θ
//! ```
//!
//! together with their strict forms and equality cases over every small
//! signed graph.

pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod inertia;
pub mod structure;
pub mod verify;

pub use error::{Error, ParseError, Result};
pub use families::{CycleSpec, ExtremalCertificate, NotExtremal};
pub use graph::{Sign, SignedGraph, VertexLocalStats};
pub use inertia::{Inertia, IntPolynomial, SymmetricExactMatrix};
pub use structure::{BlockDecomposition, ContractionTree, CycleWitness, TreeNode};
