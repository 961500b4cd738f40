//! Chromatic and balanced chromatic cohomology of signed multigraphs.
//!
//! The crate is `no_std` and only needs `alloc`. It covers the signed graph
//! model, the enhanced-state cochain complexes (unsigned, chromatic and
//! balanced), exact integer homology through Smith normal form, signed
//! chromatic polynomials computed three independent ways, and a catalog of
//! executable structural checks.
//!
//! ```
//! use schrom_core::{SignedGraph, Sign, Variant, graded_cohomology};
//!
//! let sp3 = SignedGraph::new(3, [
//!     (0, 2, Sign::Positive),
//!     (0, 1, Sign::Positive),
//!     (2, 1, Sign::Negative),
//! ]).unwrap();
//! let h = graded_cohomology(&sp3, Variant::Chromatic).unwrap();
//! assert_eq!(h.group(1, 2).torsion(), &[2]);
//! ```

#![no_std]

extern crate alloc;

pub mod coloring;
pub mod complex;
mod error;
pub mod graph;
pub mod homology;
pub mod poly;
pub mod verify;

pub use complex::{
    cone_decomposition, differential_matrix, enumerate_basis, ConeReport, DifferentialMatrix,
    EnhancedState, Label, StateComplex, Variant,
};
pub use error::{Error, Result};
pub use graph::{Component, ComponentStructure, Edge, EdgeSubset, Sign, SignedGraph};
pub use homology::{
    graded_cohomology, homology_group, kernel_basis, smith_normal_form, AbelianGroup,
    GradedAbelianGroup, GradedCohomology, IntegerMatrix,
};
pub use poly::{
    chromatic_at_one_plus, chromatic_dc, chromatic_statesum, euler_polynomial, q_polynomial, unsigned_chromatic,
    EulerSource, IntPolynomial, ParityPolynomial,
};
