//! Kumjian-Pask algebras of finite higher-rank graphs.
//!
//! A k-graph is presented by a coloured skeleton together with commuting
//! squares; this crate validates such presentations, computes with canonical
//! colour-ordered path words, and builds the Kumjian-Pask algebra over a
//! pluggable commutative coefficient ring. On top of exact arithmetic and
//! equality it decides the structural properties that govern the algebra:
//! grading, aperiodicity, cofinality, the lattice of saturated hereditary
//! vertex sets (equivalently, of basic graded ideals), basic simplicity and
//! simplicity.
//!
//! Start with [`fixtures::fixture`] for ready-made graphs, [`algebra::Algebra`]
//! for arithmetic, and [`analysis`] for the structure reports. The
//! `examples/` directory has one runnable walkthrough per capability.

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod degree;
pub mod expr;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod pathrep;
pub mod report;
pub mod ring;

pub use degree::{Degree, GradeDegree};
pub use graph::{GraphError, KGraph, Path};
pub use ring::{RingElem, RingSpec};
