//! Exact spectral toolkit for the star product of two graphs.
//!
//! The star product of G1 (order n1) and G2 (order n2) doubles each vertex
//! of G1 into a group of n2 "a-vertices" and attaches one copy of G2 to the
//! group. For regular factors its Laplacian and signless-Laplacian spectra
//! admit closed forms, which this crate assembles in exact integer
//! arithmetic and proves equal to direct computation on the explicitly
//! constructed product. On top of the spectra it derives the Kirchhoff
//! index, the spanning-tree count, the Wiener index and integrality
//! verdicts, each checked against an independent oracle (characteristic-
//! polynomial coefficients, matrix-tree cofactors, BFS distances).
//!
//! Everything on the verification path is exact: arbitrary-precision
//! integer matrices, fraction-free elimination, and eigenvalues kept as
//! rationals or quadratic surds. A floating-point Jacobi solver exists only
//! to cross-check the exact results.
//!
//! The `examples/` directory demonstrates each capability end to end; the
//! `starprod` binary exposes the same operations as subcommands
//! (`product`, `charpoly`, `spectrum`, `invariants`, `verify`).

pub mod cli;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod integrality;
pub mod invariants;
pub mod matrix;
pub mod poly;
pub mod product;
pub mod spectra;
pub mod sweep;

pub use eigen::{Eigenvalue, QuadraticSurd, Spectrum};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph};
pub use matrix::ExactMatrix;
pub use poly::{Polynomial, RationalFunction};
pub use product::{corona, star_product, ProductGraph, ProductLabeling};
pub use spectra::{ClosedFormReport, MatrixKind};
