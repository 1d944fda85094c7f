//! Exact-arithmetic computational algebra for Hecke symmetries, the fusion
//! calculus of quantum groups of type A(0|0), and finite-dimensional Hopf
//! algebras with integrals.
//!
//! Everything runs over arbitrary-precision rationals; there is no
//! floating-point path and no tolerance anywhere. The crate is organized as
//!
//! * [`scalar`], [`matrix`] -- the exact linear-algebra substrate,
//! * [`hecke`] -- Hecke-symmetry axioms, the half-dual and the q-rank,
//! * [`poincare`], [`commutant`] -- graded dimensions of the quantum
//!   (anti)symmetric algebras, birank detection, and the brute-force
//!   intertwiner-dimension oracle,
//! * [`fusion`] -- the Z^2-labelled fusion ring of simple comodules,
//! * [`hopf`] -- the structure-constant Hopf engine: integrals, convolution,
//!   coefficient spaces, the splitting test and the projectivity oracle,
//! * [`format`](mod@format) -- the JSON file formats used by the CLI.

pub mod commutant;
pub mod format;
pub mod fusion;
pub mod hecke;
pub mod hopf;
pub mod matrix;
pub mod poincare;
pub mod scalar;

pub use fusion::{K0Element, SimpleLabel, TensorDecomposition};
pub use hecke::{HalfDual, HeckeError, HeckeSymmetry};
pub use hopf::{Comodule, HopfAlgebra, HopfError, IntegralFunctional};
pub use matrix::{column_span_rank, LinAlgError, Matrix};
pub use poincare::PoincareTable;
pub use scalar::Scalar;
