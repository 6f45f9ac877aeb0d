//! Exact matrix calculus for A¹-homotopy invariants.
//!
//! For a finite dimensional basic self-injective algebra `Λ` with a
//! connected grading and one-dimensional simples, every A¹-homotopy
//! invariant `E` of the stable module category is the cone of the Cartan
//! matrix acting on `E(k)^n`. For `E = KH` over a finite field this turns
//! into concrete abelian groups, computed here with exact integer
//! arithmetic:
//!
//! - [`exactmat`]: big-integer matrices, determinants, Smith normal form;
//! - [`abgroup`]: finitely generated abelian groups, cokernels, actions on
//!   `(Z/m)^n`;
//! - [`algebras`]: algebra families and their Cartan data;
//! - [`phimat`]: the φ-matrix of the graded/ungraded cofibre sequence;
//! - [`cluster`]: the `A_n` cluster-category matrices and phantom verdicts;
//! - [`ktheory`]: `K_*(F_q)` and the cone long exact sequence;
//! - [`oracle`]: slow independent checks used by tests and `verify`.

pub mod abgroup;
pub mod algebras;
pub mod cluster;
pub mod error;
pub mod exactmat;
pub mod json;
pub mod ktheory;
pub mod oracle;
pub mod phimat;

pub use abgroup::{AbGroup, GroupOrder};
pub use algebras::{Family, FamilyParams, GradedAlgebraDescriptor};
pub use cluster::ClusterReport;
pub use error::{Error, Result};
pub use exactmat::{matrix_algebra, MatrixOp, SnfResult, ZMatrix};
pub use ktheory::{FiniteFieldSpec, InvariantResult};
pub use phimat::{KoszulColumn, PhiConvention, PhiSpec};

pub use num_bigint::BigInt;
