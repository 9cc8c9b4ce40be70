//! Exact computations with Malcev and pre-Malcev algebras given by structure
//! constants: identity checks, representations and bimodules, O-operators and
//! the classical Yang-Baxter equation, together with the constructions that
//! pass between them.
//!
//! All arithmetic is exact, over the rationals or over Laurent polynomial
//! rings in named parameters.

pub mod algebra;
pub mod differential;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod reps;
pub mod report;
pub mod scalar;
pub mod vector;
pub mod ybe;

pub use algebra::{AlgebraKind, StructureTable};
pub use error::{Error, Result};
pub use linalg::{Matrix, Nondegeneracy};
pub use reps::{Bimodule, LinearMap, LinearRep};
pub use report::{AxiomReport, IdentityReport, Residual, Witness};
pub use scalar::{parse_scalar, Rational, Ring, Scalar};
pub use ybe::{BilinearForm, ThreeTensor, TwoTensor};
