//! Exact symbolic verification of the Hochschild cohomology of the
//! down-up algebra A(0,1,0).
//!
//! The crate computes in the algebra A = k<x,y,z>/([x,z], [y,z], xy+yx-z)
//! with its PBW monomial basis, builds the four-term weight-graded dg
//! complex whose cohomology is HH^*(A), runs exact linear algebra per
//! (degree, weight) slice, and verifies the multiplication tables and the
//! module structure of HH^*(A) over the center Z(A) = k[x^2, y^2, z],
//! reporting every identity with an algebraic witness or residual.

pub mod cochain;
pub mod complex;
pub mod cup;
pub mod hilbert;
pub mod homology;
pub mod linalg;
pub mod ncpoly;
pub mod report;
pub mod scalar;
pub mod tables;
pub mod wedge;

pub use cochain::{Cochain, DIFFERENTIAL_WEIGHT_SHIFT};
pub use complex::{check_complex, weight_basis, SliceCache, WeightSlice};
pub use cup::{check_leibniz, cup_with, select_product_rule, CupVerifier, ProductRule};
pub use homology::{
    named_generators, BoundaryTest, CohomologyClass, GeneratorName, HomologyEngine, NamedGenerator,
    SliceHomology,
};
pub use ncpoly::{
    commutator, normal_form, xi_x, xi_y, AlgebraElement, CenterMonomial, Gen, PbwMonomial,
};
pub use report::{
    dims_csv, run_verification, CheckResult, CheckStatus, RunConfig, RunScope, VerificationReport,
};
pub use scalar::{FieldSpec, Scalar};
pub use wedge::{wedge, WedgeMonomial};
