//! Exact decision of semi-scalar equivalence for nonsingular polynomial
//! matrices over ℚ, and of simultaneous similarity for families of rational
//! matrices, with machine-checkable witnesses.
//!
//! Two nonsingular `A(λ)`, `B(λ)` over ℚ[λ] are *semi-scalar equivalent*
//! when `A = P·B·Q` for some constant nonsingular `P` and unimodular
//! `Q(λ)`. The engine reduces the question to exact linear algebra over ℚ
//! (Smith form, adjugates, a stacked system of derivative evaluations at
//! the roots of the last invariant factor) and, on a positive answer,
//! returns the triple `(V, P, Q)` with `V·A = B·Q` and `P = V⁻¹`, verified
//! from scratch before being handed out. All arithmetic is arbitrary
//! precision; nothing is floating point.
//!
//! ```
//! use polyeq::{decide_semiscalar, DecisionOutcome, PolyMat};
//!
//! // coefficients ascending: [[1, 0], [λ² + λ, λ⁴]] and [[1, 0], [λ² − λ, λ⁴]]
//! let a = PolyMat::from_int_rows(&[&[&[1], &[]], &[&[0, 1, 1], &[0, 0, 0, 0, 1]]]);
//! let b = PolyMat::from_int_rows(&[&[&[1], &[]], &[&[0, -1, 1], &[0, 0, 0, 0, 1]]]);
//! match decide_semiscalar(&a, &b).unwrap() {
//!     DecisionOutcome::Equivalent(w) => assert!(polyeq::verify_witness(&a, &b, &w)),
//!     other => panic!("expected a witness, got {other:?}"),
//! }
//! ```
//!
//! The mirrored relation `A = Q·B·P` (PS-equivalence) is decided by
//! [`decide_ps`], and [`decide_family_similarity`] settles whether one
//! invertible `V` conjugates every member of one matrix family onto
//! another, by lifting both families to monic matrix polynomials.

pub mod engine;
pub mod factor;
pub mod poly;
pub mod polymat;
pub mod random;
pub mod rational;
pub mod ratmat;
pub mod smith;

pub use engine::{
    build_block_matrix, build_d, check_representation, decide_family_similarity,
    decide_family_similarity_with, decide_ps, decide_ps_with, decide_semiscalar,
    decide_semiscalar_with, lift_family, recover_witness, verify_witness, verify_witness_ps,
    DecideOptions, DecisionOutcome, EngineError, EquivalenceWitness, MatrixFamily,
};
pub use factor::{linear_factorization, LinearFactorization, NonSplitting};
pub use poly::{poly_gcd, Poly};
pub use polymat::PolyMat;
pub use rational::{rat, rint, Rat};
pub use ratmat::{
    find_nonsingular_reshape, NullspaceBasis, RatMat, ReshapeSearch, DEFAULT_MAX_GRID_VARS,
};
pub use smith::{are_equivalent, smith_decompose, SmithDecomposition};
