//! Hyperbolic 2- and 3-space modeled inside quaternion algebras.
//!
//! A quaternion algebra has basis 1, i, j, ij with i² = a, j² = b and
//! ij = −ji. Over the complex numbers (a = b = 1) it carries the involution
//! q† = w̄ + x̄i + ȳj − z̄ij, whose fixed subspace — the quaternions with
//! q† = q — is a copy of Minkowski space: the reduced norm restricts there
//! with signature (1,3). The norm-one, positive-trace sheet of that
//! subspace is the hyperboloid model of hyperbolic 3-space, and unit
//! quaternions act on the sheet by orientation-preserving isometries via
//! p ↦ u p u†. This crate makes the whole picture executable:
//!
//! - [`quat`]: quaternions over a generic scalar, the star and dagger
//!   involutions, norms, traces, and the symmetric/skew splitting.
//! - [`hyperboloid`]: points of the sheet, the conjugation action and its
//!   decomposition, geodesics, classification of isometries into
//!   identity/elliptic/parabolic/hyperbolic/loxodromic types, translation
//!   lengths, rotation angles, and invariant axes.
//! - [`models`]: the Minkowski, Poincaré ball, and upper half-space models
//!   with the isomorphisms between them, plus two independent matrix
//!   routes — a spinor action on Hermitian 2×2 matrices and quaternionic
//!   Möbius transformations of half-space — used as cross-checks.
//! - [`plane`]: the hyperbolic plane inside the real subalgebra, with its
//!   boundary action on the upper half-plane.
//! - [`mat`]: 2×2 matrix images of quaternions and their transport of
//!   norm, trace, and involutions.
//! - [`genmac`]: the same structure on a general algebra (a,b / ℚ(√−d))
//!   with a, b, d positive rationals, in exact arithmetic.
//! - [`scalar`]: the scalar abstraction shared by the floating and exact
//!   code paths.
//!
//! # Example
//!
//! ```
//! use macfarlane::{distance, CQuat, HyperboloidPoint, Isometry, IsometryClass};
//!
//! // u = 5/4 + 3/4·i has norm (5/4)² − (3/4)² = 1, so it acts on the
//! // hyperboloid; its trace 5/2 > 2 makes it a hyperbolic translation.
//! let u = Isometry::new(CQuat::from_reals(1.25, 0.0, 0.75, 0.0, 0.0, 0.0, 0.0, 0.0))?;
//! assert_eq!(u.classify(1e-9), IsometryClass::Hyperbolic);
//!
//! // Conjugation moves the basepoint along the axis by twice acosh(5/4).
//! let one = HyperboloidPoint::one(CQuat::standard_algebra());
//! let moved = u.act(&one);
//! assert!((distance(&one, &moved)? - 2.0 * 1.25f64.acosh()).abs() < 1e-12);
//! # Ok::<(), macfarlane::Error>(())
//! ```
//!
//! The crate is `no_std`-compatible: disable the default `std` feature
//! (`alloc` is still required).

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod genmac;
pub mod hyperboloid;
pub mod mat;
pub mod models;
pub mod plane;
pub mod quat;
pub mod scalar;

pub use error::Error;
pub use genmac::{
    apply_sign_involution, enumerate_sign_involutions, symbolic_rho, symbolic_rho_pullback,
    ExtScalar, GenAlgebraContext, GenMacPoint, GenQuat, InvolutionCandidate,
};
pub use hyperboloid::{
    act_extended, decompose_action, distance, geodesic_through, in_m, in_w1, sqrt_point,
    ActionDecomposition, Geodesic, HyperboloidPoint, Isometry, IsometryClass, DEFAULT_TOL,
};
pub use mat::{rho, rho_general, rho_inv, Mat2, RhoEmbedding};
pub use models::{
    act_via_wigner, ball_lift, equivariance_check, eta, eta_inv, iota, iota_composed, iota_inv,
    iota_inv_sphere, iota_perm, iota_proj, mobius_act, uhs_distance, wigner_act, BallPoint, HQuat,
    MinkowskiVec, UpperHalfSpacePoint, BOUNDARY_TOL,
};
pub use plane::{
    act_2d, iota_2d, mobius_2d, plane_algebra, rho_2d, PlaneIsometry, PlanePoint,
};
pub use quat::{commutator, qmul, Algebra, CQuat, Quaternion, SymSkewPair};
pub use scalar::{acosh_principal, QuadExt, Scalar};
