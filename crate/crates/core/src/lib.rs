//! Intersection-theoretic toolkit for deciding bigness of vector bundles on
//! projective spaces, Hirzebruch surfaces and products of projective spaces.
//!
//! The crate is layered bottom-up:
//!
//! * [`chowring`]: exact rational Chow rings of the supported bases.
//! * [`bundle`]: Chern and Segre calculus for bundles.
//! * [`cohomology`]: closed-form line-bundle cohomology and Riemann-Roch.
//! * [`positivity`]: numerical dimension and the certificate-checked
//!   bigness criteria.
//! * [`dsl`]: a small scripting language wiring the above together.

pub mod bundle;
pub mod chowring;
pub mod cohomology;
pub mod dsl;
pub mod error;
pub mod positivity;

pub use bundle::{BundleClass, SegreData, Structure};
pub use chowring::{make_base, BaseKind, BaseSpec, BaseVariety, ChowClass, Monomial, Rational};
pub use cohomology::{CohomologyVector, LineBundleOnBase, LinePositivity};
pub use error::{Error, Result};
pub use positivity::{
    AuditEntry, Certificate, Checker, EffectiveTwist, Outcome, Route, Source, Verdict, Verification,
};
