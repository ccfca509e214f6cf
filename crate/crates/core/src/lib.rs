//! Exact-arithmetic invariants of closed hyperbolic 2-orbifolds.
//!
//! The crate computes, from a combinatorial orbifold signature:
//!
//! - coarse and orbifold Euler characteristics (exact rationals),
//! - Teichmuller and Hitchin-component dimensions for PGL(n;R) and
//!   other split adjoint groups,
//! - orbifold line-bundle degrees, ages and Riemann-Roch Euler
//!   characteristics on analytic orbi-curves (complex and real),
//! - lifted signatures of finite covers given by permutation actions,
//!   orientation double covers, and multiplicativity checks,
//! - triangle-group presentations with the Von Dyck embedding and
//!   parity-quotient checks,
//! - bounded enumeration of signatures and rigid orbifolds.
//!
//! Everything is integer or rational arithmetic; there is no floating
//! point anywhere. All types are immutable values and all operations are
//! pure functions, safe for unrestricted concurrent use.

pub mod covers;
pub mod enumerate;
pub mod error;
pub mod groups;
pub mod hitchin;
pub mod picard;
pub mod rational;
pub mod riemannroch;
pub mod signatures;

pub use error::{Error, Result};
pub use rational::Rational;
pub use signatures::{parse_signature, OrbifoldSignature};
