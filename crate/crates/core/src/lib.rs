//! Exact computations in p-bounded group cohomology.
//!
//! The crate is organised bottom-up:
//!
//! - [`group`]: the [`Group`] trait and the built-in backends (cyclic and
//!   symmetric groups, free abelian groups, the commutator subgroup of
//!   Thompson's group `F`), homomorphisms and the uniform mean.
//! - [`thompson`]: exact dyadic rationals and piecewise-linear
//!   homeomorphisms of `[0,1]`.
//! - [`bar`]: inhomogeneous bar-complex cochains and chains, the
//!   codifferential, cup products, pairing, pullback and the hat involution.
//! - [`gs`]: the Ghys-Sergiescu 2-cocycle on `F'` and its pairings with the
//!   alternating cycles of free abelian groups.
//! - [`homotopy`]: averaging, `Λ₀`, `Λ` and the 1-constant contraction over
//!   finite groups, with `ℓ∞Γ` and `ℓ∞Γ/ℝ` coefficients.
//! - [`metrics`]: the oscillation norm of a 2-cocycle and the length
//!   function of an abstractly Lipschitz function.
//!
//! All arithmetic is exact. Nothing in here touches floating point.

pub mod bar;
pub mod error;
pub mod golden;
pub mod group;
pub mod gs;
pub mod homotopy;
pub mod metrics;
pub mod perm;
pub mod rational;
pub mod thompson;

pub use bar::{Chain, Cochain};
pub use error::{Error, Result};
pub use group::{FPrime, FiniteGroup, FreeAbelian, Group, Homomorphism, Mean};
pub use rational::Rational;
pub use thompson::{Dyadic, PLMap};
