//! Exact computation of the integral Grothendieck rings K₀(ℳ₂), K₀(Δ₁),
//! K₀(M̄₂∖Δ₁) and K₀(M̄₂) of the moduli stacks of genus-two curves.
//!
//! The pipeline is entirely symbolic and exact:
//!
//! * [`laurent`] — multivariate Laurent polynomials over ℤ and formal
//!   quotients of them, with a textual grammar shared by every module;
//! * [`symfun`] — conversion between the character basis (a, b) and the
//!   symmetric basis (e₁, e₂±¹, hₙ) of S₂-invariant Laurent polynomials;
//! * [`reprings`] — representation-ring calculus for T₂, GL₂ and the
//!   normalizer G = T₂⋊S₂ (classes [Wₙ], duals, induction, Euler classes);
//! * [`ktproj`] — presentations of torus-equivariant K-theory of projective
//!   spaces of binary forms;
//! * [`pushforward`] — the fixed-point localization engine for the power
//!   maps (f, g) ↦ f²g and (f, g) ↦ f³g;
//! * [`groebner`] — strong Gröbner bases over ℤ for Laurent ideals:
//!   membership, elimination, intersection, quotient ranks and ℤ-bases;
//! * [`moduli`] — assembly of the four ring presentations and the full
//!   verification battery (ranks 18, 65, 32, 97).
//!
//! Everything is immutable after construction and free of global state, so
//! values can be shared across threads freely.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alphabet;
pub mod error;
pub mod groebner;
pub mod ktproj;
pub mod laurent;
pub mod moduli;
pub mod pushforward;
pub mod reprings;
pub mod symfun;

pub use alphabet::Alphabet;
pub use error::{Error, Result};
pub use laurent::{LaurentPolynomial, RationalClass};
