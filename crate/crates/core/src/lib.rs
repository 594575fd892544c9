//! Exact arithmetic for the 3D geometric algebras G(p,q), p + q = 3, and the
//! seven Hurwitz algebras realised inside them.
//!
//! * [`ga`]: multivectors, blade products, grades and involutions.
//! * [`canonical`]: structure-constant tables of ℝ, ℂ, ℂs, ℍ, ℍs, 𝕆, 𝕆s and
//!   the biquaternion algebras, with property checkers.
//! * [`octonify`]: the products `•` and `•₋` and the octonionic norm.
//! * [`isomorphism`]: subalgebras, the biquaternion factorization and
//!   signed-basis isomorphism search.
//! * [`verify`] and [`cli`]: verification suites and the command line.

pub mod canonical;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod ga;
pub mod isomorphism;
pub mod octonify;
pub mod sampling;
pub mod scalar;
pub mod verify;

pub use canonical::{AlgebraTable, Element, Entry, HurwitzClass};
pub use error::{Error, Result};
pub use ga::{Blade, Involution, Multivector, Signature};
pub use isomorphism::IsomorphismWitness;
pub use octonify::{BulletVariant, NormDiagonal};
pub use scalar::Rational;
