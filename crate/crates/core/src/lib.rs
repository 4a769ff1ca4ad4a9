//! Exact decision procedures and constructions for Drazin, strongly Drazin and
//! Hirano inverses in `Z/n`, `M_k(Z/n)` and `M_k(Z)`.
//!
//! An element `a` has a Hirano inverse `b` when `a² - ab` is nilpotent, `ab = ba`
//! and `bab = b`. It exists exactly when `a - a³` is nilpotent, and then coincides
//! with the Drazin inverse. This crate decides existence, builds certified inverses,
//! transfers them along Cline- and Jacobson-type identities, and checks every claim
//! against brute-force search on finite rings.

pub mod calculus;
pub mod census;
pub mod error;
pub mod inverse;
pub mod lifting;
pub mod par;
pub mod ring;

pub use error::{Error, Result};
pub use ring::{Element, RingSpec};
