//! Exact computation of reduced Gröbner bases of generic fibers of
//! positive-dimensional ideals over prime fields.
//!
//! The pipeline splits the variables into fiber (z) and finite (x) blocks,
//! computes the basis of the fiber at the origin, lifts it coefficient by
//! coefficient through powers of the fiber maximal ideal with linear
//! algebra on normal forms, and reconstructs the rational-function
//! coefficients with Padé approximants. A structured fast path exploits
//! the block-Toeplitz shape of the multiplication matrices when there is a
//! single fiber variable.

pub mod error;
pub mod fglm;
pub mod field;
pub mod groebner;
pub mod lift;
pub mod linalg;
pub mod monomial;
pub mod pade;
pub mod poly;

pub use error::Error;
pub use field::{Fp, PrimeField};
pub use groebner::{buchberger, GroebnerBasis, Staircase};
pub use monomial::{Monomial, MonomialOrder, VarSet};
pub use poly::Poly;
